import pytest

from homchrom.cyclemaps import (MonotoneEquivariantMap,
                                enumerate_monotone_equivariant, eta, i_map,
                                j_map, k2_cycle_poset, theta)
from homchrom.errors import InvalidInputError
from homchrom.graphs import complete, cycle, cycle_reflection
from homchrom.homposet import hom_cells
from homchrom.multihom import from_involution, star


class TestTables:
    def test_eta_produces_valid_table(self):
        G = complete(3)
        P = hom_cells(cycle(3), G)
        for i in range(len(P)):
            eta(3, G, P.cell(i)).validate()

    def test_eta_is_monotone_in_phi(self):
        G = complete(4)
        P = hom_cells(cycle(3), G)
        for i in range(len(P)):
            for j in P.faces(i):
                assert eta(3, G, P.cell(j)).le(eta(3, G, P.cell(i)))

    def test_validate_rejects_non_equivariant(self):
        G = complete(3)
        P = hom_cells(cycle(3), G)
        f = eta(3, G, P.cell(0))
        tab = f.lookup()
        # break equivariance at one asymmetric key pair
        key = next(k for k in tab if (k[1], k[0]) != k)
        tab[key] = (tab[key][1], tab[key][0]) if tab[key][0] != tab[key][1] \
            else tab[key]
        broken = MonotoneEquivariantMap(3, G, tuple(sorted(tab.items())))
        with pytest.raises(InvalidInputError):
            broken.validate()

    def test_tau_is_an_involution_on_tables(self):
        G = complete(3)
        P = hom_cells(cycle(3), G)
        for i in range(0, len(P), 7):
            f = eta(3, G, P.cell(i))
            assert f.tau().tau() == f


class TestIdentities:
    @pytest.mark.parametrize("m,G", [
        (3, complete(3)), (3, complete(4)), (5, complete(3))])
    def test_theta_eta_equals_i(self, m, G):
        P = hom_cells(cycle(m), G)
        for i in range(len(P)):
            phi = P.cell(i)
            assert theta(m, G, eta(m, G, phi), validate=False) == i_map(m, G, phi)

    def test_eta_theta_below_j_for_all_tables(self):
        G = complete(3)
        tabs = enumerate_monotone_equivariant(3, G)
        assert len(tabs) > 0
        for f in tabs:
            f.validate()
            lhs = eta(9, G, theta(3, G, f, validate=False))
            rhs = j_map(3, G, f, validate=False)
            assert lhs.le(rhs)

    def test_theta_intertwines_tau_with_reflection(self):
        G = complete(3)
        a9 = from_involution(cycle_reflection(9))
        for f in enumerate_monotone_equivariant(3, G):
            assert theta(3, G, f.tau(), validate=False) == \
                star(a9, theta(3, G, f, validate=False))

    @pytest.mark.parametrize("m", [3, 5])
    def test_i_map_is_equivariant(self, m):
        G = complete(3)
        P = hom_cells(cycle(m), G)
        am = from_involution(cycle_reflection(m))
        a3m = from_involution(cycle_reflection(3 * m))
        for i in range(len(P)):
            phi = P.cell(i)
            assert i_map(m, G, star(am, phi)) == star(a3m, i_map(m, G, phi))

    def test_i_map_preserves_order(self):
        G = complete(4)
        P = hom_cells(cycle(3), G)
        for i in range(len(P)):
            for j in P.faces(i):
                assert i_map(3, G, P.cell(j)).le(i_map(3, G, P.cell(i)))


class TestEnumeration:
    def test_eta_images_are_enumerated(self):
        G = complete(3)
        tabs = set(enumerate_monotone_equivariant(3, G))
        P = hom_cells(cycle(3), G)
        for i in range(len(P)):
            assert eta(3, G, P.cell(i)) in tabs

    def test_non_equivariant_superset(self):
        # target K2: monotone maps are constant on the (connected)
        # comparability graph, and no constant map is equivariant
        G = complete(2)
        eq = enumerate_monotone_equivariant(3, G, equivariant=True)
        allm = enumerate_monotone_equivariant(3, G, equivariant=False)
        assert set(eq) <= set(allm)
        assert len(eq) == 0 and len(allm) == 2

    def test_empty_target_hom(self):
        # no K2 -> K1 multihoms, so no tables at all
        assert enumerate_monotone_equivariant(3, complete(1)) == []


class TestKappa:
    def test_kappa_commutes_with_reflection(self):
        from homchrom.graphs import kappa_hom
        for m in (3, 5):
            kap = kappa_hom(m)
            a_big = cycle_reflection(m + 2)
            a_small = cycle_reflection(m)
            assert tuple(kap(a_big(v)) for v in range(m + 2)) == \
                tuple(a_small(kap(v)) for v in range(m + 2))
