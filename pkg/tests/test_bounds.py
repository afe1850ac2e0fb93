import pytest

from homchrom.bounds import (bound_sweep, cycle_homology_scan, hom_hind,
                             k2_poset, lovasz_bound, odd_cycle_bound,
                             odd_cycle_poset, verify_cor_ineq1)
from homchrom.bounds import test_graph_certificate as make_certificate
from homchrom.coloring import chromatic_number
from homchrom.errors import InvalidInputError
from homchrom.graphs import (complete, complete_swap01, cycle,
                             cycle_reflection, graph_from_edges, kneser,
                             kneser_reversal)


class TestLovasz:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_complete_graphs_tight(self, n):
        rep = lovasz_bound(complete(n))
        assert rep.value == n and rep.hind_exact

    def test_c5(self):
        rep = lovasz_bound(cycle(5))
        assert rep.value == 3 and rep.hind_value == 1

    def test_petersen_not_tight_here(self):
        # chi(Petersen) = 3 and the bound reaches it
        rep = lovasz_bound(kneser(2, 1))
        assert rep.value == 3

    def test_kg22_tight(self):
        rep = lovasz_bound(kneser(2, 2))
        assert rep.value == 4 and rep.hind_value == 2 and rep.hind_exact

    def test_edgeless(self):
        rep = lovasz_bound(graph_from_edges(3, []))
        assert rep.value == 1 and rep.empty


class TestOddCycle:
    def test_k4_tight(self):
        rep = odd_cycle_bound(complete(4), 1)
        assert rep.value == 4 and rep.hind_value == 1 and rep.hind_exact

    def test_triangle_free_gives_empty_sentinel(self):
        rep = odd_cycle_bound(cycle(5), 1)
        assert rep.empty and rep.value == 2 and rep.hind_value == -1

    def test_k5_r2_sound(self):
        # scan truncated at 1: a floor of the true bound, still <= chi
        rep = odd_cycle_bound(complete(5), 2, kmax=1)
        assert rep.ge_only
        assert rep.value <= 5

    def test_bad_r(self):
        with pytest.raises(InvalidInputError):
            odd_cycle_bound(complete(4), 0)


class TestIneq1:
    def test_k4(self):
        res = verify_cor_ineq1(complete(4), 1)
        assert res["status"] == "holds"
        assert res["hind_cycle"] + 1 <= res["hind_k2"]
        assert res == {"graph": "K4", "r": 1, "hind_k2": 2,
                       "hind_k2_exact": True, "hind_cycle": 1,
                       "hind_cycle_exact": True, "cycle_empty": False,
                       "status": "holds"}

    def test_bipartite_sentinel(self):
        res = verify_cor_ineq1(cycle(4), 1)
        assert res["status"] == "holds" and res["cycle_empty"]
        assert res["hind_cycle"] == -1

    def test_needs_edge(self):
        with pytest.raises(InvalidInputError):
            verify_cor_ineq1(graph_from_edges(2, []), 1)


class TestCertificates:
    def test_c5_level_one(self):
        cert = make_certificate(cycle(5), cycle_reflection(5), 1)
        assert cert.verdict == "certified"
        assert set(cert.witnesses) >= {"flipped_edge", "equivariant_cell",
                                       "coindex", "betti"}

    def test_k4_level_two(self):
        cert = make_certificate(complete(4), complete_swap01(4), 2)
        assert cert.verdict == "certified"
        assert cert.witnesses["coindex"]["level"] == 1
        assert cert.witnesses["pi1"] == "trivial"

    def test_kg22_level_two(self):
        cert = make_certificate(kneser(2, 2), kneser_reversal(1, 1), 2)
        assert cert.verdict in ("certified", "homologically-certified")
        w = cert.witnesses
        assert w["flipped_edge"]
        assert w["equivariant_cell"]
        assert w["doubling_cell"]["quotient_cell"]
        assert w["coindex"]["level"] == 1 and "path" in w["coindex"]
        assert w["betti"][0] == 1 and w["betti"][1] == 0

    def test_unsupported_level(self):
        cert = make_certificate(complete(5), complete_swap01(5), 3)
        assert cert.verdict == "unsupported"
        assert any("unsupported coindex" in r for r in cert.reasons)
        # the remaining hypotheses were still checked
        assert "betti" in cert.witnesses

    def test_non_flipping_involution_fails(self):
        # the identity-off-an-isolated-pair style: use C4 reflection
        # v -> (4 - v) % 4 which fixes 0 and 2 and flips no edge
        from homchrom.graphs import Involution
        alpha = Involution(cycle(4), (0, 3, 2, 1))
        cert = make_certificate(cycle(4), alpha, 1)
        assert cert.verdict == "failed"
        assert "involution flips no edge" in cert.reasons


class TestScan:
    def test_even_target_empty(self):
        res = cycle_homology_scan(cycle(4), "odd", [3, 5, 7])
        assert all(r["empty"] for r in res["rows"])

    def test_k4_connected_stages(self):
        res = cycle_homology_scan(complete(4), "odd", [3, 5, 7])
        for r in res["rows"]:
            assert r["betti"][0] == 1
        assert 1 in res["stabilized_degrees"]

    def test_c5_disjoint_circles_picture(self):
        res = cycle_homology_scan(cycle(5), "odd", [5, 7, 9])
        for r in res["rows"]:
            b = r["betti"]
            # every component carries at most one independent loop
            assert len(b) < 2 or b[1] <= b[0]

    def test_parity_enforced(self):
        with pytest.raises(InvalidInputError):
            cycle_homology_scan(complete(4), "odd", [4])

    def test_budget_truncates(self):
        res = cycle_homology_scan(complete(4), "odd", [3, 5, 7], budget=100)
        assert res["truncated"]
        assert res["rows"][-1]["status"] == "budget-exceeded"


class TestSweep:
    def test_small_family_no_violations(self):
        from homchrom.graphs import connected_graphs
        res = bound_sweep(connected_graphs(5, min_edges=1))
        assert res["violations"] == []
        assert len(res["rows"]) == 30
        for row in res["rows"]:
            assert "error" not in row
            assert row["chi_status"] == "exact"
            assert row["lovasz"] <= row["chi"]
            assert row["odd_cycle_1"] <= row["chi"]

    def test_complete_family_tight(self):
        res = bound_sweep([complete(n) for n in (3, 4, 5, 6)])
        for row in res["rows"]:
            assert row["lovasz"] == row["chi"]

    def test_kneser_family(self):
        res = bound_sweep([kneser(2, 1), kneser(2, 2)], r=2)
        by_name = {r["graph"]: r for r in res["rows"]}
        assert by_name["KG(2,1)"]["lovasz"] == 3 == by_name["KG(2,1)"]["chi"]
        assert by_name["KG(2,2)"]["lovasz"] == 4 == by_name["KG(2,2)"]["chi"]
        for r in res["rows"]:
            assert r["odd_cycle_2"] >= r["lovasz"] - 1

    def test_rows_sorted_deterministically(self):
        graphs = [complete(4), cycle(5), complete(3)]
        a = bound_sweep(graphs)
        b = bound_sweep(list(reversed(graphs)))
        assert [r["graph"] for r in a["rows"]] == [r["graph"] for r in b["rows"]]


class TestHindHelpers:
    def test_hom_hind_matches_posets(self):
        assert hom_hind(k2_poset(complete(4))).value == 2
        assert hom_hind(odd_cycle_poset(complete(4), 1)).value == 1

    def test_kmax_floor(self):
        h = hom_hind(k2_poset(complete(5)), kmax=1)
        assert h.value == 1 and not h.exact

    def test_chi_consistency_spot(self):
        for G in (complete(4), cycle(7), kneser(2, 1)):
            chi = chromatic_number(G).chi
            assert lovasz_bound(G).value <= chi
