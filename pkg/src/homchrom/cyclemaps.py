"""Comparison maps between cycle Hom complexes and posets of monotone
equivariant tables.

For a cycle C_m and a target graph G, a table assigns to each cell of
Hom(K2, C_m) a cell of Hom(K2, G), monotonically and equivariantly for
the left K2-actions on both sides.  The maps implemented here:

    eta:   cell of Hom(C_m, G)       -> table, rho |-> rho * phi
    theta: table                     -> cell of Hom(C_{3m}, G)
    i:     cell of Hom(C_m, G)       -> cell of Hom(C_{3m}, G)
    j:     table at level m          -> table at level 3m

satisfying theta(eta(phi)) = i(phi) and eta(theta(f)) <= j(f).
The extra involution on tables is precomposition with the right
reflection action on Hom(K2, C_m); theta intertwines it with the left
reflection action on Hom(C_{3m}, G).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceededError, InvalidInputError
from .graphs import Graph, cycle, complete, cycle_reflection, complete_swap01, bits
from .homposet import hom_cells
from .multihom import MultiHom, star


@lru_cache(maxsize=None)
def _k2():
    return complete(2)


@lru_cache(maxsize=None)
def k2_cycle_poset(m):
    """Hom(K2, C_m) with the left K2 swap action attached."""
    return hom_cells(_k2(), cycle(m), left=complete_swap01(2))


def _pair_le(c, d):
    return c[0] & ~d[0] == 0 and c[1] & ~d[1] == 0


@dataclass(frozen=True)
class MonotoneEquivariantMap:
    """A monotone, left-equivariant table Hom(K2,C_m) -> Hom(K2,G).

    Keys and values are (mask0, mask1) pairs of target-vertex bitmasks.
    """

    m: int
    target: Graph
    table: tuple  # tuple of ((maskA, maskB), (maskA', maskB')) pairs, sorted

    def lookup(self):
        return dict(self.table)

    def value(self, key):
        return self.lookup()[key]

    def le(self, other):
        """Pointwise order on tables."""
        mine, theirs = self.lookup(), other.lookup()
        return all(_pair_le(mine[k], theirs[k]) for k in mine)

    def validate(self):
        """Check monotonicity and equivariance; name a violating pair."""
        P = k2_cycle_poset(self.m)
        tab = self.lookup()
        if set(tab) != set(P.cells):
            raise InvalidInputError("table keys do not cover Hom(K2,C_m)")
        for key, val in tab.items():
            # values must be genuine cells of Hom(K2, G)
            MultiHom(_k2(), self.target, val)
        for a in P.cells:
            swapped = (a[1], a[0])
            va, vs = tab[a], tab[swapped]
            if (va[1], va[0]) != vs:
                raise InvalidInputError(
                    f"table not equivariant at cell pair {a} / {swapped}")
            for b in P.cells:
                if _pair_le(a, b) and not _pair_le(tab[a], tab[b]):
                    raise InvalidInputError(
                        f"table not monotone on the pair {a} <= {b}")
        return self

    def tau(self):
        """Precompose with the right reflection action on Hom(K2,C_m)."""
        m = self.m
        beta = cycle_reflection(m)
        tab = self.lookup()
        out = {}
        for (a, b) in tab:
            ra = _apply_perm(a, beta.perm)
            rb = _apply_perm(b, beta.perm)
            out[(a, b)] = tab[(ra, rb)]
        return MonotoneEquivariantMap(m, self.target, tuple(sorted(out.items())))


def _apply_perm(mask, perm):
    out = 0
    for x in bits(mask):
        out |= 1 << perm[x]
    return out


def table_from_dict(m, G, mapping):
    return MonotoneEquivariantMap(m, G, tuple(sorted(mapping.items())))


def eta(m, G, phi):
    """The table rho |-> rho * phi for a cell phi of Hom(C_m, G)."""
    if phi.source != cycle(m) or phi.target != G:
        raise InvalidInputError("phi is not a cell of Hom(C_m, G)")
    P = k2_cycle_poset(m)
    mapping = {}
    for rho_masks in P.cells:
        rho = MultiHom(_k2(), cycle(m), rho_masks)
        img = star(rho, phi)
        mapping[rho_masks] = img.masks
    return table_from_dict(m, G, mapping)


def _singleton(v):
    return 1 << v


def theta(m, G, f, validate=True):
    """Build the cell of Hom(C_{3m}, G) defined case-wise from a table.

    Index arithmetic is modulo m on table keys; theta(f)(3k) reads the
    second component at ({k},{k-1}), 3k+1 the first component at
    ({k},{k-1,k+1}), 3k+2 the second component at ({k},{k+1}).
    """
    if f.m != m or f.target != G:
        raise InvalidInputError("table does not match (m, G)")
    if validate:
        f.validate()
    tab = f.lookup()
    masks = [0] * (3 * m)
    for k in range(m):
        km1, kp1 = (k - 1) % m, (k + 1) % m
        masks[3 * k] = tab[(_singleton(k), _singleton(km1))][1]
        masks[3 * k + 1] = tab[(_singleton(k), _singleton(km1) | _singleton(kp1))][0]
        masks[3 * k + 2] = tab[(_singleton(k), _singleton(kp1))][1]
    return MultiHom(cycle(3 * m), G, tuple(masks))


def i_map(m, G, phi):
    """Subdivision inclusion Hom(C_m,G) -> Hom(C_{3m},G)."""
    if phi.source != cycle(m) or phi.target != G:
        raise InvalidInputError("phi is not a cell of Hom(C_m, G)")
    masks = [0] * (3 * m)
    for k in range(m):
        masks[3 * k] = phi.masks[(k - 1) % m]
        masks[3 * k + 1] = phi.masks[k]
        masks[3 * k + 2] = phi.masks[(k + 1) % m]
    return MultiHom(cycle(3 * m), G, tuple(masks))


def j_map(m, G, f, validate=True):
    """Lift a level-m table to level 3m.

    Cells of Hom(K2, C_{3m}) are classified by which component contains
    a vertex congruent 1 mod 3 (at most one component can, and then only
    one such vertex), falling back to the two {3k-1, 3k} edge forms.
    """
    if f.m != m or f.target != G:
        raise InvalidInputError("table does not match (m, G)")
    if validate:
        f.validate()
    tab = f.lookup()
    P3 = k2_cycle_poset(3 * m)
    out = {}
    for (a, b) in P3.cells:
        out[(a, b)] = tab[_classify_3m(a, b, m)]
    return table_from_dict(3 * m, G, out)


def _classify_3m(a, b, m):
    """Return the level-m table key for a cell of Hom(K2, C_{3m})."""
    one_b = next((v for v in bits(b) if v % 3 == 1), None)
    if one_b is not None:
        k = (one_b // 3) % m
        return (_singleton((k - 1) % m) | _singleton((k + 1) % m),
                _singleton(k))
    one_a = next((v for v in bits(a) if v % 3 == 1), None)
    if one_a is not None:
        k = (one_a // 3) % m
        return (_singleton(k),
                _singleton((k - 1) % m) | _singleton((k + 1) % m))
    # both components avoid residue 1: forced singleton edge forms
    va = next(bits(a))
    vb = next(bits(b))
    if va % 3 == 0 and (vb + 1) % 3 == 0:
        k = (va // 3) % m
        return (_singleton((k - 1) % m), _singleton(k))
    if (va + 1) % 3 == 0 and vb % 3 == 0:
        k = (vb // 3) % m
        return (_singleton(k), _singleton((k - 1) % m))
    raise InvalidInputError(f"unclassifiable Hom(K2,C_{{3m}}) cell ({a},{b})")


def enumerate_monotone_equivariant(m, G, budget=1_000_000, equivariant=True):
    """All monotone (optionally equivariant) tables, by backtracking over
    cells of Hom(K2,C_m) in a linear extension of its face poset."""
    if budget <= 0:
        raise InvalidInputError("budget must be positive")
    P = k2_cycle_poset(m)
    Q = hom_cells(_k2(), G)
    if len(Q) == 0:
        return []
    cells = sorted(P.cells, key=lambda c: (sum(x.bit_count() for x in c), c))
    # orbit representatives under the swap action (when equivariant)
    assigned_order = []
    forced_partner = {}
    seen = set()
    for c in cells:
        if c in seen:
            continue
        assigned_order.append(c)
        seen.add(c)
        if equivariant:
            sw = (c[1], c[0])
            if sw != c:
                forced_partner[c] = sw
                seen.add(sw)
    q_cells = Q.cells
    # comparability of P-cells among those already decided
    results = []
    table = {}
    nodes = [0]

    def compatible(c, val):
        for d, w in table.items():
            if _pair_le(c, d) and not _pair_le(val, w):
                return False
            if _pair_le(d, c) and not _pair_le(w, val):
                return False
        return True

    def rec(i):
        if i == len(assigned_order):
            results.append(table_from_dict(m, G, dict(table)))
            if len(results) > budget:
                raise BudgetExceededError(
                    f"table budget {budget} exceeded", reached=len(results))
            return
        c = assigned_order[i]
        partner = forced_partner.get(c)
        for val in q_cells:
            if not compatible(c, val):
                continue
            if partner is not None:
                pval = (val[1], val[0])
                if not compatible(partner, pval):
                    continue
            table[c] = val
            if partner is not None:
                table[partner] = pval
            rec(i + 1)
            del table[c]
            if partner is not None:
                del table[partner]

    rec(0)
    return results
