"""GF(2) chain complexes, order complexes and Betti numbers.

A SimplicialComplexGF2 stores, per dimension, the list of simplices
with explicit face indices.  This representation also covers the
Delta-complexes arising as quotients by free involutions, where a
simplex is not determined by its vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import BudgetExceededError, InvalidInputError


class SimplicialComplexGF2:
    """Simplices by dimension with explicit boundary structure.

    levels[d] is a list of vertex tuples (ascending in the local
    order); faces[d][i] is the tuple of indices of the codim-1 faces of
    simplex i (entry j omits vertex j).  Vertex tuples of distinct
    simplices may coincide in Delta-complex (quotient) instances.
    """

    def __init__(self, levels, faces, n_vertices=None):
        self.levels = levels
        self.faces = faces
        if n_vertices is None:
            n_vertices = len(levels[0]) if levels else 0
        self.n_vertices = n_vertices

    @property
    def dim(self):
        return len(self.levels) - 1

    def size(self, d):
        if 0 <= d < len(self.levels):
            return len(self.levels[d])
        return 0

    def total_simplices(self):
        return sum(len(l) for l in self.levels)

    def euler_characteristic(self):
        return sum((-1) ** d * len(l) for d, l in enumerate(self.levels))

    def boundary_columns(self, d):
        """Boundary matrix C_d -> C_{d-1} as column bit-vectors."""
        if d <= 0 or d > self.dim:
            return []
        cols = []
        for fs in self.faces[d]:
            col = 0
            for j in fs:
                col ^= 1 << j  # GF(2): repeated faces cancel
            cols.append(col)
        return cols

    def chain_complex(self):
        return ChainComplexGF2(
            sizes=[len(l) for l in self.levels],
            boundaries=[self.boundary_columns(d) for d in range(1, self.dim + 1)])

    def betti(self):
        return self.chain_complex().betti()

    def edge_lookup(self):
        """Map vertex pair -> edge index (only meaningful when simplices
        are determined by their vertices, e.g. genuine order complexes)."""
        return {tuple(v): i for i, v in enumerate(self.levels[1])} if self.dim >= 1 else {}


@dataclass
class ChainComplexGF2:
    """Boundary matrices over GF(2), boundaries[i]: C_{i+1} -> C_i."""

    sizes: list
    boundaries: list

    def verify(self):
        """Check that consecutive boundary maps compose to zero."""
        for d in range(1, len(self.boundaries)):
            lower = self.boundaries[d - 1]
            for col in self.boundaries[d]:
                if gf2.matvec(lower, col) != 0:
                    raise InvalidInputError(f"dd != 0 at dimension {d + 1}")
        return True

    def betti(self):
        """GF(2) Betti numbers b_0..b_dim."""
        if not self.sizes:
            return ()
        ranks = [gf2.rank(cols) for cols in self.boundaries]
        out = []
        for d, n in enumerate(self.sizes):
            r_d = ranks[d - 1] if d >= 1 else 0
            r_up = ranks[d] if d < len(ranks) else 0
            out.append(n - r_d - r_up)
        return tuple(out)

    def euler_characteristic(self):
        return sum((-1) ** d * n for d, n in enumerate(self.sizes))


def complex_from_simplices(simplices):
    """Build a complex from explicit simplices, closing under faces.

    Simplices are given as iterables of integer vertices; vertex order
    inside each simplex is ascending integer order.
    """
    by_dim = {}
    todo = [tuple(sorted(set(s))) for s in simplices]
    seen = set(todo)
    while todo:
        s = todo.pop()
        by_dim.setdefault(len(s) - 1, set()).add(s)
        if len(s) > 1:
            for j in range(len(s)):
                f = s[:j] + s[j + 1:]
                if f not in seen:
                    seen.add(f)
                    todo.append(f)
    if not by_dim:
        return SimplicialComplexGF2([], [])
    top = max(by_dim)
    levels = [sorted(by_dim.get(d, ())) for d in range(top + 1)]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in levels]
    faces = [[]]
    for d in range(1, top + 1):
        fl = []
        for s in levels[d]:
            fl.append(tuple(index[d - 1][s[:j] + s[j + 1:]] for j in range(d + 1)))
        faces.append(fl)
    n_vertices = max((s[0] for s in levels[0]), default=-1) + 1
    return SimplicialComplexGF2(levels, faces, n_vertices=n_vertices)


def order_complex(P, max_chain_length=None, max_simplices=20_000_000):
    """Order complex of a HomPoset: simplices are chains of cells.

    Vertices are cell indices; the local order is the poset order (any
    chain is totally ordered).  With max_chain_length=L only chains of
    at most L cells are emitted (skeleton truncation).
    """
    n = len(P)
    closures = P._face_closures
    limit = max_chain_length if max_chain_length is not None else n + 1
    if limit < 1:
        raise InvalidInputError("max_chain_length must be >= 1")
    count = 0
    out_levels = []

    def emit(chain):
        d = len(chain) - 1
        while len(out_levels) <= d:
            out_levels.append([])
        out_levels[d].append(tuple(reversed(chain)))

    # iterative DFS over descending chains
    work = [(i,) for i in range(n)]
    while work:
        chain = work.pop()
        emit(chain)
        count += 1
        if count > max_simplices:
            raise BudgetExceededError(
                f"order complex budget {max_simplices} exceeded",
                reached=count)
        if len(chain) < limit:
            for j in closures[chain[-1]]:
                work.append(chain + (j,))
    levels = [sorted(lvl) for lvl in out_levels]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in levels]
    faces = [[]]
    for d in range(1, len(levels)):
        fl = []
        for s in levels[d]:
            fl.append(tuple(index[d - 1][s[:j] + s[j + 1:]] for j in range(d + 1)))
        faces.append(fl)
    return SimplicialComplexGF2(levels, faces, n_vertices=n)


def cellular_chain_complex(P):
    """GF(2) cellular chain complex of a Hom poset.

    The boundary of a cell is the sum of all cells obtained by removing
    one element from one assignment set; valid because the closure of a
    Hom cell is a product of simplices.
    """
    dim = P.dim
    if dim < 0:
        return ChainComplexGF2(sizes=[], boundaries=[])
    by_dim = [[] for _ in range(dim + 1)]
    local = [{} for _ in range(dim + 1)]
    for i, d in enumerate(P.dims):
        local[d][i] = len(by_dim[d])
        by_dim[d].append(i)
    boundaries = []
    for d in range(1, dim + 1):
        cols = []
        for i in by_dim[d]:
            col = 0
            for j in P.faces(i):
                col ^= 1 << local[d - 1][j]
            cols.append(col)
        boundaries.append(cols)
    return ChainComplexGF2(sizes=[len(b) for b in by_dim], boundaries=boundaries)


def betti_gf2(C):
    """Betti numbers of a chain complex (or complex with .betti)."""
    return C.betti()


def homological_connectivity(betti):
    """Largest k with vanishing reduced GF(2) Betti numbers through
    degree k; -1 for empty or disconnected input."""
    if not betti or betti[0] != 1:
        return -1
    k = 0
    for d in range(1, len(betti)):
        if betti[d] == 0:
            k = d
        else:
            break
    return k
