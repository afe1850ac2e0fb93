"""Exact chromatic number by branch and bound.

The solver is exact with an explicit node budget; running out of budget
is a first-class "unknown" outcome, never a wrong number.  Vertices are
branched in largest-degree-first order, ties broken by index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .graphs import Graph, VertexMap, complete, bits


@dataclass(frozen=True)
class ColoringResult:
    chi: int  # exact chromatic number when exact, else None
    witness: VertexMap  # proper colouring with chi colours, when exact
    exact: bool
    lower: int
    upper: int
    nodes: int

    @property
    def status(self):
        return "exact" if self.exact else "unknown within budget"


def greedy_clique(G):
    """Greedy clique, largest-degree-first.  Lower bound for chi."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    clique_mask = 0
    clique = []
    for v in order:
        if clique_mask & ~G.adj[v] == 0:
            clique.append(v)
            clique_mask |= 1 << v
    return clique


def greedy_coloring(G):
    """Greedy colouring in the branching order.  Upper bound for chi."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    colors = {}
    used = 0
    for v in order:
        taken = {colors[w] for w in bits(G.adj[v]) if w in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used, [colors[v] for v in range(G.n)]


def _try_color(G, k, order, budget, counter):
    """Backtracking k-colourability in the given vertex order.

    Returns (colours, nodes_used) with colours None if no colouring,
    or raises StopIteration-like budget signal via ValueError sentinel.
    """
    colors = [-1] * G.n
    pos = {v: i for i, v in enumerate(order)}

    def rec(i):
        if counter[0] >= budget:
            raise _Budget()
        counter[0] += 1
        if i == len(order):
            return True
        v = order[i]
        taken = set()
        maxused = -1
        for w in bits(G.adj[v]):
            c = colors[w]
            if c >= 0:
                taken.add(c)
            # symmetry breaking: first i vertices use colours 0..maxused+1
        for j in range(i):
            maxused = max(maxused, colors[order[j]])
        for c in range(min(k, maxused + 2)):
            if c in taken:
                continue
            colors[v] = c
            if rec(i + 1):
                return True
            colors[v] = -1
        return False

    if rec(0):
        return list(colors)
    return None


class _Budget(Exception):
    pass


def chromatic_number(G, budget=2_000_000):
    """Exact chi(G) with a witness colouring, within a node budget."""
    if G.n == 0:
        raise InvalidInputError("chromatic number of the empty graph")
    if budget <= 0:
        raise InvalidInputError("budget must be positive")
    if not G.edges:
        w = VertexMap(G, complete(1), (0,) * G.n)
        return ColoringResult(1, w, True, 1, 1, 0)
    lower = len(greedy_clique(G))
    upper, greedy = greedy_coloring(G)
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    counter = [0]
    best_k, best_colors = upper, greedy
    k = upper - 1
    try:
        while k >= lower:
            colors = _try_color(G, k, order, budget, counter)
            if colors is None:
                lower = k + 1
                break
            best_k, best_colors = k, colors
            k -= 1
        else:
            lower = max(lower, k + 1)
        chi = best_k
        witness = VertexMap(G, complete(chi), tuple(best_colors))
        return ColoringResult(chi, witness, True, chi, chi, counter[0])
    except _Budget:
        return ColoringResult(None, None, False, lower, best_k, counter[0])
