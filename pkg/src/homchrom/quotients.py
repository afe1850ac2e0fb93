"""The orbit graph of an involution and its universal property.

For an involution alpha on G, the graph on alpha-orbits has an edge
between orbits O, O' exactly when {u,v} and {u,alpha(v)} are both edges
for u in O, v in O'.  The canonical multi-homomorphism iota sends each
orbit-vertex to its underlying vertex set and is universal among
multi-homomorphisms fixed by the right alpha-action.
"""

from __future__ import annotations

from .errors import InvalidInputError
from .graphs import Graph, graph_from_edges, bits
from .multihom import MultiHom, multihom, star, from_involution


def fixed_quotient_graph(G, alpha):
    """Return (Q, iota) where Q is the orbit graph and iota: Q -> G.

    Orbit-vertices keep their underlying vertex sets as labels; the
    vertex numbering is by smallest orbit element.
    """
    if alpha.graph != G:
        raise InvalidInputError("involution is not on this graph")
    orbits = alpha.orbits()
    orbit_of = {}
    for i, orb in enumerate(orbits):
        for v in orb:
            orbit_of[v] = i
    edge_list = set()
    for i, O in enumerate(orbits):
        for j, P in enumerate(orbits):
            if i >= j:
                continue
            u = O[0]
            # condition is independent of the representative choice
            if any(G.has_edge(u, v) and G.has_edge(u, alpha(v)) for v in P):
                edge_list.add((i, j))
    Q = graph_from_edges(len(orbits), edge_list,
                         name=(G.name + "^Z2") if G.name else "quotient",
                         labels=tuple(frozenset(o) for o in orbits))
    iota = multihom(Q, G, [set(o) for o in orbits])
    return Q, iota


def universal_factorization(h, G, alpha):
    """Factor an alpha-invariant multi-homomorphism h: H -> G through iota.

    Returns the unique g: H -> G^Z2 with h = g * iota; g(v) is the set
    of alpha-orbits contained in h(v).
    """
    if h.target != G:
        raise InvalidInputError("h does not map into G")
    h_alpha = star(h, from_involution(alpha))
    if h_alpha != h:
        bad = next(v for v in range(h.source.n)
                   if h_alpha.masks[v] != h.masks[v])
        raise InvalidInputError(
            f"h is not alpha-invariant: differs at source vertex {bad}")
    Q, iota = fixed_quotient_graph(G, alpha)
    sets = []
    for v in range(h.source.n):
        hv = set(bits(h.masks[v]))
        sets.append({i for i in range(Q.n) if set(Q.labels[i]) <= hv})
    g = multihom(h.source, Q, sets)
    assert star(g, iota) == h
    return g
