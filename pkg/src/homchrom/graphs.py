"""Finite simple graphs, vertex maps, involutions and standard generators.

Vertices are always 0..n-1.  Kneser graphs carry subset labels; the
vertex order is colexicographic on the sorted subsets so that cell
identities downstream are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from .errors import BudgetExceededError, InvalidInputError


@dataclass(frozen=True)
class Graph:
    """Finite simple loopless graph on vertices 0..n-1."""

    n: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v
    name: str = ""
    labels: tuple = None  # optional per-vertex labels (e.g. Kneser subsets)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise InvalidInputError(f"bad edge {e} for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidInputError("label count does not match vertex count")

    @cached_property
    def adj(self):
        """Adjacency bitmasks, one int per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def full_mask(self):
        return (1 << self.n) - 1

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v):
        return sorted(bits(self.adj[v]))

    def edge_count(self):
        return len(self.edges)

    def is_connected(self):
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    def label_of(self, v):
        return self.labels[v] if self.labels is not None else v

    def __repr__(self):
        tag = self.name or f"graph(n={self.n},m={len(self.edges)})"
        return f"<Graph {tag}>"


def bits(mask):
    """Iterate over set bit positions of an int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n, edge_list, name="", labels=None):
    edges = set()
    for u, v in edge_list:
        if u == v:
            raise InvalidInputError(f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges), name=name, labels=labels)


def complete(n):
    """Complete graph K_n."""
    if n < 1:
        raise InvalidInputError("complete graph needs n >= 1")
    return graph_from_edges(n, itertools.combinations(range(n), 2), name=f"K{n}")


def cycle(m):
    """Cycle C_m, edges {i, i+1 mod m}."""
    if m < 3:
        raise InvalidInputError("cycle needs m >= 3")
    return graph_from_edges(m, [(i, (i + 1) % m) for i in range(m)], name=f"C{m}")


def kneser(n, l, max_vertices=100000):
    """Kneser graph KG_{n,l}: n-subsets of a (2n+l)-set, disjoint sets adjacent.

    Vertices are enumerated in colexicographic order of the sorted subsets.
    """
    if n < 1 or l < 0:
        raise InvalidInputError("kneser needs n >= 1, l >= 0")
    ground = 2 * n + l
    if comb(ground, n) > max_vertices:
        raise BudgetExceededError(
            f"kneser({n},{l}) has {comb(ground, n)} vertices, "
            f"over budget {max_vertices}")
    subsets = sorted(itertools.combinations(range(ground), n),
                     key=lambda t: tuple(reversed(t)))
    index = {s: i for i, s in enumerate(subsets)}
    edge_list = []
    for a, b in itertools.combinations(subsets, 2):
        if not set(a) & set(b):
            edge_list.append((index[a], index[b]))
    return graph_from_edges(len(subsets), edge_list, name=f"KG({n},{l})",
                            labels=tuple(frozenset(s) for s in subsets))


@dataclass(frozen=True)
class VertexMap:
    """A graph homomorphism given vertex-wise."""

    source: Graph
    target: Graph
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise InvalidInputError("mapping length does not match source")
        for w in self.mapping:
            if not 0 <= w < self.target.n:
                raise InvalidInputError(f"image vertex {w} out of range")
        for u, v in self.source.edges:
            if not self.target.has_edge(self.mapping[u], self.mapping[v]):
                raise InvalidInputError(
                    f"edge {{{u},{v}}} maps to non-edge "
                    f"{{{self.mapping[u]},{self.mapping[v]}}}")

    def __call__(self, v):
        return self.mapping[v]

    def compose(self, other):
        """self after other: other then self.  other: H->G, self: G->G'."""
        if other.target is not self.source and other.target != self.source:
            raise InvalidInputError("composition mismatch")
        return VertexMap(other.source, self.target,
                         tuple(self.mapping[w] for w in other.mapping))


def identity_map(G):
    return VertexMap(G, G, tuple(range(G.n)))


@dataclass(frozen=True)
class Involution:
    """An involutive graph homomorphism alpha: G -> G."""

    graph: Graph
    perm: tuple

    def __post_init__(self):
        vm = VertexMap(self.graph, self.graph, self.perm)  # validates hom
        for v in range(self.graph.n):
            if self.perm[self.perm[v]] != v:
                raise InvalidInputError(f"not an involution at vertex {v}")
        object.__setattr__(self, "_vm", vm)

    def __call__(self, v):
        return self.perm[v]

    @property
    def as_vertex_map(self):
        return VertexMap(self.graph, self.graph, self.perm)

    @cached_property
    def flips_edge(self):
        """True iff some edge {u, alpha(u)} exists with alpha(u) != u."""
        return any(self.perm[u] == v for u, v in self.graph.edges)

    @cached_property
    def flipped_edge(self):
        for u, v in sorted(self.graph.edges):
            if self.perm[u] == v:
                return (u, v)
        return None

    def is_identity(self):
        return all(self.perm[v] == v for v in range(self.graph.n))

    def orbits(self):
        """Vertex orbits as sorted tuples, in order of smallest element."""
        seen = set()
        out = []
        for v in range(self.graph.n):
            if v in seen:
                continue
            orb = tuple(sorted({v, self.perm[v]}))
            seen.update(orb)
            out.append(orb)
        return out


def identity_involution(G):
    return Involution(G, tuple(range(G.n)))


def cycle_reflection(m):
    """Reflection v -> m-1-v (mod m) on C_m.

    For odd m this is the edge-flipping reflection fixing (m-1)/2; for
    even m it flips the edge {m/2-1, m/2} (our convention, even cycles
    need one too for the even-cycle scans).
    """
    G = cycle(m)
    perm = tuple((m - 1 - v) % m for v in range(m))
    return Involution(G, perm)


def complete_swap01(n):
    """Transposition of vertices 0 and 1 on K_n."""
    if n < 2:
        raise InvalidInputError("need n >= 2 to swap vertices 0 and 1")
    G = complete(n)
    perm = (1, 0) + tuple(range(2, n))
    return Involution(G, perm)


def kneser_reversal(r, s):
    """Ground-set reversal i -> 4r+2s-1-i acting on KG_{2r,2s}."""
    if r < 1 or s < 1:
        raise InvalidInputError("kneser_reversal needs r, s >= 1")
    G = kneser(2 * r, 2 * s)
    ground = 4 * r + 2 * s
    image = {}
    for v in range(G.n):
        image[v] = frozenset(ground - 1 - i for i in G.labels[v])
    lookup = {lab: v for v, lab in enumerate(G.labels)}
    perm = tuple(lookup[image[v]] for v in range(G.n))
    return Involution(G, perm)


def kappa_hom(m):
    """The homomorphism C_{m+2} -> C_m, i -> i-1 mod m.

    Spelled out case-wise: 0 -> m-1, i -> i-1 for 1 <= i <= m, m+1 -> 0.
    Commutes with the reflections on both cycles.
    """
    if m < 3:
        raise InvalidInputError("kappa needs m >= 3")
    mapping = [0] * (m + 2)
    mapping[0] = m - 1
    for i in range(1, m + 1):
        mapping[i] = i - 1
    mapping[m + 1] = 0
    return VertexMap(cycle(m + 2), cycle(m), tuple(mapping))


def odd_girth(G):
    """Length of a shortest odd cycle; None for bipartite graphs."""
    best = None
    for s in range(G.n):
        level = {s: 0}
        frontier = [s]
        d = 0
        while frontier:
            nxt = []
            for v in frontier:
                for w in bits(G.adj[v]):
                    if w not in level:
                        level[w] = d + 1
                        nxt.append(w)
            frontier = nxt
            d += 1
        for u, v in G.edges:
            if u in level and v in level and level[u] == level[v]:
                cand = 2 * level[u] + 1
                if best is None or cand < best:
                    best = cand
    return best


# -- small-graph canonical forms (exhaustive relabeling, desk scale) --------

_PAIR_INDEX_CACHE = {}


def _pair_index(n):
    idx = _PAIR_INDEX_CACHE.get(n)
    if idx is None:
        idx = {}
        for k, (u, v) in enumerate(itertools.combinations(range(n), 2)):
            idx[(u, v)] = k
        _PAIR_INDEX_CACHE[n] = idx
    return idx


def _edge_mask(n, edges, perm):
    pair_index = _pair_index(n)
    mask = 0
    for u, v in edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        mask |= 1 << pair_index[(a, b)]
    return mask


def canonical_key(G, max_n=8):
    """Canonical (n, edge-mask) pair, minimized over vertex relabelings.

    Vertices are grouped into ascending-degree classes and only
    class-preserving relabelings are tried; isomorphisms preserve
    degrees, so the minimum is a complete invariant.
    """
    if G.n > max_n:
        raise InvalidInputError(f"canonical form limited to n <= {max_n}")
    degs = [G.degree(v) for v in range(G.n)]
    classes = {}
    for v in range(G.n):
        classes.setdefault(degs[v], []).append(v)
    class_list = [classes[d] for d in sorted(classes)]
    offsets = []
    off = 0
    for cls in class_list:
        offsets.append(off)
        off += len(cls)
    best = None
    perm = [0] * G.n
    for parts in itertools.product(*(itertools.permutations(c) for c in class_list)):
        for cls_off, assigned in zip(offsets, parts):
            for i, v in enumerate(assigned):
                perm[v] = cls_off + i
        mask = _edge_mask(G.n, G.edges, perm)
        if best is None or mask < best:
            best = mask
    return (G.n, best)


def are_isomorphic(G, H):
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    return canonical_key(G) == canonical_key(H)


def connected_graphs(max_n, min_edges=0):
    """All connected graphs with 1..max_n vertices, up to isomorphism.

    Deduplicated by exhaustive-relabeling canonical form; desk scale
    (max_n <= 6 is the intended range).
    """
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edge_list = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if len(edge_list) < min_edges:
                continue
            G = graph_from_edges(n, edge_list)
            if not G.is_connected():
                continue
            key = canonical_key(G)
            if key in seen:
                continue
            seen.add(key)
            out.append(Graph(G.n, G.edges, name=f"G{n}.{len(seen)}"))
    return out
