"""Multi-homomorphisms and their composition.

A multi-homomorphism G -> H assigns to each vertex of G a nonempty set
of vertices of H so that every selection of representatives is a graph
homomorphism.  These are the cells of the Hom complex; the partial
order is pointwise inclusion and composition is

    (phi * rho)(v) = rho[phi(v)] = union of rho(w) over w in phi(v).

Internally assignments are bitmasks over target vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .graphs import Graph, VertexMap, Involution, bits


@dataclass(frozen=True)
class MultiHom:
    source: Graph
    target: Graph
    masks: tuple  # one target-vertex bitmask per source vertex

    def __post_init__(self):
        validate_masks(self.source, self.target, self.masks)

    def assignment(self, v):
        """The assigned vertex set of source vertex v, sorted."""
        return sorted(bits(self.masks[v]))

    @property
    def dim(self):
        return sum(m.bit_count() - 1 for m in self.masks)

    def le(self, other):
        """Pointwise inclusion order on cells."""
        return all(a & ~b == 0 for a, b in zip(self.masks, other.masks))

    def sets(self):
        return tuple(frozenset(bits(m)) for m in self.masks)

    def key(self):
        """Canonical key: concatenated sorted vertex sets."""
        return tuple(tuple(sorted(bits(m))) for m in self.masks)

    def is_vertex(self):
        return self.dim == 0

    def as_vertex_map(self):
        if not self.is_vertex():
            raise InvalidInputError("cell has dimension > 0")
        return VertexMap(self.source, self.target,
                         tuple(m.bit_length() - 1 for m in self.masks))

    def __repr__(self):
        body = ", ".join(str(set(self.assignment(v))) for v in range(self.source.n))
        return f"<MultiHom dim={self.dim} [{body}]>"


def validate_masks(G, H, masks):
    if len(masks) != G.n:
        raise InvalidInputError("assignment length does not match source")
    full = H.full_mask
    for v, m in enumerate(masks):
        if m == 0:
            raise InvalidInputError(f"empty assignment at source vertex {v}")
        if m & ~full:
            raise InvalidInputError(f"assignment at vertex {v} out of range")
    for u, v in G.edges:
        a, b = masks[u], masks[v]
        for x in bits(a):
            if b & ~H.adj[x]:
                bad = next(bits(b & ~H.adj[x]))
                raise InvalidInputError(
                    f"cross-edge failure on source edge {{{u},{v}}}: "
                    f"target pair {{{x},{bad}}} is not an edge")


def is_valid_masks(G, H, masks):
    """Non-raising cross-edge check on raw masks."""
    for u, v in G.edges:
        b = masks[v]
        for x in bits(masks[u]):
            if b & ~H.adj[x]:
                return False
    return True


def multihom(G, H, sets):
    """Build a MultiHom from an iterable of vertex sets."""
    masks = []
    for s in sets:
        m = 0
        for x in s:
            m |= 1 << x
        masks.append(m)
    return MultiHom(G, H, tuple(masks))


def from_vertex_map(f):
    """View a graph homomorphism as a 0-cell."""
    return MultiHom(f.source, f.target, tuple(1 << w for w in f.mapping))


def from_involution(alpha):
    return from_vertex_map(alpha.as_vertex_map)


def identity_cell(G):
    return MultiHom(G, G, tuple(1 << v for v in range(G.n)))


def _coerce(x, expect_source=None):
    """Accept MultiHom, VertexMap or Involution; return a MultiHom."""
    if isinstance(x, MultiHom):
        return x
    if isinstance(x, Involution):
        return from_involution(x)
    if isinstance(x, VertexMap):
        return from_vertex_map(x)
    raise InvalidInputError(f"cannot compose object of type {type(x).__name__}")


def star(phi, rho):
    """Composition (phi * rho)(v) = rho[phi(v)].

    phi: G -> G', rho: G' -> G''.  Either argument may be a VertexMap
    or Involution, treated as a 0-cell.
    """
    phi = _coerce(phi)
    rho = _coerce(rho)
    if phi.target != rho.source:
        raise InvalidInputError("star: middle graphs do not match")
    out = []
    for v in range(phi.source.n):
        m = 0
        for w in bits(phi.masks[v]):
            m |= rho.masks[w]
        out.append(m)
    return MultiHom(phi.source, rho.target, tuple(out))
