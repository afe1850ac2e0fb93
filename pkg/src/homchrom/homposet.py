"""Enumeration of Hom complexes as face posets of multi-homomorphisms.

Cells are stored as tuples of target-vertex bitmasks, numbered in
canonical key order (concatenated sorted vertex sets), so cell indices
are deterministic.  Induced involution actions are recorded as index
permutations.
"""

from __future__ import annotations

from functools import cached_property

from .errors import BudgetExceededError, InvalidInputError
from .graphs import Graph, Involution, VertexMap, bits
from .multihom import MultiHom, star, from_involution, from_vertex_map, is_valid_masks

DEFAULT_CELL_BUDGET = 2_000_000


def _submasks(mask):
    """All nonempty submasks of mask, ascending is not guaranteed."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _common_neighbors(H, mask):
    out = H.full_mask
    for x in bits(mask):
        out &= H.adj[x]
        if not out:
            break
    return out


def _search_order(G):
    """BFS order from vertex 0, components concatenated."""
    order = []
    seen = set()
    for s in range(G.n):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in bits(G.adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _enumerate_cells(G, H, budget):
    """All multi-homomorphism mask tuples G -> H via backtracking."""
    if G.n == 2 and G.has_edge(0, 1):
        return _enumerate_k2(G, H, budget)
    order = _search_order(G)
    pos = {v: i for i, v in enumerate(order)}
    adj_prev = [[w for w in bits(G.adj[v]) if pos[w] < i]
                for i, v in enumerate(order)]
    cells = []
    masks = [0] * G.n
    full = H.full_mask

    def rec(i):
        if i == len(order):
            cells.append(tuple(masks))
            if len(cells) > budget:
                raise BudgetExceededError(
                    f"cell budget {budget} exceeded enumerating Hom cells",
                    reached=len(cells))
            return
        v = order[i]
        allowed = full
        for w in adj_prev[i]:
            allowed &= _common_neighbors(H, masks[w])
            if not allowed:
                return
        for sub in _submasks(allowed):
            masks[v] = sub
            rec(i + 1)
        masks[v] = 0

    rec(0)
    return cells


def _enumerate_k2(G, H, budget):
    """Hom(K2, H): pairs (A, B) with A x B inside E(H)."""
    cells = []
    full = H.full_mask
    for a_mask in _submasks(full):
        cn = _common_neighbors(H, a_mask)
        if not cn:
            continue
        for b_mask in _submasks(cn):
            cells.append((a_mask, b_mask))
            if len(cells) > budget:
                raise BudgetExceededError(
                    f"cell budget {budget} exceeded enumerating Hom(K2,-)",
                    reached=len(cells))
    return cells


def _mask_key(masks):
    return tuple(tuple(sorted(bits(m))) for m in masks)


class HomPoset:
    """The face poset of Hom(G, H), optionally with involution actions."""

    def __init__(self, source, target, cells, left=None, right=None):
        self.source = source
        self.target = target
        self.cells = sorted(cells, key=_mask_key)
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.dims = [sum(m.bit_count() - 1 for m in c) for c in self.cells]
        self.left_involution = None
        self.right_involution = None
        self.left_action = None
        self.right_action = None
        if left is not None:
            self.attach_left(left)
        if right is not None:
            self.attach_right(right)

    def __len__(self):
        return len(self.cells)

    @property
    def dim(self):
        return max(self.dims, default=-1)

    def cell(self, i):
        return MultiHom(self.source, self.target, self.cells[i])

    def multihoms(self):
        return [self.cell(i) for i in range(len(self.cells))]

    def index_of(self, phi):
        masks = phi.masks if isinstance(phi, MultiHom) else tuple(phi)
        return self.index[masks]

    def le(self, i, j):
        """Pointwise-inclusion order on cell indices."""
        return all(a & ~b == 0 for a, b in zip(self.cells[i], self.cells[j]))

    def faces(self, i):
        """Codimension-one faces: remove one element from one set."""
        cell = self.cells[i]
        out = []
        for v, m in enumerate(cell):
            if m.bit_count() < 2:
                continue
            for x in bits(m):
                smaller = cell[:v] + (m ^ (1 << x),) + cell[v + 1:]
                out.append(self.index[smaller])
        return out

    @cached_property
    def _face_closures(self):
        """For each cell, the set of indices of all strict faces."""
        order = sorted(range(len(self.cells)), key=lambda i: self.dims[i])
        closures = [None] * len(self.cells)
        for i in order:
            acc = set()
            for j in self.faces(i):
                acc.add(j)
                acc |= closures[j]
            closures[i] = acc
        return closures

    def strict_faces(self, i):
        return self._face_closures[i]

    def counts_by_dim(self):
        out = {}
        for d in self.dims:
            out[d] = out.get(d, 0) + 1
        return [out.get(d, 0) for d in range(self.dim + 1)]

    def euler_characteristic(self):
        return sum((-1) ** d for d in self.dims)

    # -- induced involution actions -----------------------------------

    def _action_from(self, fn):
        images = []
        for c in self.cells:
            img = fn(c)
            j = self.index.get(img)
            if j is None:
                raise InvalidInputError("action does not preserve the poset")
            images.append(j)
        return images

    def attach_left(self, alpha):
        """Left action x -> alpha * x from an involution on the source."""
        if alpha.graph != self.source:
            raise InvalidInputError("left involution is not on the source")
        perm = alpha.perm
        self.left_involution = alpha
        self.left_action = self._action_from(
            lambda c: tuple(c[perm[v]] for v in range(self.source.n)))
        return self

    def attach_right(self, alpha):
        """Right action x -> x * alpha from an involution on the target."""
        if alpha.graph != self.target:
            raise InvalidInputError("right involution is not on the target")

        def apply(c):
            out = []
            for m in c:
                img = 0
                for x in bits(m):
                    img |= 1 << alpha.perm[x]
                out.append(img)
            return tuple(out)

        self.right_involution = alpha
        self.right_action = self._action_from(apply)
        return self

    def action(self, side):
        act = self.left_action if side == "left" else self.right_action
        if act is None:
            raise InvalidInputError(f"no {side} action recorded")
        return act


def hom_cells(G, H, budget=DEFAULT_CELL_BUDGET, left=None, right=None):
    """Enumerate the face poset of Hom(G, H)."""
    if G.n == 0 or H.n == 0:
        raise InvalidInputError("Hom complex needs nonempty graphs")
    if budget <= 0:
        raise InvalidInputError("cell budget must be positive")
    cells = _enumerate_cells(G, H, budget)
    return HomPoset(G, H, cells, left=left, right=right)


def action_is_free(P, side):
    """True iff the recorded action maps no cell to itself."""
    act = P.action(side)
    return all(act[i] != i for i in range(len(P)))


def fixed_cells(P, side):
    act = P.action(side)
    return [i for i in range(len(P)) if act[i] == i]


def equivariant_cells(P, alpha0, alpha1):
    """All cells phi with alpha0 * phi = phi * alpha1.

    Nonemptiness certifies Hom_Z2(G, H) is nonempty: a setwise-invariant
    cell has an invariant barycentre.
    """
    if alpha0.graph != P.source or alpha1.graph != P.target:
        raise InvalidInputError("involutions do not match the poset")
    a0 = from_involution(alpha0)
    a1 = from_involution(alpha1)
    out = []
    for i in range(len(P)):
        phi = P.cell(i)
        if star(a0, phi) == star(phi, a1):
            out.append(phi)
    return out


def induced_map(f, side, P, Q=None):
    """The order-preserving cell map phi -> f*phi (pre) or phi*f (post).

    Returns a list of image MultiHoms, or image indices into Q when the
    codomain poset is supplied.
    """
    if side not in ("pre", "post"):
        raise InvalidInputError("side must be 'pre' or 'post'")
    if not isinstance(f, MultiHom):
        f = from_vertex_map(f.as_vertex_map if isinstance(f, Involution) else f)
    images = []
    for i in range(len(P)):
        phi = P.cell(i)
        img = star(f, phi) if side == "pre" else star(phi, f)
        images.append(Q.index_of(img) if Q is not None else img)
    return images
