"""Free involutions on complexes, quotients and the cohomological index.

The quotient of a free simplicial involution is taken orbit-by-orbit on
simplices (a Delta-complex; vertex sets need not determine simplices).
The classifying 1-cocycle w1 of the double cover is built from a
deterministic section of the orbit map, and the cohomological index is
the largest k for which the k-th cup power of w1 is not a coboundary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from . import gf2
from .errors import InvalidInputError, NonFreeActionError
from .complexes import SimplicialComplexGF2


@dataclass(frozen=True)
class CocycleGF2:
    """A GF(2) cochain given by its support (simplex indices)."""

    dim: int
    support: frozenset

    def value(self, i):
        return 1 if i in self.support else 0

    def is_zero(self):
        return not self.support


class Z2Complex:
    """A simplicial complex with a free simplicial involution.

    The involution is given on vertices; freeness on vertices suffices
    here because simplices are poset chains with distinct ranks, so a
    setwise-invariant simplex would have a fixed vertex.
    """

    def __init__(self, complex, tau):
        self.complex = complex
        self.tau = tuple(tau)
        if len(self.tau) != complex.n_vertices:
            raise InvalidInputError("involution length != vertex count")
        for v in range(complex.n_vertices):
            if self.tau[self.tau[v]] != v:
                raise InvalidInputError(f"tau is not an involution at vertex {v}")
        for v, s in enumerate(complex.levels[0] if complex.levels else []):
            if self.tau[s[0]] == s[0]:
                raise NonFreeActionError(
                    f"involution fixes vertex simplex {s}", fixed=s)
        # simplex-level action, per dimension
        self._indices = [
            {s: i for i, s in enumerate(lvl)} for lvl in complex.levels]
        self.simplex_action = []
        for d, lvl in enumerate(complex.levels):
            act = []
            for s in lvl:
                img = tuple(self.tau[v] for v in s)
                j = self._indices[d].get(img)
                if j is None:
                    # stored tuples may use global integer order (plain
                    # simplicial complexes) rather than a tau-compatible
                    # local order; retry sorted
                    j = self._indices[d].get(tuple(sorted(img)))
                if j is None:
                    raise InvalidInputError(
                        f"involution does not preserve the complex at {s}")
                act.append(j)
            self.simplex_action.append(act)
        for d, act in enumerate(self.simplex_action):
            for i, j in enumerate(act):
                if i == j:
                    raise NonFreeActionError(
                        f"involution fixes the {d}-simplex "
                        f"{complex.levels[d][i]}",
                        fixed=complex.levels[d][i])

    @property
    def dim(self):
        return self.complex.dim

    def is_empty(self):
        return not self.complex.levels or not self.complex.levels[0]


class QuotientComplex:
    """Quotient Delta-complex of a free involution, with the classifying
    cocycle w1 of the double cover."""

    def __init__(self, X, section="min"):
        self.base = X
        K = X.complex
        self.orbit_of = []  # per dim: simplex index -> orbit index
        self.reps = []      # per dim: orbit index -> representative simplex index
        for d, act in enumerate(X.simplex_action):
            orb = [-1] * len(act)
            reps = []
            for i in range(len(act)):
                if orb[i] != -1:
                    continue
                o = len(reps)
                orb[i] = o
                orb[act[i]] = o
                reps.append(i)
            self.orbit_of.append(orb)
            self.reps.append(reps)
        # quotient face structure from representative lifts
        levels = []
        faces = [[]]
        K_faces = K.faces
        for d in range(len(self.reps)):
            lvl = []
            for i in self.reps[d]:
                s = K.levels[d][i]
                lvl.append(tuple(self.orbit_of[0][self._vertex_index(K, v)]
                                 for v in s))
            levels.append(lvl)
            if d >= 1:
                fl = []
                for i in self.reps[d]:
                    fl.append(tuple(self.orbit_of[d - 1][j] for j in K_faces[d][i]))
                faces.append(fl)
        n_orb_vertices = len(self.reps[0]) if self.reps else 0
        self.complex = SimplicialComplexGF2(levels, faces,
                                            n_vertices=n_orb_vertices)
        # deterministic vertex section: lift with smaller ("min") or
        # larger ("max") vertex id
        self.section = []
        for o, i in enumerate(self.reps[0]):
            v = K.levels[0][i][0]
            w = X.tau[v]
            self.section.append(min(v, w) if section == "min" else max(v, w))
        self.w1 = self._classifying_cocycle()

    @staticmethod
    def _vertex_index(K, v):
        # order complexes have levels[0][v] == (v,), keep a safe lookup
        return v

    def vertex_orbit(self, v):
        return self.orbit_of[0][v]

    def _classifying_cocycle(self):
        """w1 on a quotient edge is 1 iff the lift starting at the
        section of its first vertex ends at the involution image of the
        section of its second vertex."""
        X = self.base
        K = X.complex
        if K.dim < 1:
            return CocycleGF2(1, frozenset())
        support = set()
        for o, i in enumerate(self.reps[1]):
            p, q = K.levels[1][i]
            if p != self.section[self.vertex_orbit(p)]:
                p, q = X.tau[p], X.tau[q]
            # now p is the chosen lift of the lower vertex
            if q != self.section[self.vertex_orbit(q)]:
                support.add(o)
        return CocycleGF2(1, frozenset(support))

    def coboundary_of(self, cochain):
        """Coboundary: value on a (d+1)-simplex is the sum over faces."""
        d = cochain.dim
        if d + 1 > self.complex.dim:
            return CocycleGF2(d + 1, frozenset())
        support = set()
        for i, fs in enumerate(self.complex.faces[d + 1]):
            if sum(1 for j in fs if j in cochain.support) % 2:
                support.add(i)
        return CocycleGF2(d + 1, frozenset(support))

    def is_cocycle(self, cochain):
        return self.coboundary_of(cochain).is_zero()

    def is_coboundary(self, cochain):
        """Solve delta(b) = cochain over GF(2)."""
        d = cochain.dim
        if cochain.is_zero():
            return True
        if d == 0:
            return False
        if d == 1:
            return self._is_one_coboundary(cochain)
        cols = []
        faces = self.complex.faces[d]
        n_lower = self.complex.size(d - 1)
        # column per (d-1)-simplex: which d-simplices it borders, mod 2
        col_bits = [0] * n_lower
        for i, fs in enumerate(faces):
            for j in fs:
                col_bits[j] ^= 1 << i
        target = 0
        for i in cochain.support:
            target |= 1 << i
        return gf2.in_span(col_bits, target)

    def _is_one_coboundary(self, cochain):
        """Degree-1 solve by parity union-find: a 1-cochain is a
        coboundary iff assigning u(a) ^ u(b) = c(e) over every edge
        (loops included) is consistent."""
        n = self.complex.size(0)
        parent = list(range(n))
        parity = [0] * n  # parity to current parent, exact after find()

        def find(x):
            path = []
            while parent[x] != x:
                path.append(x)
                x = parent[x]
            p = 0
            for y in reversed(path):
                p ^= parity[y]
                parent[y] = x
                parity[y] = p
            return x

        for i, (a, b) in enumerate(self.complex.levels[1]):
            w = 1 if i in cochain.support else 0
            ra, rb = find(a), find(b)
            if ra == rb:
                if parity[a] ^ parity[b] != w:
                    return False
            else:
                parent[rb] = ra
                parity[rb] = parity[a] ^ parity[b] ^ w
        return True

    def cup_power(self, k):
        """Front-face cup power of w1: the value on (v0 < ... < vk) is
        the product of w1 on the consecutive edges."""
        if k < 1:
            raise InvalidInputError("cup power needs k >= 1")
        if k == 1:
            return self.w1
        if k > self.complex.dim:
            raise InvalidInputError(
                f"complex truncated below dimension {k}")
        K = self.base.complex
        edge_index = K.edge_lookup()
        support = set()
        for o, i in enumerate(self.reps[k]):
            s = K.levels[k][i]
            val = 1
            for t in range(1, k + 1):
                e = edge_index[(s[t - 1], s[t])]
                val &= self.w1.value(self.orbit_of[1][e])
                if not val:
                    break
            if val:
                support.add(o)
        return CocycleGF2(k, frozenset(support))


@dataclass(frozen=True)
class HindResult:
    value: int
    exact: bool
    empty: bool = False

    def __str__(self):
        return f"hind {'=' if self.exact else '>='} {self.value}"


def quotient_complex(X, section="min"):
    """Quotient of a free Z2 complex with its classifying cocycle."""
    Q = QuotientComplex(X, section=section)
    return Q, Q.w1


def hind(X, kmax=None, section="min", truncated=False):
    """Cohomological index: largest k <= kmax with [w1]^k nonzero.

    The empty complex reports the sentinel -1.  Once some power is a
    coboundary the result is exact (higher powers vanish too).  If the
    scan exhausts kmax, or the top dimension of a truncated complex,
    with a nonvanishing power, only a lower bound is certified.
    """
    if X.is_empty():
        return HindResult(-1, True, empty=True)
    Q = QuotientComplex(X, section=section)
    top = Q.complex.dim
    limit = top if kmax is None else min(kmax, top)
    for k in range(1, limit + 1):
        ck = Q.cup_power(k)
        if Q.is_coboundary(ck):
            return HindResult(k - 1, True)
    value = limit
    if limit == top and not truncated:
        return HindResult(value, True)  # no higher simplices exist at all
    if kmax is not None and limit == kmax and (top > kmax or truncated):
        return HindResult(value, False)
    return HindResult(value, not truncated)


def coind_at_least(X, k):
    """Certificate that the coindex is at least k, for k in {0, 1}.

    k=0 needs a nonempty complex; k=1 needs a component that is setwise
    invariant, witnessed by a path from some vertex v to tau(v).
    """
    if k not in (0, 1):
        raise InvalidInputError("only coindex levels 0 and 1 are certified")
    if X.is_empty():
        return False, None
    if k == 0:
        return True, {"vertex": X.complex.levels[0][0][0]}
    K = X.complex
    n = K.n_vertices
    adj = [[] for _ in range(n)]
    for (u, v) in K.levels[1] if K.dim >= 1 else []:
        adj[u].append(v)
        adj[v].append(u)
    for s in range(n):
        t = X.tau[s]
        # BFS from s looking for tau(s)
        prev = {s: None}
        queue = [s]
        while queue:
            u = queue.pop(0)
            if u == t:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                path.reverse()
                return True, {"vertex": s, "path": path}
            for w in adj[u]:
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
    return False, None


# -- fundamental group heuristic -------------------------------------

def pi1_trivial_heuristic(K, budget=200_000):
    """Edge-path group of a connected complex, with bounded Tietze
    simplification.  Returns "trivial" only when the presentation
    collapses completely; "unknown" is the safe fallback."""
    if not K.levels or not K.levels[0]:
        return "unknown"
    n = K.n_vertices
    edges = list(K.levels[1]) if K.dim >= 1 else []
    adj = {}
    for i, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    # spanning tree by BFS from the first vertex
    root = K.levels[0][0][0]
    in_tree = set()
    seen = {root}
    queue = [root]
    while queue:
        u = queue.pop(0)
        for v, i in adj.get(u, []):
            if v not in seen:
                seen.add(v)
                in_tree.add(i)
                queue.append(v)
    if len(seen) != n:
        return "unknown"  # disconnected
    gen_of_edge = {}
    for i in range(len(edges)):
        if i not in in_tree:
            gen_of_edge[i] = len(gen_of_edge) + 1  # generators 1..g
    if not gen_of_edge:
        return "trivial"
    # relations from 2-simplices: edge(v0,v1) edge(v1,v2) edge(v0,v2)^-1
    edge_index = {e: i for i, e in enumerate(edges)}
    relations = []
    for s in (K.levels[2] if K.dim >= 2 else []):
        v0, v1, v2 = s
        word = []
        for (a, b), sign in (((v0, v1), 1), ((v1, v2), 1), ((v0, v2), -1)):
            i = edge_index[(a, b)]
            g = gen_of_edge.get(i)
            if g is not None:
                word.append(sign * g)
        relations.append(tuple(word))
    gens = set(gen_of_edge.values())
    return _tietze_reduce(gens, relations, budget)


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def _tietze_reduce(gens, relations, budget):
    """Eliminate generators that occur exactly once in some relation,
    shortest relations first, substituting only where they occur."""
    gens = set(gens)
    relations = {i: _free_reduce(w) for i, w in enumerate(relations)}
    occ = {g: set() for g in gens}
    for i, w in relations.items():
        for x in w:
            occ[abs(x)].add(i)
    steps = 0
    heap = [(len(w), i) for i, w in relations.items() if w]
    heapq.heapify(heap)
    while gens and steps < budget and heap:
        length, i = heapq.heappop(heap)
        w = relations.get(i)
        if w is None or not w or len(w) != length:
            continue  # stale heap entry
        counts = {}
        for x in w:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        g = next((h for h, c in counts.items() if c == 1), None)
        if g is None:
            continue
        relations.pop(i)
        for x in w:
            occ[abs(x)].discard(i)
        pos = next(t for t, x in enumerate(w) if abs(x) == g)
        rest = w[pos + 1:] + w[:pos]
        repl = tuple(-x for x in reversed(rest)) if w[pos] > 0 else rest
        touched = list(occ[g])
        for j in touched:
            u = relations[j]
            out = []
            for x in u:
                if x == g:
                    out.extend(repl)
                elif x == -g:
                    out.extend(-y for y in reversed(repl))
                else:
                    out.append(x)
            new = _free_reduce(tuple(out))
            for x in u:
                occ[abs(x)].discard(j)
            relations[j] = new
            for x in new:
                occ[abs(x)].add(j)
            if new:
                heapq.heappush(heap, (len(new), j))
            steps += len(u) + len(new) + 1
        gens.discard(g)
        occ.pop(g, None)
        steps += len(w) + 1
    return "trivial" if not gens else "unknown"
