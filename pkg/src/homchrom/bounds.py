"""Chromatic-number lower bounds from Z2-invariants of Hom complexes.

The pipeline reports hind-based bounds: the cohomological index of the
free involution on Hom(K2, G) gives chi(G) >= hind + 2, and on
Hom(C_{2r+1}, G) gives chi(G) >= hind + 3.  Both are always sound; a
truncated scan only weakens the reported value, never inflates it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import chromatic_number
from .complexes import cellular_chain_complex, order_complex
from .errors import BudgetExceededError, InvalidInputError
from .graphs import (Graph, Involution, complete, complete_swap01, cycle,
                     cycle_reflection, bits)
from .homposet import (DEFAULT_CELL_BUDGET, HomPoset, equivariant_cells,
                       hom_cells)
from .multihom import MultiHom, is_valid_masks
from .quotients import fixed_quotient_graph, universal_factorization
from .z2topology import (HindResult, Z2Complex, coind_at_least, hind,
                         pi1_trivial_heuristic)


def hom_hind(P: HomPoset, kmax: Optional[int] = None) -> HindResult:
    """hind of a Hom poset under its attached left action.

    A kmax below the poset dimension truncates the order complex to the
    chains actually needed (cohomology through degree kmax), which keeps
    sweep instances cheap.
    """
    if len(P) == 0:
        return HindResult(-1, True, empty=True)
    truncated = kmax is not None and kmax < P.dim
    limit = kmax + 1 if truncated else None
    K = order_complex(P, max_chain_length=limit)
    X = Z2Complex(K, P.left_action)
    return hind(X, kmax=kmax, truncated=truncated)


def k2_poset(G: Graph, budget: int = DEFAULT_CELL_BUDGET) -> HomPoset:
    """Hom(K2, G) with the (always free) left swap action."""
    return hom_cells(complete(2), G, budget=budget, left=complete_swap01(2))


def odd_cycle_poset(G: Graph, r: int, budget: int = DEFAULT_CELL_BUDGET) -> HomPoset:
    """Hom(C_{2r+1}, G) with the left reflection action."""
    if r < 1:
        raise InvalidInputError("odd cycle parameter r must be >= 1")
    m = 2 * r + 1
    return hom_cells(cycle(m), G, budget=budget, left=cycle_reflection(m))


@dataclass
class BoundReport:
    """A certified lower bound on the chromatic number."""

    graph: str
    method: str
    value: int
    hind_value: Optional[int] = None
    hind_exact: bool = True
    ge_only: bool = False  # value is a floor of the method's true bound
    empty: bool = False
    notes: str = ""

    def as_dict(self):
        return {
            "graph": self.graph,
            "method": self.method,
            "value": self.value,
            "hind": self.hind_value,
            "hind_exact": self.hind_exact,
            "ge_only": self.ge_only,
            "empty": self.empty,
            "notes": self.notes,
        }


def lovasz_bound(G: Graph, budget: int = DEFAULT_CELL_BUDGET,
                 kmax: Optional[int] = None) -> BoundReport:
    """chi(G) >= hind Hom(K2, G) + 2."""
    if not G.edges:
        return BoundReport(G.name or f"G{G.n}", "lovasz", 1 if G.n else 0,
                           empty=True, notes="edgeless graph")
    P = k2_poset(G, budget=budget)
    h = hom_hind(P, kmax=kmax)
    return BoundReport(G.name or f"G{G.n}", "lovasz", h.value + 2,
                       hind_value=h.value, hind_exact=h.exact,
                       ge_only=not h.exact)


def odd_cycle_bound(G: Graph, r: int, budget: int = DEFAULT_CELL_BUDGET,
                    kmax: Optional[int] = None) -> BoundReport:
    """chi(G) >= hind Hom(C_{2r+1}, G) + 3, with empty-Hom sentinel."""
    name = G.name or f"G{G.n}"
    method = f"odd_cycle({r})"
    try:
        P = odd_cycle_poset(G, r, budget=budget)
    except BudgetExceededError as exc:
        return BoundReport(name, method, 2 if G.edges else 1, ge_only=True,
                           hind_exact=False, notes=str(exc))
    h = hom_hind(P, kmax=kmax)
    if h.empty:
        return BoundReport(name, method, 2 if G.edges else 1,
                           hind_value=-1, empty=True,
                           notes=f"no C_{2 * r + 1} -> {name} homomorphism")
    return BoundReport(name, method, h.value + 3,
                       hind_value=h.value, hind_exact=h.exact,
                       ge_only=not h.exact)


def verify_cor_ineq1(G: Graph, r: int = 1,
                     budget: int = DEFAULT_CELL_BUDGET) -> dict:
    """Check hind Hom(C_{2r+1}, G) + 1 <= hind Hom(K2, G).

    The cycle side is scanned only up to the edge side's value: the
    inequality fails exactly when that truncated scan still reaches it.
    A genuine violation with both sides exact would falsify the theory
    the pipeline rests on, so it is flagged as fatal.
    """
    if not G.edges:
        raise InvalidInputError("verify_cor_ineq1 needs a graph with an edge")
    out = {"graph": G.name or f"G{G.n}", "r": r}
    try:
        hk2 = hom_hind(k2_poset(G, budget=budget))
        Pc = odd_cycle_poset(G, r, budget=budget)
        hc = hom_hind(Pc, kmax=hk2.value)
    except BudgetExceededError as exc:
        out.update(status="inconclusive", reason=str(exc))
        return out
    out.update(hind_k2=hk2.value, hind_k2_exact=hk2.exact,
               hind_cycle=hc.value, hind_cycle_exact=hc.exact,
               cycle_empty=hc.empty)
    if not hk2.exact:
        out["status"] = "inconclusive"
        return out
    if hc.value + 1 <= hk2.value:
        # the cycle value may be a truncation floor; the inequality
        # holds iff the scan stopped strictly below hind Hom(K2,G),
        # which requires an exact (coboundary) stop or an empty complex
        out["status"] = "holds" if (hc.exact or hc.empty) else "inconclusive"
    else:
        out["status"] = "violated"
        out["fatal"] = True
    return out


@dataclass
class TestGraphCertificate:
    """Witness bundle for the test-graph criterion at level k.

    A certified verdict needs: an edge flipped by the involution, a
    setwise-invariant cell of Hom(probe, T), a coindex >= k-1 witness in
    Hom(probe, T^{Z2}), and (k-1)-connectivity of Hom(probe, T).
    """

    graph: str
    involution: tuple
    k: int
    probe: str
    witnesses: dict = field(default_factory=dict)
    verdict: str = "failed"
    reasons: list = field(default_factory=list)

    def as_dict(self):
        return {
            "graph": self.graph,
            "involution": list(self.involution),
            "k": self.k,
            "probe": self.probe,
            "witnesses": self.witnesses,
            "verdict": self.verdict,
            "reasons": self.reasons,
        }


def _doubling_cell(P: HomPoset, alpha: Involution):
    """A right-invariant cell v -> {f(v), alpha(f(v))} doubled from some
    vertex f of Hom(probe, T), together with its quotient factorization."""
    T = P.target
    for i in range(len(P)):
        if P.dims[i] != 0:
            continue
        masks = tuple(m | (1 << alpha.perm[next(bits(m))]) for m in P.cells[i])
        if is_valid_masks(P.source, T, masks):
            return MultiHom(P.source, T, masks)
    return None


def test_graph_certificate(T: Graph, alpha: Involution, k: int,
                           probe: Optional[Graph] = None,
                           budget: int = DEFAULT_CELL_BUDGET) -> TestGraphCertificate:
    """Assemble the four hypothesis witnesses for T as a level-k test graph."""
    if k < 1:
        raise InvalidInputError("certificate level k must be >= 1")
    if alpha.graph != T:
        raise InvalidInputError("involution is not on the candidate graph")
    if probe is None:
        probe = complete(2)
    probe_inv = complete_swap01(2) if probe.n == 2 else None
    cert = TestGraphCertificate(T.name or f"T{T.n}", alpha.perm, k,
                                probe.name or f"P{probe.n}")
    w, reasons = cert.witnesses, cert.reasons

    # (a) the involution flips an edge
    e = alpha.flipped_edge
    if e is None:
        reasons.append("involution flips no edge")
        return cert
    w["flipped_edge"] = list(e)

    # (b) Hom_{Z2}(probe, T) nonempty via a setwise-invariant cell
    P = hom_cells(probe, T, budget=budget, left=probe_inv)
    if probe_inv is not None:
        inv_cells = equivariant_cells(P, probe_inv, alpha)
        if not inv_cells:
            reasons.append("no equivariant cell")
            return cert
        w["equivariant_cell"] = [sorted(bits(m)) for m in inv_cells[0].masks]
    else:
        reasons.append("no probe involution supplied; Hom_Z2 not checked")

    # (c) coindex of Hom(probe, T^{Z2}) at level k-1
    TZ2, _iota = fixed_quotient_graph(T, alpha)
    dbl = _doubling_cell(P, alpha)
    if dbl is not None:
        g = universal_factorization(dbl, T, alpha)
        w["doubling_cell"] = {
            "doubled": [sorted(bits(m)) for m in dbl.masks],
            "quotient_cell": [sorted(bits(m)) for m in g.masks],
        }
    coind_level = k - 1
    if coind_level <= 1:
        PZ = hom_cells(probe, TZ2, budget=budget, left=probe_inv)
        if len(PZ) == 0:
            reasons.append("Hom(probe, T^Z2) is empty")
            return cert
        XZ = Z2Complex(order_complex(PZ), PZ.left_action)
        ok, witness = coind_at_least(XZ, coind_level)
        if not ok:
            reasons.append(f"coindex < {coind_level}")
            return cert
        w["coindex"] = {"level": coind_level, **witness}
        coind_verified = True
    else:
        reasons.append("unsupported coindex level (k-1 >= 2)")
        coind_verified = False

    # (d) (k-1)-connectivity of Hom(probe, T)
    K = order_complex(P)
    betti = K.betti()
    w["betti"] = list(betti)
    conn_needed = k - 1
    if not betti or betti[0] != 1:
        reasons.append("Hom(probe, T) is not connected")
        return cert
    if any(betti[d] != 0 for d in range(1, min(conn_needed, len(betti) - 1) + 1)):
        reasons.append(f"reduced homology nonzero below degree {conn_needed + 1}")
        return cert
    if conn_needed <= 0:
        w["pi1"] = "not required"
        cert.verdict = "certified" if coind_verified else "unsupported"
        return cert
    pi1 = pi1_trivial_heuristic(K)
    w["pi1"] = pi1
    if not coind_verified:
        cert.verdict = "unsupported"
    elif conn_needed == 1:
        cert.verdict = "certified" if pi1 == "trivial" else "homologically-certified"
    else:
        # homology is clean through the needed range, but true
        # connectivity beyond degree 1 is not mechanically decided here
        cert.verdict = "homologically-certified"
    return cert


def cycle_homology_scan(G: Graph, parity: str, m_values,
                        budget: int = DEFAULT_CELL_BUDGET) -> dict:
    """Betti vectors of Hom(C_m, G) across stages, with stabilization flags.

    Stabilization is two-stage agreement per degree, reported as finite
    evidence toward the limiting space, never as a proved limit.
    """
    if parity not in ("odd", "even"):
        raise InvalidInputError("parity must be 'odd' or 'even'")
    want = 1 if parity == "odd" else 0
    ms = sorted(m_values)
    if any(m % 2 != want or m < 3 for m in ms):
        raise InvalidInputError(f"m values must be {parity} cycles (>= 3)")
    rows = []
    truncated = False
    for m in ms:
        try:
            P = hom_cells(cycle(m), G, budget=budget)
        except BudgetExceededError as exc:
            rows.append({"m": m, "status": "budget-exceeded", "detail": str(exc)})
            truncated = True
            break
        betti = cellular_chain_complex(P).betti() if len(P) else ()
        rows.append({"m": m, "cells": len(P), "empty": len(P) == 0,
                     "betti": list(betti)})
    done = [r for r in rows if "betti" in r]
    stabilized = []
    if len(done) >= 2:
        a, b = done[-2]["betti"], done[-1]["betti"]
        for d in range(max(len(a), len(b))):
            if (a[d] if d < len(a) else 0) == (b[d] if d < len(b) else 0):
                stabilized.append(d)
    return {
        "graph": G.name or f"G{G.n}",
        "parity": parity,
        "direction": "kappa: C_{m+2} -> C_m (maps run toward smaller m)",
        "rows": rows,
        "stabilized_degrees": stabilized,
        "truncated": truncated,
    }


def bound_sweep(graphs, methods=("lovasz", "odd_cycle"), r: int = 1,
                budget: int = DEFAULT_CELL_BUDGET,
                chi_budget: int = 2_000_000) -> dict:
    """Run the requested bounds over a graph family with chi cross-checks.

    Per-instance failures are isolated; a bound exceeding a certified
    exact chromatic number is recorded as a violation (and would falsify
    the pipeline).
    """
    rows = []
    violations = []
    for idx, G in enumerate(graphs):
        name = G.name or f"graph-{idx}"
        row = {"graph": name, "n": G.n, "edges": len(G.edges)}
        try:
            col = chromatic_number(G, budget=chi_budget)
            row["chi"] = col.chi if col.exact else None
            row["chi_status"] = col.status
            reports = []
            if "lovasz" in methods and G.edges:
                reports.append(lovasz_bound(G, budget=budget))
            if "odd_cycle" in methods:
                kmax = None
                if row["chi"] is not None:
                    kmax = max(row["chi"] - 3, 1)
                reports.append(odd_cycle_bound(G, r, budget=budget, kmax=kmax))
            for rep in reports:
                key = "lovasz" if rep.method == "lovasz" else f"odd_cycle_{r}"
                row[key] = rep.value
                row[key + "_flags"] = {
                    "hind": rep.hind_value, "exact": rep.hind_exact,
                    "ge_only": rep.ge_only, "empty": rep.empty}
                if row["chi"] is not None and rep.value > row["chi"]:
                    violations.append({"graph": name, "method": rep.method,
                                       "bound": rep.value, "chi": row["chi"]})
        except BudgetExceededError as exc:
            row["error"] = f"budget: {exc}"
        except InvalidInputError as exc:
            row["error"] = f"invalid: {exc}"
        rows.append(row)
    rows.sort(key=lambda r: (r["n"], r["edges"], r["graph"]))
    return {"rows": rows, "violations": violations,
            "methods": list(methods), "r": r}
