"""Command-line interface.

Exit codes: 0 success / property holds, 1 a checked property failed,
2 budget exceeded, 3 invalid input.
"""

from __future__ import annotations

import sys

import click

from . import __version__, bounds, io
from .complexes import order_complex
from .cyclemaps import (enumerate_monotone_equivariant, eta, i_map, j_map,
                        theta)
from .errors import BudgetExceededError, InvalidInputError
from .graphs import (complete_swap01, connected_graphs, cycle,
                     cycle_reflection)
from .homposet import DEFAULT_CELL_BUDGET, action_is_free, fixed_cells, hom_cells
from .z2topology import Z2Complex, coind_at_least


class PropertyFailed(Exception):
    """A checked mathematical property did not hold (exit code 1)."""


def _config(ctx) -> dict:
    cfg = dict(ctx.obj or {})
    cfg["command"] = ctx.command_path
    return cfg


def _emit(ctx, report, csv_rows=None, csv_fields=None):
    cfg = ctx.obj
    text = io.write_report(report, fmt=cfg["format"], out=cfg["out"],
                           csv_rows=csv_rows, csv_fields=csv_fields)
    if not cfg["out"]:
        click.echo(text, nl=False)


def _source_involution(G):
    """Default free involution on a probe source graph."""
    if G.n == 2 and G.has_edge(0, 1):
        return complete_swap01(2)
    if G == cycle(G.n):
        return cycle_reflection(G.n)
    return None


@click.group()
@click.version_option(__version__)
@click.option("--budget-cells", default=DEFAULT_CELL_BUDGET, show_default=True,
              help="Maximum number of Hom cells enumerated per complex.")
@click.option("--budget-nodes", default=2_000_000, show_default=True,
              help="Search-node budget for the exact colouring solver.")
@click.option("--seed", default=0, show_default=True,
              help="Recorded in reports; all algorithms are deterministic.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the report to a file instead of stdout.")
@click.pass_context
def cli(ctx, budget_cells, budget_nodes, seed, fmt, out):
    """Chromatic-number lower bounds from Hom-complex topology."""
    ctx.obj = {"budget_cells": budget_cells, "budget_nodes": budget_nodes,
               "seed": seed, "format": fmt, "out": out}


# -- hom ---------------------------------------------------------------

@cli.group()
def hom():
    """Build and analyse Hom complexes."""


@hom.command("build")
@click.option("--from", "src", required=True, help="Source graph spec.")
@click.option("--to", "dst", required=True, help="Target graph spec.")
@click.pass_context
def hom_build(ctx, src, dst):
    """Enumerate the cells of Hom(FROM, TO) and export the poset."""
    G, H = io.parse_input(src), io.parse_input(dst)
    alpha = _source_involution(G)
    P = hom_cells(G, H, budget=ctx.obj["budget_cells"], left=alpha)
    report = io.report_envelope("hom build", _config(ctx),
                                {"from": src, "to": dst})
    report["poset"] = io.poset_to_json(P)
    report["counts_by_dim"] = P.counts_by_dim()
    report["euler"] = P.euler_characteristic()
    _emit(ctx, report)


@hom.command("homology")
@click.option("--from", "src", required=True)
@click.option("--to", "dst", required=True)
@click.pass_context
def hom_homology(ctx, src, dst):
    """GF(2) Betti numbers of Hom(FROM, TO)."""
    G, H = io.parse_input(src), io.parse_input(dst)
    P = hom_cells(G, H, budget=ctx.obj["budget_cells"])
    report = io.report_envelope("hom homology", _config(ctx),
                                {"from": src, "to": dst})
    if len(P) == 0:
        report.update(cells=0, empty=True, betti=[], euler=0)
    else:
        K = order_complex(P)
        report.update(cells=len(P), empty=False, betti=list(K.betti()),
                      euler=P.euler_characteristic())
    _emit(ctx, report)


@hom.command("hind")
@click.option("--from", "src", required=True)
@click.option("--to", "dst", required=True)
@click.option("--kmax", type=int, default=None,
              help="Truncate the cohomological-index scan at this power.")
@click.pass_context
def hom_hind(ctx, src, dst, kmax):
    """Cohomological index of the free involution on Hom(FROM, TO)."""
    G, H = io.parse_input(src), io.parse_input(dst)
    alpha = _source_involution(G)
    if alpha is None:
        raise InvalidInputError(
            "hind needs a probe source with a canonical involution "
            "(K2 or a cycle)")
    P = hom_cells(G, H, budget=ctx.obj["budget_cells"], left=alpha)
    report = io.report_envelope("hom hind", _config(ctx),
                                {"from": src, "to": dst})
    h = bounds.hom_hind(P, kmax=kmax)
    if h.empty:
        report.update(betti=[], euler=0, hind=-1, hind_exact=True,
                      empty=True, coind_ge=None, certainty="verified")
        _emit(ctx, report)
        return
    K = order_complex(P)
    X = Z2Complex(K, P.left_action)
    coind_ge = 0
    if coind_at_least(X, 1)[0]:
        coind_ge = 1
    report.update(betti=list(K.betti()), euler=P.euler_characteristic(),
                  hind=h.value, hind_exact=h.exact, empty=False,
                  coind_ge=coind_ge,
                  certainty="verified" if h.exact else "homological")
    _emit(ctx, report)


# -- bound -------------------------------------------------------------

@cli.group()
def bound():
    """Chromatic-number lower bounds."""


@bound.command("lovasz")
@click.argument("graph")
@click.option("--kmax", type=int, default=None)
@click.pass_context
def bound_lovasz(ctx, graph, kmax):
    """hind Hom(K2, GRAPH) + 2."""
    G = io.parse_input(graph)
    rep = bounds.lovasz_bound(G, budget=ctx.obj["budget_cells"], kmax=kmax)
    report = io.report_envelope("bound lovasz", _config(ctx), {"graph": graph})
    report["bound"] = rep.as_dict()
    _emit(ctx, report)


@bound.command("cycles")
@click.argument("graph")
@click.option("--r", default=1, show_default=True,
              help="Odd-cycle parameter: probe with C_{2r+1}.")
@click.option("--kmax", type=int, default=None)
@click.pass_context
def bound_cycles(ctx, graph, r, kmax):
    """hind Hom(C_{2r+1}, GRAPH) + 3."""
    G = io.parse_input(graph)
    rep = bounds.odd_cycle_bound(G, r, budget=ctx.obj["budget_cells"], kmax=kmax)
    report = io.report_envelope("bound cycles", _config(ctx), {"graph": graph})
    report["bound"] = rep.as_dict()
    _emit(ctx, report)


@bound.command("sweep")
@click.option("--family", required=True,
              help='Family spec: "connected<=N" or a comma list of graph specs.')
@click.option("--r", default=1, show_default=True)
@click.option("--jsonl-out", type=click.Path(), default=None,
              help="Additionally write one report per line as JSON-lines.")
@click.option("--fig-out", type=click.Path(), default=None,
              help="Render a comparison figure to this file.")
@click.pass_context
def bound_sweep_cmd(ctx, family, r, jsonl_out, fig_out):
    """Run all bounds over a graph family with chi cross-checks."""
    graphs = _parse_family(family)
    sweep = bounds.bound_sweep(graphs, r=r, budget=ctx.obj["budget_cells"],
                               chi_budget=ctx.obj["budget_nodes"])
    report = io.report_envelope("bound sweep", _config(ctx), {"family": family})
    report.update(sweep)
    if jsonl_out:
        io.write_jsonl(sweep["rows"], jsonl_out)
    if fig_out:
        from . import figures
        report["figure"] = figures.render_sweep(sweep, fig_out)
    fields = ["graph", "n", "edges", "chi", "chi_status", "lovasz",
              f"odd_cycle_{r}", "error"]
    _emit(ctx, report, csv_rows=sweep["rows"], csv_fields=fields)
    if sweep["violations"]:
        raise PropertyFailed(f"{len(sweep['violations'])} bound violations")


def _parse_family(spec):
    spec = spec.strip()
    if spec.startswith("connected<="):
        return connected_graphs(int(spec[len("connected<="):]), min_edges=1)
    return [io.parse_input(s.strip()) for s in spec.split(",") if s.strip()]


# -- verify ------------------------------------------------------------

@cli.group()
def verify():
    """Mechanical checks of the structural identities."""


@verify.command("eta-theta")
@click.option("--m", default=3, show_default=True)
@click.option("--target", default="K3", show_default=True)
@click.option("--tables/--no-tables", default=None,
              help="Also check eta(theta(f)) <= j(f) over all enumerated "
                   "tables (defaults to on for m=3 on small targets).")
@click.pass_context
def verify_eta_theta(ctx, m, target, tables):
    """Verify theta(eta(phi)) = i(phi), and optionally eta.theta <= j."""
    G = io.parse_input(target)
    P = hom_cells(cycle(m), G, budget=ctx.obj["budget_cells"])
    failures = []
    for i in range(len(P)):
        phi = P.cell(i)
        if theta(m, G, eta(m, G, phi), validate=False) != i_map(m, G, phi):
            failures.append(io.poset_to_json(P)["cells"][i])
    report = io.report_envelope("verify eta-theta", _config(ctx),
                                {"target": target})
    report.update(m=m, cells=len(P), identity="theta.eta == i",
                  failures=failures)
    if tables is None:
        tables = m == 3 and G.n <= 3
    if tables:
        tabs = enumerate_monotone_equivariant(m, G, budget=ctx.obj["budget_cells"])
        bad = sum(1 for f in tabs
                  if not eta(3 * m, G, theta(m, G, f, validate=False)).le(
                      j_map(m, G, f, validate=False)))
        report.update(tables=len(tabs), table_failures=bad)
        if bad:
            failures.append(f"{bad} table inequalities failed")
    _emit(ctx, report)
    if failures:
        raise PropertyFailed("eta-theta identities violated")


@verify.command("ineq1")
@click.argument("graph")
@click.option("--r", default=1, show_default=True)
@click.pass_context
def verify_ineq1(ctx, graph, r):
    """Check hind Hom(C_{2r+1}, G) + 1 <= hind Hom(K2, G)."""
    G = io.parse_input(graph)
    res = bounds.verify_cor_ineq1(G, r, budget=ctx.obj["budget_cells"])
    report = io.report_envelope("verify ineq1", _config(ctx), {"graph": graph})
    report.update(res)
    _emit(ctx, report)
    if res["status"] == "violated":
        raise PropertyFailed("index inequality violated")
    if res["status"] == "inconclusive":
        raise BudgetExceededError("inequality check inconclusive within budget")


@verify.command("free-action")
@click.option("--from", "src", required=True)
@click.option("--to", "dst", required=True)
@click.option("--side", type=click.Choice(["left", "right"]), default="left",
              show_default=True)
@click.option("--involution", default=None,
              help="Permutation JSON for the acting involution; defaults to "
                   "the canonical probe involution.")
@click.pass_context
def verify_free_action(ctx, src, dst, side, involution):
    """Check that the induced involution action has no fixed cell."""
    G, H = io.parse_input(src), io.parse_input(dst)
    base = G if side == "left" else H
    alpha = (io.parse_involution(involution, base) if involution
             else _source_involution(base))
    if alpha is None:
        raise InvalidInputError(f"no involution available on the {side} graph")
    P = hom_cells(G, H, budget=ctx.obj["budget_cells"],
                  left=alpha if side == "left" else None,
                  right=alpha if side == "right" else None)
    free = action_is_free(P, side) if len(P) else True
    fixed = fixed_cells(P, side) if len(P) else []
    report = io.report_envelope("verify free-action", _config(ctx),
                                {"from": src, "to": dst})
    report.update(side=side, involution=list(alpha.perm), cells=len(P),
                  free=free, fixed_cells=fixed[:20])
    _emit(ctx, report)
    if not free:
        raise PropertyFailed(f"{len(fixed)} fixed cells under the {side} action")


# -- testgraph ---------------------------------------------------------

@cli.group()
def testgraph():
    """Test-graph certificates."""


@testgraph.command("certify")
@click.argument("graph")
@click.option("--involution", required=True,
              help='"reflection", "swap01", "kneser_reversal", or a '
                   "permutation JSON.")
@click.option("--k", default=1, show_default=True, help="Certificate level.")
@click.pass_context
def testgraph_certify(ctx, graph, involution, k):
    """Assemble the level-k test-graph witness bundle for GRAPH."""
    T = io.parse_input(graph)
    alpha = io.parse_involution(involution, T)
    cert = bounds.test_graph_certificate(T, alpha, k,
                                         budget=ctx.obj["budget_cells"])
    report = io.report_envelope("testgraph certify", _config(ctx),
                                {"graph": graph})
    report["certificate"] = cert.as_dict()
    _emit(ctx, report)
    if cert.verdict == "failed":
        raise PropertyFailed("; ".join(cert.reasons) or "certificate failed")


# -- scan --------------------------------------------------------------

@cli.group()
def scan():
    """Finite-stage stabilization scans."""


@scan.command("cycles")
@click.argument("graph")
@click.option("--parity", type=click.Choice(["odd", "even"]), default="odd",
              show_default=True)
@click.option("--m", "m_values", type=int, multiple=True, required=True,
              help="Cycle lengths to scan (repeatable).")
@click.option("--fig-out", type=click.Path(), default=None,
              help="Render the Betti-number stages to this file.")
@click.pass_context
def scan_cycles(ctx, graph, parity, m_values, fig_out):
    """Betti vectors of Hom(C_m, GRAPH) across the given stages."""
    G = io.parse_input(graph)
    result = bounds.cycle_homology_scan(G, parity, list(m_values),
                                        budget=ctx.obj["budget_cells"])
    report = io.report_envelope("scan cycles", _config(ctx), {"graph": graph})
    report.update(result)
    if fig_out:
        from . import figures
        report["figure"] = figures.render_scan(result, fig_out)
    fields = ["m", "cells", "empty", "betti", "status"]
    _emit(ctx, report, csv_rows=result["rows"], csv_fields=fields)
    if result["truncated"]:
        raise BudgetExceededError("scan truncated by cell budget")


# -- entry point -------------------------------------------------------

def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 3
    except click.exceptions.Abort:
        return 3
    except PropertyFailed as exc:
        click.echo(f"FAILED: {exc}", err=True)
        return 1
    except BudgetExceededError as exc:
        click.echo(f"BUDGET: {exc}", err=True)
        return 2
    except InvalidInputError as exc:
        click.echo(f"INVALID: {exc}", err=True)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
