"""Graph ingestion, serialization and report plumbing.

Graphs come in three ways: generator expressions ("K5", "C7",
"KG(2,2)"), graph JSON ({"n": ..., "edges": [[u,v], ...]}), or DIMACS
.col files.  Reports carry the tool version, the run configuration and
content hashes of every file input, so identical runs are comparable
byte for byte.
"""

from __future__ import annotations

import csv
import hashlib
import io as _io
import json
import re
from pathlib import Path

from . import __version__
from .errors import InvalidInputError
from .graphs import Graph, Involution, complete, cycle, graph_from_edges, kneser

_GENERATOR_RE = re.compile(
    r"^\s*(?:K(?P<kn>\d+)|C(?P<cm>\d+)|KG\(\s*(?P<n>\d+)\s*,\s*(?P<l>\d+)\s*\))\s*$")


def parse_generator(expr: str):
    """Graph from a generator expression, or None if it is not one."""
    m = _GENERATOR_RE.match(expr)
    if m is None:
        return None
    if m.group("kn") is not None:
        return complete(int(m.group("kn")))
    if m.group("cm") is not None:
        return cycle(int(m.group("cm")))
    return kneser(int(m.group("n")), int(m.group("l")))


def graph_from_json(data, name="json") -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise InvalidInputError('graph JSON needs keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise InvalidInputError('"n" must be a non-negative integer')
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise InvalidInputError(f"malformed edge entry {e!r}")
        u, v = e
        if u == v:
            raise InvalidInputError(f"self-loop on vertex {u} is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge {e!r} out of range for n={n}")
        edges.append((u, v))
    return graph_from_edges(n, edges, name=data.get("name", name))


def graph_from_dimacs(text: str, name="dimacs") -> Graph:
    """DIMACS .col reader; vertices are 1-based in the format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise InvalidInputError(f"line {lineno}: malformed problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise InvalidInputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InvalidInputError(f"line {lineno}: malformed edge line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise InvalidInputError(f"line {lineno}: self-loop on vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"line {lineno}: vertex out of range")
            edges.append((u, v))
        else:
            raise InvalidInputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise InvalidInputError("no problem line in DIMACS input")
    return graph_from_edges(n, edges, name=name)


def parse_input(spec: str) -> Graph:
    """Resolve an inline generator expression or a graph file path."""
    g = parse_generator(spec)
    if g is not None:
        return g
    path = Path(spec)
    if not path.exists():
        raise InvalidInputError(
            f"{spec!r} is neither a generator expression (K*, C*, KG(n,l)) "
            "nor an existing file")
    text = path.read_text()
    if path.suffix == ".col":
        return graph_from_dimacs(text, name=path.stem)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(
            f"{spec}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return graph_from_json(data, name=path.stem)


def parse_involution(spec: str, G: Graph) -> Involution:
    """An involution from a named constructor or a JSON permutation array."""
    if spec in ("reflection", f"cycle_reflection({G.n})"):
        return _cycle_reflection(G)
    if spec == "swap01":
        return _swap01(G)
    if spec.startswith("kneser_reversal"):
        return _kneser_reversal(G)
    try:
        perm = json.loads(spec) if not Path(spec).exists() else json.loads(
            Path(spec).read_text())
    except (json.JSONDecodeError, OSError) as exc:
        raise InvalidInputError(f"cannot parse involution {spec!r}: {exc}")
    if not (isinstance(perm, list) and sorted(perm) == list(range(G.n))):
        raise InvalidInputError("involution must be a permutation array of 0..n-1")
    return Involution(G, tuple(perm))


def _cycle_reflection(G):
    from .graphs import cycle_reflection
    if G != cycle(G.n):
        raise InvalidInputError("'reflection' applies to cycle graphs only")
    return cycle_reflection(G.n)


def _swap01(G):
    from .graphs import complete_swap01
    if G != complete(G.n):
        raise InvalidInputError("'swap01' applies to complete graphs only")
    return complete_swap01(G.n)


def _kneser_reversal(G):
    from .graphs import kneser_reversal
    # (r, s) come from the graph itself: it must be a KG(2r,2s) generator
    gm = re.match(r"^KG\((\d+),(\d+)\)$", G.name or "")
    if gm is None or int(gm.group(1)) % 2 or int(gm.group(2)) % 2:
        raise InvalidInputError(
            "'kneser_reversal' applies to KG(2r,2s) generator graphs")
    return kneser_reversal(int(gm.group(1)) // 2, int(gm.group(2)) // 2)


# -- serialization -----------------------------------------------------

def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "name": G.name,
            "edges": [list(e) for e in sorted(G.edges)]}


def involution_to_json(alpha: Involution) -> list:
    return list(alpha.perm)


def poset_to_json(P) -> dict:
    """Hom poset export: cells as sorted vertex-set arrays plus actions."""
    from .graphs import bits
    out = {
        "source": graph_to_json(P.source),
        "target": graph_to_json(P.target),
        "cells": [[sorted(bits(m)) for m in c] for c in P.cells],
        "dims": list(P.dims),
    }
    if P.left_action is not None:
        out["left_action"] = list(P.left_action)
    if P.right_action is not None:
        out["right_action"] = list(P.right_action)
    return out


def input_hash(spec: str) -> str:
    """Content hash of a file input, or hash of the inline spec text."""
    path = Path(spec)
    payload = path.read_bytes() if path.exists() else spec.encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def report_envelope(command: str, config: dict, inputs: dict) -> dict:
    """Standard header every CLI report embeds."""
    return {
        "tool": "homchrom",
        "version": __version__,
        "command": command,
        "config": config,
        "inputs": {k: {"spec": v, "sha256_16": input_hash(v)}
                   for k, v in inputs.items()},
    }


def write_report(report: dict, fmt: str = "json", out=None,
                 csv_rows=None, csv_fields=None) -> str:
    """Render a report as JSON (whole document) or CSV (tabular part)."""
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        if csv_rows is None:
            raise InvalidInputError("this report has no tabular form")
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=csv_fields, extrasaction="ignore")
        writer.writeheader()
        for row in csv_rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        raise InvalidInputError(f"unknown format {fmt!r}")
    if out:
        Path(out).write_text(text)
    return text


def write_jsonl(rows, out) -> None:
    with open(out, "w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
