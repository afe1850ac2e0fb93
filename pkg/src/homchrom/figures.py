"""Figure rendering for sweep and scan reports.

Kept separate from the report pipeline: plots are a side output written
next to the delimited data, never a substitute for it.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_sweep(sweep: dict, path: str) -> str:
    """Bar chart of exact chi against the computed lower bounds."""
    rows = [r for r in sweep["rows"] if "error" not in r]
    labels = [r["graph"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(6, 0.45 * len(rows)), 4))
    xs = range(len(rows))
    width = 0.28
    series = [("chi", "exact chi"), ("lovasz", "lovasz"),
              (f"odd_cycle_{sweep.get('r', 1)}", "odd cycle")]
    for off, (key, label) in enumerate(series):
        vals = [r.get(key) for r in rows]
        ax.bar([x + (off - 1) * width for x in xs],
               [v if v is not None else 0 for v in vals],
               width=width, label=label)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("colours")
    ax.set_title("chromatic number vs. topological lower bounds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_scan(scan: dict, path: str) -> str:
    """Betti numbers of Hom(C_m, G) by degree, one line per stage m."""
    rows = [r for r in scan["rows"] if "betti" in r]
    fig, ax = plt.subplots(figsize=(6, 4))
    for r in rows:
        betti = r["betti"] or [0]
        ax.plot(range(len(betti)), betti, marker="o", label=f"m={r['m']}")
    ax.set_xlabel("degree")
    ax.set_ylabel("GF(2) Betti number")
    ax.set_title(f"Hom(C_m, {scan['graph']}) homology across stages")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
