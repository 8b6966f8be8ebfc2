"""Figure rendering for the CLI report path.

Two figures cover the domain: the Newton polygon of a two-variable
support (compact faces, recession rays, the diagonal, and its crossing
point), and the distribution of a threshold-value sample on [0, 1],
optionally with accumulation intervals shaded.  Files only; the Agg
backend is forced so no display is ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .newton import Facet
from .threshold_sets import AccumulationInterval, ThresholdSetSample


def render_newton_polygon(
    support: Sequence,
    facet_list: Sequence[Facet],
    tstar: Optional[Fraction],
    path: str,
) -> None:
    points = sorted(tuple(p) for p in support)
    if any(len(p) != 2 for p in points):
        raise ValueError("the Newton polygon figure needs a two-variable support")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(xs + ys + [1]) + 1

    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    ax.scatter(xs, ys, zorder=3, color="black", label="support")
    for facet in facet_list:
        a, d = facet.normal, facet.offset
        # Clip the line a.x = d to the plot window.
        ends = set()
        if a[1]:
            for x in (0.0, float(span)):
                y = (d - a[0] * x) / a[1]
                if -1e-9 <= y <= span + 1e-9:
                    ends.add((x, y))
        if a[0]:
            for y in (0.0, float(span)):
                x = (d - a[1] * y) / a[0]
                if -1e-9 <= x <= span + 1e-9:
                    ends.add((x, y))
        segment = sorted(ends)
        if len(segment) >= 2:
            (x0, y0), (x1, y1) = segment[0], segment[-1]
            style = "-" if facet.compact else "--"
            ax.plot([x0, x1], [y0, y1], style, color="tab:blue")
    ax.plot([0, span], [0, span], ":", color="gray", label="diagonal")
    if tstar is not None:
        t = float(tstar)
        ax.scatter([t], [t], marker="x", s=80, color="tab:red", zorder=4,
                   label=f"t* = {tstar}")
    ax.set_xlim(-0.3, span)
    ax.set_ylim(-0.3, span)
    ax.set_xlabel("x exponent")
    ax.set_ylabel("y exponent")
    ax.set_title("Newton polygon")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sample(
    sample: ThresholdSetSample,
    path: str,
    intervals: Optional[List[AccumulationInterval]] = None,
) -> None:
    values = sample.values.floats()
    if len(values) > 50_000:
        values = values[:: len(values) // 50_000 + 1]  # thin for rendering only
    fig, ax = plt.subplots(figsize=(7.0, 2.8))
    if intervals:
        for iv in intervals:
            ax.axvspan(float(iv.lower), float(iv.upper), color="tab:orange", alpha=0.35)
    ax.eventplot(values, orientation="horizontal", colors="tab:blue", linelengths=0.8)
    ax.set_xlim(-0.02, 1.02)
    ax.set_yticks([])
    ax.set_xlabel("threshold value")
    source = sample.provenance.get("source", "sample")
    ax.set_title(f"{len(sample.values)} values ({source})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
