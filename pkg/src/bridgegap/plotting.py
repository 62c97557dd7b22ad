"""Minimal SVG line plots for sweep results.

Hand-rolled two-series chart (measured vs analytic social distance over
the bridge-count grid, x on a log axis). Kept dependency-free and
deterministic; the CSV remains the canonical output.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import IO

from .experiments import SweepResult

WIDTH, HEIGHT = 640, 400
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 20, 50


def _points(xs, ys, x_lo, x_hi, y_lo, y_hi):
    pts = []
    span_x = (x_hi - x_lo) or 1.0
    span_y = (y_hi - y_lo) or 1.0
    for x, y in zip(xs, ys):
        px = MARGIN_L + (x - x_lo) / span_x * (WIDTH - MARGIN_L - MARGIN_R)
        py = HEIGHT - MARGIN_B - (y - y_lo) / span_y * (HEIGHT - MARGIN_T - MARGIN_B)
        pts.append(f"{px:.2f},{py:.2f}")
    return " ".join(pts)


def sweep_plot_svg(result: SweepResult, dest: str | Path | IO[str]) -> None:
    """Write an SVG chart of measured and analytic mean distance vs x."""
    rows = [r for r in result.rows if not math.isnan(r.mean_dstar)]
    if not rows:
        raise ValueError("no plottable rows (all distance means undefined)")
    log_x = [math.log10(r.x) if r.x > 0 else 0.0 for r in rows]
    measured = [r.mean_dstar for r in rows]
    analytic = [r.analytic_dstar for r in rows if not math.isnan(r.analytic_dstar)]
    log_x_analytic = [lx for lx, r in zip(log_x, rows) if not math.isnan(r.analytic_dstar)]

    ys = measured + analytic
    y_lo, y_hi = min(ys + [1.0]), max(ys)
    x_lo, x_hi = min(log_x), max(log_x)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN_L}" y1="{HEIGHT - MARGIN_B}" x2="{WIDTH - MARGIN_R}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
    ]
    for lx, r in zip(log_x, rows):
        px = MARGIN_L + (lx - x_lo) / ((x_hi - x_lo) or 1.0) * (WIDTH - MARGIN_L - MARGIN_R)
        parts.append(
            f'<text x="{px:.2f}" y="{HEIGHT - MARGIN_B + 18}" font-size="11" '
            f'text-anchor="middle">{r.x}</text>'
        )
    parts.append(
        f'<polyline fill="none" stroke="#1f77b4" stroke-width="2" '
        f'points="{_points(log_x, measured, x_lo, x_hi, y_lo, y_hi)}"/>'
    )
    if analytic:
        parts.append(
            f'<polyline fill="none" stroke="#d62728" stroke-width="2" stroke-dasharray="6,4" '
            f'points="{_points(log_x_analytic, analytic, x_lo, x_hi, y_lo, y_hi)}"/>'
        )
    parts.extend(
        [
            f'<text x="{(WIDTH) // 2}" y="{HEIGHT - 12}" font-size="12" '
            f'text-anchor="middle">bridges added (log scale)</text>',
            f'<text x="16" y="{HEIGHT // 2}" font-size="12" text-anchor="middle" '
            f'transform="rotate(-90 16 {HEIGHT // 2})">mean social distance</text>',
            f'<text x="{WIDTH - MARGIN_R - 10}" y="{MARGIN_T + 14}" font-size="12" '
            f'text-anchor="end" fill="#1f77b4">measured</text>',
            f'<text x="{WIDTH - MARGIN_R - 10}" y="{MARGIN_T + 30}" font-size="12" '
            f'text-anchor="end" fill="#d62728">analytic</text>',
            "</svg>",
        ]
    )
    text = "\n".join(parts) + "\n"
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)
