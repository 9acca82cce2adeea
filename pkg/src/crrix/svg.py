"""Minimal native SVG emission for line charts and heatmaps.

Plots are conveniences for eyeballing results; only well-formedness is
contractual. No plotting dependency is used.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

_MARGIN = 50.0
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _scale(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if hi == lo:
        hi = lo + 1.0
    return lo, hi


def line_chart(
    series: dict[str, list[tuple[float, float]]],
    path: str | Path,
    title: str = "",
    width: int = 640,
    height: int = 400,
) -> None:
    """Write named (x, y) polylines on shared axes."""
    points = [p for pts in series.values() for p in pts]
    if not points:
        raise ValueError("nothing to plot")
    x_lo, x_hi = _scale([p[0] for p in points])
    y_lo, y_hi = _scale([p[1] for p in points])
    inner_w = width - 2 * _MARGIN
    inner_h = height - 2 * _MARGIN

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = _MARGIN + (x - x_lo) / (x_hi - x_lo) * inner_w
        py = height - _MARGIN - (y - y_lo) / (y_hi - y_lo) * inner_h
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{_MARGIN}" y1="{height - _MARGIN}" x2="{width - _MARGIN}" '
        f'y2="{height - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{height - _MARGIN}" stroke="black"/>',
        f'<text x="{_MARGIN - 8}" y="{height - _MARGIN}" text-anchor="end" '
        f'font-size="10">{y_lo:.4g}</text>',
        f'<text x="{_MARGIN - 8}" y="{_MARGIN + 4}" text-anchor="end" '
        f'font-size="10">{y_hi:.4g}</text>',
    ]
    for i, (name, pts) in enumerate(series.items()):
        color = _COLORS[i % len(_COLORS)]
        coords = " ".join(f"{px:.2f},{py:.2f}" for px, py in (to_px(x, y) for x, y in pts))
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}"/>')
        parts.append(
            f'<text x="{width - _MARGIN}" y="{_MARGIN + 14 * i}" text-anchor="end" '
            f'font-size="11" fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts), encoding="utf-8")


def heatmap(
    matrix: Sequence[Sequence[float]],
    path: str | Path,
    title: str = "",
    cell: int = 28,
) -> None:
    """Write a red-to-blue heatmap; high values render red."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0 or cols == 0:
        raise ValueError("empty matrix")
    flat = [v for row in matrix for v in row]
    lo, hi = _scale(flat)
    width = int(cols * cell + 2 * _MARGIN)
    height = int(rows * cell + 2 * _MARGIN)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
    ]
    for r, row in enumerate(matrix):
        for c, value in enumerate(row):
            frac = (value - lo) / (hi - lo)
            red = int(255 * frac)
            blue = int(255 * (1 - frac))
            x = _MARGIN + c * cell
            y = _MARGIN + r * cell
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                f'fill="rgb({red},40,{blue})"/>'
            )
            parts.append(
                f'<text x="{x + cell / 2}" y="{y + cell / 2 + 3}" text-anchor="middle" '
                f'font-size="8" fill="white">{value:.2f}</text>'
            )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts), encoding="utf-8")
