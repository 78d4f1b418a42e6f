"""Dependency-free SVG line charts for the CLI.

Fixed 800x500 viewport, optional log scaling per axis, one path element
per curve (class "curve") plus a text legend.  Output is deterministic
for identical inputs, so rendered figures diff cleanly.
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH = 800
HEIGHT = 500
_MARGIN_LEFT = 80
_MARGIN_RIGHT = 24
_MARGIN_TOP = 48
_MARGIN_BOTTOM = 56

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]

Curve = tuple[str, Sequence[float], Sequence[float]]


def _transform(value: float, log_scale: bool) -> float:
    if log_scale:
        if value <= 0.0:
            raise ValueError(f"log-scaled axis requires positive values, got {value}")
        return math.log10(value)
    return value


def _axis_range(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        return lo - 0.5, hi + 0.5
    return lo, hi


def _ticks(lo: float, hi: float, log_scale: bool) -> list[tuple[float, str]]:
    """(transformed position, label) pairs; decade ticks on log axes."""
    if log_scale:
        ticks = []
        for e in range(math.ceil(lo - 1e-9), math.floor(hi + 1e-9) + 1):
            ticks.append((float(e), f"1e{e:+03d}" if abs(e) > 4 else f"{10.0**e:g}"))
        if not ticks:
            ticks = [(lo, f"{10.0**lo:.3g}"), (hi, f"{10.0**hi:.3g}")]
        return ticks
    count = 5
    return [(lo + (hi - lo) * i / (count - 1), f"{lo + (hi - lo) * i / (count - 1):.3g}") for i in range(count)]


def line_chart(
    curves: Sequence[Curve],
    *,
    title: str,
    x_label: str,
    y_label: str,
    log_x: bool = False,
    log_y: bool = False,
) -> str:
    """Render curves = [(label, xs, ys), ...] as an SVG document string."""
    if not curves:
        raise ValueError("need at least one curve")
    tx: list[list[float]] = []
    ty: list[list[float]] = []
    for label, xs, ys in curves:
        if len(xs) != len(ys) or not xs:
            raise ValueError(f"curve {label!r} must have matching, nonempty coordinates")
        tx.append([_transform(x, log_x) for x in xs])
        ty.append([_transform(y, log_y) for y in ys])
    x_lo, x_hi = _axis_range([v for xs in tx for v in xs])
    y_lo, y_hi = _axis_range([v for ys in ty for v in ys])

    plot_w = WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(v: float) -> float:
        return _MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return _MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]

    axis_y = HEIGHT - _MARGIN_BOTTOM
    parts.append(
        f'<line class="axis" x1="{_MARGIN_LEFT}" y1="{axis_y}" x2="{WIDTH - _MARGIN_RIGHT}" '
        f'y2="{axis_y}" stroke="black"/>'
    )
    parts.append(
        f'<line class="axis" x1="{_MARGIN_LEFT}" y1="{_MARGIN_TOP}" x2="{_MARGIN_LEFT}" '
        f'y2="{axis_y}" stroke="black"/>'
    )
    for pos, label in _ticks(x_lo, x_hi, log_x):
        x = px(pos)
        parts.append(f'<line x1="{x:.2f}" y1="{axis_y}" x2="{x:.2f}" y2="{axis_y + 5}" stroke="black"/>')
        parts.append(
            f'<text x="{x:.2f}" y="{axis_y + 20}" text-anchor="middle" font-size="11">{escape(label)}</text>'
        )
    for pos, label in _ticks(y_lo, y_hi, log_y):
        y = py(pos)
        parts.append(f'<line x1="{_MARGIN_LEFT - 5}" y1="{y:.2f}" x2="{_MARGIN_LEFT}" y2="{y:.2f}" stroke="black"/>')
        parts.append(
            f'<text x="{_MARGIN_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="11">{escape(label)}</text>'
        )
    parts.append(
        f'<text x="{WIDTH / 2:.1f}" y="{HEIGHT - 14}" text-anchor="middle" font-size="13">{escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="20" y="{HEIGHT / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 20 {HEIGHT / 2:.1f})">{escape(y_label)}</text>'
    )

    for i, ((label, _, _), xs, ys) in enumerate(zip(curves, tx, ty)):
        color = _PALETTE[i % len(_PALETTE)]
        points = " ".join(f"{px(x):.3f},{py(y):.3f}" for x, y in zip(xs, ys))
        d = "M " + points.replace(" ", " L ", len(xs) - 1) if len(xs) > 1 else "M " + points
        parts.append(f'<path class="curve" d="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        legend_y = _MARGIN_TOP + 16 + 18 * i
        legend_x = WIDTH - _MARGIN_RIGHT - 150
        parts.append(
            f'<line x1="{legend_x}" y1="{legend_y - 4}" x2="{legend_x + 22}" y2="{legend_y - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(f'<text x="{legend_x + 28}" y="{legend_y}" font-size="12">{escape(label)}</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
