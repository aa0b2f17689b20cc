"""SVG rendering of interval embeddings on a principal plane."""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

PLOT_SIZE = 600.0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
MARKER = 2.0  # px; anything thinner is drawn as a marker instead of a rect


def _f(x: float) -> str:
    return f"{x + 0.0:.2f}"


def plot_rectangles(e, dims: tuple[int, int] = (0, 1), labels: Sequence[str] | None = None,
                    axis_labels: Sequence[str] | None = None) -> str:
    """One rectangle per object spanning its intervals on dimensions ``dims`` (0-based).

    Scaling is isotropic and the view box is padded by 5% on each side.
    Objects thinner than two pixels on an axis become a 2 px line, and on
    both axes a 2 px dot.
    """
    a, b = dims
    if a == b or not (0 <= a < e.lo.shape[1] and 0 <= b < e.lo.shape[1]):
        raise ValueError(f"plot dimensions {dims} invalid for {e.lo.shape[1]} dimension(s)")
    labels = list(labels) if labels else list(e.names)
    axis_labels = list(axis_labels) if axis_labels else [f"Y{a + 1}", f"Y{b + 1}"]
    x0, x1 = float(e.lo[:, a].min()), float(e.hi[:, a].max())
    y0, y1 = float(e.lo[:, b].min()), float(e.hi[:, b].max())
    sx, sy = x1 - x0, y1 - y0
    base = max(sx, sy) or 1.0
    sx, sy = sx or base, sy or base
    x0, y0 = (x0 + x1 - sx) / 2, (y0 + y1 - sy) / 2
    x0, y0 = x0 - 0.05 * sx, y0 - 0.05 * sy
    sx, sy = 1.1 * sx, 1.1 * sy
    scale = PLOT_SIZE / max(sx, sy)
    width, height = sx * scale, sy * scale

    def px(x):
        return (x - x0) * scale

    def py(y):
        return height - (y - y0) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}" font-family="sans-serif" font-size="12">',
        '<g id="axes" stroke="#999999" stroke-width="1">',
    ]
    if x0 <= 0 <= x0 + sx:
        out.append(f'<line x1="{_f(px(0))}" y1="0.00" x2="{_f(px(0))}" y2="{_f(height)}"/>')
    if y0 <= 0 <= y0 + sy:
        out.append(f'<line x1="0.00" y1="{_f(py(0))}" x2="{_f(width)}" y2="{_f(py(0))}"/>')
    out.append("</g>")
    out.append(f'<text x="{_f(width - 4)}" y="{_f(height - 4)}" text-anchor="end">{escape(axis_labels[0])}</text>')
    out.append(f'<text x="4" y="14">{escape(axis_labels[1])}</text>')
    out.append('<g id="objects">')
    for i in range(e.lo.shape[0]):
        color = PALETTE[i % len(PALETTE)]
        left, right = px(e.lo[i, a]), px(e.hi[i, a])
        top, bottom = py(e.hi[i, b]), py(e.lo[i, b])
        w, h = right - left, bottom - top
        cx, cy = (left + right) / 2, (top + bottom) / 2
        if w < MARKER and h < MARKER:
            out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(MARKER / 2)}" fill="{color}"/>')
        elif w < MARKER:
            out.append(f'<line x1="{_f(cx)}" y1="{_f(top)}" x2="{_f(cx)}" y2="{_f(bottom)}" '
                       f'stroke="{color}" stroke-width="{_f(MARKER)}"/>')
        elif h < MARKER:
            out.append(f'<line x1="{_f(left)}" y1="{_f(cy)}" x2="{_f(right)}" y2="{_f(cy)}" '
                       f'stroke="{color}" stroke-width="{_f(MARKER)}"/>')
        else:
            out.append(f'<rect x="{_f(left)}" y="{_f(top)}" width="{_f(w)}" height="{_f(h)}" '
                       f'fill="{color}" fill-opacity="0.15" stroke="{color}"/>')
        out.append(f'<text x="{_f(left + 2)}" y="{_f(top - 3)}" fill="{color}">{escape(str(labels[i]))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
