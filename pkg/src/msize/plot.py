"""SVG drawing of a 1-dimensional size function on the (s, t) half-plane."""

from __future__ import annotations

from html import escape

import numpy as np

from msize.sizefn1d import CornerSeries, evaluate

MAX_LABELLED_LEVELS = 40
_PALETTE = ["#ffffff", "#dbe9f6", "#b0d0ea", "#7fb2dc", "#4f90c8", "#2c6fb0", "#17508f"]


def _levels(cs: CornerSeries) -> list[float]:
    vals = {v for p in cs.cornerpoints for v in p} | set(cs.cornerlines)
    return sorted(vals)


def size_function_svg(cs: CornerSeries, title: str = "", size: int = 420) -> str:
    """Regions of constant value bounded by cornerpoint/cornerline coordinates.

    Each cell of the grid spanned by the distinct coordinates is clipped to
    t > s, filled by its value and labelled when the grid is small enough to
    read.
    """
    levels = _levels(cs)
    if not levels:
        levels = [0.0]
    lo, hi = levels[0], levels[-1]
    pad = 0.25 * (hi - lo) if hi > lo else 0.5
    lo, hi = lo - pad, hi + pad
    edges = [lo] + levels + [hi]

    margin = 40
    span = size - 2 * margin

    def sx(s):
        return margin + (s - lo) / (hi - lo) * span

    def ty(t):
        return size - margin - (t - lo) / (hi - lo) * span

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" font-family="sans-serif" font-size="11">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
    ]
    labelled = len(levels) <= MAX_LABELLED_LEVELS
    for i in range(len(edges) - 1):
        s0, s1 = edges[i], edges[i + 1]
        for j in range(i, len(edges) - 1):
            t0, t1 = edges[j], edges[j + 1]
            if j == i:
                poly = [(s0, t0), (s0, t1), (s1, t1)]
                probe = (s0 + (s1 - s0) / 4, t1 - (t1 - t0) / 4)
            else:
                poly = [(s0, t0), (s0, t1), (s1, t1), (s1, t0)]
                probe = ((s0 + s1) / 2, (t0 + t1) / 2)
            value = evaluate(cs, *probe)
            colour = _PALETTE[min(value, len(_PALETTE) - 1)]
            pts = " ".join(f"{sx(s):.2f},{ty(t):.2f}" for s, t in poly)
            out.append(f'<polygon points="{pts}" fill="{colour}" stroke="#999999" stroke-width="0.5"/>')
            if labelled:
                cx = np.mean([sx(s) for s, _ in poly])
                cy = np.mean([ty(t) for _, t in poly])
                out.append(f'<text x="{cx:.2f}" y="{cy + 4:.2f}" text-anchor="middle">{value}</text>')

    out.append(
        f'<line x1="{sx(lo):.2f}" y1="{ty(lo):.2f}" x2="{sx(hi):.2f}" y2="{ty(hi):.2f}" '
        'stroke="#000000" stroke-width="1"/>'
    )
    for b, d in cs.cornerpoints:
        out.append(f'<circle cx="{sx(b):.2f}" cy="{ty(d):.2f}" r="3" fill="#c0392b"/>')
    for x in cs.cornerlines:
        out.append(
            f'<line x1="{sx(x):.2f}" y1="{ty(x):.2f}" x2="{sx(x):.2f}" y2="{ty(hi):.2f}" '
            'stroke="#c0392b" stroke-width="1.5" stroke-dasharray="4,3"/>'
        )
    out.append(f'<text x="{size / 2:.0f}" y="{size - 10}" text-anchor="middle">s</text>')
    out.append(f'<text x="12" y="{size / 2:.0f}">t</text>')
    if title:
        out.append(f'<text x="{size / 2:.0f}" y="20" text-anchor="middle">{escape(title)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
