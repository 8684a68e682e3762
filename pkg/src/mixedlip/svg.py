"""Deterministic SVG emitters derived from report data.

Hand-rolled output (no plotting dependency) so repeated runs are
byte-identical: coordinates are formatted with a fixed precision and all
element orders follow the deterministic orders of the underlying data.
"""

from __future__ import annotations

import math
from typing import List

from mixedlip.links import LinkData
from mixedlip.newton import GammaInnResult
from mixedlip.poly import MixedPolynomial

WIDTH = 480
HEIGHT = 480
MARGIN = 48

PALETTE = ("#1f6fb2", "#c23b22", "#2e8540", "#8a4fbf", "#b8860b", "#0e7c7b")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _header(title: str) -> List[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{title}</title>",
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]


def newton_svg(f: MixedPolynomial, g: GammaInnResult) -> str:
    """Support dots, boundary chain, and inner-region boundary of f."""
    support = sorted(f.support())
    verts = g.diagram.vertices
    xs = [p[0] for p in support] + [v[0] for v in verts] + [0]
    ys = [p[1] for p in support] + [v[1] for v in verts] + [0]
    span = max(max(xs), max(ys), 1)
    scale = (WIDTH - 2 * MARGIN) / span

    def pt(p) -> str:
        x = MARGIN + float(p[0]) * scale
        y = HEIGHT - MARGIN - float(p[1]) * scale
        return f"{_fmt(x)},{_fmt(y)}"

    out = _header("support and boundary")
    # axes
    out.append(
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN // 2}" '
        f'y2="{HEIGHT - MARGIN}" stroke="#999" stroke-width="1"/>'
    )
    out.append(
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{MARGIN}" '
        f'y2="{MARGIN // 2}" stroke="#999" stroke-width="1"/>'
    )
    if len(verts) > 1:
        pts = " ".join(pt(v) for v in verts)
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{PALETTE[0]}" '
            'stroke-width="2.5"/>'
        )
    for i, v in enumerate(verts):
        x, y = pt(v).split(",")
        out.append(
            f'<circle cx="{x}" cy="{y}" r="5" fill="{PALETTE[0]}"/>'
        )
    for p in support:
        x, y = pt(p).split(",")
        out.append(
            f'<circle cx="{x}" cy="{y}" r="3" fill="#333"/>'
        )
        out.append(
            f'<text x="{_fmt(float(x) + 7)}" y="{_fmt(float(y) - 7)}" '
            f'font-size="11" fill="#333">({p[0]},{p[1]})</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def braid_svg(link_data: LinkData, face_index: int) -> str:
    """Strand diagram of one face: sample points plotted as (Re u, t)."""
    comps = link_data.face_components(face_index)
    out = _header(f"face {face_index} strands")
    vals = [abs(p) for c in comps for p, _ in c.samples] or [1.0]
    span = max(max(vals), 1e-9)
    sx = (WIDTH - 2 * MARGIN) / (2 * span)
    sy = (HEIGHT - 2 * MARGIN) / (2 * math.pi)

    def pt(pos: complex, angle: float) -> str:
        x = WIDTH / 2 + pos.real * sx
        y = HEIGHT - MARGIN - (angle % (2 * math.pi)) * sy
        return f"{_fmt(x)},{_fmt(y)}"

    out.append(
        f'<line x1="{WIDTH // 2}" y1="{MARGIN}" x2="{WIDTH // 2}" '
        f'y2="{HEIGHT - MARGIN}" stroke="#ddd" stroke-width="1"/>'
    )
    for i, c in enumerate(comps):
        colour = PALETTE[i % len(PALETTE)]
        if c.kind == "fibre-circle":
            # a fibre circle sits over one base angle: draw its samples as dots
            for pos, angle in c.samples[:: max(1, len(c.samples) // 64)]:
                x, y = pt(pos, c.base_angle or 0.0).split(",")
                out.append(
                    f'<circle cx="{x}" cy="{y}" r="2" fill="{colour}"/>'
                )
            continue
        samples = sorted(c.samples, key=lambda pa: pa[1])
        segment: List[str] = []
        prev = None
        for pos, angle in samples:
            if prev is not None and angle - prev > 1.0:
                out.append(
                    f'<polyline points="{" ".join(segment)}" fill="none" '
                    f'stroke="{colour}" stroke-width="2"/>'
                )
                segment = []
            segment.append(pt(pos, angle))
            prev = angle
        if segment:
            out.append(
                f'<polyline points="{" ".join(segment)}" fill="none" '
                f'stroke="{colour}" stroke-width="2"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
