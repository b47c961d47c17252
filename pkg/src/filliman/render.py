"""Deterministic SVG rendering of planar chains.

Each term is drawn independently: positive coefficients in blue, negative in
red, semi-transparent so overlaps stay visible, with stroked edges, a marked
origin, and a net-multiplicity label at each term's centroid (skipped when
the centroid is non-generic for the chain).  Output bytes depend only on the
chain and the options.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonGenericPoint
from .chains import SimplexChain, bounding_box, multiplicity
from .geometry import Point

_POSITIVE_FILL = "#3182bd"
_NEGATIVE_FILL = "#de2d26"


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def default_viewport(c: SimplexChain, margin: Fraction = Fraction(3, 20)) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Bounding box of the chain and the origin, padded by `margin` per side."""
    box = bounding_box(c)
    if box is None:
        return (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    lo, hi = box
    minx = min(lo[0], 0)
    miny = min(lo[1], 0)
    maxx = max(hi[0], 0)
    maxy = max(hi[1], 0)
    pad_x = (maxx - minx) * margin or Fraction(1, 2)
    pad_y = (maxy - miny) * margin or Fraction(1, 2)
    return (minx - pad_x, miny - pad_y, maxx + pad_x, maxy + pad_y)


def chain_to_svg(
    c: SimplexChain,
    viewport: tuple[Fraction, Fraction, Fraction, Fraction] | None = None,
    scale: int = 120,
) -> str:
    """Render a 2-dimensional chain to an SVG document string."""
    if c.dim != 2:
        raise ValueError(f"SVG rendering is planar only, got dimension {c.dim}")
    if viewport is None:
        viewport = default_viewport(c)
    minx, miny, maxx, maxy = viewport
    width = float((maxx - minx) * scale)
    height = float((maxy - miny) * scale)

    def project(p: Point) -> tuple[float, float]:
        return (
            float((p[0] - minx) * scale),
            float((maxy - p[1]) * scale),
        )

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'  <rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
        '  <g stroke="#1a202c" stroke-width="1.5" fill-opacity="0.35">',
    ]
    for coeff, s in c.terms:
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (project(v) for v in s.vertices)
        )
        fill = _POSITIVE_FILL if coeff > 0 else _NEGATIVE_FILL
        lines.append(f'    <polygon points="{pts}" fill="{fill}"/>')
    lines.append("  </g>")

    lines.append('  <g font-family="monospace" font-size="14" fill="#1a202c">')
    for _, s in c.terms:
        centroid = tuple(
            sum((v[k] for v in s.vertices), Fraction(0)) / 3 for k in range(2)
        )
        try:
            net = multiplicity(c, centroid)
        except NonGenericPoint:
            continue
        cx, cy = project(centroid)
        lines.append(
            f'    <text x="{_fmt(cx)}" y="{_fmt(cy)}" '
            f'text-anchor="middle">{net:+d}</text>'
        )
    lines.append("  </g>")

    ox, oy = project((Fraction(0), Fraction(0)))
    lines.extend(
        [
            '  <g stroke="#000000" stroke-width="1">',
            f'    <line x1="{_fmt(ox - 6)}" y1="{_fmt(oy)}" x2="{_fmt(ox + 6)}" y2="{_fmt(oy)}"/>',
            f'    <line x1="{_fmt(ox)}" y1="{_fmt(oy - 6)}" x2="{_fmt(ox)}" y2="{_fmt(oy + 6)}"/>',
            "  </g>",
            f'  <circle cx="{_fmt(ox)}" cy="{_fmt(oy)}" r="2.5" fill="#000000"/>',
            "</svg>",
        ]
    )
    return "\n".join(lines) + "\n"
