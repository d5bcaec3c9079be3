"""SVG orbit diagrams: orbit points, mirror lines and dashed weight-axis directions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .errors import DomainError
from .groups import GroupId, Point, group_data, omega_to_alpha, orbit_points, roots

__all__ = ["PlotSpec", "cartesian", "emit_svg", "render_svg", "PALETTE"]

SIZE = 600
MARGIN = 60
PALETTE = ("#1f5fa8", "#c0392b", "#2e8b57", "#8e44ad", "#d4820a", "#555555")


@dataclass(frozen=True)
class PlotSpec:
    group: GroupId
    items: tuple[tuple[Point, str], ...]  # (dominant, fill colour)
    show_mirrors: bool = True
    show_axes: bool = True
    out: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "group", GroupId.coerce(self.group))
        if not self.items:
            raise DomainError("a plot needs at least one orbit")


def _basis(g: GroupId) -> tuple[tuple[float, float], tuple[float, float]]:
    """Cartesian simple roots reproducing the Gram matrix."""
    (g11, g12), (_, g22) = ((float(a), float(b)) for a, b in group_data(g).gram)
    a1 = (math.sqrt(g11), 0.0)
    c = g12 / a1[0]
    return a1, (c, math.sqrt(g22 - c * c))


def cartesian(g: GroupId | str, p: Point) -> tuple[float, float]:
    g = GroupId.coerce(g)
    a = omega_to_alpha(g, p)
    (ux, uy), (vx, vy) = _basis(g)
    s, t = float(a.x), float(a.y)
    return s * ux + t * vx, s * uy + t * vy


def render_svg(spec: PlotSpec) -> str:
    g = spec.group
    orbits = [(d, colour, orbit_points(g, d)) for d, colour in spec.items]
    pts = [cartesian(g, p) for _, _, orb in orbits for p in orb]
    reach = max([math.hypot(x, y) for x, y in pts] + [1e-9])
    if reach < 1e-9:
        reach = 1.0
    half = SIZE / 2
    scale = (half - MARGIN) / reach

    def xy(x: float, y: float) -> tuple[float, float]:
        return half + x * scale, half - y * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>{escape(g.value)} orbits</title>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    ext = half * 1.5
    if spec.show_mirrors:
        seen: set[float] = set()
        for r in roots(g):
            rx, ry = cartesian(g, r)
            # mirror is perpendicular to its root; r and -r share one mirror
            key = round(math.atan2(ry, rx) % math.pi, 6) % round(math.pi, 6)
            if key in seen:
                continue
            seen.add(key)
            n = math.hypot(rx, ry)
            dx, dy = -ry / n, rx / n
            (x1, y1), (x2, y2) = xy(-dx * ext / scale, -dy * ext / scale), \
                xy(dx * ext / scale, dy * ext / scale)
            out.append(f'<line class="mirror" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
                       f'y2="{y2:.2f}" stroke="#999999" stroke-width="1"/>')
    if spec.show_axes:
        for k in range(2):
            wx, wy = cartesian(g, Point(1 - k, k))
            n = math.hypot(wx, wy)
            x2, y2 = xy(wx / n * ext / scale, wy / n * ext / scale)
            out.append(f'<line class="omega-axis" x1="{half}" y1="{half}" x2="{x2:.2f}" '
                       f'y2="{y2:.2f}" stroke="#444444" stroke-width="1" '
                       f'stroke-dasharray="6,4"/>')
    for d, colour, orb in orbits:
        out.append(f'<g class="orbit" data-dominant="{escape(str(d))}">')
        for p in orb:
            x, y = xy(*cartesian(g, p))
            if p == d:
                out.append(f'<circle class="dominant" cx="{x:.2f}" cy="{y:.2f}" r="7" '
                           f'fill="{colour}" stroke="black" stroke-width="2"/>')
            else:
                out.append(f'<circle class="point" cx="{x:.2f}" cy="{y:.2f}" r="4.5" '
                           f'fill="{colour}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(spec: PlotSpec) -> str:
    """Render and, when ``spec.out`` is set, write the file.  Returns the SVG text."""
    text = render_svg(spec)
    if spec.out is not None:
        Path(spec.out).write_text(text, encoding="utf-8")
    return text
