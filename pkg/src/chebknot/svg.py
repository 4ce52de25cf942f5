"""SVG rendering of C(3, b) diagrams with over-strand gaps."""

from __future__ import annotations

import math

from .diagram import ConwayForm
from .heights import gauss_sequence


def _chebyshev(n: int, t: float) -> float:
    return math.cos(n * math.acos(max(-1.0, min(1.0, t))))


def render_diagram_svg(
    form: ConwayForm,
    samples_per_lobe: int = 64,
    size: int = 560,
    margin: int = 30,
) -> str:
    """Polyline approximation of (T_3(t), T_b(t)) with the under-strand
    broken around each undercrossing parameter."""
    b = form.b
    g = gauss_sequence(form)
    params = sorted(g.parameters)
    under = [p for p, s in g.events if s < 0]

    def gap_halfwidth(u: float) -> float:
        others = [abs(u - p) for p in params if p != u]
        return 0.38 * min(others) if others else 0.05

    windows = [(u - gap_halfwidth(u), u + gap_halfwidth(u)) for u in under]

    n = max(8, samples_per_lobe) * b
    span = size - 2 * margin

    def to_px(x: float, y: float) -> tuple[float, float]:
        return (margin + (x + 1.0) * span / 2.0, margin + (1.0 - y) * span / 2.0)

    segments: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for i in range(n + 1):
        t = -1.0 + 2.0 * i / n
        if any(lo < t < hi for lo, hi in windows):
            if len(current) > 1:
                segments.append(current)
            current = []
            continue
        current.append(to_px(_chebyshev(3, t), _chebyshev(b, t)))
    if len(current) > 1:
        segments.append(current)

    paths = []
    for seg in segments:
        d = "M " + " L ".join(f"{x:.2f} {y:.2f}" for x, y in seg)
        paths.append(
            f'<path d="{d}" fill="none" stroke="black" stroke-width="2.2" '
            'stroke-linecap="round"/>'
        )
    body = "\n  ".join(paths)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'  <rect width="{size}" height="{size}" fill="white"/>\n'
        f"  {body}\n"
        "</svg>\n"
    )
