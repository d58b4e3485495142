"""Static SVG scenes: laminations, the region chart, exchange traces.

All geometry stays exact until the final coordinate conversion; output is
deterministic (fixed 1000x1000 viewport, unit circle of radius 450, fixed
float formatting).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coding import BASE_ARC, SLOT_LETTERS, Word
from .exchange import TraceResult
from .lamination import Lamination

SIZE = 1000
CX = CY = 500.0
R = 450.0

F = Fraction


def _pt(theta, radius: float = R) -> tuple[float, float]:
    a = 2 * math.pi * float(theta)
    return CX + radius * math.cos(a), CY - radius * math.sin(a)


def _line(p, q, stroke="#245", width=0.7) -> str:
    return (
        f'<line x1="{p[0]:.2f}" y1="{p[1]:.2f}" x2="{q[0]:.2f}" y2="{q[1]:.2f}" '
        f'stroke="{stroke}" stroke-width="{width}"/>'
    )


def _text(p, s, size=18, fill="#333") -> str:
    return (
        f'<text x="{p[0]:.2f}" y="{p[1]:.2f}" font-size="{size}" fill="{fill}" '
        f'text-anchor="middle" font-family="monospace">{s}</text>'
    )


def _document(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    )
    circle = (
        f'<circle cx="{CX:.1f}" cy="{CY:.1f}" r="{R:.1f}" fill="none" '
        f'stroke="#000" stroke-width="1.5"/>'
    )
    return "\n".join([head, circle, *body, "</svg>"]) + "\n"


def lamination_scene(lam: Lamination) -> str:
    body = []
    for depth, layer in enumerate(lam.layers):
        shade = 40 + min(180, 18 * depth)
        color = f"rgb({shade},{shade // 2},{255 - shade})"
        for chord in layer:
            body.append(_line(_pt(chord.a), _pt(chord.b), stroke=color))
    return _document(body)


def region_scene() -> str:
    body = []
    for r in range(1, 7):
        theta = F(r, 14)
        body.append(_line(_pt(theta), _pt(1 - theta), stroke="#888", width=1.2))
    for letter in SLOT_LETTERS:
        arc = BASE_ARC[letter.value if letter.name != "C" else "c"]
        for mid in (arc.mid, 1 - arc.mid):
            body.append(_text(_pt(mid, R * 0.85), letter.name))
    return _document(body)


def scenario_scene(res: TraceResult) -> str:
    """One row per traced step: the two lifted strips and their exterior arc."""
    rows = sorted(res.rows)
    body = [
        _text((CX, 40), f"scenario {res.config.name}: steps {rows[0]}..{rows[-1]}")
    ]
    n = len(rows)
    for i, step in enumerate(rows):
        y0 = 80 + i * (SIZE - 120) / max(n, 1)
        scale = 0.45 * (SIZE - 120) / max(n, 1)
        cx, cy = 180.0, y0 + scale
        for comp in res.rows[step]:
            (lp, lt), (rp, rt) = comp
            label = f"step {step}:  {lp} ({lt})  <->  ({rt}) {rp}"
            body.append(_text((CX + 120, cy), label, size=14))
        body.append(
            f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{scale:.1f}" fill="none" '
            f'stroke="#999" stroke-width="0.8"/>'
        )
        swaps = [
            e for e in res.events if e.step == step and e.kind != "orbitTouch"
        ]
        if swaps:
            body.append(_text((60, cy), "*", size=22, fill="#a00"))
    return _document(body)


def write_svg(text: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
