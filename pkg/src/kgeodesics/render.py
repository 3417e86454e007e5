"""SVG pictures of axes in the Poincare disk.

Axes live in the upper half-plane; the Cayley transform ``z -> (z-i)/(z+i)``
sends a boundary point with half-plane angle ``phi`` (``x = tan(phi/2)``) to
the unit-circle point at angle ``phi + pi``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .geometry import Axis, PantsStructure, axis_of, holonomy
from .intersection import rotations
from .words import CyclicWord, syllables

PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#148f77", "#5d6d7e")


class RenderMode(str, enum.Enum):
    AXES = "AXES"
    ALPHA_BETA = "ALPHA_BETA"


@dataclass(frozen=True)
class RenderSpec:
    structure: PantsStructure
    words: tuple[CyclicWord, ...]
    canvas: tuple[int, int] = (600, 600)
    which: RenderMode = RenderMode.AXES

    def __post_init__(self):
        if not self.words:
            raise ValueError("render needs at least one word")
        if min(self.canvas) <= 0:
            raise ValueError(f"canvas must be positive, got {self.canvas}")


@dataclass(frozen=True)
class Arc:
    """Hyperbolic geodesic in the unit disk between two boundary angles.

    ``center`` and ``radius`` describe the Euclidean circle carrying the
    arc; both are ``None`` for a diameter.
    """

    label: str
    start: float
    end: float
    center: tuple[float, float] | None = field(default=None)
    radius: float | None = None

    @property
    def endpoints(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (math.cos(self.start), math.sin(self.start)), (math.cos(self.end), math.sin(self.end))


def disk_angle(phi) -> float:
    return (float(phi) + math.pi) % math.tau


def geodesic_arc(psi1: float, psi2: float, label: str = "") -> Arc:
    half = ((psi2 - psi1) % math.tau) / 2
    if abs(math.sin(half)) < 1e-12:
        raise ValueError("geodesic endpoints coincide")
    if abs(math.cos(half)) < 1e-12:
        return Arc(label, psi1, psi2)
    mid = psi1 + half
    d = 1 / math.cos(half)
    # the orthogonal circle's center lies on the bisector at distance sec(half)
    return Arc(label, psi1, psi2, (d * math.cos(mid), d * math.sin(mid)), abs(math.tan(half)))


def _axis_arc(ax: Axis, label: str) -> Arc:
    return geodesic_arc(disk_angle(ax.repelling), disk_angle(ax.attracting), label)


def arcs_for(spec: RenderSpec) -> list[Arc]:
    out = []
    for w in spec.words:
        if spec.which is RenderMode.AXES:
            out.append(_axis_arc(axis_of(holonomy(w, spec.structure)), str(w)))
            continue
        system = rotations(syllables(w))
        for k, x in enumerate(system.x, 1):
            out.append(_axis_arc(axis_of(holonomy(x, spec.structure)), f"{w} alpha_{k}"))
        for k, y in enumerate(system.y, 1):
            out.append(_axis_arc(axis_of(holonomy(y, spec.structure)), f"{w} beta_{k}"))
    return out


def _f(x: float) -> str:
    return format(x, ".9g")


def render(spec: RenderSpec) -> str:
    """Deterministic SVG document for ``spec``."""
    width, height = spec.canvas
    cx, cy = width / 2, height / 2
    R = 0.45 * min(width, height)

    def px(p: tuple[float, float]) -> tuple[float, float]:
        return cx + R * p[0], cy - R * p[1]

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(R)}" fill="none" stroke="#000000" stroke-width="1.5"/>',
    ]
    words = [str(w) for w in spec.words]
    for arc in arcs_for(spec):
        color = PALETTE[words.index(arc.label.split(" ")[0]) % len(PALETTE)]
        p1, p2 = (px(p) for p in arc.endpoints)
        if arc.center is None:
            d = f"M {_f(p1[0])} {_f(p1[1])} L {_f(p2[0])} {_f(p2[1])}"
        else:
            c = px(arc.center)
            cross = (p1[0] - c[0]) * (p2[1] - c[1]) - (p1[1] - c[1]) * (p2[0] - c[0])
            r = _f(R * arc.radius)
            d = f"M {_f(p1[0])} {_f(p1[1])} A {r} {r} 0 0 {1 if cross > 0 else 0} {_f(p2[0])} {_f(p2[1])}"
        lines.append(
            f'<path d="{d}" fill="none" stroke="{color}" stroke-width="1.2"><title>{arc.label}</title></path>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
