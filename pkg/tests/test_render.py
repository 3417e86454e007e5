import math
import re

import pytest

from kgeodesics.geometry import make_structure
from kgeodesics.render import RenderMode, RenderSpec, arcs_for, geodesic_arc, render
from kgeodesics.words import parse_word

S111 = make_structure(1, 1, 1)


def test_axes_mode_one_arc_per_word():
    spec = RenderSpec(S111, (parse_word("ab"),))
    assert len(arcs_for(spec)) == 1
    spec = RenderSpec(S111, (parse_word("ab"), parse_word("aabb")))
    assert len(arcs_for(spec)) == 2


@pytest.mark.parametrize("text, count", [("aabb", 2), ("abaabb", 4), ("(ab)^3(aab)^3b^3", 12)])
def test_alpha_beta_arc_count(text, count):
    spec = RenderSpec(S111, (parse_word(text),), which=RenderMode.ALPHA_BETA)
    assert len(arcs_for(spec)) == count


def test_arcs_are_orthogonal_to_the_unit_circle():
    spec = RenderSpec(S111, (parse_word("abAAbaBB"),), which=RenderMode.ALPHA_BETA)
    for arc in arcs_for(spec):
        if arc.center is None:
            continue
        d2 = arc.center[0] ** 2 + arc.center[1] ** 2
        assert d2 == pytest.approx(arc.radius**2 + 1, rel=1e-9)
        for x, y in arc.endpoints:
            assert math.hypot(x - arc.center[0], y - arc.center[1]) == pytest.approx(arc.radius, rel=1e-9)


def test_diameter():
    arc = geodesic_arc(0.0, math.pi)
    assert arc.center is None
    with pytest.raises(ValueError):
        geodesic_arc(1.0, 1.0)


def test_svg_deterministic():
    spec = RenderSpec(S111, (parse_word("ab"), parse_word("aabb")), canvas=(400, 400))
    first = render(spec)
    assert render(spec) == first
    assert first.startswith("<svg") and first.rstrip().endswith("</svg>")
    assert len(re.findall(r"<path ", first)) == 2


def test_svg_arc_bulges_inward():
    # the drawn arc must be the one inside the disk: its midpoint is closer to the center than the endpoints
    spec = RenderSpec(S111, (parse_word("aabb"),), canvas=(500, 500))
    svg = render(spec)
    m = re.search(r'd="M ([\d.e+-]+) ([\d.e+-]+) A ([\d.e+-]+) [\d.e+-]+ 0 0 ([01]) ([\d.e+-]+) ([\d.e+-]+)"', svg)
    x1, y1, r, sweep, x2, y2 = (float(g) for g in m.groups())
    cx = cy = 250.0
    # recover the SVG arc center from endpoints, radius and sweep flag
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    half = math.hypot(x2 - x1, y2 - y1) / 2
    h = math.sqrt(max(r * r - half * half, 0.0))
    ux, uy = -(y2 - y1) / (2 * half), (x2 - x1) / (2 * half)
    centers = [(mx + h * ux, my + h * uy), (mx - h * ux, my - h * uy)]
    for c in centers:
        cross = (x1 - c[0]) * (y2 - c[1]) - (y1 - c[1]) * (x2 - c[0])
        if (cross > 0) == (sweep == 1.0):
            center = c
    # midpoint of the short arc on that center
    vx, vy = mx - center[0], my - center[1]
    norm = math.hypot(vx, vy)
    px, py = center[0] + r * vx / norm, center[1] + r * vy / norm
    assert math.hypot(px - cx, py - cy) < 0.45 * 500


def test_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(S111, ())
    with pytest.raises(ValueError):
        RenderSpec(S111, (parse_word("ab"),), canvas=(0, 10))
