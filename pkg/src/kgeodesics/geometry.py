"""Hyperbolic pairs of pants as 2x2 matrix groups acting on the upper half-plane.

Boundary points of the half-plane are tracked as angles on the circle
``R u {inf}`` via ``x = tan(theta/2)``, so the point at infinity is
``theta = pi`` and no special casing is needed for interleaving tests.

Arithmetic runs on Python floats at the base precision (53 bits) and on
:mod:`mpmath` contexts above it.  Every crossing decision is certified by an
endpoint separation larger than a guard band; :func:`certified` retries a
computation at doubled precision when a guard is violated.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass
from typing import Callable, TypeVar

import mpmath

from .errors import ConstructionError, IndeterminateSeparationError, NonHyperbolicError
from .words import CyclicWord, Letter

BASE_PREC = 53
EPS_GUARD = 1e-8
DEFAULT_PRECISION_CAP = 1024
PRECISION_CAP_ENV = "KGEODESICS_PRECISION_CAP"

T = TypeVar("T")


class _FloatContext:
    prec = BASE_PREC
    pi = math.pi
    sqrt = staticmethod(math.sqrt)
    atan2 = staticmethod(math.atan2)
    exp = staticmethod(math.exp)
    cosh = staticmethod(math.cosh)
    acosh = staticmethod(math.acosh)
    convert = staticmethod(float)


_FLOAT = _FloatContext()


@functools.lru_cache(maxsize=None)
def numeric_context(prec: int):
    """Arithmetic namespace for ``prec`` mantissa bits (floats at the base level)."""
    if prec <= BASE_PREC:
        return _FLOAT
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def precision_cap() -> int:
    return int(os.environ.get(PRECISION_CAP_ENV, DEFAULT_PRECISION_CAP))


def certified(fn: Callable[[int], T], cap: int | None = None) -> T:
    """Call ``fn(prec)`` at increasing precision until no guard band is violated."""
    cap = precision_cap() if cap is None else cap
    prec = BASE_PREC
    while True:
        try:
            return fn(prec)
        except IndeterminateSeparationError as exc:
            if prec * 2 > cap:
                exc.context.setdefault("precision", prec)
                raise
            prec *= 2


def _unit(prec: int) -> float:
    return 2.0 ** (-prec)


@dataclass(frozen=True)
class Isometry:
    """Unit-determinant matrix ``[[a, b], [c, d]]`` acting by ``z -> (az+b)/(cz+d)``.

    ``magnitude`` is the product of the entrywise absolute values of the
    factors and ``depth`` their number; together they give the standard
    componentwise rounding bound for a matrix product.
    """

    entries: tuple
    prec: int = BASE_PREC
    magnitude: tuple = (1.0, 0.0, 0.0, 1.0)
    depth: int = 0

    @classmethod
    def from_entries(cls, a, b, c, d, prec: int = BASE_PREC) -> "Isometry":
        ctx = numeric_context(prec)
        entries = tuple(ctx.convert(x) for x in (a, b, c, d))
        return cls(entries, prec, tuple(abs(float(x)) for x in entries), 1)

    @classmethod
    def identity(cls, prec: int = BASE_PREC) -> "Isometry":
        ctx = numeric_context(prec)
        one, zero = ctx.convert(1), ctx.convert(0)
        return cls((one, zero, zero, one), prec)

    @property
    def norm(self) -> float:
        a, b, c, d = (float(x) for x in self.entries)
        return math.sqrt(a * a + b * b + c * c + d * d)

    @property
    def err(self) -> float:
        """Bound on the absolute rounding error of the entries."""
        a, b, c, d = self.magnitude
        return max(self.depth, 1) * _unit(self.prec) * math.sqrt(a * a + b * b + c * c + d * d)

    @property
    def trace(self):
        return self.entries[0] + self.entries[3]

    @property
    def det(self):
        a, b, c, d = self.entries
        return a * d - b * c

    @property
    def is_hyperbolic(self) -> bool:
        return abs(self.trace) > 2

    def inverse(self) -> "Isometry":
        a, b, c, d = self.entries
        ma, mb, mc, md = self.magnitude
        return Isometry((d, -b, -c, a), self.prec, (md, mb, mc, ma), self.depth)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        ma, mb, mc, md = self.magnitude
        me, mf, mg, mh = other.magnitude
        return Isometry(
            (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h),
            min(self.prec, other.prec),
            (ma * me + mb * mg, ma * mf + mb * mh, mc * me + md * mg, mc * mf + md * mh),
            self.depth + other.depth,
        )

    def __call__(self, z):
        a, b, c, d = self.entries
        return (a * z + b) / (c * z + d)

    def to_json(self) -> list[str]:
        return [mpmath.nstr(x, 30) if not isinstance(x, float) else repr(x) for x in self.entries]


def translation_length(g: Isometry) -> float:
    """``2 arccosh(|tr g| / 2)``; raises for parabolic or elliptic ``g``."""
    t = abs(g.trace)
    if not t > 2:
        raise NonHyperbolicError(f"|trace| = {float(t)!r} <= 2", trace=float(t))
    ctx = numeric_context(g.prec)
    return float(2 * ctx.acosh(t / 2))


def _tau(x):
    return math.tau if isinstance(x, float) else 2 * x.context.pi


def _angle_of(x, ctx):
    if x == math.inf or x == -math.inf:
        return ctx.convert(math.pi) if ctx is _FLOAT else ctx.pi
    return (2 * ctx.atan2(ctx.convert(x), 1)) % (2 * ctx.pi)


def _circle_distance(x, y):
    d = abs(x - y)
    return min(d, _tau(d) - d)


@dataclass(frozen=True)
class Axis:
    """Unordered geodesic between two boundary points, kept with its orientation.

    ``attracting`` and ``repelling`` are angles in ``[0, 2pi)``; ``guard`` is
    the separation below which two endpoints are not considered distinct.
    """

    attracting: object
    repelling: object
    guard: float = EPS_GUARD

    @classmethod
    def from_points(cls, attracting, repelling, prec: int = BASE_PREC) -> "Axis":
        """Axis through real endpoints (``math.inf`` for the point at infinity)."""
        ctx = numeric_context(prec)
        return cls(_angle_of(attracting, ctx), _angle_of(repelling, ctx), _base_guard(prec))

    @staticmethod
    def point(theta):
        """Real coordinate of a boundary angle, ``math.inf`` at ``theta = pi``."""
        if abs(float(theta) - math.pi) <= 4e-16:
            return math.inf
        return math.tan(float(theta) / 2)

    @property
    def attracting_point(self) -> float:
        return self.point(self.attracting)

    @property
    def repelling_point(self) -> float:
        return self.point(self.repelling)

    def reversed(self) -> "Axis":
        return Axis(self.repelling, self.attracting, self.guard)

    def separation(self) -> float:
        return float(_circle_distance(self.attracting, self.repelling))


def _base_guard(prec: int) -> float:
    return EPS_GUARD * 2.0 ** (BASE_PREC - prec)


def _eigen_angle(g: Isometry, lam, ctx):
    a, b, c, d = g.entries
    e1 = lam - a
    e2 = lam - d
    # (e1, e2) satisfy e1 * e2 = b * c; use the row with the larger pivot
    if abs(e2) >= abs(e1):
        u, v = e2, c
    else:
        u, v = b, e1
    return (2 * ctx.atan2(u, v)) % (2 * ctx.pi)


def axis_of(g: Isometry) -> Axis:
    """Fixed points of a hyperbolic ``g``; the attracting one has derivative < 1."""
    t = g.trace
    disc = t * t - 4
    if not disc > 0:
        raise NonHyperbolicError(f"|trace| = {float(abs(t))!r} <= 2", trace=float(t))
    ctx = numeric_context(g.prec)
    sq = ctx.sqrt(disc)
    lam = (t + sq) / 2 if t > 0 else (t - sq) / 2
    guard = max(_base_guard(g.prec), 8 * g.err * g.norm / float(disc))
    return Axis(_eigen_angle(g, lam, ctx), _eigen_angle(g, 1 / lam, ctx), guard)


def check_separated(points, guard: float) -> None:
    """Raise unless all points are pairwise farther apart than ``guard`` on the circle."""
    pts = sorted(points)
    gaps = [pts[i + 1] - pts[i] for i in range(len(pts) - 1)]
    gaps.append(_tau(pts[0]) - pts[-1] + pts[0])
    worst = min(gaps)
    if not worst > guard:
        raise IndeterminateSeparationError(
            "boundary points coincide within the guard band",
            separation=float(worst),
            guard=guard,
        )


def axes_cross(p: Axis, q: Axis) -> bool:
    """True iff the endpoint pairs of ``p`` and ``q`` interleave on the circle."""
    check_separated((p.attracting, p.repelling, q.attracting, q.repelling), max(p.guard, q.guard))
    return _interleave(p, q)


def _interleave(p: Axis, q: Axis) -> bool:
    lo, hi = (p.attracting, p.repelling) if p.attracting < p.repelling else (p.repelling, p.attracting)
    return (lo < q.attracting < hi) != (lo < q.repelling < hi)


@functools.lru_cache(maxsize=256)
def _generators(lengths: tuple[float, float, float], prec: int) -> tuple[Isometry, Isometry]:
    ctx = numeric_context(prec)
    l1, l2, l3 = (ctx.convert(x) for x in lengths)
    lam = ctx.exp(l1 / 2)
    t2 = 2 * ctx.cosh(l2 / 2)
    t3 = 2 * ctx.cosh(l3 / 2)
    # gen_b = [[p, q], [r, s]] with p + s = t2 and tr(gen_a gen_b^-1) = lam s + p / lam = -t3
    s = (-t3 - t2 / lam) / (lam - 1 / lam)
    p = t2 - s
    qr = p * s - 1
    if not qr < 0:
        raise ConstructionError("conjugator equation has no real solution", lengths=list(lengths))
    q = ctx.sqrt(-qr)
    gen_a = Isometry.from_entries(lam, 0, 0, 1 / lam, prec)
    gen_b = Isometry.from_entries(p, q, -q, s, prec)
    return gen_a, gen_b


@dataclass(frozen=True)
class PantsStructure:
    """Pair of pants with boundary classes a, b and a b^-1.

    ``gen_a`` and ``gen_b`` are the base-precision generators; higher
    precision copies come from :meth:`generators`.
    """

    boundary_lengths: tuple[float, float, float]
    gen_a: Isometry
    gen_b: Isometry

    def generators(self, prec: int = BASE_PREC) -> tuple[Isometry, Isometry]:
        if prec <= BASE_PREC:
            return self.gen_a, self.gen_b
        return _generators(self.boundary_lengths, prec)

    def letter_matrices(self, prec: int = BASE_PREC) -> dict[Letter, Isometry]:
        ga, gb = self.generators(prec)
        return {Letter.a: ga, Letter.b: gb, Letter.A: ga.inverse(), Letter.B: gb.inverse()}

    def __str__(self) -> str:
        return ",".join(f"{x:g}" for x in self.boundary_lengths)

    def to_json(self) -> dict:
        return {
            "boundary_lengths": list(self.boundary_lengths),
            "gen_a": self.gen_a.to_json(),
            "gen_b": self.gen_b.to_json(),
        }


def make_structure(l1: float, l2: float, l3: float, *, validate: bool = True) -> PantsStructure:
    """Realize boundary lengths ``(l1, l2, l3)`` for the classes a, b, a b^-1.

    ``gen_a`` is diagonal; ``gen_b`` is solved so that
    ``tr(gen_a gen_b^-1) = -2 cosh(l3/2)``.  With ``validate`` the trace
    round trip and the linked-pair counts i(ab) = 1, i(ab^-1) = 0 are
    checked before returning.
    """
    lengths = tuple(float(x) for x in (l1, l2, l3))
    if not all(x > 0 and math.isfinite(x) for x in lengths):
        raise ValueError(f"boundary lengths must be positive and finite, got {lengths}")
    gen_a, gen_b = _generators(lengths, BASE_PREC)
    S = PantsStructure(lengths, gen_a, gen_b)
    if validate:
        validate_structure(S)
    return S


def validate_structure(S: PantsStructure, rtol: float = 1e-9) -> None:
    from .oracle import oracle_count

    ga, gb = S.gen_a, S.gen_b
    measured = (translation_length(ga), translation_length(gb), translation_length(ga @ gb.inverse()))
    for want, got in zip(S.boundary_lengths, measured):
        if abs(got - want) > rtol * want:
            raise ConstructionError(
                "trace round trip failed", expected=list(S.boundary_lengths), measured=list(measured)
            )
    fig8 = oracle_count(CyclicWord((Letter.a, Letter.b)), S)
    simple = oracle_count(CyclicWord((Letter.a, Letter.B)), S)
    if fig8 != 1 or simple != 0:
        raise ConstructionError(
            "orientation check failed", i_ab=fig8, i_aB=simple, lengths=list(S.boundary_lengths)
        )


def parse_structure(text: str) -> PantsStructure:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise ValueError(f"structure needs three comma-separated lengths, got {text!r}")
    return make_structure(*(float(p) for p in parts))


def holonomy(w: CyclicWord, S: PantsStructure, prec: int = BASE_PREC) -> Isometry:
    """Product of generator matrices along ``w``, left to right."""
    mats = S.letter_matrices(prec)
    g = mats[w.letters[0]]
    for x in w.letters[1:]:
        g = g @ mats[x]
    return g


def geodesic_length(w: CyclicWord, S: PantsStructure) -> float:
    return translation_length(holonomy(w, S))


def _circle(ax: Axis) -> tuple[float, float]:
    x1, x2 = ax.attracting_point, ax.repelling_point
    if math.isinf(x1) or math.isinf(x2):
        raise ValueError("axis through infinity has no center")
    return (x1 + x2) / 2, abs(x1 - x2) / 2


def geodesic_meet(p: Axis, q: Axis) -> complex:
    """Crossing point in the upper half-plane of two crossing axes with finite endpoints."""
    if not axes_cross(p, q):
        raise ValueError("axes do not cross")
    (c1, r1), (c2, r2) = _circle(p), _circle(q)
    x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1))
    return complex(x, math.sqrt(max(r1 * r1 - (x - c1) ** 2, 0.0)))


def displacement(g: Isometry, z: complex) -> float:
    """Hyperbolic distance from ``z`` to ``g(z)``."""
    a, b, c, d = (float(t) for t in g.entries)
    w = (a * z + b) / (c * z + d)
    return math.acosh(1 + abs(z - w) ** 2 / (2 * z.imag * w.imag))


def lobe_lengths(S: PantsStructure) -> tuple[float, float]:
    """Lengths of the two based loops of the figure eight ``ab``, in the order (a, b).

    Both loops start at the self-intersection point, so the pair sums to the
    length of the geodesic of ``ab``; unlike the boundary lengths, they give
    a valid length bound for any word read as a concatenation of lobes.
    """
    ga, gb = S.generators()
    x = geodesic_meet(axis_of(ga @ gb), axis_of(gb @ ga))
    return displacement(ga, x), displacement(gb, x)
