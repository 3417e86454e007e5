"""Diop-Paris self-intersection formula for closed geodesics on the pants.

For ``w = s_1^{i_1} r_1^{j_1} ... s_n^{i_n} r_n^{j_n}`` let ``x_k`` be the
rotation starting at the k-th a-syllable and ``y_k`` the one starting at the
k-th b-syllable, with axes ``alpha_k`` and ``beta_k``.  Then

    i(w) = H(w) + n|w| - 2n^2 - sum_{k<l} (|i_k - i_l| + |j_k - j_l|)

where ``H`` counts crossing pairs in the sets C_k^1, C_k^2, D_k^1, D_k^2.
Crossings are decided geometrically on a concrete structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonPrimitiveError
from .geometry import Axis, PantsStructure, axes_cross, axis_of, certified, holonomy
from .words import CyclicWord, Letter, SyllableForm, is_primitive, syllables

Syllable = tuple[Letter, int]


def _inverse_syllable(s: Syllable) -> Syllable:
    return (s[0].inverse, s[1])


@dataclass(frozen=True)
class RotationSystem:
    form: SyllableForm
    x: tuple[CyclicWord, ...]
    y: tuple[CyclicWord, ...]


def rotations(form: SyllableForm) -> RotationSystem:
    w = form.word()
    starts = form.starts
    x = tuple(w.rotate(starts[2 * k]) for k in range(form.n))
    y = tuple(w.rotate(starts[2 * k + 1]) for k in range(form.n))
    return RotationSystem(form, x, y)


@dataclass(frozen=True)
class IntersectionBreakdown:
    """Auditable output of the engine.

    The per-k tuples are indexed from 0, so ``c1[0]`` is ``#C_1^1``.
    """

    word: str
    n: int = 0
    word_length: int = 0
    c1: tuple[int, ...] = ()
    c2: tuple[int, ...] = ()
    d1: tuple[int, ...] = ()
    d2: tuple[int, ...] = ()
    H: int = 0
    exponent_term: int = 0
    total: int = 0
    boundary: bool = False
    syllable_form: str = field(default="", compare=False)

    @property
    def family_sums(self) -> tuple[int, int]:
        """``sum_k (#C_k^i + #D_k^i)`` for i = 1 and i = 2."""
        return sum(self.c1) + sum(self.d1), sum(self.c2) + sum(self.d2)

    def to_json(self) -> dict:
        out = {
            "word": self.word,
            "total": self.total,
            "boundary": self.boundary,
        }
        if not self.boundary:
            out.update(
                syllable_form=self.syllable_form,
                n=self.n,
                word_length=self.word_length,
                C1=list(self.c1),
                C2=list(self.c2),
                D1=list(self.d1),
                D2=list(self.d2),
                H=self.H,
                n_times_length=self.n * self.word_length,
                two_n_squared=2 * self.n * self.n,
                exponent_term=self.exponent_term,
            )
        return out


def exponent_term(form: SyllableForm) -> int:
    i, j = form.i_exponents, form.j_exponents
    n = form.n
    return sum(abs(i[k] - i[l]) + abs(j[k] - j[l]) for k in range(n) for l in range(k + 1, n))


def _axes(system: RotationSystem, S: PantsStructure, prec: int) -> tuple[list[Axis], list[Axis]]:
    alpha = [axis_of(holonomy(x, S, prec)) for x in system.x]
    beta = [axis_of(holonomy(y, S, prec)) for y in system.y]
    return alpha, beta


def _tally(form: SyllableForm, alpha: list[Axis], beta: list[Axis]):
    n = form.n
    s, r = form.s, form.r
    c1, c2, d1, d2 = [0] * n, [0] * n, [0] * n, [0] * n
    for k in range(n):
        for l in range(k + 1, n):
            if s[k] != s[l] and axes_cross(alpha[k], alpha[l]):
                c1[k] += 1
            if s[k] != _inverse_syllable(s[l]) and axes_cross(beta[k], alpha[l]):
                c2[k] += 1
            if r[k] != r[l] and axes_cross(beta[k], beta[l]):
                d1[k] += 1
        if k == 0:
            d2[0] = sum(axes_cross(alpha[0], beta[l]) for l in range(n))
        else:
            d2[k] = sum(
                axes_cross(alpha[k], beta[l])
                for l in range(k, n)
                if r[k - 1] != _inverse_syllable(r[l])
            )
    return tuple(c1), tuple(c2), tuple(d1), tuple(d2)


def crossing_sets(form: SyllableForm, S: PantsStructure) -> IntersectionBreakdown:
    """Counts of C_k^1, C_k^2, D_k^1, D_k^2 and the resulting formula value."""
    system = rotations(form)

    def attempt(prec: int):
        alpha, beta = _axes(system, S, prec)
        return _tally(form, alpha, beta)

    c1, c2, d1, d2 = certified(attempt)
    H = sum(c1) + sum(c2) + sum(d1) + sum(d2)
    n = form.n
    length = len(form)
    ex = exponent_term(form)
    return IntersectionBreakdown(
        word=str(form.word()),
        n=n,
        word_length=length,
        c1=c1,
        c2=c2,
        d1=d1,
        d2=d2,
        H=H,
        exponent_term=ex,
        total=H + n * length - 2 * n * n - ex,
        syllable_form=str(form),
    )


def self_intersection(w: CyclicWord, S: PantsStructure) -> IntersectionBreakdown:
    """Self-intersection number of the geodesic of ``w`` with its breakdown.

    Powers of a single generator are multiples of a boundary curve and come
    back with ``total = 0`` and ``boundary = True``.
    """
    if w.is_single_family:
        return IntersectionBreakdown(word=str(w), word_length=len(w), boundary=True)
    if not is_primitive(w):
        raise NonPrimitiveError(f"{w} is a proper power", word=str(w))
    result = crossing_sets(syllables(w), S)
    if result.total < 0:
        raise AssertionError(f"negative intersection count for {w}: {result}")
    return result


def h_value(w: CyclicWord, S: PantsStructure) -> int:
    return self_intersection(w, S).H
