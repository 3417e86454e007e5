"""Upper bounds on s_k / L_8 and on I_k, plus crossover scans between them.

All ``s_k`` bounds are multipliers of the figure-eight length ``L_8``.
"""

from __future__ import annotations

import enum
import math
from typing import Callable, Iterable

from .constructions import ConstructionParams, Variant
from .geometry import PantsStructure, lobe_lengths

SQRT2 = math.sqrt(2.0)


class PriorBound(str, enum.Enum):
    BASMAJIAN13 = "BASMAJIAN13"
    BASMAJIAN21 = "BASMAJIAN21"


class IkBound(str, enum.Enum):
    EP = "EP"
    IMPROVED = "IMPROVED"
    IMPROVED_SIMPLIFIED = "IMPROVED_SIMPLIFIED"


def _check_k(k: float) -> None:
    if k < 1:
        raise ValueError(f"bounds are defined for k >= 1, got {k}")


def bound_s_k_improved(k: float) -> float:
    """``(k+1/4)^(1/2) + (3/sqrt 2)(k+1/4)^(1/4) - 1/2``."""
    _check_k(k)
    x = k + 0.25
    return math.sqrt(x) + 3 / SQRT2 * x**0.25 - 0.5


def bound_s_k_coarse(k: float) -> float:
    """The cruder ``sqrt(k) + (3/sqrt 2) k^(1/4)``, strictly above :func:`bound_s_k_improved`."""
    _check_k(k)
    return math.sqrt(k) + 3 / SQRT2 * k**0.25


def bound_s_k_prior(k: float, which: PriorBound | str) -> float:
    _check_k(k)
    which = PriorBound(which)
    if which is PriorBound.BASMAJIAN13:
        return 3 * (math.sqrt(k) + 1)
    return 2 * math.sqrt(k + 0.25)


def bound_I_k(k: float, which: IkBound | str) -> float:
    _check_k(k)
    which = IkBound(which)
    s = math.sqrt(k + 0.25)
    if which is IkBound.EP:
        return (32 * s + 1) * (16 * s + 1)
    if which is IkBound.IMPROVED:
        q = (k + 0.25) ** 0.25
        return (8 * s + 12 * SQRT2 * q - 3) * (16 * s + 24 * SQRT2 * q - 7)
    r = 4 * k + 1
    return 32 * (math.sqrt(r) + 3 * r**0.25) ** 2


def segment_count_bound(k: float) -> float:
    """``8 s_k / L_8 + 1`` with the improved s_k bound substituted."""
    return 8 * bound_s_k_improved(k) + 1


def construction_length_bound(params: ConstructionParams, S: PantsStructure) -> float:
    """Length of the piecewise loop of ``m+2n`` a-lobes and ``m+n+j`` b-lobes (roles swapped for ``w'``).

    The lobes are the based loops of the figure eight ``ab``; the geodesic of
    the construction word is never longer than this concatenation.
    """
    la, lb = lobe_lengths(S)
    if params.variant is Variant.W_PRIME:
        la, lb = lb, la
    m, n, j = params.m, params.n, params.j
    return (m + 2 * n) * la + (m + n + j) * lb


def geometric_sample(lo: int, hi: int, per_decade: int = 40) -> list[int]:
    """Sorted distinct integers in ``[lo, hi]``, roughly log-spaced, endpoints included."""
    out = {lo, hi}
    steps = max(1, int(per_decade * math.log10(hi / lo)))
    for t in range(steps + 1):
        out.add(int(round(lo * (hi / lo) ** (t / steps))))
    out.update(range(lo, min(hi, lo + 100) + 1))
    return sorted(x for x in out if lo <= x <= hi)


def first_persistent_k(pred: Callable[[int], bool], ks: Iterable[int]) -> int | None:
    """Smallest ``k`` in ``ks`` such that ``pred`` holds for it and every later sample."""
    first = None
    for k in ks:
        if pred(k):
            if first is None:
                first = k
        else:
            first = None
    return first


def improved_vs_basmajian21_crossover(k_max: int = 10**6) -> int | None:
    ks = list(range(1, min(k_max, 10**4) + 1)) + [k for k in geometric_sample(10**4, k_max) if k > 10**4]
    return first_persistent_k(
        lambda k: bound_s_k_improved(k) < bound_s_k_prior(k, PriorBound.BASMAJIAN21), ks
    )


def improved_vs_ep_crossover(k_max: int = 10**6) -> int | None:
    ks = list(range(1, min(k_max, 10**4) + 1)) + [k for k in geometric_sample(10**4, k_max) if k > 10**4]
    return first_persistent_k(lambda k: bound_I_k(k, IkBound.IMPROVED) < bound_I_k(k, IkBound.EP), ks)


def bound_table(k_values: Iterable[int], which: Iterable[str]) -> list[dict]:
    """Rows ``{k, <name>: value, ...}``; names are s_k or I_k bound kinds."""
    evaluators: dict[str, Callable[[int], float]] = {
        "S_K_IMPROVED": bound_s_k_improved,
        "S_K_COARSE": bound_s_k_coarse,
        "BASMAJIAN13": lambda k: bound_s_k_prior(k, PriorBound.BASMAJIAN13),
        "BASMAJIAN21": lambda k: bound_s_k_prior(k, PriorBound.BASMAJIAN21),
        "EP": lambda k: bound_I_k(k, IkBound.EP),
        "IMPROVED": lambda k: bound_I_k(k, IkBound.IMPROVED),
        "IMPROVED_SIMPLIFIED": lambda k: bound_I_k(k, IkBound.IMPROVED_SIMPLIFIED),
    }
    names = list(which)
    unknown = [n for n in names if n not in evaluators]
    if unknown:
        raise ValueError(f"unknown bound(s) {unknown}; choose from {sorted(evaluators)}")
    return [{"k": k, **{n: evaluators[n](k) for n in names}} for k in k_values]


BOUND_NAMES = (
    "S_K_IMPROVED",
    "S_K_COARSE",
    "BASMAJIAN13",
    "BASMAJIAN21",
    "EP",
    "IMPROVED",
    "IMPROVED_SIMPLIFIED",
)
