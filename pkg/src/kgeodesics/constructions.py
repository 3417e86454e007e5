"""Model words ``w(m,n,j)`` and ``w'(m,n,j)`` realizing a prescribed count.

A target ``k >= 2`` is written as ``k = M(M+1) + rem`` with
``0 <= rem <= 2M+1``; then ``n = isqrt(rem)``, ``m = M - n`` and
``j = rem - n^2 + 1`` give ``(m+n)^2 + n^2 + m + n + j - 1 = k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .errors import SingleFamilyError
from .words import CyclicWord, Letter, cyclic_reduce


class Variant(str, enum.Enum):
    W = "W"
    W_PRIME = "W_PRIME"


@dataclass(frozen=True)
class ConstructionParams:
    k: int
    M: int
    rem: int
    n: int
    m: int
    j: int
    variant: Variant

    def word(self) -> CyclicWord:
        build = build_w if self.variant is Variant.W else build_w_prime
        return build(self.m, self.n, self.j)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "M": self.M,
            "rem": self.rem,
            "n": self.n,
            "m": self.m,
            "j": self.j,
            "variant": self.variant.value,
        }


def _build(x: Letter, y: Letter, m: int, n: int, j: int) -> CyclicWord:
    if m < 0 or n < 0 or j < 1:
        raise ValueError(f"need m, n >= 0 and j >= 1, got ({m}, {n}, {j})")
    if m + n == 0:
        raise SingleFamilyError("m = n = 0 gives a power of a single generator", m=m, n=n, j=j)
    letters = [x, y] * m + [x, x, y] * n + [y] * j
    return cyclic_reduce(letters)


def build_w(m: int, n: int, j: int) -> CyclicWord:
    """``(ab)^m (a^2 b)^n b^j``, of length ``2m + 3n + j``."""
    return _build(Letter.a, Letter.b, m, n, j)


def build_w_prime(m: int, n: int, j: int) -> CyclicWord:
    """``(ba)^m (b^2 a)^n a^j``: :func:`build_w` with a and b exchanged."""
    return _build(Letter.b, Letter.a, m, n, j)


def closed_form_intersection(m: int, n: int, j: int) -> int:
    return (m + n) ** 2 + n * n + m + n + j - 1


def closed_form_h(m: int, n: int) -> int:
    """Value of the crossing tally ``H`` for ``w(m,n,j)``; independent of ``j``."""
    return (m + n) ** 2 + m + n - 1


def interval_index(k: int) -> int:
    """The unique ``M >= 0`` with ``M(M+1) <= k < (M+1)(M+2)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    M = (isqrt(4 * k + 1) - 1) // 2
    while M * (M + 1) > k:
        M -= 1
    while (M + 1) * (M + 2) <= k:
        M += 1
    return M


def params_for_k(k: int) -> ConstructionParams:
    if k < 2:
        raise ValueError(f"params_for_k needs k >= 2, got {k}")
    M = interval_index(k)
    rem = k - M * (M + 1)
    n = isqrt(rem)
    m = M - n
    j = rem - n * n + 1
    variant = Variant.W if n >= j else Variant.W_PRIME
    return ConstructionParams(k=k, M=M, rem=rem, n=n, m=m, j=j, variant=variant)


def word_for_k(k: int) -> CyclicWord:
    """A word whose closed geodesic has exactly ``k`` self-intersections."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k == 1:
        return CyclicWord((Letter.a, Letter.b))
    return params_for_k(k).word()
