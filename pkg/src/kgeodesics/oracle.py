"""Brute-force self-intersection count from linked pairs of strand axes.

The rotations ``w_p`` of a primitive word ``w`` give exactly the lifts of its
closed geodesic passing through the base vertex of the Cayley tree.  Each
self-intersection is one orbit of crossing lifts.  An ordered pair of crossing
lifts through the base vertex represents its orbit once the base vertex is
required to be the first shared vertex along the first lift, i.e. the
backward edge of ``w_p`` is not an edge of ``w_q``.  Ordered pairs counted this
way are exactly twice the self-intersection number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonPrimitiveError
from .geometry import (
    BASE_PREC,
    Axis,
    Isometry,
    PantsStructure,
    axes_cross,
    axis_of,
    certified,
    check_separated,
)
from .words import CyclicWord, is_primitive

__all__ = ["StrandFamily", "strand_family", "oracle_count", "is_primitive"]


@dataclass(frozen=True)
class StrandFamily:
    word: CyclicWord
    holonomies: tuple[Isometry, ...]
    axes: tuple[Axis, ...]


def strand_family(w: CyclicWord, S: PantsStructure, prec: int = BASE_PREC) -> StrandFamily:
    """Holonomies and axes of every rotation of ``w``.

    The holonomy of ``w_p`` is the suffix product from ``p`` times the
    prefix product up to ``p``, so each rotation costs one multiplication
    and no rounding error is compounded through repeated conjugation.
    Raises ``IndeterminateSeparationError`` when two of the ``2|w|`` endpoints
    are not certifiably distinct.
    """
    mats = S.letter_matrices(prec)
    letters = w.letters
    L = len(letters)
    prefix = [Isometry.identity(prec)]
    for x in letters[:-1]:
        prefix.append(prefix[-1] @ mats[x])
    suffix = [mats[letters[-1]]]
    for x in reversed(letters[:-1]):
        suffix.append(mats[x] @ suffix[-1])
    suffix.reverse()
    hols = [suffix[p] @ prefix[p] if p else suffix[0] for p in range(L)]
    axes = tuple(axis_of(h) for h in hols)
    if len(w) > 1:
        guard = max(ax.guard for ax in axes)
        check_separated([t for ax in axes for t in (ax.attracting, ax.repelling)], guard)
    return StrandFamily(w, tuple(hols), axes)


def _count(family: StrandFamily) -> int:
    w = family.word.letters
    L = len(w)
    axes = family.axes
    # edges of the axis of w_p at the base vertex: first letter out, inverse of last letter back
    out_edge = [w[p] for p in range(L)]
    back_edge = [w[p - 1].inverse for p in range(L)]
    ordered = 0
    for p in range(L):
        for q in range(p + 1, L):
            if not axes_cross(axes[p], axes[q]):
                continue
            q_edges = (out_edge[q], back_edge[q])
            p_edges = (out_edge[p], back_edge[p])
            ordered += back_edge[p] not in q_edges
            ordered += back_edge[q] not in p_edges
    assert ordered % 2 == 0, "ordered linked pairs must pair up"
    return ordered // 2


def oracle_count(w: CyclicWord, S: PantsStructure) -> int:
    """Self-intersection number of the closed geodesic of ``w`` on ``S``."""
    if w.is_single_family:
        return 0
    if not is_primitive(w):
        raise NonPrimitiveError(f"{w} is a proper power", word=str(w))
    return certified(lambda prec: _count(strand_family(w, S, prec)))
