"""Exhaustive enumeration of short classes and the empirical s_k table.

The empirical ``s_k`` is a minimum over classes of word length at most
``max_len`` only; it bounds the true ``s_k`` of the pants from above.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .bounds import bound_s_k_improved
from .constructions import word_for_k
from .geometry import PantsStructure, geodesic_length, make_structure
from .oracle import oracle_count
from .words import CyclicWord, Letter

DEFAULT_MAX_LEN = 12
MAX_LEN_CAP = 16
FIGURE_EIGHT_MAX_LEN = 6


def _inverse_key(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = tuple((x + 2) % 4 for x in reversed(w))
    return min(inv[t:] + inv[:t] for t in range(len(inv)))


def _extend(w: list[int], p: int, length: int) -> Iterator[tuple[int, ...]]:
    # depth-first over prenecklaces; p is the period of the longest Lyndon prefix
    t = len(w)
    if t == length:
        if p == length and w[-1] != (w[0] + 2) % 4:
            key = tuple(w)
            if key <= _inverse_key(key):
                yield key
        return
    for c in range(w[t - p], 4):
        if c == (w[t - 1] + 2) % 4:
            continue
        w.append(c)
        yield from _extend(w, p if c == w[t - p] else t + 1, length)
        w.pop()


def _prefixes(length: int) -> list[tuple[list[int], int]]:
    if length == 1:
        return [([c], 1) for c in range(4)]
    out = []
    for c0 in range(4):
        for c1 in range(c0, 4):
            if c1 == (c0 + 2) % 4:
                continue
            out.append(([c0, c1], 2 if c1 != c0 else 1))
    return out


def _classes_from(prefix: list[int], p: int, length: int) -> Iterator[tuple[int, ...]]:
    if len(prefix) > length:
        return
    yield from _extend(list(prefix), p, length)


def canonical_classes(max_len: int, min_len: int = 1, two_family: bool = True) -> Iterator[CyclicWord]:
    """Canonical forms of all primitive classes with ``min_len <= |w| <= max_len``.

    Words come out grouped by length, lexicographically within a length.
    """
    for length in range(max(1, min_len), max_len + 1):
        for prefix, p in _prefixes(length):
            for key in _classes_from(prefix, p, length):
                if two_family and len({x % 2 for x in key}) < 2:
                    continue
                yield CyclicWord(tuple(Letter(x) for x in key))


def figure_eight_length(S: PantsStructure, max_len: int = FIGURE_EIGHT_MAX_LEN) -> tuple[float, CyclicWord]:
    """Shortest geodesic with exactly one self-intersection among short classes."""
    best: tuple[float, str, CyclicWord] | None = None
    for w in canonical_classes(max_len):
        if oracle_count(w, S) != 1:
            continue
        cand = (geodesic_length(w, S), str(w), w)
        if best is None or cand[:2] < best[:2]:
            best = cand
    assert best is not None, "ab always has one self-intersection"
    return best[0], best[2]


@dataclass(frozen=True)
class SurveyRecord:
    k: int
    min_length: float
    witness: CyclicWord
    construction_word: CyclicWord | None
    construction_length: float | None
    bound_value: float

    @property
    def slack(self) -> float:
        return self.bound_value - self.min_length

    @property
    def construction_optimal(self) -> bool | None:
        if self.construction_length is None:
            return None
        return self.construction_length <= self.min_length * (1 + 1e-12)

    def as_row(self) -> dict:
        return {
            "k": self.k,
            "min_length": self.min_length,
            "witness": str(self.witness),
            "construction_word": "" if self.construction_word is None else str(self.construction_word),
            "construction_length": self.construction_length,
            "bound_value": self.bound_value,
            "slack": self.slack,
        }


CSV_COLUMNS = ("k", "min_length", "witness", "construction_word", "construction_length", "bound_value", "slack")


def _scan(task: tuple[tuple[float, float, float], list[int], int, int]) -> dict[int, tuple[float, str]]:
    lengths, prefix, p, length = task
    S = make_structure(*lengths, validate=False)
    best: dict[int, tuple[float, str]] = {}
    for key in _classes_from(prefix, p, length):
        if len({x % 2 for x in key}) < 2:
            continue
        w = CyclicWord(tuple(Letter(x) for x in key))
        k = oracle_count(w, S)
        cand = (geodesic_length(w, S), str(w))
        if k not in best or cand < best[k]:
            best[k] = cand
    return best


def survey_minima(S: PantsStructure, max_len: int, workers: int = 1) -> dict[int, tuple[float, str]]:
    """Per-k minimum ``(length, witness)`` over all classes of length ``<= max_len``.

    Work is split by two-letter prefix; partial minima are merged with ties
    broken on the witness string, so the result does not depend on ``workers``.
    """
    if max_len > MAX_LEN_CAP:
        raise ValueError(f"max_len {max_len} exceeds the cap {MAX_LEN_CAP}")
    tasks = [
        (S.boundary_lengths, prefix, p, length)
        for length in range(2, max_len + 1)
        for prefix, p in _prefixes(length)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, tasks, chunksize=1))
    else:
        parts = [_scan(t) for t in tasks]
    merged: dict[int, tuple[float, str]] = {}
    for part in parts:
        for k, cand in part.items():
            if k not in merged or cand < merged[k]:
                merged[k] = cand
    return dict(sorted(merged.items()))


def survey(
    S: PantsStructure,
    max_len: int = DEFAULT_MAX_LEN,
    k_max: int = 50,
    workers: int = 1,
    L8: float | None = None,
) -> list[SurveyRecord]:
    """Empirical shortest k-geodesics for ``1 <= k <= k_max``, one record per realized k."""
    if L8 is None:
        L8, _ = figure_eight_length(S)
    records = []
    for k, (length, witness) in survey_minima(S, max_len, workers).items():
        if k < 1 or k > k_max:
            continue
        cw = word_for_k(k)
        records.append(
            SurveyRecord(
                k=k,
                min_length=length,
                witness=CyclicWord.from_string(witness),
                construction_word=cw,
                construction_length=geodesic_length(cw, S),
                bound_value=bound_s_k_improved(k) * L8,
            )
        )
    return records


def survey_metadata(S: PantsStructure, max_len: int, k_max: int, L8: float, witness: CyclicWord) -> dict:
    return {
        "structure": list(S.boundary_lengths),
        "max_len": max_len,
        "k_max": k_max,
        "L8": L8,
        "figure_eight": str(witness),
        "caveat": (
            f"min_length is the minimum over classes of word length <= {max_len} only; "
            "it is an upper bound for the true shortest k-geodesic length"
        ),
    }
