"""Executable acceptance checks, shared by ``kgeodesics verify`` and the test suite.

Each ``check_*`` function returns one or more :class:`CriterionResult`; the
tolerances are fixed here and nowhere else.
"""

from __future__ import annotations

import functools
import math
import random
import time
from dataclasses import dataclass

from .bounds import (
    IkBound,
    bound_I_k,
    bound_s_k_coarse,
    bound_s_k_improved,
    geometric_sample,
    improved_vs_ep_crossover,
)
from .constructions import (
    build_w,
    build_w_prime,
    closed_form_h,
    closed_form_intersection,
    params_for_k,
    word_for_k,
)
from .errors import IndeterminateSeparationError
from .geometry import geodesic_length, make_structure, translation_length
from .intersection import self_intersection
from .oracle import oracle_count
from .survey import canonical_classes, figure_eight_length, survey, survey_metadata

STRUCTURES = ((1.0, 1.0, 1.0), (1.0, 2.0, 3.0), (0.5, 3.0, 4.0))
EXHAUSTIVE_MAX_LEN = 10
EXHAUSTIVE_TIME_LIMIT = 300.0
GRID = range(0, 7)
GRID_J = range(1, 7)
K_IDENTITY_MAX = 10**4
K_ORACLE_MAX = 300
K_LENGTH_MAX = 200
LENGTH_SLACK = 1e-6
SURVEY_MAX_LEN = 12
SURVEY_STABLE_LEN = 10
SURVEY_STABLE_K = 8
ALGEBRA_RTOL = 1e-12
RATIO_K = 10**6
RATIO_LIMIT = 128.5
RANDOM_STRUCTURES = 100
RANDOM_WORDS_PER_STRUCTURE = 20
ROUND_TRIP_RTOL = 1e-9
SEED = 20261015


@dataclass(frozen=True)
class CriterionResult:
    ident: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.ident:>3}  {self.name}: {self.detail}"


def _grid():
    for m in GRID:
        for n in GRID:
            if m + n == 0:
                continue
            for j in GRID_J:
                yield m, n, j


@functools.lru_cache(maxsize=None)
def exhaustive_totals(lengths: tuple[float, float, float], max_len: int = EXHAUSTIVE_MAX_LEN):
    """``{word: (engine total, oracle count)}`` over all classes up to ``max_len``, plus seconds."""
    S = make_structure(*lengths)
    start = time.perf_counter()
    totals = {str(w): (self_intersection(w, S).total, oracle_count(w, S)) for w in canonical_classes(max_len)}
    return totals, time.perf_counter() - start


def check_formula_oracle() -> list[CriterionResult]:
    totals, elapsed = exhaustive_totals(STRUCTURES[0])
    bad = [w for w, (e, o) in totals.items() if e != o]
    ok = not bad and elapsed <= EXHAUSTIVE_TIME_LIMIT
    return [
        CriterionResult(
            "1",
            "formula = oracle, exhaustive |w| <= 10 on (1,1,1)",
            ok,
            f"{len(totals)} classes, {len(bad)} mismatches, {elapsed:.1f}s (limit {EXHAUSTIVE_TIME_LIMIT:.0f}s)",
        )
    ]


def check_structure_independence() -> list[CriterionResult]:
    base, _ = exhaustive_totals(STRUCTURES[0])
    bad = 0
    for lengths in STRUCTURES[1:]:
        other, _ = exhaustive_totals(lengths)
        bad += sum(other[w] != base[w] for w in base)
    return [
        CriterionResult(
            "2",
            "structure independence on (1,2,3), (0.5,3,4)",
            bad == 0,
            f"{2 * len(base)} recomputed classes, {bad} mismatches",
        )
    ]


def check_closed_form() -> list[CriterionResult]:
    S = make_structure(*STRUCTURES[0])
    bad, count = [], 0
    for m, n, j in _grid():
        want = closed_form_intersection(m, n, j)
        for build in (build_w, build_w_prime):
            w = build(m, n, j)
            got = (self_intersection(w, S).total, oracle_count(w, S))
            count += 1
            if got != (want, want):
                bad.append((build.__name__, m, n, j, got, want))
    return [
        CriterionResult(
            "3",
            "closed form for w and w' on m,n in [0,6], j in [1,6]",
            not bad,
            f"{count} words, {len(bad)} mismatches" + (f", first {bad[0]}" if bad else ""),
        )
    ]


def check_h_tally() -> list[CriterionResult]:
    S = make_structure(*STRUCTURES[0])
    bad, last_d1 = [], set()
    for m, n, j in _grid():
        br = self_intersection(build_w(m, n, j), S)
        if br.H != closed_form_h(m, n):
            bad.append((m, n, j, br.H))
        last_d1.add(br.d1[-1])
    return [
        CriterionResult(
            "4",
            "H(w(m,n,j)) = (m+n)^2 + m + n - 1",
            not bad and last_d1 == {0},
            f"{len(bad)} mismatches; computed #D^1 at the last block: {sorted(last_d1)}",
        )
    ]


def check_construction() -> list[CriterionResult]:
    ident_bad = []
    for k in range(2, K_IDENTITY_MAX + 1):
        p = params_for_k(k)
        if closed_form_intersection(p.m, p.n, p.j) != k:
            ident_bad.append(k)
    S = make_structure(*STRUCTURES[0])
    oracle_bad = [k for k in range(2, K_ORACLE_MAX + 1) if oracle_count(word_for_k(k), S) != k]
    return [
        CriterionResult(
            "5a",
            f"closed form of params_for_k(k) = k, 2 <= k <= {K_IDENTITY_MAX}",
            not ident_bad,
            f"{len(ident_bad)} failures",
        ),
        CriterionResult(
            "5b",
            f"oracle confirms word_for_k(k), 2 <= k <= {K_ORACLE_MAX}",
            not oracle_bad,
            f"{len(oracle_bad)} failures" + (f", first k={oracle_bad[0]}" if oracle_bad else ""),
        ),
    ]


def check_s_k_bound() -> list[CriterionResult]:
    violations, coarse_violations, worst = 0, 0, math.inf
    for lengths in STRUCTURES:
        S = make_structure(*lengths)
        L8, _ = figure_eight_length(S)
        for k in range(2, K_LENGTH_MAX + 1):
            length = geodesic_length(word_for_k(k), S)
            slack = bound_s_k_improved(k) * L8 + LENGTH_SLACK - length
            worst = min(worst, slack)
            violations += slack < 0
            coarse_violations += not length <= bound_s_k_coarse(k) * L8
    return [
        CriterionResult(
            "6",
            f"length(word_for_k) <= s_k bound * L8, 2 <= k <= {K_LENGTH_MAX}, three structures",
            violations == 0 and coarse_violations == 0,
            f"{violations} violations, {coarse_violations} against the coarse bound, min slack {worst:.4f}",
        )
    ]


@functools.lru_cache(maxsize=None)
def _survey(lengths, max_len):
    S = make_structure(*lengths)
    L8, witness = figure_eight_length(S)
    return survey(S, max_len=max_len, k_max=10**6, L8=L8), L8, witness


def check_survey() -> list[CriterionResult]:
    records, L8, _ = _survey(STRUCTURES[0], SURVEY_MAX_LEN)
    violations = [r.k for r in records if r.min_length > r.bound_value + LENGTH_SLACK * L8]
    k1 = next(r for r in records if r.k == 1)
    small, _, _ = _survey(STRUCTURES[0], SURVEY_STABLE_LEN)
    big_rows = {r.k: (round(r.min_length, 12), str(r.witness)) for r in records if r.k <= SURVEY_STABLE_K}
    small_rows = {r.k: (round(r.min_length, 12), str(r.witness)) for r in small if r.k <= SURVEY_STABLE_K}
    stable = big_rows == small_rows and sorted(big_rows) == list(range(1, SURVEY_STABLE_K + 1))
    return [
        CriterionResult(
            "7a",
            f"empirical s_k <= bound * L8 at max_len {SURVEY_MAX_LEN} on (1,1,1)",
            not violations,
            f"{len(records)} realized k (max {records[-1].k}), {len(violations)} violations",
        ),
        CriterionResult(
            "7b",
            "k = 1 row equals figure_eight_length",
            abs(k1.min_length - L8) <= 1e-12 * L8,
            f"row {k1.min_length:.12f} vs L8 {L8:.12f}",
        ),
        CriterionResult(
            "7c",
            f"table stable between max_len {SURVEY_STABLE_LEN} and {SURVEY_MAX_LEN} for k <= {SURVEY_STABLE_K}",
            stable,
            "identical minima and witnesses" if stable else f"{small_rows} vs {big_rows}",
        ),
    ]


def check_i_k_algebra() -> list[CriterionResult]:
    ks = geometric_sample(1, 10**6)
    worst = 0.0
    not_below_simplified = []
    for k in ks:
        g = 8 * bound_s_k_improved(k) + 1
        value = bound_I_k(k, IkBound.IMPROVED)
        worst = max(worst, abs(value - g * (2 * g - 1)) / value)
        if not value < bound_I_k(k, IkBound.IMPROVED_SIMPLIFIED):
            not_below_simplified.append(k)
    ratio = bound_I_k(RATIO_K, IkBound.IMPROVED) / RATIO_K
    crossover = improved_vs_ep_crossover()
    tail_ok = crossover is not None and all(
        bound_I_k(k, IkBound.IMPROVED) < bound_I_k(k, IkBound.EP) for k in ks if k >= crossover
    )
    return [
        CriterionResult(
            "8a",
            "I_k bound = g(2g-1), g = 8 s_k bound + 1",
            worst <= ALGEBRA_RTOL,
            f"{len(ks)} sampled k, max relative deviation {worst:.2e}",
        ),
        CriterionResult(
            "8b",
            "improved I_k bound < simplified form",
            not not_below_simplified,
            f"{len(not_below_simplified)} violations",
        ),
        CriterionResult(
            "8c",
            f"improved I_k bound / k < {RATIO_LIMIT} at k = {RATIO_K}",
            ratio < RATIO_LIMIT,
            f"ratio = {ratio:.4f}",
        ),
        CriterionResult(
            "8d",
            "improved I_k bound < EP bound beyond the crossover",
            tail_ok,
            f"crossover k = {crossover}",
        ),
    ]


def check_geometry_gates() -> list[CriterionResult]:
    rng = random.Random(SEED)
    pool = list(canonical_classes(SURVEY_MAX_LEN))
    gate_failures, indeterminate, disagreements = [], 0, 0
    for _ in range(RANDOM_STRUCTURES):
        lengths = tuple(rng.uniform(0.3, 5.0) for _ in range(3))
        try:
            S = make_structure(*lengths)
        except Exception as exc:  # reported, not raised
            gate_failures.append((lengths, repr(exc)))
            continue
        ga, gb = S.gen_a, S.gen_b
        measured = (translation_length(ga), translation_length(gb), translation_length(ga @ gb.inverse()))
        if any(abs(m - l) > ROUND_TRIP_RTOL * l for m, l in zip(measured, lengths)):
            gate_failures.append((lengths, measured))
        for w in rng.sample(pool, RANDOM_WORDS_PER_STRUCTURE):
            try:
                disagreements += self_intersection(w, S).total != oracle_count(w, S)
            except IndeterminateSeparationError:
                indeterminate += 1
    return [
        CriterionResult(
            "9",
            f"geometry gates on {RANDOM_STRUCTURES} random structures in [0.3, 5]^3",
            not gate_failures and indeterminate == 0 and disagreements == 0,
            f"{len(gate_failures)} gate failures, {indeterminate} indeterminate, "
            f"{disagreements} engine/oracle disagreements on "
            f"{RANDOM_STRUCTURES * RANDOM_WORDS_PER_STRUCTURE} random words of length <= {SURVEY_MAX_LEN}",
        )
    ]


def check_cutoff_labelled() -> list[CriterionResult]:
    records, L8, witness = _survey(STRUCTURES[0], SURVEY_MAX_LEN)
    meta = survey_metadata(make_structure(*STRUCTURES[0]), SURVEY_MAX_LEN, 10**6, L8, witness)
    ok = meta["max_len"] == SURVEY_MAX_LEN and f"<= {SURVEY_MAX_LEN}" in meta["caveat"]
    return [
        CriterionResult(
            "10",
            "survey output labels its word-length cutoff (asymptotics not claimed)",
            ok,
            meta["caveat"],
        )
    ]


CHECKS = (
    check_formula_oracle,
    check_structure_independence,
    check_closed_form,
    check_h_tally,
    check_construction,
    check_s_k_bound,
    check_survey,
    check_i_k_algebra,
    check_geometry_gates,
    check_cutoff_labelled,
)


def run_all(echo=None) -> list[CriterionResult]:
    results = []
    for check in CHECKS:
        for res in check():
            results.append(res)
            if echo is not None:
                echo(res.line())
    return results
