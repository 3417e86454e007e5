"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are also collected into a section of the pytest terminal summary.
"""

import functools

import pytest

from kgeodesics import acceptance

from conftest import ACCEPTANCE_LINES

CRITERIA = [
    (acceptance.check_formula_oracle, "1"),
    (acceptance.check_structure_independence, "2"),
    (acceptance.check_closed_form, "3"),
    (acceptance.check_h_tally, "4"),
    (acceptance.check_construction, "5a"),
    (acceptance.check_construction, "5b"),
    (acceptance.check_s_k_bound, "6"),
    (acceptance.check_survey, "7a"),
    (acceptance.check_survey, "7b"),
    (acceptance.check_survey, "7c"),
    (acceptance.check_i_k_algebra, "8a"),
    (acceptance.check_i_k_algebra, "8b"),
    (acceptance.check_i_k_algebra, "8c"),
    (acceptance.check_i_k_algebra, "8d"),
    (acceptance.check_geometry_gates, "9"),
    (acceptance.check_cutoff_labelled, "10"),
]


@functools.lru_cache(maxsize=None)
def results_of(check):
    return {r.ident: r for r in check()}


def test_every_criterion_is_listed():
    produced = {(check, ident) for check in acceptance.CHECKS for ident in results_of(check)}
    assert produced == set(CRITERIA)


@pytest.mark.parametrize("check, ident", CRITERIA, ids=[f"criterion_{i}" for _, i in CRITERIA])
def test_criterion(check, ident):
    result = results_of(check)[ident]
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, line
