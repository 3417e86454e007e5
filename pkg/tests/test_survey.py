import itertools

import pytest

from kgeodesics.bounds import bound_s_k_improved
from kgeodesics.geometry import geodesic_length, make_structure
from kgeodesics.oracle import oracle_count
from kgeodesics.survey import (
    canonical_classes,
    figure_eight_length,
    survey,
    survey_metadata,
    survey_minima,
)
from kgeodesics.words import CyclicWord, Letter, canonical_form, is_primitive, parse_word

S111 = make_structure(1, 1, 1)


def brute_classes(length, two_family=True):
    out = set()
    for t in itertools.product(list(Letter), repeat=length):
        try:
            w = CyclicWord(t)
        except ValueError:
            continue
        if not is_primitive(w):
            continue
        if two_family and w.is_single_family:
            continue
        out.add(canonical_form(w))
    return out


@pytest.mark.parametrize("length", range(1, 8))
def test_enumeration_matches_brute_force(length):
    got = list(canonical_classes(length, min_len=length))
    assert len(got) == len(set(got))
    assert set(got) == brute_classes(length)
    got_all = set(canonical_classes(length, min_len=length, two_family=False))
    assert got_all == brute_classes(length, two_family=False)


def test_enumeration_order_and_count():
    words = list(canonical_classes(6))
    assert [len(w) for w in words] == sorted(len(w) for w in words)
    assert sum(1 for _ in canonical_classes(12)) == 34852


def test_figure_eight_symmetric_structure():
    L8, witness = figure_eight_length(S111)
    assert oracle_count(witness, S111) == 1
    assert L8 == pytest.approx(geodesic_length(parse_word("ab"), S111), rel=1e-12)


def test_figure_eight_short_boundaries():
    S = make_structure(1, 2, 5)
    L8, witness = figure_eight_length(S)
    assert canonical_form(witness) == canonical_form(parse_word("ab"))
    assert L8 <= geodesic_length(parse_word("ab"), S)


def test_figure_eight_never_longer_than_ab():
    for lengths in [(5, 1, 1), (0.5, 3, 4), (2, 2, 0.4)]:
        S = make_structure(*lengths)
        L8, witness = figure_eight_length(S)
        assert oracle_count(witness, S) == 1
        assert L8 <= geodesic_length(parse_word("ab"), S) * (1 + 1e-12)


def test_survey_rows():
    L8, _ = figure_eight_length(S111)
    records = survey(S111, max_len=8, k_max=10, L8=L8)
    assert records[0].k == 1
    assert records[0].min_length == pytest.approx(L8, rel=1e-12)
    for r in records:
        assert oracle_count(r.witness, S111) == r.k
        assert r.min_length <= r.construction_length * (1 + 1e-12)
        assert r.construction_length <= r.bound_value
        assert r.bound_value == pytest.approx(bound_s_k_improved(r.k) * L8)
        assert r.as_row()["slack"] == pytest.approx(r.bound_value - r.min_length)


def test_survey_deterministic_and_worker_independent():
    one = survey_minima(S111, 8, workers=1)
    assert survey_minima(S111, 8, workers=1) == one
    assert survey_minima(S111, 8, workers=3) == one


def test_survey_cap():
    with pytest.raises(ValueError):
        survey_minima(S111, 17)


def test_metadata_caveat():
    meta = survey_metadata(S111, 9, 20, 3.9, parse_word("ab"))
    assert "word length <= 9" in meta["caveat"]
    assert meta["max_len"] == 9
