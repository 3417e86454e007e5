import random

import pytest

from kgeodesics.constructions import build_w, build_w_prime, closed_form_intersection
from kgeodesics.errors import NonPrimitiveError
from kgeodesics.geometry import make_structure
from kgeodesics.intersection import crossing_sets, exponent_term, h_value, rotations, self_intersection
from kgeodesics.oracle import oracle_count
from kgeodesics.survey import canonical_classes
from kgeodesics.words import is_primitive, parse_word, syllables

S111 = make_structure(1, 1, 1)
S123 = make_structure(1, 2, 3)


def test_rotations_start_at_syllables():
    form = syllables(parse_word("abaabb"))
    system = rotations(form)
    assert [str(x) for x in system.x] == ["abaabb", "aabbab"]
    assert [str(y) for y in system.y] == ["baabba", "bbabaa"]


@pytest.mark.parametrize(
    "text, total",
    [("(ab)^3(aab)^3b^3", 53), ("aB", 0), ("aabb", 3), ("ab", 1)],
)
def test_self_intersection_examples(text, total):
    assert self_intersection(parse_word(text), S111).total == total


@pytest.mark.parametrize("S", [S111, S123], ids=str)
def test_commutator_matches_oracle(S):
    w = parse_word("abAB")
    assert self_intersection(w, S).total == oracle_count(w, S)


def test_boundary_words():
    br = self_intersection(parse_word("a^5"), S111)
    assert br.boundary and br.total == 0
    assert br.to_json() == {"word": "aaaaa", "total": 0, "boundary": True}


def test_proper_power_rejected():
    with pytest.raises(NonPrimitiveError):
        self_intersection(parse_word("(aab)^2"), S111)


@pytest.mark.parametrize("m, n, j", [(m, n, j) for m in range(4) for n in range(4) for j in (1, 2, 3) if m + n])
def test_construction_per_set_counts(m, n, j):
    br = crossing_sets(syllables(build_w(m, n, j)), S123)
    N = m + n
    assert br.n == N
    assert br.c1 == (0,) * N
    assert br.c2 == tuple(N - k for k in range(1, N + 1))
    assert br.d2 == (N,) + tuple(N - k + 1 for k in range(2, N + 1))
    # the last row has no admissible partner, so #D^1 at k = m + n is 0
    assert br.d1 == (1,) * (N - 1) + (0,)
    assert br.H == N * N + N - 1
    assert br.total == closed_form_intersection(m, n, j)


@pytest.mark.parametrize("mnj, H", [((2, 1, 1), 11), ((0, 1, 1), 1), ((3, 3, 3), 41)])
def test_h_examples(mnj, H):
    assert h_value(build_w(*mnj), S111) == H


def test_h_of_figure_eight():
    br = crossing_sets(syllables(parse_word("ab")), S111)
    assert (br.c1, br.c2, br.d1, br.d2) == ((0,), (0,), (0,), (1,))
    assert br.H == 1


def test_breakdown_identity():
    br = self_intersection(parse_word("abAAbbaB"), S123)
    j = br.to_json()
    assert j["total"] == j["H"] + j["n_times_length"] - j["two_n_squared"] - j["exponent_term"]
    assert j["H"] == sum(j["C1"]) + sum(j["C2"]) + sum(j["D1"]) + sum(j["D2"])


def test_exponent_term():
    form = syllables(parse_word("a b a^3 b^4"))
    assert exponent_term(form) == 2 + 3


def test_engine_matches_oracle_short_words():
    for w in canonical_classes(8):
        if is_primitive(w):
            assert self_intersection(w, S111).total == oracle_count(w, S111), str(w)


def test_engine_invariances():
    rng = random.Random(5)
    for _ in range(60):
        text = "".join(rng.choice("abAB") for _ in range(rng.randint(3, 11)))
        try:
            w = parse_word(text)
        except Exception:
            continue
        if w.is_single_family or not is_primitive(w):
            continue
        k = self_intersection(w, S111).total
        assert self_intersection(w.rotate(rng.randrange(len(w))), S111).total == k
        assert self_intersection(w.inverse(), S111).total == k
        assert self_intersection(w, S123).total == k


@pytest.mark.parametrize("build", [build_w, build_w_prime])
def test_closed_form_both_variants(build):
    for m in range(4):
        for n in range(4):
            for j in range(1, 4):
                if m + n:
                    assert self_intersection(build(m, n, j), S111).total == closed_form_intersection(m, n, j)


def test_row_bound_for_positive_words():
    # for positive words the i = 1 row sums lie in [n - 1, (n - 1)^2]
    rng = random.Random(9)
    for _ in range(80):
        n = rng.randint(2, 5)
        exps = [rng.randint(1, 3) for _ in range(2 * n)]
        w = parse_word("".join(f"a^{exps[2 * k]}b^{exps[2 * k + 1]}" for k in range(n)))
        if not is_primitive(w):
            continue
        br = self_intersection(w, S111)
        lo, hi = br.n - 1, (br.n - 1) ** 2
        assert lo <= br.family_sums[0] <= hi
