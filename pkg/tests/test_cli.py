import csv
import io
import json
import subprocess
import sys

import pytest

from kgeodesics.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_intersect_example(capsys):
    code, out, _ = call(capsys, "intersect", "--word", "(ab)^3(aab)^3b^3", "--structure", "1,1,1")
    assert code == 0 and out.strip() == "53"


def test_intersect_oracle_agrees(capsys):
    _, out, _ = call(capsys, "intersect", "--word", "abAAbaBB", "--oracle")
    _, formula, _ = call(capsys, "intersect", "--word", "abAAbaBB")
    assert out == formula


def test_intersect_breakdown(capsys):
    code, out, _ = call(capsys, "intersect", "--word", "aabb", "--breakdown")
    doc = json.loads(out)
    assert code == 0
    assert doc["total"] == 3
    assert {"C1", "C2", "D1", "D2", "H", "exponent_term", "n", "word_length"} <= set(doc)


def test_intersect_json(capsys):
    _, out, _ = call(capsys, "intersect", "--word", "ab", "--json")
    assert json.loads(out) == {"word": "ab", "total": 1, "method": "formula"}


def test_construct_example(capsys):
    code, out, _ = call(capsys, "construct", "--k", "7")
    lines = out.splitlines()
    assert code == 0
    for part in ("M=2", "rem=1", "n=1", "m=1", "j=1", "variant=W"):
        assert part in lines[0].split()
    assert lines[1] == "word abaabb"
    _, out, _ = call(capsys, "construct", "--k", "7", "--json")
    doc = json.loads(out)
    assert doc["word"] == "abaabb" and doc["closed_form"] == 7


def test_length_conjugacy(capsys):
    _, ab, _ = call(capsys, "length", "--word", "ab", "--structure", "1,2,3")
    _, ba, _ = call(capsys, "length", "--word", "ba", "--structure", "1,2,3")
    assert float(ab) > 0
    assert float(ab) == pytest.approx(float(ba), rel=1e-12)


def test_bounds_csv_and_json(capsys, tmp_path):
    code, out, _ = call(capsys, "bounds", "--k-min", "1", "--k-max", "3", "--which", "S_K_IMPROVED", "EP")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["k"] for r in rows] == ["1", "2", "3"]
    assert float(rows[0]["S_K_IMPROVED"]) == pytest.approx(2.861057, abs=1e-6)
    target = tmp_path / "b.json"
    call(capsys, "bounds", "--k-max", "2", "--format", "json", "--out", str(target))
    doc = json.loads(target.read_text())
    assert set(doc) == {"rows", "crossovers"}
    assert doc["crossovers"]["S_K_IMPROVED_below_BASMAJIAN21"] >= 1


def test_survey_csv(capsys):
    code, out, _ = call(capsys, "survey", "--max-len", "6", "--k-max", "4")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("# min_length is the minimum over classes of word length <= 6")
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))
    assert rows[0]["k"] == "1"
    assert list(rows[0]) == ["k", "min_length", "witness", "construction_word", "construction_length", "bound_value", "slack"]


def test_survey_json(capsys):
    _, out, _ = call(capsys, "survey", "--max-len", "5", "--k-max", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["metadata"]["max_len"] == 5
    assert all(r["k"] <= 3 for r in doc["records"])


def test_render(capsys):
    code, out, _ = call(capsys, "render", "--word", "ab", "--word", "aabb", "--size", "300")
    assert code == 0 and out.startswith("<svg") and out.count("<path ") == 2


@pytest.mark.parametrize(
    "argv, code",
    [
        (["intersect", "--word", "ab("], "syntax"),
        (["intersect", "--word", "aA"], "trivial_word"),
        (["intersect", "--word", "abab"], "non_primitive"),
        (["intersect", "--word", "ab", "--structure", "1,2"], "invalid_argument"),
        (["construct", "--k", "0"], "invalid_argument"),
    ],
)
def test_json_errors(capsys, argv, code):
    for placement in (["--json-errors", *argv], [*argv, "--json-errors"]):
        status, out, err = call(capsys, *placement)
        assert status == 1 and out == ""
        doc = json.loads(err)
        assert set(doc) == {"code", "message", "context"}
        assert doc["code"] == code
        assert isinstance(doc["message"], str) and isinstance(doc["context"], dict)


def test_syntax_error_reports_position(capsys):
    _, _, err = call(capsys, "--json-errors", "intersect", "--word", "abx")
    assert json.loads(err)["context"]["position"] == 2


def test_plain_error_message(capsys):
    status, _, err = call(capsys, "intersect", "--word", "aA")
    assert status == 1 and err.startswith("error: ")


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["intersect"]) == 2
    assert run(["bounds", "--which", "NOPE"]) == 2
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kgeodesics", "intersect", "--word", "aabb"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
