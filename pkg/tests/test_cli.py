import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cohsys import schemas
from cohsys.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_dim():
    assert call("dim", "6", "7", "4") == (0, "1\n", "")
    assert call("dim", "1", "0", "0")[1] == "0\n"


def test_decompose_table():
    code, out, _ = call("decompose", "6", "7", "4")
    assert code == 0
    assert out.split("\n")[1].split() == ["2", "5", "1", "1"]


def test_range_and_classify_text():
    assert call("range", "7", "13", "3")[1] == "(1/3, 8/3)\n"
    out = call("classify", "6", "11", "3")[1]
    assert out.startswith("NONEMPTY (1, 7/3)\n")


def test_walls_contains_six_seven_four_wall():
    code, out, _ = call("walls", "6", "7", "4", "--json")
    walls = json.loads(out)["walls"]
    hit = [w for w in walls if (w["n1"], w["d1"], w["k1"], w["n2"], w["d2"], w["k2"]) == (4, 4, 3, 2, 3, 1)]
    assert code == 0 and len(hit) == 1
    w = hit[0]
    assert (w["alpha_c"], w["e"], w["f"], w["c12"], w["c21"], w["allowable"]) == ("2", -1, 1, 0, 1, True)


def test_flips_at():
    code, out, _ = call("flips", "7", "13", "3", "--at", "3/2", "--json")
    got = json.loads(out)["outcomes"]
    assert code == 0 and [o["outcome"] for o in got] == ["minus-side-empty"]


def test_search_json_lines():
    code, out, _ = call("search", "--k", "3", "--n-min", "4", "--n-max", "12", "--json")
    lines = [json.loads(x) for x in out.strip().split("\n")]
    assert code == 0
    assert [(x["parent"]["n"], x["alpha_c"], x["flag"]) for x in lines] == [
        (4, "3/5", "c21<=0"), (5, "3/4", "c21<=0"), (6, "1", "c21<=0"), (7, "3/2", "c21<=0")]


def test_search_empty_result_prints_nothing():
    assert call("search", "--k", "2", "--n-min", "3", "--n-max", "6", "--json") == (0, "", "")


def test_segre_oracle_json():
    code, out, _ = call("segre", "--n", "3", "--a", "2", "--k", "2", "--oracle", "--trials", "10", "--json")
    data = json.loads(out)
    assert code == 0 and data["zero_plus_exists"] and data["bound_check"]
    assert data["rows"][1]["oracle"]["histogram"] == {"3": 10}


def test_prime_from_environment(monkeypatch):
    monkeypatch.setenv("COHSYS_PRIME", "7")
    out = call("segre", "--n", "3", "--a", "1", "--k", "2", "--q", "1", "--oracle", "--trials", "3", "--json")[1]
    assert json.loads(out)["rows"][0]["oracle"]["prime"] == 7


@pytest.mark.parametrize("argv", [
    ["decompose", "3", "3", "3"],
    ["walls", "3", "6", "3"],
    ["flips", "6", "7", "4", "--at", "1/2"],
    ["flips", "6", "7", "4", "--at", "x"],
    ["segre", "--n", "3", "--a", "1", "--k", "3"],
    ["segre", "--n", "4", "--a", "2", "--k", "2", "--oracle", "--prime", "100"],
    ["dim", "0", "1", "1"],
    ["search", "--k", "3", "--n-min", "3", "--n-max", "5"],
])
def test_precondition_exit_code(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert err.startswith("error: precondition: ") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [
    ["dim", "1", "0"],
    ["frobnicate"],
    ["dim", "a", "0", "0"],
    ["search", "--k", "3"],
    ["search", "--k", "3", "--n-min", "4", "--n-max", "5", "--d-max", "3", "--l-max", "2"],
    [],
])
def test_usage_exit_code(argv, capsys):
    assert run(argv) == 2


SCHEMA_ARGV = [
    ("dim", ["dim", "4", "6", "2"]),
    ("decompose", ["decompose", "6", "7", "4"]),
    ("range", ["range", "6", "7", "4"]),
    ("classify", ["classify", "2", "3", "3"]),
    ("classify", ["classify", "9", "20", "5"]),
    ("walls", ["walls", "7", "13", "3"]),
    ("flips", ["flips", "6", "7", "4"]),
    ("search", ["search", "--k", "4", "--n-min", "5", "--n-max", "6", "--d-max", "20"]),
    ("search-report", ["search", "--k", "2", "--n-min", "3", "--n-max", "5", "--d-max", "12", "--report"]),
    ("segre", ["segre", "--n", "4", "--a", "2", "--k", "3", "--oracle", "--trials", "4"]),
]


@pytest.mark.parametrize("kind, argv", SCHEMA_ARGV)
def test_json_matches_schema(kind, argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines and lines[0]
    for line in lines:
        schemas.validate(kind, json.loads(line))


def test_schema_rejects_malformed():
    with pytest.raises(jsonschema.ValidationError):
        schemas.validate("dim", {"system": {"n": 1, "d": 0, "k": 0}, "beta": "0"})
    with pytest.raises(jsonschema.ValidationError):
        schemas.validate("range", {"system": {"n": 4, "d": 6, "k": 2},
                                   "range": {"lower": "1.5", "upper": "inf"}, "upper_alt": "3"})


def test_schema_is_valid_draft_2020_12():
    jsonschema.Draft202012Validator.check_schema(schemas.root_schema())


@pytest.mark.parametrize("argv", [
    ["search", "--k", "3", "--n-min", "4", "--n-max", "8", "--report"],
    ["segre", "--n", "4", "--a", "2", "--k", "2", "--oracle", "--trials", "20", "--json"],
])
def test_reruns_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "cohsys", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first and first == second
