import json

import jsonschema
import pytest

from ccp.cli import main
from ccp.instances import EXAMPLE1_UTILITIES
from ccp.report import load_schema

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip().startswith("{") else out), err


@pytest.fixture
def housing_spec(tmp_path):
    path = tmp_path / "housing.json"
    path.write_text(json.dumps({
        "type": "shapley-scarf",
        "utilities": {str(a): {str(b): m for b, m in row.items()}
                      for a, row in EXAMPLE1_UTILITIES.items()}}))
    return str(path)


@pytest.fixture
def tie_instance(tmp_path):
    # agent 1 is indifferent; the top-coalition construction isolates it
    path = tmp_path / "tie.json"
    path.write_text(json.dumps({"agents": [1, 2], "coalitions": [
        {"members": [1, 2], "payoffs": [[0, 2]]}]}))
    return str(path)


def test_core_example1(capsys):
    code, rep, _ = run(capsys, "core", "--builtin", "example1")
    assert code == 0
    assert rep["result"] == {"outcomes": [], "count": 0}
    jsonschema.validate(rep, SCHEMA)


def test_classical_wb_example2(capsys):
    code, rep, _ = run(capsys, "wb", "--builtin", "example2", "--classical")
    assert code == 0 and rep["result"]["count"] == 0


def test_ttc_housing(capsys, housing_spec):
    code, rep, _ = run(capsys, "ttc", "--spec", housing_spec)
    assert code == 0
    assert rep["result"]["outcome"] == {"structure": [[1, 2, 3], [4]],
                                        "payoff": {"1": 3, "2": 3, "3": 3, "4": 0}}
    jsonschema.validate(rep, SCHEMA)


ALL_COMMANDS = [
    ("validate", "--builtin", "gstar"),
    ("outcomes", "--builtin", "example2"),
    ("core", "--builtin", "gstar"),
    ("strict-core", "--builtin", "gstar"),
    ("pareto", "--builtin", "example2"),
    ("pareto", "--builtin", "example2", "--mode", "literal", "--weak"),
    ("is", "--builtin", "gstar", "--is-variant", "strict-join"),
    ("wb", "--builtin", "example1"),
    ("properties", "--builtin", "gstar", "--weak-top-coalition"),
    ("properties", "--builtin", "example1", "--top-coalition"),
    ("properties", "--builtin", "gstar", "--weak-top-cycle"),
    ("construct", "--builtin", "gstar", "--theorem", "1"),
    ("construct", "--builtin", "gstar", "--theorem", "2"),
    ("construct", "--builtin", "gstar", "--theorem", "3"),
    ("construct", "--builtin", "example1", "--theorem", "4"),
    ("construct", "--builtin", "example1", "--theorem", "1"),
    ("super-additive", "--builtin", "example1"),
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=" ".join)
def test_reports_validate_and_are_deterministic(capsys, argv):
    code, first, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(first, SCHEMA)
    _, second, _ = run(capsys, *argv)
    first["stats"].pop("elapsedSeconds")
    second["stats"].pop("elapsedSeconds")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_generate_round_trips(capsys, tmp_path):
    spec = tmp_path / "rand.json"
    spec.write_text(json.dumps({"type": "random", "seed": 11, "nAgents": 3}))
    code, rep, _ = run(capsys, "generate", "--spec", str(spec))
    assert code == 0
    jsonschema.validate(rep, SCHEMA)
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps(rep["result"]["instance"]))
    code, again, _ = run(capsys, "validate", "--instance", str(inst))
    assert code == 0 and again["instanceDigest"] == rep["instanceDigest"]


def test_construct_failure_is_reported(capsys):
    code, rep, _ = run(capsys, "construct", "--builtin", "example1", "--theorem", "3")
    assert code == 0
    assert rep["result"]["outcome"] is None
    assert "scope [1, 2, 3, 4]" in rep["result"]["failure"]


def test_invalid_instance_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"agents": [1, 2], "coalitions": [
        {"members": [1], "payoffs": [[1]]}]}))
    code, _, err = run(capsys, "core", "--instance", str(bad))
    assert code == 1 and "singleton feasible set" in err
    code, _, _ = run(capsys, "core", "--instance", str(tmp_path / "missing.json"))
    assert code == 1


def test_size_guard_exit_2(capsys, tmp_path):
    spec = tmp_path / "big.json"
    spec.write_text(json.dumps({"type": "random", "seed": 1, "nAgents": 5}))
    code, _, err = run(capsys, "core", "--spec", str(spec), "--max-agents", "4")
    assert code == 2 and "size guard" in err


def test_verification_discrepancy_exit_3(capsys, tie_instance):
    code, rep, err = run(capsys, "construct", "--instance", tie_instance, "--theorem", "2")
    assert code == 3 and "discrepancy" in err
    jsonschema.validate(rep, SCHEMA)
    assert rep["result"]["candidate"]["payoff"] == {"1": 0, "2": 0}


def test_table_format(capsys):
    code, out, _ = run(capsys, "wb", "--builtin", "example2", "--format", "table")
    assert code == 0
    assert "{1,2} {3}" in out and "(3 outcomes)" in out
