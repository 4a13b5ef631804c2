"""End-to-end CLI behaviour: verbs, exit codes, JSON shape, determinism."""

import json

import pytest

from icx.cli import run
from icx.model import serialize_instance

from conftest import make_instance


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_instance(tmp_path, inst, name="inst.json"):
    path = tmp_path / name
    path.write_text(serialize_instance(inst), encoding="utf-8")
    return str(path)


def test_gen_validate_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "gen.json"
    code, _, _ = invoke(capsys, "gen", "--family", "antidotes", "--K", "5", "--U", "1", "--D", "1", "--out", str(out_path))
    assert code == 0
    code, out, _ = invoke(capsys, "validate", str(out_path))
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_validate_reports_violations(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"messages": 2, "destinations": [{"id": 1, "wants": [1], "has": [1]}]}\n',
        encoding="utf-8",
    )
    code, out, _ = invoke(capsys, "validate", str(path))
    assert code == 1
    obj = json.loads(out)
    assert obj["valid"] is False
    assert any("both desired and held" in v for v in obj["violations"])


def test_check_feasibility_feasible(tmp_path, capsys, feasible_m4k3):
    path = write_instance(tmp_path, feasible_m4k3)
    code, out, _ = invoke(capsys, "check-feasibility", path, "--L", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["feasible"] is True
    assert obj["partition"]["Z"] == 3
    assert obj["partition"]["subsets"] == [[1], [2], [3, 4]]


def test_check_feasibility_infeasible(tmp_path, capsys, infeasible_m4k3):
    path = write_instance(tmp_path, infeasible_m4k3)
    code, out, _ = invoke(capsys, "check-feasibility", path, "--L", "2")
    assert code == 1
    assert json.loads(out)["witness"] == [1, 4, 3]


def test_scheme_family_verify_simulate_sampled(capsys):
    code, out, _ = invoke(
        capsys,
        "scheme", "--family", "antidotes", "--K", "8", "--U", "1", "--D", "2",
        "--verify", "--simulate", "--sample", "500",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["verification"]["valid"] is True
    assert set(obj["verification"]["rates"].values()) == {"2/7"}
    assert obj["simulation"]["ok"] is True and obj["simulation"]["mode"] == "sampled"


def test_scheme_simulate_budget_exit(capsys):
    code, out, _ = invoke(
        capsys,
        "scheme", "--family", "antidotes", "--K", "8", "--U", "1", "--D", "2",
        "--verify", "--simulate",
    )
    assert code == 3


def test_scheme_small_family_exhaustive(capsys):
    code, out, _ = invoke(
        capsys, "scheme", "--family", "interference", "--K", "6", "--U", "0", "--D", "1",
        "--verify", "--simulate",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["simulation"]["mode"] == "exhaustive"
    assert set(obj["verification"]["rates"].values()) == {"1/2"}


def test_scheme_from_instance(tmp_path, capsys, feasible_m4k3):
    path = write_instance(tmp_path, feasible_m4k3)
    code, out, _ = invoke(capsys, "scheme", "--instance", path, "--L", "2", "--verify", "--simulate")
    assert code == 0
    obj = json.loads(out)
    assert obj["scheme"]["n"] == 3
    assert obj["verification"]["valid"] is True
    assert obj["simulation"]["ok"] is True


def test_scheme_infeasible_instance_exit1(tmp_path, capsys, infeasible_m4k3):
    path = write_instance(tmp_path, infeasible_m4k3)
    code, out, _ = invoke(capsys, "scheme", "--instance", path, "--L", "2")
    assert code == 1
    assert json.loads(out)["witness"] == [1, 4, 3]


def test_verify_and_simulate_files(tmp_path, capsys):
    code, out, _ = invoke(capsys, "example", "1")
    ex = json.loads(out)
    inst_path = tmp_path / "inst.json"
    scheme_path = tmp_path / "scheme.json"
    inst_path.write_text(json.dumps(ex["instance"]) + "\n", encoding="utf-8")
    scheme_path.write_text(json.dumps(ex["scheme"]) + "\n", encoding="utf-8")
    code, out, _ = invoke(capsys, "verify", str(inst_path), str(scheme_path))
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = invoke(capsys, "verify", str(inst_path), str(scheme_path), "--mode", "rank")
    assert code == 0 and json.loads(out)["mode"] == "rank"
    code, out, _ = invoke(capsys, "simulate", str(inst_path), str(scheme_path))
    assert code == 0 and json.loads(out)["ok"] is True


def test_transform_verb(tmp_path, capsys, groupcast_m2k3):
    path = write_instance(tmp_path, groupcast_m2k3)
    code, out, _ = invoke(capsys, "transform", path, "--L", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["transformed"]["messages"] == 6
    assert len(obj["transformed"]["destinations"]) == 6
    assert obj["map"]["id_map"]["1,0"] == 1
    code, out, _ = invoke(capsys, "transform", path, "--L", "2", "--no-aux")
    assert json.loads(out)["transformed"]["messages"] == 4


def test_bounds_verb(tmp_path, capsys, infeasible_m4k3):
    path = write_instance(tmp_path, infeasible_m4k3)
    code, out, _ = invoke(capsys, "bounds", path)
    assert code == 0
    obj = json.loads(out)
    assert any(c["terms"] == [1, 2, 3, 4] for c in obj["chain"])
    assert all(set(c) == {"kind", "terms", "rhs", "provenance"} for c in obj["simple"])


def test_bounds_family_certificate(tmp_path, capsys):
    code, out, _ = invoke(capsys, "gen", "--family", "interference", "--K", "9", "--U", "1", "--D", "2", "--out", str(tmp_path / "i.json"))
    code, out, _ = invoke(capsys, "bounds", str(tmp_path / "i.json"), "--family")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"]["capacity_per_message"] == "1/3"
    assert obj["family"]["certificate"]["terms"] == [1, 2, 3]


def test_oracle_minrank_verb(tmp_path, capsys):
    invoke(capsys, "gen", "--family", "antidotes", "--K", "5", "--U", "1", "--D", "1", "--out", str(tmp_path / "p.json"))
    code, out, _ = invoke(capsys, "oracle", str(tmp_path / "p.json"), "--minrank")
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == 3
    assert obj["witness_scheme"]["n"] == 3


def test_oracle_scalar_search_verb(tmp_path, capsys):
    inst = make_instance(3, [({k}, set()) for k in (1, 2, 3)])
    path = write_instance(tmp_path, inst)
    code, out, _ = invoke(capsys, "oracle", path, "--scalar-search", "--q", "2", "--n-max", "2")
    assert code == 1  # not found
    assert json.loads(out)["value"] is None


def test_example_verb_all(capsys):
    for eid, rate in [(1, "1/2"), (2, "2/5"), (3, "1/6")]:
        code, out, _ = invoke(capsys, "example", str(eid), "--verify")
        assert code == 0
        obj = json.loads(out)
        assert obj["claimed_rate"] == rate
        assert obj["verification"]["valid"] is True


def test_example_field_flag(capsys):
    code, out, _ = invoke(capsys, "example", "1", "--field", "gf2m=3", "--verify", "--simulate")
    assert code == 0
    obj = json.loads(out)
    assert obj["scheme"]["field"] == {"kind": "gf2m", "m": 3, "poly": 11}
    assert obj["simulation"]["ok"] is True


def test_outputs_byte_identical(capsys, tmp_path):
    _, out1, _ = invoke(capsys, "example", "2", "--verify")
    _, out2, _ = invoke(capsys, "example", "2", "--verify")
    assert out1 == out2
    path = write_instance(tmp_path, make_instance(3, [({1}, {2}), ({2}, {1}), ({3}, {1, 2})]))
    _, b1, _ = invoke(capsys, "bounds", path)
    _, b2, _ = invoke(capsys, "bounds", path)
    assert b1 == b2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["bogus-verb"])
    assert exc.value.code == 2
    code, _, err = invoke(capsys, "scheme", "--family", "antidotes")
    assert code == 2  # missing --K
    code, _, err = invoke(capsys, "verify", "/nonexistent/a.json", "/nonexistent/b.json")
    assert code == 2


def test_parse_error_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = invoke(capsys, "check-feasibility", str(bad), "--L", "1")
    assert code == 1
    assert "error" in err
