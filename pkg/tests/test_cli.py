"""End-to-end command line behavior, run in process via cli.main."""

import json

import pytest

import accordion_tau.cli as cli
from accordion_tau.complexes import IsoReport

FAN = ["--m", "6", "--diagonals", "0-2,0-3,0-4"]

A3_QUIVER = {
    "vertices": ["1", "2", "3"],
    "arrows": [
        {"id": "a", "src": "1", "tgt": "2"},
        {"id": "b", "src": "2", "tgt": "3"},
    ],
    "relations": [["a", "b"]],
}

KRONECKER_QUIVER = {
    "vertices": ["1", "2"],
    "arrows": [
        {"id": "x", "src": "1", "tgt": "2"},
        {"id": "y", "src": "1", "tgt": "2"},
    ],
    "relations": [],
}


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- accordion --


def test_accordion_json_counts(capsys):
    code, out, _ = run(capsys, ["accordion", *FAN])
    assert code == 0
    data = json.loads(out)
    assert len(data["complex"]["vertices"]) == 9
    assert len(data["complex"]["facets"]) == 14
    assert len(data["dual_graph"]["edges"]) == 21
    assert data["dissection"]["m"] == 6


def test_accordion_dot(capsys):
    code, out, _ = run(capsys, ["accordion", *FAN, "--format", "dot"])
    assert code == 0
    assert out.startswith("graph exchange {")


def test_accordion_text(capsys):
    code, out, _ = run(capsys, ["accordion", *FAN, "--format", "text"])
    assert code == 0
    assert "facets (14):" in out
    assert "dual graph: 14 nodes, 21 edges" in out


def test_accordion_requires_input(capsys):
    code, _, err = run(capsys, ["accordion"])
    assert code == 2
    assert "no dissection" in err


def test_accordion_rejects_crossing(capsys):
    code, _, err = run(capsys, ["accordion", "--m", "6", "--diagonals", "0-2,1-3"])
    assert code == 2
    assert "cross" in err


def test_accordion_input_file(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"m": 6, "diagonals": [[0, 2], [0, 3], [0, 4]]}))
    code, out, _ = run(capsys, ["accordion", "--input", str(path)])
    assert code == 0
    assert len(json.loads(out)["complex"]["vertices"]) == 9


def test_accordion_rejects_both_sources(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"m": 6, "diagonals": []}))
    code, _, err = run(capsys, ["accordion", *FAN, "--input", str(path)])
    assert code == 2
    assert "not both" in err


def test_accordion_malformed_file(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"mm": 6}))
    code, _, err = run(capsys, ["accordion", "--input", str(path)])
    assert code == 2
    assert "malformed" in err


# -- silting --


def test_silting_from_dissection(capsys):
    code, out, _ = run(capsys, ["silting", *FAN, "--from-dissection"])
    assert code == 0
    data = json.loads(out)
    assert len(data["complex"]["vertices"]) == 9
    assert len(data["complex"]["facets"]) == 14
    assert data["quiver"]["vertices"] == ["0-2", "0-3", "0-4"]


def test_silting_from_quiver_file(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps(A3_QUIVER))
    code, out, _ = run(capsys, ["silting", "--quiver", str(path)])
    assert code == 0
    data = json.loads(out)
    assert len(data["complex"]["vertices"]) == 8
    assert len(data["complex"]["facets"]) == 12


def test_silting_rejects_both_sources(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps(A3_QUIVER))
    code, _, err = run(capsys, ["silting", "--quiver", str(path), *FAN])
    assert code == 2
    assert "not both" in err


def test_silting_band_quiver_unsupported(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps(KRONECKER_QUIVER))
    code, _, err = run(capsys, ["silting", "--quiver", str(path)])
    assert code == 3
    assert "cyclic walk" in err


def test_silting_non_gentle_quiver_rejected(capsys, tmp_path):
    bad = {
        "vertices": ["1", "2", "3", "4"],
        "arrows": [
            {"id": "a", "src": "1", "tgt": "2"},
            {"id": "b", "src": "1", "tgt": "3"},
            {"id": "c", "src": "1", "tgt": "4"},
        ],
        "relations": [],
    }
    path = tmp_path / "q.json"
    path.write_text(json.dumps(bad))
    code, _, err = run(capsys, ["silting", "--quiver", str(path)])
    assert code == 2
    assert "gentle" in err


# -- verify --


def test_verify_main_single_pass(capsys):
    code, out, _ = run(capsys, ["verify", *FAN])
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert data["report"]["status"] == "pass"


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    monkeypatch.setattr(
        cli, "verify_main", lambda d: IsoReport(False, None, ["forced failure"])
    )
    code, out, _ = run(capsys, ["verify", *FAN])
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_verify_nested_single(capsys):
    code, out, _ = run(
        capsys,
        ["verify", *FAN, "--theorem", "nested", "--sub-diagonals", "0-2,0-4"],
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_nested_needs_sub(capsys):
    code, _, err = run(capsys, ["verify", *FAN, "--theorem", "nested"])
    assert code == 2
    assert "--sub-diagonals" in err


def test_verify_idempotent_single(capsys):
    code, out, _ = run(
        capsys, ["verify", *FAN, "--theorem", "idempotent", "--j", "0-2,0-4"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert data["instance"]["j"] == ["0-2", "0-4"]


def test_verify_idempotent_missing_j(capsys):
    code, _, err = run(capsys, ["verify", *FAN, "--theorem", "idempotent"])
    assert code == 2
    assert "--j" in err


def test_verify_idempotent_unknown_j(capsys):
    code, _, err = run(
        capsys, ["verify", *FAN, "--theorem", "idempotent", "--j", "9-11"]
    )
    assert code == 2
    assert "unknown vertex" in err


def test_verify_exhaustive_all(capsys):
    code, out, _ = run(capsys, ["verify", "--exhaustive", "4", "--theorem", "all"])
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert [s["theorem"] for s in data["summaries"]] == [
        "main",
        "nested",
        "idempotent",
    ]
    assert all(s["passed"] == s["checked"] for s in data["summaries"])


def test_verify_exhaustive_with_seed(capsys):
    code, out, _ = run(capsys, ["verify", "--exhaustive", "4", "--seed", "5"])
    assert code == 0
    data = json.loads(out)
    assert data["spot_checks"]["failures"] == []
    assert data["spot_checks"]["instances"] >= 1


def test_verify_all_needs_exhaustive(capsys):
    code, _, err = run(capsys, ["verify", *FAN, "--theorem", "all"])
    assert code == 2
    assert "--exhaustive" in err


def test_verify_rejects_dot(capsys):
    code, _, err = run(capsys, ["verify", *FAN, "--format", "dot"])
    assert code == 2
    assert "dot" in err


def test_verify_text_format(capsys):
    code, out, _ = run(
        capsys, ["verify", "--exhaustive", "4", "--format", "text"]
    )
    assert code == 0
    assert out.startswith("status: pass")
    assert "main:" in out


# -- shared flags and determinism --


def test_safety_cap(capsys, monkeypatch):
    code, _, err = run(capsys, ["accordion", "--m", "12"])
    assert code == 2
    assert "safety cap" in err
    monkeypatch.setenv("ACCORDION_TAU_MAX_M", "12")
    code, out, _ = run(capsys, ["accordion", "--m", "12"])
    assert code == 0
    assert json.loads(out)["dissection"]["m"] == 12


def test_safety_cap_bad_env(capsys, monkeypatch):
    monkeypatch.setenv("ACCORDION_TAU_MAX_M", "many")
    code, _, err = run(capsys, ["accordion", "--m", "4"])
    assert code == 2
    assert "ACCORDION_TAU_MAX_M" in err


def test_output_is_byte_identical(capsys):
    _, out1, _ = run(capsys, ["accordion", *FAN])
    _, out2, _ = run(capsys, ["accordion", *FAN])
    assert out1 == out2
    _, v1, _ = run(capsys, ["verify", "--exhaustive", "4"])
    _, v2, _ = run(capsys, ["verify", "--exhaustive", "4"])
    assert v1 == v2


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, ["accordion", *FAN, "--out", str(target)])
    assert code == 0
    assert out == ""
    assert len(json.loads(target.read_text())["complex"]["vertices"]) == 9


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()


def test_missing_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 2
    capsys.readouterr()


def test_bad_diagonal_syntax(capsys):
    code, _, err = run(capsys, ["accordion", "--m", "6", "--diagonals", "02"])
    assert code == 2
    assert "expected i-j" in err
