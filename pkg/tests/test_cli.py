import json
import subprocess
import sys
from pathlib import Path

import pytest

from coapprox.cli import main

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_analyze_worked_fixture(capsys):
    report = run_json(capsys, "analyze", "--input", str(PROBLEMS / "span3_l16.json"))
    assert report["zero_set"] == []
    assert report["d"] == 4
    assert report["n"] == 6 and report["m"] == 3
    classes = {
        tuple(member["coordinate"] for member in cls["members"])
        for cls in report["component_classes"]
    }
    assert (1, 5) in classes and (2, 6) in classes


def test_analyze_zero_set_one_based(capsys):
    report = run_json(
        capsys, "analyze", "--input", str(PROBLEMS / "pair_l17_coproximinal.json")
    )
    assert report["zero_set"] == [4, 7]


def test_norming_set_worked_fixture(capsys):
    report = run_json(
        capsys, "norming-set", "--input", str(PROBLEMS / "span3_l16.json")
    )
    assert report["q"] == 4
    assert report["system_basis"] == [
        [1, 1, 1, 1, -1, 1],
        [1, 1, 1, -1, -1, 1],
        [1, 1, -1, -1, -1, 1],
        [1, -1, -1, -1, -1, -1],
    ]
    assert len(report["representatives"]) == 7
    assert len(report["cells"]) == 7


def test_solve_worked_fixture(capsys):
    report = run_json(capsys, "solve", "--input", str(PROBLEMS / "span3_l16.json"))
    by_name = {t["name"]: t for t in report["targets"]}
    assert by_name["b1"]["outcome"] == "not-exists"
    assert by_name["b1"]["brute_force"] == {"exists": False, "grid_points": 9261}
    b2 = by_name["b2"]
    assert b2["outcome"] == "unique"
    assert b2["coefficients"] == ["1/7", "-3/7", "1"]
    assert b2["vector"] == ["2", "3", "0", "0", "-2", "6"]
    assert b2["projection_image"] == ["2", "3", "0", "0", "-2", "6"]
    assert b2["oracle"]["verdict"] == "confirmed"


def test_norming_set_single_pair(capsys):
    report = run_json(
        capsys, "norming-set", "--input", str(PROBLEMS / "line_l12_polytope.json")
    )
    assert report["q"] == 1
    assert report["representatives"] == [[1, 0]]
    assert report["representatives_reduced"] == [[1]]


def test_solve_polytope(capsys):
    report = run_json(capsys, "solve", "--input", str(PROBLEMS / "line_l12_polytope.json"))
    (target,) = report["targets"]
    assert target["outcome"] == "polytope"
    assert target["witness"] == ["3"]
    assert target["constraints"]["slack"] == "1"
    assert target["oracle"]["verdict"] == "confirmed"


def test_solve_zero_fiber_polytope(capsys):
    report = run_json(
        capsys, "solve", "--input", str(PROBLEMS / "pair_l17_coproximinal.json")
    )
    (target,) = report["targets"]
    assert target["outcome"] == "polytope"
    assert target["witness"] == ["0", "0"]


@pytest.mark.parametrize(
    "problem,coproximinal,co_chebyshev",
    [
        ("pair_l17_coproximinal.json", True, False),
        ("pair_l17_not_coproximinal.json", False, False),
        ("pair_l15_cochebyshev.json", True, True),
        ("span3_l16.json", False, False),
    ],
)
def test_classify(capsys, problem, coproximinal, co_chebyshev):
    report = run_json(capsys, "classify", "--input", str(PROBLEMS / problem))
    assert report["coproximinal"] is coproximinal
    assert report["co_chebyshev"] is co_chebyshev


def test_threshold(capsys):
    report = run_json(
        capsys, "threshold", "--input", str(PROBLEMS / "span3_l17_threshold.json")
    )
    (target,) = report["targets"]
    assert target["delta0"] == "41/21"
    assert target["bound_ok"] is True


def test_threshold_requires_zero_set(capsys):
    code, _, err = run_cli(
        capsys, "threshold", "--input", str(PROBLEMS / "span3_l16.json")
    )
    assert code == 4
    assert "zero set" in err


def test_invalid_rational_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"n": 2, "basis": [["1", "1/0"]]}), encoding="utf-8"
    )
    code, _, err = run_cli(capsys, "analyze", "--input", str(bad))
    assert code == 2
    assert "basis[1][2]" in err


def test_rank_deficient_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"n": 2, "basis": [["1", "2"], ["2", "4"]]}), encoding="utf-8"
    )
    code, _, err = run_cli(capsys, "analyze", "--input", str(bad))
    assert code == 2


def test_capacity_guard_exits_3(tmp_path, capsys):
    doc = {
        "n": 21,
        "basis": [
            ["1"] * 21,
            [str(k) for k in range(21)],
        ],
    }
    f = tmp_path / "wide.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run_cli(capsys, "norming-set", "--input", str(f))
    assert code == 3


def test_solve_requires_targets(tmp_path, capsys):
    f = tmp_path / "no_targets.json"
    f.write_text(json.dumps({"n": 2, "basis": [["1", "0"]]}), encoding="utf-8")
    code, _, err = run_cli(capsys, "solve", "--input", str(f))
    assert code == 2
    assert "targets" in err


def test_output_round_trip_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        code, _, _ = run_cli(
            capsys,
            "solve",
            "--input",
            str(PROBLEMS / "span3_l16.json"),
            "--output",
            str(out),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    from coapprox import parse_rational

    for t in report["targets"]:
        for key in ("coefficients", "vector"):
            if key in t:
                for s in t[key]:
                    assert parse_rational(s) == parse_rational(s)


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "coapprox.cli", "classify", "--input",
         str(PROBLEMS / "pair_l15_cochebyshev.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["co_chebyshev"] is True
