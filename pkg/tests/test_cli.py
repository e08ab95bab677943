"""End-to-end command-line behavior against the shipped problem files.

Reports are pinned three ways: frozen verdict values, validity against
the published JSON schemas, and bytewise determinism across thread
counts (timings are excluded from the determinism contract by design).
"""

import hashlib
import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from commensura.cli import ProblemError, main, report_json, run_problem

ROOT = Path(__file__).resolve().parent.parent
PROBLEM_DIR = ROOT / "problems"
PROBLEM_FILES = sorted(PROBLEM_DIR.glob("*.json"))


def load(path: Path):
    return json.loads(path.read_text())


def schema(name: str):
    return json.loads((resources.files("commensura") / "schemas" / name).read_text())


@pytest.fixture(scope="module")
def reports():
    return {path.stem: run_problem(load(path)) for path in PROBLEM_FILES}


def test_problem_corpus_is_present():
    assert [p.stem for p in PROBLEM_FILES] == [
        "dichotomy_sl2",
        "generic_matrix",
        "generic_walk",
        "rootinfo_b3",
        "spectrum_free_group",
        "twins_balanced",
        "weakcomm_powers",
    ]


@pytest.mark.parametrize("path", PROBLEM_FILES, ids=lambda p: p.stem)
def test_problem_files_validate(path):
    jsonschema.validate(instance=load(path), schema=schema("problem.schema.json"))


def test_reports_validate(reports):
    report_schema = schema("report.schema.json")
    for report in reports.values():
        jsonschema.validate(instance=report, schema=report_schema)


# ---------------------------------------------------------------------------
# frozen verdicts


def test_rootinfo_report(reports):
    r = reports["rootinfo_b3"]
    assert r["verdicts"]["weylOrder"] == "48"
    assert r["verdicts"]["minusOneInWeyl"] is True
    assert r["verdicts"]["classCount"] == 10
    assert r["verdicts"]["nontrivialClassCount"] == 9
    assert r["certificates"]["rootSystem"] == "B3"
    assert r["certificates"]["classes"][0] == "[-1,-1,-1]"


def test_weakcomm_report(reports):
    r = reports["weakcomm_powers"]
    assert r["verdicts"]["weaklyCommensurable"] is True
    assert r["verdicts"]["kind"] == "yes"
    assert r["verdicts"]["exponentBound"] == 10
    assert "witnessLeft" in r["certificates"] and "witnessRight" in r["certificates"]
    assert r["certificates"]["commonValueMinpoly"]


def test_generic_matrix_report(reports):
    r = reports["generic_matrix"]
    assert r["verdicts"]["status"] == "Certified"
    assert r["certificates"]["witnessPrimes"]


def test_generic_walk_report(reports):
    r = reports["generic_walk"]
    assert r["verdicts"]["statusCounts"] == {"Certified": 22, "NotRegular": 3}
    assert r["verdicts"]["genericProportion"] == "22/25"
    assert len(r["certificates"]["words"]) == 25


def test_spectrum_report(reports):
    r = reports["spectrum_free_group"]
    assert r["verdicts"]["hyperbolicWords"] == 20
    first = r["certificates"]["entries"][0]
    assert first["word"] == [1, 1, 1, 1, 1, 2]  # depth-first word order
    # the eigenvalue of g1*g2 is claimed by an earlier word sharing it
    assert ["1", "-6", "1"] in [e["eigenvalueMinpoly"] for e in r["certificates"]["entries"]]
    lo, hi = first["lengthInterval"]
    assert "/" in lo and "/" in hi  # exact rational endpoints, not floats


def test_twins_report(reports):
    r = reports["twins_balanced"]
    assert r["verdicts"]["twins"] is True
    assert set(r["perPlaceTables"]) == {"oo", "2"}
    assert all(row["agree"] for row in r["perPlaceTables"].values())


def test_dichotomy_report(reports):
    r = reports["dichotomy_sl2"]
    assert r["verdicts"]["conclusion"] == "dense"
    assert r["verdicts"]["corroboratedModP"] is True
    assert r["certificates"]["rootSystem"] == "A1"
    assert r["certificates"]["prime"] == 5


def test_input_hash_is_recomputable(reports):
    for path in PROBLEM_FILES:
        problem = load(path)
        expected = hashlib.sha256(
            json.dumps(problem, sort_keys=True, separators=(",", ":")).encode()
        ).hexdigest()
        assert reports[path.stem]["inputHash"] == expected


def test_reports_are_deterministic_across_threads():
    problem = load(PROBLEM_DIR / "generic_walk.json")

    def canonical(report):
        stripped = {k: v for k, v in report.items() if k != "timings"}
        return json.dumps(stripped, sort_keys=True, separators=(",", ":"))

    single = run_problem(load(PROBLEM_DIR / "generic_walk.json"), threads=1)
    pooled = run_problem(problem, threads=8)
    assert canonical(single) == canonical(pooled)


def test_report_json_round_trips(reports):
    text = report_json(reports["rootinfo_b3"])
    assert text.endswith("\n")
    assert json.loads(text) == reports["rootinfo_b3"]


# ---------------------------------------------------------------------------
# run_problem validation


def test_version_must_be_one():
    with pytest.raises(ProblemError, match="version"):
        run_problem({"version": 2, "task": "rootinfo", "payload": {}})


def test_unknown_task_rejected():
    with pytest.raises(ProblemError, match="task"):
        run_problem({"version": 1, "task": "mystery", "payload": {}})


def test_unknown_top_level_key_rejected():
    with pytest.raises(ProblemError, match="unknown keys"):
        run_problem(
            {"version": 1, "task": "rootinfo", "payload": {"family": "B", "rank": 3}, "note": 1}
        )


def test_payload_must_be_object():
    with pytest.raises(ProblemError, match="payload"):
        run_problem({"version": 1, "task": "rootinfo", "payload": []})


def test_generic_payload_needs_exactly_one_input():
    with pytest.raises(ProblemError, match="matrix"):
        run_problem({"version": 1, "task": "generic", "payload": {}})


def test_thread_count_validated():
    problem = {"version": 1, "task": "rootinfo", "payload": {"family": "A", "rank": 1}}
    with pytest.raises(ProblemError, match="threads"):
        run_problem(problem, threads=0)


# ---------------------------------------------------------------------------
# the command line proper


def test_run_writes_report(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    out = tmp_path / "report.json"
    rc = main(["run", str(PROBLEM_DIR / "rootinfo_b3.json"), "--out", str(out)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "task: rootinfo" in captured.out
    assert "weylOrder: 48" in captured.out
    assert "\x1b[" not in captured.out
    written = json.loads(out.read_text())
    jsonschema.validate(instance=written, schema=schema("report.schema.json"))


def test_run_flags_override_file_options(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(
        [
            "run",
            str(PROBLEM_DIR / "generic_matrix.json"),
            "--prime-budget",
            "50",
            "--out",
            str(out),
        ]
    )
    capsys.readouterr()
    assert rc == 0
    assert json.loads(out.read_text())["options"]["primeBudget"] == 50


def test_run_threads_flag(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(
        ["run", str(PROBLEM_DIR / "generic_walk.json"), "--threads", "4", "--out", str(out)]
    )
    capsys.readouterr()
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["verdicts"]["statusCounts"] == {"Certified": 22, "NotRegular": 3}


def test_malformed_rational_is_located(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        '{\n'
        '  "version": 1,\n'
        '  "task": "generic",\n'
        '  "payload": {\n'
        '    "matrix": [["1/0", "0"],\n'
        '               ["0", "1"]]\n'
        '  }\n'
        '}\n'
    )
    rc = main(["run", str(path)])
    captured = capsys.readouterr()
    assert rc == 2
    assert captured.err.startswith(f"{path}:5:")
    assert "malformed rational" in captured.err


def test_missing_walk_seed_is_an_error(tmp_path, capsys):
    problem = load(PROBLEM_DIR / "generic_walk.json")
    del problem["options"]["seed"]
    path = tmp_path / "no_seed.json"
    path.write_text(json.dumps(problem, indent=2))
    rc = main(["run", str(path)])
    captured = capsys.readouterr()
    assert rc == 2
    assert "options.seed" in captured.err


def test_invalid_json_reports_line(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{ nope\n")
    rc = main(["run", str(path)])
    captured = capsys.readouterr()
    assert rc == 2
    assert f"{path}:1: invalid JSON" in captured.err


def test_missing_file(tmp_path, capsys):
    rc = main(["run", str(tmp_path / "absent.json")])
    captured = capsys.readouterr()
    assert rc == 2 and "absent.json" in captured.err


def test_domain_errors_exit_two(tmp_path, capsys):
    # validation passes, but x commutes with g: a library-level refusal
    path = tmp_path / "commuting.json"
    path.write_text(
        json.dumps(
            {
                "version": 1,
                "task": "dichotomy",
                "payload": {
                    "g": [[2, 1], [1, 1]],
                    "x": [[5, 3], [3, 2]],
                    "family": "A",
                    "rank": 1,
                },
            }
        )
    )
    rc = main(["run", str(path)])
    captured = capsys.readouterr()
    assert rc == 2
    assert "HypothesisViolated" in captured.err


def test_selftest_impossible_filter_warns(capsys):
    rc = main(["selftest", "--filter", "zzz-no-such-criterion"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "warning: no criteria match" in captured.out
    assert "0 passed, 0 failed" in captured.out


def test_selftest_single_criterion(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    rc = main(["selftest", "--filter", "bc-scaling"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "PASS bc-scaling" in captured.out
    assert "1 passed, 0 failed" in captured.out
