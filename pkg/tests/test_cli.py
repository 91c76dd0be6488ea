import io
import json

import pytest

from maxconc.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_catalog_table():
    code, text = run("analyze", "--catalog", "ghz3")
    assert code == 0
    assert "A|BC" in text and "EME" in text


def test_analyze_machine_precision():
    code, text = run("analyze", "--catalog", "ame52-cycle", "--format", "machine", "--cuts", "double")
    data = json.loads(text)
    assert code == 0 and len(data["cuts"]) == 10
    assert data["cuts"][0]["concurrence"] == pytest.approx(1.5**0.5, abs=1e-12)
    assert data["classification"]["AME"] is True


def test_analyze_state_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text('{"state": {"graph": {"n": 3, "edges": [], "hyperedges": [[0, 1, 2]]}}}')
    code, text = run("classify", "--state", str(f), "--format", "machine")
    data = json.loads(text)
    assert data["classification"]["EE"] and not data["classification"]["EME"]


def test_bad_state_file_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"state": {"amplitudes": {"n": 3, "values": [[1, 0]]}}}')
    code, _ = run("analyze", "--state", str(f))
    assert code == 2
    assert "expected 8 amplitudes, got 1" in capsys.readouterr().err


def test_missing_file_and_unknown_catalog():
    assert run("analyze", "--state", "/nonexistent.json")[0] == 2
    assert run("analyze", "--catalog", "zzz")[0] == 2
    assert run("analyze")[0] == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "3"])
    assert exc.value.code == 2


def test_enumerate_reports_pair_rule():
    code, text = run("enumerate", "--n", "3", "--support", "4")
    assert code == 0
    assert "48 of 80" in text


def test_enumerate_too_large():
    assert run("enumerate", "--n", "6", "--support", "32")[0] == 2


def test_enumerate_machine_dedupe():
    code, text = run("enumerate", "--n", "3", "--support", "1-8", "--dedupe", "--format", "machine")
    lines = [json.loads(x) for x in text.strip().splitlines()]
    assert lines[-1]["summary"]["examined"] == 6560
    assert lines[-1]["summary"]["reported"] == len(lines) - 1


def test_optimize_deterministic():
    args = ("optimize", "--n", "3", "--cuts", "single", "--restarts", "2", "--max-iter", "200",
            "--seed", "11", "--format", "machine")
    assert run(*args) == run(*args)


def test_verify_paper_exit_codes():
    code, text = run("verify-paper")
    assert code == 0
    assert "typo?" in text and "four-qubit probe" in text
    assert run("verify-paper", "--strict")[0] == 1
