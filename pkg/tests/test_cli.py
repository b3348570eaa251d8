import json
import subprocess
import sys

import pytest

from pw_hilbert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_betti_json(capsys):
    code, out = run(capsys, "betti", "--surface", "Y", "--n", "2")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == "pw-hilbert/1"
    assert data["results"]["betti"] == [1, 2, 3, 4, 2] == data["results"]["oracle"]
    _, out_x = run(capsys, "betti", "--surface", "X", "--n", "2")
    assert json.loads(out_x)["results"]["betti"] == [1, 2, 3, 4, 2]
    _, out1 = run(capsys, "betti", "--surface", "Y", "--n", "1")
    assert json.loads(out1)["results"]["betti"] == [1, 2, 1]


def test_betti_table(capsys):
    code, out = run(capsys, "betti", "--surface", "Y", "--n", "1", "--format", "table")
    assert code == 0 and "0\t1\t1" in out and "oracle_match: pass" in out


def test_filtration(capsys):
    _, out_p = run(capsys, "filtration", "--surface", "X", "--n", "2", "--which", "P")
    _, out_h = run(capsys, "filtration", "--surface", "Y", "--n", "2", "--which", "halfW")
    rows_p = {(r["d"], r["k"]): r["graded"] for r in json.loads(out_p)["results"]["rows"]}
    rows_h = {(r["d"], r["k"]): r["graded"] for r in json.loads(out_h)["results"]["rows"]}
    assert rows_p[(2, 1)] == 1 and rows_p == rows_h
    _, out_w = run(capsys, "filtration", "--surface", "Y", "--n", "0", "--which", "W")
    assert json.loads(out_w)["results"]["rows"] == [{"d": 0, "dim": 1, "graded": 1, "k": 0, "partitions": ["[]"]}]


@pytest.mark.parametrize("surface,which", [("X", "W"), ("X", "halfW"), ("Y", "P"), ("Y", "L")])
def test_incompatible_filtration_is_usage_error(surface, which):
    with pytest.raises(SystemExit) as exc:
        main(["filtration", "--surface", surface, "--n", "2", "--which", which])
    assert exc.value.code == 2


def test_bad_flags_exit_2():
    for argv in (["betti", "--surface", "Z", "--n", "1"], ["betti", "--surface", "Y", "--n", "-1"], ["verify", "xx", "--n", "1"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_verify(capsys):
    code, out = run(capsys, "verify", "pw", "--n", "3")
    assert code == 0 and json.loads(out)["verdicts"]["all_passed"]
    code, out = run(capsys, "verify", "all", "--n", "2")
    assert code == 0
    code, out = run(capsys, "verify", "chl", "--n", "0")
    assert code == 0


def test_verify_failure_exits_1(capsys, monkeypatch):
    import pw_hilbert.cli as cli
    monkeypatch.setattr(cli, "run_checks", lambda which, n, cache=None: [{"check": "x", "params": {}, "passed": False}])
    code, _ = run(capsys, "verify", "chl", "--n", "1")
    assert code == 1


def test_verify_budget_warning(capsys):
    main(["verify", "pw", "--n", "7"])
    assert "warning" in capsys.readouterr().err


def test_oracle(capsys):
    _, out = run(capsys, "oracle", "--n-max", "2")
    res = json.loads(out)["results"]
    assert res["rows"][1][:3] == [1, 2, 1] and res["rows"][2] == [1, 2, 3, 4, 2]
    assert res["euler"][1:] == [0, 0]
    _, out1 = run(capsys, "oracle", "--n-max", "1")
    assert json.loads(out1)["results"]["rows"][1] == [1, 2, 1]


def test_reports_are_byte_identical(capsys):
    for argv in (["verify", "all", "--n", "3"], ["filtration", "--surface", "X", "--n", "3", "--which", "P"]):
        _, a = run(capsys, *argv)
        _, b = run(capsys, *argv)
        assert a == b


def test_subprocess_determinism_and_exit_code():
    cmd = [sys.executable, "-m", "pw_hilbert", "verify", "all", "--n", "2"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_cache_dir_and_env_override(capsys, tmp_path, monkeypatch):
    plain = run(capsys, "betti", "--surface", "Y", "--n", "3")[1]
    cached = run(capsys, "--cache-dir", str(tmp_path / "a"), "betti", "--surface", "Y", "--n", "3")[1]
    again = run(capsys, "--cache-dir", str(tmp_path / "a"), "betti", "--surface", "Y", "--n", "3")[1]
    assert plain == cached == again
    assert any((tmp_path / "a").iterdir())
    monkeypatch.setenv("PW_HILBERT_CACHE", str(tmp_path / "env"))
    run(capsys, "--cache-dir", str(tmp_path / "b"), "betti", "--surface", "Y", "--n", "2")
    assert any((tmp_path / "env").iterdir()) and not (tmp_path / "b").exists()


def test_timing_is_opt_in(capsys):
    _, out = run(capsys, "oracle", "--n-max", "1")
    assert "timing" not in json.loads(out)
    _, out = run(capsys, "--timing", "oracle", "--n-max", "1")
    assert "seconds" in json.loads(out)["timing"]
