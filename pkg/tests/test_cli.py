import json

from click.testing import CliRunner

from duadic.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_code_info_json():
    r = run("code-info", "--m", "7", "--S", "0,4,5", "--format", "json")
    assert r.exit_code == 0, r.output
    info = json.loads(r.output)
    assert (info["n"], info["k"]) == (127, 64)
    assert info["duadic"] is True
    assert info["amplified_bch_bound"]["bound"] >= 9
    assert info["properties"] == {"self_dual_extended": True, "doubly_even_extended": True}
    assert info["dual_is_even_weight_subcode"] is True


def test_code_info_m5():
    info = json.loads(run("code-info", "--m", "5", "--S", "0,1,2", "--format", "json").output)
    assert (info["n"], info["k"]) == (31, 16)
    assert info["amplified_bch_bound"]["bound"] >= 5


def test_code_info_not_duadic():
    info = json.loads(run("code-info", "--m", "7", "--S", "0,1,2", "--format", "json").output)
    assert info["duadic"] is False


def test_env_vars():
    r = run("code-info", "--format", "json", env={"DUADIC_M": "5", "DUADIC_S": "0,3,4"})
    info = json.loads(r.output)
    assert info["m"] == 5 and info["S"] == [0, 3, 4]


def test_usage_errors():
    assert run("code-info", "--S", "0,1,2,3,4,5").exit_code == 2
    assert run("code-info", "--S", "x").exit_code == 2
    assert run("table1", "--m", "5").exit_code == 2


def test_code_info_distance(tmp_path):
    out = tmp_path / "info.json"
    r = run("code-info", "--m", "5", "--S", "0,1,2", "--distance", "--format", "json", "--out", str(out))
    assert r.exit_code == 0
    d = json.loads(out.read_text())["distance"]
    assert d["status"] == "certified" and d["lower"] == d["upper"]


def test_code_info_partial_exit():
    r = run("code-info", "--m", "7", "--S", "0,4,5", "--distance", "--budget", "1000", "--format", "json")
    assert r.exit_code == 3
    assert json.loads(r.output)["distance"]["status"] == "partial"


def test_verify_scan():
    r = run("verify", "--scan", "--m", "9")
    assert r.exit_code == 0 and r.output.startswith("PASS")


def test_verify_m11_and_csv():
    r = run("verify", "--m", "11", "--format", "csv")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert lines[0] == "check,passed,detail"
    assert any("lemma 9 m=11" in l for l in lines)


def test_verify_failure_exit():
    # two m = 9 clauses do not hold as stated; the command must flag them
    r = run("verify", "--m", "9", "--format", "json")
    assert r.exit_code == 2
    failed = [c["check"] for c in json.loads(r.stdout) if not c["passed"]]
    assert failed == ["lemma 7 m=9 S={0,1,4}", "lemma 7 m=9 S={2,3,5}"]


def test_table_checkpoint_resume(tmp_path, monkeypatch):
    from duadic import reproduce

    small = [((0, 4, 5), (1, 2, 3), 15, 16, 15, 16)]
    monkeypatch.setattr(reproduce, "TABLE1", small)
    ck = tmp_path / "t1.json"
    r = run("table1", "--checkpoint", str(ck), "--format", "json")
    assert r.exit_code == 0, r.output
    rows = json.loads(r.output)
    assert [(x["k"], x["d"]) for x in rows] == [(64, 15), (63, 16), (64, 15), (63, 16)]
    assert all(v["status"] == "certified" for v in json.loads(ck.read_text()).values())
    again = run("table1", "--checkpoint", str(ck), "--format", "text")
    assert again.exit_code == 0 and "match" in again.output


def test_table_mismatch_exit(monkeypatch):
    from duadic import reproduce

    monkeypatch.setattr(reproduce, "TABLE1", [((0, 4, 5), (1, 2, 3), 15, 17, 15, 16)])
    assert run("table1").exit_code == 2
