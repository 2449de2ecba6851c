import json
import os
import subprocess

import pytest

CLI = os.environ.get("GBASIC_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="GBASIC_CLI not set")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr or proc.stdout
    return proc.stdout


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_generate_and_cb(tmp_path):
    out = str(tmp_path / "grid.json")
    run("generate", "grid", "--a", "3", "--b", "3", "--out", out)
    with open(out) as fh:
        assert len(json.load(fh)["points"]) == 9

    assert "CB index: 3" in run("cb", "index", out)
    assert "true" in run("cb", "check", out, "--degree", "3")

    report = json.loads(run("cb", "bounds", out, "--format", "json"))
    assert report["cb_index"] == 3
    assert report["a_min"] == 6
    assert report["bound_holds"]

    text = run("cb", "bounds", out)
    assert "CB index: 3" in text
    assert "a_min = 6" in text


def test_cb_check_false_is_exit_zero(tmp_path):
    out = str(tmp_path / "grid2.json")
    run("generate", "grid", "--a", "2", "--b", "2", "--out", out)
    assert "false" in run("cb", "check", out, "--degree", "2")


def test_generate_random_deterministic(tmp_path):
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    run("generate", "random", "--n", "7", "--seed", "42", "--out", a)
    run("generate", "random", "--n", "7", "--seed", "42", "--out", b)
    assert open(a).read() == open(b).read()


def test_betti_formats(tmp_path):
    pts = write(tmp_path, "tri.json",
                {"points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    table = json.loads(run("betti", pts, "--format", "json"))
    assert table["betti"]["1"]["2"] == 3
    assert table["a_degrees"] == [3, 3]

    text = run("betti", pts)
    assert "total:" in text
    assert "b-degrees (generators): 2 2 2" in text


def test_mu_fitting_and_shrink(tmp_path):
    module = write(tmp_path, "m.json", {
        "num_vars": 3,
        "row_twists": [0, 0],
        "col_twists": [1],
        "entries": [["x0"], ["x1"]],
    })
    pts = write(tmp_path, "p.json",
                {"points": [["0", "0", "1"], ["1", "0", "0"]]})
    mu = json.loads(run("mu", module, pts, "--format", "json"))
    assert [row["mu"] for row in mu["results"]] == [2, 1]

    fit = json.loads(
        run("fitting", module, pts, "--index", "1", "--format", "json"))
    assert [row["vanishes"] for row in fit["results"]] == [True, False]

    free = write(tmp_path, "free.json", {
        "num_vars": 3,
        "row_twists": [0, 0],
        "col_twists": [],
        "entries": [[], []],
    })
    secs = write(tmp_path, "s.json", {"sections": [
        {"degree": 0, "coords": ["1", "0"]},
        {"degree": 0, "coords": ["0", "0"]},
    ]})
    one_pt = write(tmp_path, "one.json", {"points": [["1", "0", "0"]]})
    report = json.loads(run("shrink", free, secs, one_pt,
                            "--weights", "1", "--format", "json"))
    assert report["step"]["lambdas"] == ["1"]
    assert all(row["ok"] for row in report["certificate"])


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    run("cb", "index", str(bad), expect=1)

    missing = str(tmp_path / "missing.json")
    run("betti", missing, expect=1)

    # hypothesis violation: zero family asked for positive width
    free = write(tmp_path, "free.json", {
        "num_vars": 3,
        "row_twists": [0, 0],
        "col_twists": [],
        "entries": [[], []],
    })
    secs = write(tmp_path, "s.json", {"sections": [
        {"degree": 0, "coords": ["1", "0"]},
        {"degree": 0, "coords": ["0", "0"]},
    ]})
    pts = write(tmp_path, "p.json", {"points": [["0", "1", "0"]]})
    run("shrink", free, secs, pts, "--weights", "2", expect=3)


def test_text_and_json_agree(tmp_path):
    out = str(tmp_path / "g.json")
    run("generate", "grid", "--a", "2", "--b", "3", "--out", out)
    report = json.loads(run("cb", "bounds", out, "--format", "json"))
    text = run("cb", "bounds", out)
    assert f"CB index: {report['cb_index']}" in text
    assert f"a_min = {report['a_min']}" in text
