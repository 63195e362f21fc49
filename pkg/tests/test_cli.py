import csv
import json
import subprocess
import sys

import pytest

from monohecke import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rpoly_single(capsys):
    # X_{s1} = {d(1,0,0), d(0,1,0)} when b = 2
    for expr, expected in [("d(1,0,0)", "a*v^-1"), ("d(0,1,0)", "a*v^-1"), ("d(1,1,0)", "0"),
                           ("e", "0"), ("s1", "1")]:
        code, out, _ = run(capsys, "rpoly", "--n", "3", "--b", "2", "--x", expr, "--y", "s1")
        assert code == 0
        assert json.loads(out)["r_star"] == expected


@pytest.mark.parametrize("method", ["recursive", "direct", "closed", "cross-check"])
def test_rpoly_methods_agree(capsys, method):
    code, out, _ = run(capsys, "rpoly", "--n", "3", "--b", "3", "--x", "e", "--y", "s1*s2*s1",
                       "--method", method)
    assert code == 0
    assert json.loads(out)["r_star"] == "3*a^3*v^-3 + a*v^-1"


def test_rpoly_all_csv(tmp_path, capsys):
    path = tmp_path / "r.csv"
    code, _, _ = run(capsys, "rpoly", "--n", "2", "--b", "2", "--all", "--method", "cross-check",
                     "--out", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert rows[0] == {"x": "e", "y": "e", "r_star": '[{"a_deg": 0, "v_deg": 0, "coeff": "1"}]'}


def test_rpoly_cross_check_failure(capsys, monkeypatch):
    from monohecke import rpoly
    real = rpoly.r_table

    def broken(P, method="recursive"):
        t = dict(real(P, method))
        if method == "closed":
            t.pop(next(iter(t)))
        return t

    monkeypatch.setattr(cli, "r_table", broken)
    code, out, _ = run(capsys, "rpoly", "--n", "2", "--b", "2", "--all", "--method", "cross-check")
    assert code == 1
    assert json.loads(out)["error"] == "R* methods disagree"


def test_order_dot(tmp_path, capsys):
    path = tmp_path / "g213.dot"
    code, out, _ = run(capsys, "order", "--n", "3", "--b", "2", "--hasse", str(path), "--components")
    assert code == 0
    summary = json.loads(out)
    assert summary["components"] == 2
    assert [c["size"] for c in summary["component_list"]] == [24, 24]
    text = path.read_text()
    assert text.count("subgraph cluster_") == 2
    run(capsys, "order", "--n", "3", "--b", "2", "--hasse", str(tmp_path / "again.dot"))
    assert (tmp_path / "again.dot").read_text() == text


def test_kl(tmp_path, capsys):
    code, out, _ = run(capsys, "kl", "--n", "3", "--b", "2", "--y", "s1")
    rows = json.loads(out)
    assert code == 0
    assert {r["p"] for r in rows if r["x"] != "s1"} == {"1/2"}
    path = tmp_path / "kl.csv"
    assert run(capsys, "kl", "--n", "2", "--b", "2", "--out", str(path))[0] == 0
    assert path.read_text().startswith("x,y,p_star,p\n")


def test_hecke_mul(capsys):
    code, out, _ = run(capsys, "hecke-mul", "--n", "2", "--b", "2", "s1", "s1")
    assert code == 0
    assert out.strip() == "(1)*T[e] + (a*v^-1)*T[s1*d(0,1)] + (a*v^-1)*T[s1*d(1,0)]"
    code, out, _ = run(capsys, "hecke-mul", "--n", "2", "--b", "2", "s1", "e", "--json")
    assert json.loads(out)[0]["element_expr"] == "s1"


def test_verify_glnq(capsys):
    code, out, _ = run(capsys, "verify-glnq", "--n", "2", "--q", "7", "--a", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] and rep["params"]["b"] == 3


def test_verify_glnq_failure_exit(capsys, monkeypatch):
    from monohecke.glnq import oracle
    monkeypatch.setattr(oracle.GLOracle, "check_integral", lambda self: (False, {"forced": True}))
    code, out, _ = run(capsys, "verify-glnq", "--n", "2", "--q", "3", "--a", "1")
    assert code == 1
    assert '"error": "GL oracle verification failed"' in out


@pytest.mark.parametrize("argv", [
    ["verify-glnq", "--n", "3", "--q", "3", "--a", "1"],
    ["verify-glnq", "--n", "2", "--q", "5", "--a", "2"],
    ["verify-glnq", "--n", "2", "--q", "7", "--a", "4"],
    ["rpoly", "--n", "3", "--b", "2", "--x", "s4", "--y", "s1"],
    ["rpoly", "--n", "3", "--b", "2", "--x", "e"],
    ["hecke-mul", "--n", "2", "--b", "0", "e", "e"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(err)


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        cli.main(["rpoly"])
    assert exc.value.code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--n", "2", "--b", "3")
    assert code == 0 and json.loads(out)["pass"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "monohecke", "hecke-mul", "--n", "2", "--b", "1",
                          "s1", "s1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "(1)*T[e] + (a*v^-1)*T[s1]"
