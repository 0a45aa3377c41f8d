import json

import pytest

from logdiv.cli import main

XYZ = "vars x y z\n1 0 0\n0 1 0\n0 0 1\n"
ZIEGLER = "vars x y z\n2*x+y+z, x+y+z, 2*x+3*y+4*z, z, x+3*z, y, 2*x+3*y+z, x, x+2*y+3*z\n"
BRACELET = "vars x0 x1 x2 x3\nx1*x2*x3*(x1+x0)*(x2+x0)*(x3+x0)*(x1+x2+x0)*(x1+x3+x0)*(x2+x3+x0)\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_zeta_on_boolean(tmp_path, capsys, tmp_cache):
    code, out = run(capsys, "zeta", write(tmp_path, "xyz.arr", XYZ))
    assert code == 0
    assert json.loads(out)["result"]["string"] == "1/(s + 1)^3"


def test_reproduce_ziegler(capsys, tmp_cache):
    code, out = run(capsys, "reproduce", "ziegler-degenerate")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["result"]["extra"]["series_string"] == "T^8 + 4*T^9 + 6*T^10 + 6*T^11 + 4*T^12 + T^13"


def test_reproduce_unknown_example(capsys, tmp_cache):
    code, out = run(capsys, "reproduce", "nope")
    assert code == 1 and json.loads(out)["error"]["type"] == "input"


def test_tame_bracelet_exits_zero_with_fails(tmp_path, capsys, tmp_cache):
    code, out = run(capsys, "tame", write(tmp_path, "b.poly", BRACELET))
    data = json.loads(out)
    assert code == 0
    assert data["result"]["verdict"] == "fails" and data["result"]["witness"]["pdim"] == 2


def test_cache_hit_is_byte_identical(tmp_path, capsys, tmp_cache):
    src = write(tmp_path, "z.arr", ZIEGLER)
    code1, cold = run(capsys, "jacmod", src)
    assert code1 == 0 and any(tmp_cache.rglob("*.json"))
    code2, warm = run(capsys, "jacmod", src)
    assert code2 == 0 and warm == cold
    _, verified = run(capsys, "jacmod", src, "--verify-cache")
    assert verified == cold
    _, bypass = run(capsys, "jacmod", src, "--no-cache")
    assert bypass == cold


def test_order_change_is_cache_miss(tmp_path, capsys, tmp_cache):
    src = write(tmp_path, "xyz.poly", "vars x y z\nx*y*z*(x+y+z)\n")
    run(capsys, "logder0", src)
    n1 = len(list(tmp_cache.rglob("*.json")))
    run(capsys, "logder0", src, "--order", "lex")
    assert len(list(tmp_cache.rglob("*.json"))) == n1 + 1


def test_corrupt_cache_is_recomputed(tmp_path, capsys, tmp_cache):
    src = write(tmp_path, "xyz.arr", XYZ)
    _, first = run(capsys, "zeta", src)
    for p in tmp_cache.rglob("*.json"):
        p.write_text("garbage")
    with pytest.warns(UserWarning):
        code, again = run(capsys, "zeta", src)
    assert code == 0 and again == first


def test_verify_cache_detects_tampering(tmp_path, capsys, tmp_cache):
    src = write(tmp_path, "xyz.arr", XYZ)
    run(capsys, "zeta", src)
    for p in tmp_cache.rglob("*.json"):
        entry = json.loads(p.read_text())
        entry["value"]["report"]["string"] = "wrong"
        p.write_text(json.dumps(entry))
    code, out = run(capsys, "zeta", src, "--verify-cache")
    assert code == 1 and json.loads(out)["error"]["type"] == "cache"
    code, out = run(capsys, "zeta", src)
    assert json.loads(out)["result"]["string"] == "1/(s + 1)^3"


def test_exit_codes(tmp_path, capsys, tmp_cache):
    code, out = run(capsys, "jacmod", "--poly", "x^2 + y", "--vars", "x y")
    assert code == 2 and json.loads(out)["error"]["type"] == "hypothesis"
    code, out = run(capsys, "jacmod", tmp_path / "missing")
    assert code == 1 and json.loads(out)["error"]["type"] == "input"
    code, out = run(capsys, "jacmod", "--poly", "x +", "--vars", "x y")
    assert code == 1
    code, out = run(capsys, "jacmod", write(tmp_path, "z.arr", ZIEGLER), "--max-pairs", "3", "--no-cache")
    assert code == 3 and json.loads(out)["error"]["type"] == "budget"
    code, out = run(capsys, "jacmod", "--bogus-flag")
    assert code == 1 and json.loads(out.splitlines()[-1])["error"]["type"] == "usage"
    code, _ = run(capsys, "jacmod", "--timeout", "-1", "--poly", "x", "--vars", "x")
    assert code == 1
    code, out = run(capsys, "zeta", "--poly", "x^2 + y^2", "--vars", "x y")
    assert code == 2


def test_inconclusive_certificate_exits_two(capsys, tmp_cache):
    code, out = run(capsys, "nd-check", "--poly", "x*y*z", "--vars", "x y z")
    assert code == 2 and json.loads(out)["result"]["verdict"] == "inconclusive"


def test_strong_euler_points(capsys, tmp_cache):
    args = ["strong-euler", "--poly", "z*x^4 + x*y^4 + y^5", "--vars", "x y z"]
    code, out = run(capsys, *args, "--point", "0,0,0")
    assert code == 0 and json.loads(out)["result"]["verdict"] == "holds"
    code, out = run(capsys, *args, "--point", "0,0,1")
    assert code == 0 and json.loads(out)["result"]["verdict"] == "fails"
    code, out = run(capsys, *args, "--point", "1,1,1")
    assert code == 2


def test_table_format_and_figures(tmp_path, capsys, tmp_cache):
    figs = tmp_path / "figs"
    src = write(tmp_path, "z.arr", ZIEGLER)
    code, out = run(capsys, "milnor-window", src, "--format", "table", "--figures", figs)
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.splitlines())
    assert rows["result.window[1].dim"] == "1"
    assert (figs / "milnor-window-hilbert.png").exists()
    for cmd in ["lattice", "zeta-poles", "syzygetic"]:
        code, out = run(capsys, cmd, src, "--figures", figs)
        assert code == 0
        assert all((figs / name).exists() for name in json.loads(out)["figures"])
    code, out = run(capsys, "omega", "--poly", "x*y*(x+y)", "--vars", "x y", "--i", "1", "--figures", figs)
    assert json.loads(out)["figures"] == ["omega-betti.png"]
    code, out = run(capsys, "lc-check", "--poly", "x*y", "--vars", "x y", "--figures", figs, "--b-max", "2")
    data = json.loads(out)
    assert data["result"]["intermediate_vanishing"] and data["result"]["terminal_match"]
    assert (figs / "lc-check-cohomology.png").exists()


@pytest.mark.parametrize(
    "cmd, extra",
    [
        ("logder", []),
        ("logder0", []),
        ("free", []),
        ("euler-locus", []),
        ("holonomic", []),
        ("liouville", []),
        ("liouville-cm", []),
        ("tilde-liouville", []),
        ("ann-order-one", []),
        ("jacmod", ["--route", "variables"]),
        ("decompose", []),
        ("nd-candidates", []),
        ("zeta", ["--model", "full"]),
        ("omega", ["--i", "2", "--flavor", "euler"]),
    ],
)
def test_every_command_runs(cmd, extra, capsys, tmp_cache):
    code, out = run(capsys, cmd, "--poly", "x*y*z*(x+y+z)", "--vars", "x y z", *extra)
    assert code == 0, out
    assert json.loads(out)["command"] == cmd


def test_one_form_per_line_is_an_arrangement(tmp_path, capsys, tmp_cache):
    src = write(tmp_path, "lines.txt", "vars x y\nx\ny\nx + y\n")
    code, out = run(capsys, "zeta", src)
    assert code == 0 and json.loads(out)["result"]["string"] == "(2 - s)/((s + 1)*(3*s + 2))"
    src = write(tmp_path, "poly.txt", "vars x y\nx^3 +\ny^3\n")
    code, out = run(capsys, "jacmod", src)
    assert code == 0 and json.loads(out)["input"]["f"] == "x^3 + y^3"
