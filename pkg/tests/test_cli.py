import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from heegaard_theta.cli import main, parse_basepoints
from heegaard_theta.source import corpus_path

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
SINGULAR = HERE / "data" / "singular.hgr"


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", corpus_path("d1_w"))
    assert code == 0 and out.strip() == "pass"


def test_validate_json(capsys):
    code, out, _ = run(capsys, "validate", corpus_path("d3_w"), "--format", "json")
    assert code == 0 and json.loads(out) == {"status": "pass", "violations": []}


def test_validate_corrupt(tmp_path, capsys):
    p = tmp_path / "bad.hgr"
    p.write_text('{"genus": 1,')
    code, _, err = run(capsys, "validate", p)
    assert code == 3 and "parse" in err


def test_validate_invalid(tmp_path, capsys):
    doc = json.loads(corpus_path("d1_w").read_text(), parse_float=str)
    doc["matching"] = ["d"]
    p = tmp_path / "fav.hgr"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", p)
    assert code == 1 and "[favourite placement]" in out
    code, _, err = run(capsys, "compute", p)
    assert code == 1


def test_singular(capsys):
    code, _, _ = run(capsys, "validate", SINGULAR)
    assert code == 0
    code, _, err = run(capsys, "compute", SINGULAR)
    assert code == 2 and "not a rational homology sphere" in err


def test_missing_file(capsys):
    code, _, _ = run(capsys, "compute", "/nonexistent/x.hgr")
    assert code == 6


def test_unwritable_output(capsys):
    code, _, _ = run(capsys, "render", corpus_path("d1_w"), "--output", "/nonexistent/dir/x.svg")
    assert code == 6


def test_compute_table(capsys):
    code, out, _ = run(capsys, "compute", corpus_path("d1_w"), "--lambda", "0")
    assert code == 0
    assert out == (GOLDEN / "d1_w.compute.txt").read_text()
    rows = dict(line.split(None, 1) for line in out.splitlines() if line.strip())
    assert rows["ell2"] == "0" and rows["lk"] == "0" and rows["e"] == "1/4"
    assert rows["Theta"] == "-1/4" and rows["p1"] == "-1"


def test_compute_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", corpus_path("d3_w"), "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "d3_w.compute.json").read_text()
    doc = json.loads(out)
    values = {k: Fraction(doc[k]) for k in ("ell2", "lk", "euler", "theta")}
    assert values == {"ell2": Fraction(1, 4), "lk": 0, "euler": Fraction(1, 2), "theta": Fraction(-1, 4)}
    assert values["theta"] == values["ell2"] + values["lk"] - values["euler"]


def test_compute_wprime_lambda(capsys):
    code, out, _ = run(capsys, "compute", corpus_path("d1_wprime"), "--lambda", "0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["theta"] == "1/4" and doc["p1"] == "1" and doc["lambda"] == "0"


def test_decimal(capsys):
    code, out, _ = run(capsys, "compute", corpus_path("d2_w"), "--decimal")
    assert code == 0 and "approx" in out and "-0.250000" in out
    code, out, _ = run(capsys, "compute", corpus_path("d2_w"), "--decimal", "--format", "json")
    doc = json.loads(out)
    assert doc["theta"] == "-1/4" and doc["approx"]["theta"] == -0.25


def test_other_matching_exit_4(capsys):
    code, out, _ = run(capsys, "compute", corpus_path("d1_w"), "--matching", "d")
    assert code == 4
    assert "unavailable" in out
    assert "ell2       0" in out


def test_bad_matching(capsys):
    code, _, _ = run(capsys, "compute", corpus_path("d1_w"), "--matching", "c,d")
    assert code == 4


def test_basepoints_flag(capsys):
    base = run(capsys, "compute", corpus_path("d3_w"), "--format", "json")[1]
    code, out, _ = run(capsys, "compute", corpus_path("d3_w"), "--basepoints", "a1=h,beta_2=g,alpha2=f",
                       "--format", "json")
    assert code == 0
    doc, ref = json.loads(out), json.loads(base)
    assert doc["basepoints"]["alpha_1"] == "h" and doc["basepoints"]["beta_2"] == "g"
    assert doc["theta"] == ref["theta"] and doc["ell2"] == ref["ell2"]


def test_bad_basepoints(capsys):
    assert run(capsys, "compute", corpus_path("d3_w"), "--basepoints", "beta_2=c")[0] == 3
    assert run(capsys, "compute", corpus_path("d3_w"), "--basepoints", "gamma1=c")[0] == 3
    assert run(capsys, "compute", corpus_path("d3_w"), "--lambda", "x")[0] == 3


def test_parse_basepoints():
    assert parse_basepoints("alpha_1=c, b2=e,Beta1=d") == {("alpha", 1): "c", ("beta", 2): "e", ("beta", 1): "d"}
    with pytest.raises(ValueError):
        parse_basepoints("alpha_1")


def test_matchings(capsys):
    code, out, _ = run(capsys, "matchings", corpus_path("d1_w"))
    assert code == 0
    assert "{c}  lk = 0  (Theta-capable)" in out
    assert "{d}  lk = 0  (lk only)" in out
    code, out, _ = run(capsys, "matchings", corpus_path("s3_trivial"), "--format", "json")
    assert json.loads(out)["matchings"] == [{"matching": ["c"], "lk": "0", "theta_capable": True}]


def test_matchings_cap(capsys):
    assert run(capsys, "matchings", corpus_path("d1_w"), "--cap", "0")[0] == 5
    assert run(capsys, "matchings", corpus_path("d1_w"), "--cap", "2")[0] == 0


def test_render(tmp_path, capsys):
    out = tmp_path / "d1.svg"
    code, _, _ = run(capsys, "render", corpus_path("d1_w"), "--output", out)
    assert code == 0 and out.read_text() == (GOLDEN / "d1_w.svg").read_text()
    code, text, _ = run(capsys, "render", corpus_path("d2_w"), "--no-labels")
    assert code == 0 and "<text" not in text


def test_explain_d1(capsys):
    code, out, _ = run(capsys, "explain", corpus_path("d1_w"))
    assert code == 0
    assert out == (GOLDEN / "d1_w.explain.txt").read_text()
    lines = out.splitlines()
    for expected in ("J[1][1] = 1/2", "ell(c,c) = 1/8", "d_e(beta_1) = 0", "d_e(|c,d|_beta_1) = 1/2",
                     "e = 1/4", "Theta = 0 + 0 - 1/4 = -1/4"):
        assert expected in lines


def test_explain_d3(capsys):
    code, out, _ = run(capsys, "explain", corpus_path("d3_w"))
    assert code == 0 and "d_e(g) = -1/2" in out.splitlines()


def test_explain_s3_all_zero(capsys):
    code, out, _ = run(capsys, "explain", corpus_path("s3_trivial"))
    assert code == 0
    values = [line.rsplit("=", 1)[1].strip() for line in out.splitlines()
              if line.startswith(("ell", "lk", "d_e", "e ", "t(", "Theta"))]
    assert values and all(v == "0" for v in values)


def test_combinatorial_input(tmp_path, capsys, diagrams):
    from heegaard_theta.diagram import diagram_to_json

    p = tmp_path / "d2.json"
    p.write_text(json.dumps(diagram_to_json(diagrams["d2_w"])))
    code, out, _ = run(capsys, "compute", p, "--format", "json")
    assert code == 0 and json.loads(out)["theta"] == "-1/4"
    assert run(capsys, "render", p)[0] == 3


def test_deterministic_bytes(capsys):
    for args in (("compute", corpus_path("d3_w")), ("explain", corpus_path("d2_w")),
                 ("matchings", corpus_path("d3_w"), "--format", "json")):
        assert run(capsys, *args) == run(capsys, *args)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heegaard_theta", "compute", str(corpus_path("s3_trivial"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "Theta      0" in proc.stdout
