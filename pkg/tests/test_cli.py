from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from ivpoly.arith import parse_poly
from ivpoly.cli import main
from ivpoly.config import DEFAULT_SEED
from ivpoly.schemas import SCHEMAS


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema: str, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert out.count("\n") == 1
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[schema])
    return code, doc


# -- exit codes -------------------------------------------------------------------------


def test_check_z(capsys):
    code, out, _ = run(capsys, "check", "--ring", "z", "x*(x-1)/2")
    assert code == 0 and "member: yes" in out
    code, out, _ = run(capsys, "check", "--ring", "z", "x/2")
    assert code == 1 and "witness (residue): 1" in out


def test_check_r_and_s_alpha(capsys):
    assert run(capsys, "check", "--ring", "s-alpha", "--minpoly", "x^2-8", "x/2")[0] == 0
    code, out, _ = run(capsys, "check", "--ring", "r-alpha", "--minpoly", "x^2-8", "x/2")
    assert code == 1 and "witness" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "check", "--ring", "z", "x + (2")
    assert code == 2 and err
    code, _, err = run(capsys, "check", "--ring", "z", "x $ 3")
    assert code == 2 and "$" in err
    code, _, err = run(capsys, "check", "--ring", "matrices", "x/2")
    assert code == 2 and "--n" in err
    code, _, _ = run(capsys, "check", "--ring", "r-alpha", "--minpoly", "2*x^2-8", "x/2")
    assert code == 2
    code, _, _ = run(capsys, "check", "--ring", "r-alpha", "--minpoly", "x^2-4", "x/2")
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "--ring", "nowhere", "x"])
    assert info.value.code == 2


def test_parse_error_names_token(capsys):
    code, out, _ = run(capsys, "check", "--ring", "z", "--json", "x^2 + y")
    assert code == 2
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["error"])
    assert "'y'" in doc["error"]["message"] or "y" in doc["error"]["message"].split()


def test_resource_limit_exit(capsys):
    code, out, _ = run(capsys, "check", "--ring", "matrices", "--n", "4", "--enumeration-cap", "100", "--json", "x/7")
    assert code == 3
    jsonschema.validate(json.loads(out), SCHEMAS["error"])
    assert run(capsys, "generate", "--n", "2", "--den", "5", "--degree-cap", "10")[0] == 3
    assert run(capsys, "oracle", "--n", "3", "--matrix-cap", "100", "x/2")[0] == 3


def test_not_in_s_maps_to_nonmember(capsys):
    assert run(capsys, "integralize", "--minpoly", "x^2-8", "x/3")[0] == 1


# -- JSON schemas ----------------------------------------------------------------------


def test_json_reports_validate(capsys):
    _, doc = run_json(capsys, "verdict", "check", "--ring", "ok", "--disc", "5", "x*(x-1)/2")
    assert doc["witness"] == {"kind": "ok_residue", "value": "w"}
    _, doc = run_json(capsys, "verdict", "check", "--ring", "matrices", "--n", "2", "x*(x-1)/2")
    assert doc["member"] is False and doc["witness"]["kind"] == "monic_residue_poly"
    run_json(capsys, "verdict", "check", "--ring", "matrix-class", "--charpoly", "x^2-8", "(x^2-8)/2")
    run_json(capsys, "verdict", "check", "--ring", "subalgebra", "--minpoly", "x^2-8", "x/2")
    run_json(capsys, "verdict", "check", "--ring", "conductor", "--minpoly", "x^2-8", "1")
    _, doc = run_json(capsys, "verdict", "check", "--ring", "s-alpha", "--minpoly", "x^2-8", "x/3")
    assert doc["witness"]["kind"] == "charpoly"
    _, doc = run_json(capsys, "verdict", "oracle", "--n", "2", "x*(x-1)/2")
    assert doc["witness"]["kind"] == "residue_matrix"
    _, doc = run_json(capsys, "generate", "generate", "--n", "2", "--den", "2")
    assert doc["degree"] == 8 and doc["den"] == 2
    _, doc = run_json(capsys, "nullideal", "nullideal", "--matrix", "[[0,8],[1,0]]", "--mod", "4", "--bound", "3")
    assert doc["generators"] == ["x^3", "x^2"]
    _, doc = run_json(capsys, "nullideal", "nullideal", "--charpoly", "x^2+x+1", "--mod", "2", "--bound", "3")
    assert doc["generators"] == ["x^3 + 1", "x^2 + x + 1"]
    _, doc = run_json(capsys, "integralize", "integralize", "--minpoly", "x^2-8", "x/2")
    assert doc["degree"] == 32 and doc["composition_in_r_alpha"] is True
    _, doc = run_json(capsys, "coverage", "density", "coverage", "--order", "x^2-2", "--mod", "2")
    assert doc["not_found"] == 0
    run_json(capsys, "coverage", "density", "coverage", "--order", "x^2-2", "--mod", "3", "--exclude-generators")
    _, doc = run_json(capsys, "sandwich", "density", "sandwich", "--family=5,-1", "x*(x-1)/2")
    assert doc["upper"] == [{"D": 5, "member": False}, {"D": -1, "member": False}]
    _, doc = run_json(capsys, "sandwich_sample", "density", "sandwich", "--samples", "5", "--family=-1,2,5")
    assert doc["violations"] == [] and doc["seed"] == DEFAULT_SEED
    _, doc = run_json(capsys, "falsifier", "density", "falsifier", "--max-degree", "3", "--coeff-bound", "2", "--alpha-bound", "3")
    assert doc["survivors"] == []
    _, doc = run_json(capsys, "algint", "algint", "index", "--minpoly", "x^2-8")
    assert doc["index"] == 2 and doc["field_D"] == 2
    _, doc = run_json(capsys, "algint", "algint", "eval", "--minpoly", "x^2-8", "x/2")
    assert doc["coordinates"] == ["0", "1/2"]
    _, doc = run_json(capsys, "algint", "algint", "preimage", "--minpoly", "x^2-8", "w")
    assert doc["preimage"] == "(x)/2"


# -- stability and round-trips --------------------------------------------------------------


def test_stdin_input(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "--ring", "z", stdin="x*(x-1)/2\n", monkeypatch=monkeypatch)
    assert code == 0


def test_generate_check_pipeline():
    gen = subprocess.run([sys.executable, "-m", "ivpoly", "generate", "--n", "2", "--den", "2"], capture_output=True, text=True, check=True)
    chk = subprocess.run(
        [sys.executable, "-m", "ivpoly", "check", "--ring", "matrices", "--n", "2"], input=gen.stdout, capture_output=True, text=True
    )
    assert chk.returncode == 0, chk.stderr


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "--ring", "matrices", "--n", "2", "(x^5 + x^3 + x)/3"),
        ("check", "--ring", "subalgebra", "--minpoly", "x^2-8", "(x^4 + x)/2"),
        ("oracle", "--n", "2", "(x^4 + x^2)/2"),
    ],
)
def test_text_is_byte_stable_across_jobs(capsys, argv):
    outputs = {run(capsys, *argv, "--jobs", str(j))[1] for j in (1, 2, 3)}
    outputs.add(run(capsys, *argv)[1])
    assert len(outputs) == 1


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "ivpoly.conf"
    cfg.write_text("# caps\ncaps.enumeration = 100\nseed = 7\njobs = 1\n")
    assert run(capsys, "check", "--ring", "matrices", "--n", "4", "--config", str(cfg), "x/7")[0] == 3
    code, out, _ = run(capsys, "density", "sandwich", "--samples", "2", "--family=-1", "--config", str(cfg), "--json")
    assert json.loads(out)["seed"] == 7
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = blue\n")
    assert run(capsys, "check", "--ring", "z", "--config", str(bad), "x")[0] == 2


def test_seeded_sandwich_is_reproducible(capsys):
    a = run(capsys, "density", "sandwich", "--samples", "4", "--seed", "3", "--family=-1,5", "--json")[1]
    b = run(capsys, "density", "sandwich", "--samples", "4", "--seed", "3", "--family=-1,5", "--json")[1]
    assert a == b


@pytest.mark.parametrize(
    "argv, key",
    [
        (("generate", "--n", "2", "--den", "3"), "candidate"),
        (("check", "--ring", "z", "(6*x^3 - 4*x)/4"), "candidate"),
        (("integralize", "--minpoly", "x^2-12", "x/2"), "phi"),
        (("algint", "preimage", "--minpoly", "x^2+3", "1 + 3*w"), "preimage"),
        (("check", "--ring", "s-alpha", "--minpoly", "x^3-2", "x^2/2"), None),
    ],
)
def test_printed_polynomials_reparse(capsys, argv, key):
    code, out, _ = run(capsys, *argv, "--json")
    doc = json.loads(out)
    values = [doc[key]] if key else []
    if "candidate" in doc:
        values.append(doc["candidate"])
    if doc.get("witness") and doc["witness"]["kind"] == "charpoly":
        values.append(doc["witness"]["value"])
    for text in values:
        assert str(parse_poly(text)) == text or parse_poly(str(parse_poly(text))) == parse_poly(text)
    assert values
