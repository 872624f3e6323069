import json
import subprocess
import sys

import pytest

import goldens as g
from pbmac.cli import main
from pbmac.verify import SWEEPS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_subprocess(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pbmac.cli", *argv], capture_output=True, check=False
    )


def test_poly_latex_example(capsys):
    code, out, _ = run(capsys, "poly", "E", "--shape", "0,1,2", "--basement", "2,1,3", "--format", "latex")
    assert code == 0
    assert out == g.E012_213_LATEX + "\n"


def test_naf_text_example(capsys):
    code, out, _ = run(capsys, "naf", "--shape", "1,1,0,2", "--basement", "3,1,2,4", "--format", "text")
    assert code == 0
    assert out.count("# filling") == 8
    assert out.rstrip().endswith("8 fillings")
    assert "maj=1 coinv=2" in out


def test_naf_json(capsys):
    code, out, _ = run(capsys, "naf", "--shape", "1,1,0,2", "--basement", "3,1,2,4", "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 8
    assert sorted(r["coinv"] for r in recs) == g.NAF_COINV
    assert recs[0]["rows"] == [[1], [2], [], [4, 3]]


def test_poly_specializations(capsys):
    _, atom_out, _ = run(capsys, "poly", "E", "--shape", "0,1,2", "--basement", "2,1,3", "--q0t0")
    assert atom_out == "x1*x2*x3 + x1*x3^2\n"
    code, out, _ = run(capsys, "poly", "E", "--shape", "1,0", "--basement", "1,2", "--q0", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 2


def test_default_basement(capsys):
    _, a, _ = run(capsys, "poly", "E", "--shape", "0,1,2")
    _, b, _ = run(capsys, "poly", "E", "--shape", "0,1,2", "--basement", "3,2,1")
    assert a == b


@pytest.mark.parametrize("family", ["P", "HL", "schur"])
def test_expand(capsys, family):
    code, out, _ = run(capsys, "expand", family, "--lambda", "2,1,0", "--basement", "2,1,3")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] and data["basis"]


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "HL", "--lambda", "1,1", "--format", "text")
    assert code == 0 and out.startswith("basis: ")


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == list(SWEEPS)


def test_verify_braid(capsys):
    code, out, _ = run(capsys, "verify", "braid", "--n", "3", "--max-weight", "4")
    assert code == 0 and "ok" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import pbmac.cli as cli

    monkeypatch.setattr(cli, "run_sweep", lambda name, n, w: [{"shape": [1, 0]}])
    code, out, err = run(capsys, "verify", "braid")
    assert code == 1
    assert json.loads(out.splitlines()[0]) == {"sweep": "braid", "counterexample": {"shape": [1, 0]}}
    assert "counterexample" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "E", "--shape", "1,x"],
        ["poly", "F", "--shape", "1,0"],
        ["naf"],
        ["bogus"],
        ["poly", "E", "--shape", "1,0", "--q0", "--q0t0"],
    ],
)
def test_malformed_flags_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "usage" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "E", "--shape", "1,0", "--basement", "1,2,3"],
        ["poly", "E", "--shape", "1,0", "--basement", "1,1"],
        ["naf", "--shape", "1,-1", "--basement", "1,2"],
        ["expand", "P", "--lambda", "1,2"],
        ["verify", "nope"],
        ["verify"],
        ["verify", "braid", "--n", "0"],
    ],
)
def test_semantic_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("pbmac: error:")


def test_byte_stable_across_processes():
    cases = [
        ["poly", "E", "--shape", "0,1,2", "--basement", "2,1,3", "--format", "latex"],
        ["naf", "--shape", "1,1,0,2", "--basement", "3,1,2,4", "--format", "text"],
        ["expand", "schur", "--lambda", "2,1,0", "--basement", "3,1,2"],
    ]
    for argv in cases:
        a = run_subprocess(*argv)
        b = run_subprocess(*argv)
        assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
