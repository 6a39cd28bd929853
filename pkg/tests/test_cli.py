import io
import json
from contextlib import redirect_stdout

import pytest

from ehk.cli import main


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_bracket_examples():
    code, out = run(["bracket", "--k", "0", "--x", "1,0", "--y", "0,1"])
    assert code == 0 and out == "(q - q^-1) w[1,1]\n"
    code, out = run(["bracket", "--k", "2", "--x", "0,1", "--y", "0,-1"])
    assert code == 0 and out == "2\n"
    code, out = run(["bracket", "--k", "0", "--x", "1,1", "--y", "2,2"])
    assert code == 0 and out == "0\n"


def test_fock_examples():
    code, out = run(["fock", "--k", "0", "--word", "0,1", "--state", "[]"])
    assert code == 0 and out == "((t - t^-1)/(q - q^-1)) P[]\n"
    code, out = run(["fock", "--k", "0", "--word", "2,0", "--state", "[]"])
    assert code == 0 and out == "-(q^2 - q^-2) P[2]\n"
    code, out = run(["fock", "--k", "0", "--word", "", "--state", "[-1|2]"])
    assert code == 0 and out == "P[-1|2]\n"


def test_normalize_and_express():
    code, out = run(["normalize", "--k", "0", "--word", "0,1 1,0"])
    assert code == 0 and out == "-(q - q^-1) w[1,1] + w[1,0] w[0,1]\n"
    code, out = run(["express", "--x", "5,0"])
    assert code == 0 and out == "((1)/(q^5 - q^-5)) [w[0,-1], w[5,1]]\n"


def test_hecke_commands():
    code, out = run(["hecke-dim", "--n", "0", "--f", "1,t^2"])
    assert code == 0 and out == "1\n"
    code, out = run(["hecke-dim", "--n", "2", "--f", "1,0,t^2"])
    assert code == 0 and out == "8\n"
    code, out = run(["hecke-dim", "--n", "3", "--f", "1,t^2"])
    assert code == 0 and out == "6\n"

    a = json.dumps([{"word": {"exponents": [0, 0], "perm": [2, 1]}, "coeff": "1"}])
    code, out = run(["hecke-mul", "--n", "2", "--f", "1,t^2", "--a", a, "--b", a])
    assert code == 0
    assert out == "1 + (q - q^-1) T1\n"

    code, out = run(["cocenter", "--n", "1", "--f", "1,0,t^2", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 2


def test_vf_act_and_hoops():
    code, out = run(["vf-act", "--f", "1,t^2", "--word", "1,1"])
    assert code == 0 and out == "rank 1: -t^2 [1]\n"
    code, out = run(["hoop-scalars", "--f", "1,t^2", "--rmax", "1"])
    assert code == 0
    assert out.splitlines() == [
        "w[1,0] v_f = (-t^2)/(q - q^-1)",
        "w[-1,0] v_f = (t^-2)/(q - q^-1)",
    ]


def test_json_output_roundtrips():
    code, out = run(["bracket", "--json", "--k", "0", "--x", "1,0", "--y", "0,1"])
    assert code == 0
    data = json.loads(out)
    assert data == [{"coeff": "q - q^-1", "word": [[1, 1]]}]
    code, out = run(["fock", "--json", "--k", "0", "--word", "2,0", "--state", "[]"])
    data = json.loads(out)
    assert data == [{"coeff": "-q^2 + q^-2", "partition": "[2]"}]


def test_output_is_deterministic():
    argv = ["fock", "--k", "1", "--word", "1,1 -1,-1", "--state", "[-1|1]"]
    outs = {run(argv)[1] for _ in range(3)}
    assert len(outs) == 1


def test_verify_command():
    code, out = run(["verify", "--suite", "confluence"])
    assert code == 0
    assert "confluence" in out and "0 identities" not in out
    code, out = run(["verify", "--suite", "mouse", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["failures"] == []
    code, _ = run(["verify", "--suite", "jacobi", "--bound", "1"])
    assert code == 0


def test_verify_unknown_suite():
    code, _ = run(["verify", "--suite", "nope"])
    assert code == 2


def test_error_reporting():
    code, _ = run(["bracket", "--k", "0", "--x", "0,0", "--y", "0,1"])
    assert code == 2
    code, _ = run(["hecke-dim", "--n", "2", "--f", "1,1"])  # bad constant term
    assert code == 2


def test_tensor_fock_command():
    code, out = run(["tensor-fock", "--k1", "0", "--k2", "0", "--x", "2,0",
                     "--state1", "[1]", "--state2", "[]"])
    assert code == 0
    assert out == "-(q^2 - q^-2) P[1](x)P[2] - (q^2 - q^-2) P[1,2](x)P[]\n"
