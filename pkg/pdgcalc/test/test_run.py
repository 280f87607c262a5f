import json

import pytest

from pdgcalc.model.modelfile import load_model, save_model
from pdgcalc.model.presets import OMEGA_Z1_Z2, PRIME_LOOSE
from pdgcalc.run import CliConfig, protect_values, run


def output(capsys, argv, code=0):
    assert run(argv) == code
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_protect_values():
    assert protect_values(["eval", "x", "--at", "-e2", "-vv"]) == \
        ["eval", "x", "--at", " -e2", "-vv"]
    assert protect_values(["--json", "-h"]) == ["--json", "-h"]


@pytest.mark.parametrize("argv,expected", [
    (["order", "e0", "e1"], ">"),
    (["order", "-e1", "-e2"], "<"),
    (["order", "c", "-e1"], "="),
    (["eval", "chi(x)", "--at", "-e2"], "-e3"),
    (["eval", "ichi(x)", "--at", "c"], "inf"),
    (["eval", "x < inf", "--formula", "--at", "c"], "true"),
    (["eval", "not (x = x)", "--formula", "--at", "-e3"], "false"),
    (["eval", "chi(x)", "--at", "-g1", "--model", "prime-loose"], "-e5"),
])
def test_single_values(capsys, argv, expected):
    out, _ = output(capsys, argv)
    assert out == expected + "\n"


def test_defset(capsys):
    out, _ = output(capsys, ["defset", "chi(x) + [e4] < 0", "--verify"])
    assert out == "[c, -e2]\nfinite: 2 points\noracle: agree\n"


def test_piecewise(capsys):
    out, _ = output(capsys, ["piecewise", "chi(x + [e3])"])
    assert out == "[c, -e2]: chi^{1}(x)\n{-e3}: [0]\n[-e4, top): [e4]\n"


def test_chifn(capsys):
    out, _ = output(capsys, ["chifn", "chi^{1}(x) + [e4]", "--at", "-e2"])
    assert out.splitlines() == [
        "function: chi^{1}(x) + [e4]",
        "domain: [c, top)",
        "monotonicity: increasing",
        "threshold: after(-e3)",
        "sign below: -1",
        "sign above: 1",
        "exceptions: -e3 -> 0",
        "membership: none",
        "zeros: -e3",
        "value: e4 - e3",
    ]


def test_chifn_membership(capsys):
    out, _ = output(capsys, ["chifn", "chi^{1}(x) + [e3 - e5]"])
    assert "membership: -e2 -> -e5" in out.splitlines()


def test_extend(capsys, tmp_path):
    path = str(tmp_path / "ext.model")
    out, _ = output(capsys, ["extend", "1", "1", "--out", path])
    assert out == ("model\nzchains 2\nzchain 1 at-cut 1\nzchain 2 at-cut 2\n"
                   "model: [Omega, Z1, Z2]\nembedding: ok\n")
    assert load_model(path) == OMEGA_Z1_Z2


def test_extend_bad_plan(capsys):
    out, err = output(capsys, ["extend", "1", "2"], code=1)
    assert out == ""
    assert err.startswith("error: Cut 2 is not a special cut of [Omega]")


def test_adjoin(capsys):
    out, _ = output(capsys, ["adjoin", "--at", "e9/2", "--succ", "e5"])
    assert "loose g1 at e9/2 succ e5\n" in out
    assert out.endswith("model: [Omega] + g1\n")
    _, err = output(capsys, ["adjoin", "--at", "e9/2", "--succ", "e7"],
                    code=1)
    assert err.startswith("error: chi of the new class must be e5 or e6")


def test_quotient(capsys):
    out, _ = output(capsys, ["quotient", "--model", "omega-z1", "--keep", "1",
                             "--project", "e2 + b1.0"])
    assert out == "model\nzchains 0\nmodel: [Omega]\nprojection: e2\n"


def test_classify(capsys):
    out, _ = output(capsys, ["classify", "b1.0 + b2.0",
                             "--model", "omega-z1-z2"])
    assert out.splitlines() == [
        "delta: CutPlusNewPoint pivot=b1.0 b=-b1.1 cut=1",
        "class: GammaF plan=[1, 1]",
        "model: [Omega, Z1, Z2]",
        "image: b1.0 + b2.0",
        "embedding: ok",
    ]


def test_classify_plus_line(capsys):
    out, _ = output(capsys, ["classify", "-g1 + e3", "--model",
                             "prime-loose"])
    assert out.splitlines() == [
        "delta: MaxInsideChiSet pivot=g1 b=-e5",
        "class: GammaFPlusLine plan=[] class=g1",
        "model: [Omega] + g1",
        "image: e3 - g1",
        "embedding: ok",
    ]


def test_classify_in_span(capsys):
    _, err = output(capsys, ["classify", "e3"], code=1)
    assert err.startswith("error: e3 lies in the submodel")


def test_check(capsys):
    out, _ = output(capsys, ["check", "--samples", "50",
                             "--property", "chi-zero",
                             "--property", "chi-d-is-c"])
    assert out == "PASS chi-zero n=50\nPASS chi-d-is-c n=50\n"


def test_json(capsys):
    out, _ = output(capsys, ["order", "e0", "e1", "--json"])
    assert json.loads(out) == {"left": "e0", "right": "e1", "order": ">"}
    out, _ = output(capsys, ["piecewise", "x", "--json"])
    assert json.loads(out) == {"region": "[c, top)",
                               "function": "chi^{0}(x)"}
    out, _ = output(capsys, ["defset", "chi(x) + [e4] < 0", "--json"])
    assert json.loads(out) == {"region": "[c, -e2]", "size": 2}


def test_model_file(capsys, tmp_path):
    path = str(tmp_path / "loose.model")
    save_model(PRIME_LOOSE, path)
    out, _ = output(capsys, ["eval", "chi(x)", "--at", "-g1",
                             "--model", path])
    assert out == "-e5\n"
    _, err = output(capsys, ["order", "e0", "e1", "--model",
                             str(tmp_path / "missing")], code=1)
    assert err.startswith("error: No preset or file named")


@pytest.mark.parametrize("argv", [
    [],
    ["order", "e0"],
    ["bogus"],
    ["check", "--property", "no-such-property"],
    ["extend", "one"],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_parse_errors(capsys):
    _, err = output(capsys, ["eval", "div(x, 0)", "--at", "c"], code=1)
    assert err == "error: Invalid divisor 0 at line 1, column 8\n"


def test_config_defaults():
    config = CliConfig()
    assert config.window == 32
    assert config.samples == 10000
    assert config.load_model().describe() == "[Omega]"
