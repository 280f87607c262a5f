import pytest

from pdgcalc.errors import ModelFileError
from pdgcalc.model.modelfile import (
    dump_model, load_model, parse_model, parse_position, resolve_model,
    save_model,
)
from pdgcalc.model.presets import PRESETS, PRIME_LOOSE
from pdgcalc.model.spec import PRIME, gen

from .fixtures import *

MODEL_TEXT = """
# two chains, labelled out of order
model
zchains 2
zchain 7 at-cut 1
zchain 3 at-cut 2
loose g1 at b3.1/2 succ b3.1
"""


def test_parse_model():
    model = parse_model(MODEL_TEXT)
    assert model.zchains == 2
    assert model.chain_ids == (7, 3)
    assert model.describe() == "[Omega, Z7, Z3] + g1"
    lc = model.loose_named(1)
    assert lc.generator == gen(2, "1/2")
    assert lc.succ == gen(2, 1)


def test_dump_then_parse(model):
    assert parse_model(dump_model(model)) == model


def test_dump_prime_loose():
    assert dump_model(PRIME_LOOSE) == \
        "model\nzchains 0\nloose g1 at e9/2 succ e5\n"


@pytest.mark.parametrize("text,lineno", [
    ("zchains 1\n", 1),
    ("model\nzchains 1\nzchains 2\n", 3),
    ("model\nzchains 1\nchains 2\n", 3),
    ("model\nzchains 2\nzchain 1 at-cut 1\n", 3),
    ("model\nloose g1 at e4 succ e5\n", 2),
    ("model\nloose g1 at x9/2 succ e5\n", 2),
    ("model\nloose g1 at b2.1/2 succ b2.1\n", 2),
])
def test_bad_model_files(text, lineno):
    with pytest.raises(ModelFileError) as info:
        parse_model(text)
    assert info.value.lineno == lineno


def test_empty_model_file():
    with pytest.raises(ModelFileError):
        parse_model("# nothing\n")


def test_parse_position():
    assert parse_position("e9/2", ()) == gen(0, "9/2")
    assert parse_position("b4.-1", (2, 4)) == gen(2, -1)
    with pytest.raises(ModelFileError):
        parse_position("b5.0", (2, 4))


def test_save_and_load(tmp_path):
    path = str(tmp_path / "loose.model")
    save_model(PRIME_LOOSE, path)
    assert load_model(path) == PRIME_LOOSE
    assert resolve_model(path) == PRIME_LOOSE


def test_resolve_model(tmp_path):
    assert resolve_model(None) is PRIME
    assert resolve_model("omega-z1") is PRESETS["omega-z1"]
    with pytest.raises(ModelFileError):
        resolve_model(str(tmp_path / "missing.model"))
