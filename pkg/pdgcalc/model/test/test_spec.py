from fractions import Fraction

import pytest

from pdgcalc.errors import ModelError
from pdgcalc.language.parser import parse_element
from pdgcalc.model.presets import (
    OMEGA_Z1, OMEGA_Z1_Z2, PRESETS, PRIME_LOOSE, get_preset,
)
from pdgcalc.model.spec import (
    OMEGA, PRIME, GeneratorId, LooseClass, ModelSpec, Submodel, gen,
)


def test_dominance_is_tuple_order():
    assert gen(OMEGA, 3).dominates(gen(OMEGA, 4))
    assert gen(OMEGA, 100).dominates(gen(1, -100))
    assert gen(OMEGA, 4).dominates(gen(OMEGA, Fraction(9, 2)))
    assert not gen(1, 0).dominates(gen(1, 0))


def test_succ_and_pred():
    assert PRIME.succ(gen(OMEGA, 0)) == gen(OMEGA, 1)
    assert PRIME.pred(gen(OMEGA, 1)) is None
    assert OMEGA_Z1.pred(gen(1, -5)) == gen(1, -6)
    assert PRIME_LOOSE.succ(gen(OMEGA, Fraction(9, 2))) == gen(OMEGA, 5)
    with pytest.raises(ModelError):
        PRIME.succ(gen(OMEGA, Fraction(1, 2)))


def test_successor_images():
    assert PRIME.is_successor_image(gen(OMEGA, 1))
    assert not PRIME.is_successor_image(gen(OMEGA, 0))
    assert OMEGA_Z1.is_successor_image(gen(1, -7))
    assert not PRIME_LOOSE.is_successor_image(gen(OMEGA, Fraction(9, 2)))


def test_constants():
    assert PRIME.c == parse_element("-e1", PRIME)
    assert PRIME.d == parse_element("-e0", PRIME)


@pytest.mark.parametrize("g,expected", [
    (gen(OMEGA, 3), "e3"),
    (gen(1, -2), "b1.-2"),
    (gen(2, 0), "b2.0"),
])
def test_format_generator(g, expected):
    assert OMEGA_Z1_Z2.format_generator(g) == expected


def test_format_loose_and_labels():
    assert PRIME_LOOSE.format_generator(gen(OMEGA, Fraction(9, 2))) == "g1"
    model = ModelSpec(zchains=2, chain_ids=(7, 3))
    assert model.format_generator(gen(1, 4)) == "b7.4"
    assert model.chain_position(3) == 2
    with pytest.raises(ModelError):
        model.chain_position(1)


def test_describe():
    assert PRIME.describe() == "[Omega]"
    assert OMEGA_Z1_Z2.describe() == "[Omega, Z1, Z2]"
    assert PRIME_LOOSE.describe() == "[Omega] + g1"


@pytest.mark.parametrize("kwargs", [
    dict(zchains=-1),
    dict(zchains=2, chain_ids=(1,)),
    dict(zchains=2, chain_ids=(4, 4)),
    dict(zchains=1, chain_ids=(0,)),
    dict(loose=(LooseClass(1, gen(OMEGA, 4), gen(OMEGA, 5)),)),
    dict(loose=(LooseClass(1, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 7)),)),
    dict(loose=(LooseClass(1, gen(OMEGA, Fraction(-1, 2)), gen(OMEGA, 1)),)),
    dict(loose=(LooseClass(1, gen(1, Fraction(1, 2)), gen(1, 1)),)),
    dict(loose=(LooseClass(1, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 5)),
                LooseClass(1, gen(OMEGA, Fraction(7, 2)), gen(OMEGA, 4)))),
    # g1 dominates g2 but has the smaller successor
    dict(loose=(LooseClass(1, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 6)),
                LooseClass(2, gen(OMEGA, Fraction(19, 4)), gen(OMEGA, 5)))),
])
def test_invalid_models(kwargs):
    with pytest.raises(ModelError):
        ModelSpec(**kwargs)


def test_monotone_loose_pair_is_fine():
    model = ModelSpec(loose=(
        LooseClass(1, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 5)),
        LooseClass(2, gen(OMEGA, Fraction(19, 4)), gen(OMEGA, 6)),
    ))
    assert model.describe() == "[Omega] + g1, g2"


def test_generators_near():
    sample = list(OMEGA_Z1.generators_near(2))
    assert gen(OMEGA, 0) in sample
    assert gen(OMEGA, -1) not in sample
    assert gen(1, -2) in sample
    assert len(sample) == 3 + 5


def test_presets():
    assert list(PRESETS) == ["prime", "omega-z1", "omega-z1-z2",
                             "prime-loose"]
    assert get_preset("prime") is PRIME
    with pytest.raises(ModelError):
        get_preset("nope")


def test_submodel():
    sub = Submodel.of([2])
    assert OMEGA in sub.chains
    assert sub.contains(OMEGA_Z1_Z2, gen(2, -3))
    assert not sub.contains(OMEGA_Z1_Z2, gen(1, 0))
    x = parse_element("e2 + b1.0 - b2.4", OMEGA_Z1_Z2)
    assert not sub.in_span(x)
    assert sub.outside(x) == [gen(1, 0)]
    assert sub.describe(OMEGA_Z1_Z2) == "[Omega, Z2]"


def test_submodel_loose():
    g1 = gen(OMEGA, Fraction(9, 2))
    assert not Submodel.of([]).contains(PRIME_LOOSE, g1)
    assert Submodel.of([], [1]).contains(PRIME_LOOSE, g1)
    assert Submodel.of([], [1]).describe(PRIME_LOOSE) == "[Omega, g1]"
    assert isinstance(g1, GeneratorId)
