from fractions import Fraction

import pytest

from pdgcalc.errors import (
    BetweenChainsError, InvalidArgumentError, MonotonicityError,
)
from pdgcalc.extensions.loose import adjoin_class, admissible_successors
from pdgcalc.extensions.quotient import quotient
from pdgcalc.language.parser import parse_element
from pdgcalc.model.group import chi
from pdgcalc.model.presets import OMEGA_Z1, OMEGA_Z1_Z2, PRIME_LOOSE
from pdgcalc.model.spec import OMEGA, PRIME, GeneratorId, gen
from pdgcalc.oracle.sampling import random_element
from pdgcalc.oracle.suite import all_pass, axiom_suite, format_report

from .fixtures import *


def test_admissible_successors():
    assert admissible_successors(gen(OMEGA, Fraction(9, 2))) == \
        (gen(OMEGA, 5), gen(OMEGA, 6))
    assert admissible_successors(gen(1, Fraction(-7, 3))) == \
        (gen(1, -2), gen(1, -1))


def test_adjoin_class():
    model = adjoin_class(PRIME, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 5))
    assert model == PRIME_LOOSE
    assert chi(parse_element("-g1", model)) == parse_element("-e5", model)


def test_adjoin_second_class(suite_samples):
    model = adjoin_class(PRIME_LOOSE, gen(OMEGA, Fraction(19, 4)),
                         gen(OMEGA, 6))
    assert model.describe() == "[Omega] + g1, g2"
    suite = axiom_suite(model, samples=suite_samples)
    assert all_pass(suite), format_report(suite)


def test_adjoin_on_z_chain(suite_samples):
    model = adjoin_class(OMEGA_Z1, gen(1, Fraction(-1, 2)), gen(1, 1))
    assert model.format_generator(gen(1, Fraction(-1, 2))) == "g1"
    suite = axiom_suite(model, samples=suite_samples)
    assert all_pass(suite), format_report(suite)


@pytest.mark.parametrize("gap,succ,error", [
    (gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 7), MonotonicityError),
    (gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 4), MonotonicityError),
    (gen(OMEGA, Fraction(-1, 2)), gen(OMEGA, 1), BetweenChainsError),
    (GeneratorId(OMEGA, None), gen(OMEGA, 1), BetweenChainsError),
    (gen(OMEGA, 4), gen(OMEGA, 5), InvalidArgumentError),
    (gen(2, Fraction(1, 2)), gen(2, 1), InvalidArgumentError),
])
def test_adjoin_errors(gap, succ, error):
    with pytest.raises(error):
        adjoin_class(OMEGA_Z1, gap, succ)


def test_adjoin_breaks_monotonicity():
    # above g1 but with the larger successor
    with pytest.raises(MonotonicityError):
        adjoin_class(PRIME_LOOSE, gen(OMEGA, Fraction(17, 4)),
                     gen(OMEGA, 6))


def test_adjoin_taken_position():
    with pytest.raises(InvalidArgumentError):
        adjoin_class(PRIME_LOOSE, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 5))


def test_quotient():
    model, projection = quotient(OMEGA_Z1, 1)
    assert model == PRIME
    assert projection(parse_element("e2 + b1.0", OMEGA_Z1)) == \
        parse_element("e2", PRIME)
    assert projection(parse_element("b1.-3", OMEGA_Z1)).is_zero


def test_quotient_keeps_loose_classes():
    model, _ = quotient(LOOSE_Z, 2)
    assert model.describe() == "[Omega, Z1] + g1, g2"
    model, _ = quotient(LOOSE_Z, 1)
    assert model.describe() == "[Omega] + g2"


@pytest.mark.parametrize("m", [1, 2, 3])
def test_quotient_commutes_with_chi(m):
    model, projection = quotient(LOOSE_Z, m)
    for seed in range(50):
        x = random_element(LOOSE_Z, seed)
        assert projection(chi(x)) == chi(projection(x)), str(x)


@pytest.mark.parametrize("m", [0, 3])
def test_quotient_bounds(m):
    with pytest.raises(InvalidArgumentError):
        quotient(OMEGA_Z1, m)
