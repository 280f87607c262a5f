from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pdgcalc.model.group import GroupElement
from pdgcalc.model.presets import PRESETS
from pdgcalc.model.spec import GeneratorId


@pytest.fixture(scope="module", params=list(PRESETS))
def model(request):
    return PRESETS[request.param]


@pytest.fixture(scope="module")
def axiom_samples(request):
    return request.config.getoption("--axiom-samples", default=300)


def rationals(bound=7):
    return st.fractions(min_value=-bound, max_value=bound,
                        max_denominator=4).filter(bool)


def generators(model, levels=6):
    integral = st.builds(
        lambda chain, level: GeneratorId(chain, Fraction(level)),
        st.integers(0, model.zchains),
        st.integers(-levels, levels)).filter(model.is_generator)
    if not model.loose:
        return integral
    return st.one_of(integral,
                     st.sampled_from([lc.generator for lc in model.loose]))


def elements(model, max_size=4):
    return st.lists(st.tuples(generators(model), rationals()),
                    max_size=max_size).map(
        lambda terms: GroupElement(model, terms))


def nonzero_elements(model, max_size=4):
    return elements(model, max_size).filter(lambda x: not x.is_zero)
