from fractions import Fraction

import pytest

from pdgcalc.model.spec import LooseClass, ModelSpec, gen

LOOSE_Z = ModelSpec(zchains=2, loose=(
    LooseClass(1, gen(1, Fraction(1, 2)), gen(1, 2)),
    LooseClass(2, gen(0, Fraction(7, 2)), gen(0, 4)),
))
"""ModelSpec: two Z-chains with a loose class on Z1 and one on Omega."""


@pytest.fixture(scope="module")
def pair_samples(request):
    return request.config.getoption("--pair-samples", default=30)


@pytest.fixture(scope="module")
def suite_samples(request):
    return request.config.getoption("--axiom-samples", default=200)
