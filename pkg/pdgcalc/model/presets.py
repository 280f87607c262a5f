from collections import OrderedDict
from fractions import Fraction

from pdgcalc.errors import ModelError
from pdgcalc.model.spec import OMEGA, PRIME, LooseClass, ModelSpec, gen

OMEGA_Z1 = ModelSpec(zchains=1)
"""ModelSpec: the omega-chain followed by one Z-chain."""

OMEGA_Z1_Z2 = ModelSpec(zchains=2)
"""ModelSpec: the omega-chain followed by two Z-chains."""

PRIME_LOOSE = ModelSpec(loose=(
    LooseClass(1, gen(OMEGA, Fraction(9, 2)), gen(OMEGA, 5)),
))
"""ModelSpec: the prime model with one loose class between e4 and e5."""

PRESETS = OrderedDict([
    ("prime", PRIME),
    ("omega-z1", OMEGA_Z1),
    ("omega-z1-z2", OMEGA_Z1_Z2),
    ("prime-loose", PRIME_LOOSE),
])
"""OrderedDict: models that can be named on the command line."""


def get_preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise ModelError("No preset model '{}' (choose from {})".format(
            name, ", ".join(PRESETS)))
