from fractions import Fraction

import pytest

from pdgcalc.chifn.regions import (
    BOTTOM, TOP, WHOLE, Cut, CutKind, Region, after, canonical, cut_before,
    end_of, format_cut, format_region, is_above, iter_points, point_region,
    singleton,
)
from pdgcalc.errors import InvalidArgumentError
from pdgcalc.language.parser import parse_element
from pdgcalc.model.presets import OMEGA_Z1
from pdgcalc.model.spec import OMEGA, PRIME, gen


def test_canonical_cuts():
    assert canonical(Cut(CutKind.AFTER, OMEGA, Fraction(0))) == BOTTOM
    assert canonical(Cut(CutKind.AFTER, OMEGA, Fraction(7, 2))) == \
        Cut(CutKind.AFTER, OMEGA, Fraction(3))
    assert end_of(OMEGA, PRIME) == TOP
    assert end_of(OMEGA, OMEGA_Z1) == Cut(CutKind.END, OMEGA)
    assert end_of(1, OMEGA_Z1) == TOP
    assert cut_before(gen(OMEGA, 1)) == BOTTOM


def test_cut_order():
    keys = [BOTTOM.key, after(gen(OMEGA, 2)).key,
            Cut(CutKind.END, OMEGA).key, after(gen(1, -50)).key, TOP.key]
    assert keys == sorted(keys)
    assert is_above(gen(OMEGA, 3), after(gen(OMEGA, 2)))
    assert not is_above(gen(OMEGA, 2), after(gen(OMEGA, 2)))
    assert is_above(gen(1, -100), Cut(CutKind.END, OMEGA))


@pytest.mark.parametrize("region,model,expected", [
    (WHOLE, PRIME, "[c, top)"),
    (singleton(gen(OMEGA, 3)), PRIME, "{-e3}"),
    (singleton(gen(OMEGA, 1)), PRIME, "{c}"),
    (Region(after(gen(OMEGA, 1)), after(gen(OMEGA, 3))), PRIME,
     "[-e2, -e3]"),
    (Region(BOTTOM, Cut(CutKind.END, OMEGA)), OMEGA_Z1, "[c, end(Omega))"),
    (Region(Cut(CutKind.END, OMEGA), TOP), OMEGA_Z1, "(end(Omega), top)"),
    (Region(Cut(CutKind.END, OMEGA), after(gen(1, 0))), OMEGA_Z1,
     "(end(Omega), -b1.0]"),
])
def test_format_region(region, model, expected):
    assert format_region(model, region) == expected


def test_format_cut():
    assert format_cut(PRIME, BOTTOM) == "bottom"
    assert format_cut(PRIME, TOP) == "top"
    assert format_cut(PRIME, after(gen(OMEGA, 3))) == "after(-e3)"
    assert format_cut(PRIME, after(gen(OMEGA, 1))) == "after(c)"
    assert format_cut(OMEGA_Z1, Cut(CutKind.END, OMEGA)) == "end(Omega)"


def test_region_sizes():
    assert WHOLE.size is None
    assert Region(BOTTOM, after(gen(OMEGA, 4))).size == 4
    assert Region(after(gen(OMEGA, 4)), after(gen(OMEGA, 4))).is_empty
    assert Region(after(gen(OMEGA, 4)), after(gen(OMEGA, 4))).size == 0
    assert Region(after(gen(OMEGA, 4)), after(gen(1, 2))).size is None
    assert singleton(gen(1, -3)).singleton == gen(1, -3)


def test_region_contains():
    R = Region(after(gen(OMEGA, 1)), after(gen(OMEGA, 3)))
    assert not R.contains(gen(OMEGA, 1))
    assert R.contains(gen(OMEGA, 2))
    assert R.contains(gen(OMEGA, 3))
    assert not R.contains(gen(OMEGA, 4))


def test_split_and_intersect():
    below, above = WHOLE.split(after(gen(OMEGA, 2)))
    assert below == Region(BOTTOM, after(gen(OMEGA, 2)))
    assert above == Region(after(gen(OMEGA, 2)), TOP)
    assert below.intersect(above).is_empty
    R = Region(after(gen(OMEGA, 1)), after(gen(OMEGA, 5)))
    assert R.intersect(below) == singleton(gen(OMEGA, 2))


def test_iter_points():
    points = list(iter_points(WHOLE, PRIME, 3))
    assert [str(p) for p in points] == ["-e1", "-e2", "-e3"]
    R = Region(after(gen(OMEGA, 1)), after(gen(OMEGA, 3)))
    assert len(list(iter_points(R, PRIME, 10))) == 2
    assert list(iter_points(Region(Cut(CutKind.END, OMEGA), TOP),
                            OMEGA_Z1, 5)) == []


def test_point_region():
    assert point_region(PRIME.c) == singleton(gen(OMEGA, 1))
    with pytest.raises(InvalidArgumentError):
        point_region(parse_element("e2", PRIME))
