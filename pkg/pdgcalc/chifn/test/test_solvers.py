from fractions import Fraction

import pytest

from pdgcalc.chifn.chifunction import (
    Monotonicity, chi_power, chifn_arith, const, dom_of, eval_chifn,
    identity, make_chifn, monotonicity, negate,
)
from pdgcalc.chifn.regions import (
    BOTTOM, TOP, WHOLE, Region, after, format_cut, format_region,
)
from pdgcalc.chifn.solvers import (
    ALL_OF_DOMAIN, alignment_candidates, dominance_analysis,
    dominance_threshold, membership_solutions, signed_parts, zeros,
)
from pdgcalc.errors import InvalidArgumentError, RegionError
from pdgcalc.language.parser import parse_chifunction, parse_element
from pdgcalc.model.group import INF, is_chi_set_point, point_generator
from pdgcalc.model.presets import OMEGA_Z1, PRIME_LOOSE
from pdgcalc.model.spec import OMEGA, PRIME, gen
from pdgcalc.oracle.sampling import random_chifunction
from pdgcalc.oracle.window import window_enum


def el(text, model=PRIME):
    return parse_element(text, model)


def fn(text, model=PRIME):
    return parse_chifunction(text, model)


@pytest.fixture(scope="module")
def chifn_samples(request):
    return request.config.getoption("--chifn-samples", default=60)


def test_normal_form():
    G = make_chifn(PRIME, [(2, 1), (0, 3), (2, -1)], el("e1"))
    assert G.terms == ((0, Fraction(3)),)
    assert make_chifn(PRIME, [(1, 1)], INF) == const(PRIME, INF)
    assert identity(PRIME) == fn("chi^{0}(x)")
    assert chi_power(PRIME, -2, 3) == fn("3*chi^{-2}(x)")


def test_value_of_constants():
    assert const(PRIME, el("e2")).value == el("e2")
    with pytest.raises(InvalidArgumentError):
        identity(PRIME).value


def test_domain():
    assert format_region(PRIME, dom_of(fn("chi^{-1}(x)"))) == "[-e2, top)"
    assert format_region(PRIME, dom_of(fn("chi^{-3}(x) + chi^{2}(x)"))) \
        == "[-e4, top)"
    assert dom_of(fn("chi^{2}(x)")) == WHOLE
    assert dom_of(const(PRIME, INF)) == WHOLE


@pytest.mark.parametrize("G,at,expected", [
    ("chi^{1}(x) + [e3 - e5]", "-e2", "-e5"),
    ("chi^{-1}(x)", "c", "inf"),
    ("chi^{-1}(x)", "-e3", "-e2"),
    ("2*chi^{0}(x) - chi^{1}(x)", "-e2", "-2*e2 + e3"),
    ("[e2]", "-e7", "e2"),
])
def test_eval(G, at, expected):
    assert eval_chifn(fn(G), el(at)) == el(expected)


def test_eval_z_chain():
    G = fn("chi^{-5}(x) + [e1]", OMEGA_Z1)
    assert eval_chifn(G, el("-b1.0", OMEGA_Z1)) == el("e1 - b1.-5", OMEGA_Z1)


def test_arithmetic():
    G = fn("2*chi^{2}(x) + [e1]")
    assert chifn_arith("divide", G, n=2) == fn("chi^{2}(x) + [1/2*e1]")
    assert chifn_arith("subtract", G, G) == const(PRIME, el("0"))
    assert chifn_arith("add", G, const(PRIME, INF)) == const(PRIME, INF)
    assert negate(fn("chi^{1}(x) + [e2]")) == fn("-chi^{1}(x) - [e2]")
    with pytest.raises(InvalidArgumentError):
        chifn_arith("divide", G, n=0)
    with pytest.raises(InvalidArgumentError):
        chifn_arith("multiply", G, G)


def test_monotonicity():
    assert monotonicity(fn("chi^{1}(x) - chi^{3}(x)")) is \
        Monotonicity.INCREASING
    assert monotonicity(fn("-1/2*chi^{0}(x)")) is Monotonicity.DECREASING
    assert monotonicity(fn("[e4]")) is Monotonicity.CONSTANT


@pytest.mark.parametrize("G,expected", [
    ("chi^{1}(x)", ALL_OF_DOMAIN),
    ("chi^{1}(x) + [e3 - e5]", [("-e2", "-e5")]),
    ("chi^{1}(x) + [e0]", []),
    ("2*chi^{1}(x)", []),
    ("[-e1]", ALL_OF_DOMAIN),
    ("[e1]", []),
    ("chi^{0}(x) + [e2 - e3]", [("-e2", "-e3")]),
])
def test_membership_solutions(G, expected):
    found = membership_solutions(fn(G))
    if expected == ALL_OF_DOMAIN:
        assert found == ALL_OF_DOMAIN
    else:
        assert found == [(el(x), el(v)) for x, v in expected]


@pytest.mark.parametrize("G,expected", [
    ("chi^{0}(x) + [e3]", ["-e3"]),
    ("chi^{1}(x)", []),
    ("[0]", ALL_OF_DOMAIN),
    ("inf", []),
    ("chi^{0}(x) - chi^{1}(x) + [e3 - e4]", ["-e3"]),
])
def test_zeros(G, expected):
    found = zeros(fn(G))
    if expected == ALL_OF_DOMAIN:
        assert found == ALL_OF_DOMAIN
    else:
        assert found == [el(x) for x in expected]


def test_alignment_candidates_skip_loose_classes():
    G = fn("chi^{0}(x) + [g1 + e6]", PRIME_LOOSE)
    assert alignment_candidates(G) == [el("-e6", PRIME_LOOSE)]


def test_dominance_analysis():
    G = fn("chi^{1}(x) + [e4]")
    profile = dominance_analysis(G, WHOLE)
    assert format_cut(PRIME, profile.threshold) == "after(-e3)"
    assert profile.sign_below == -1
    assert profile.sign_above == 1
    assert profile.exceptions == ((el("-e3"), el("0")),)
    assert profile.sign_at(el("-e2")) == -1
    assert profile.sign_at(el("-e3")) == 0
    assert profile.sign_at(el("-e9")) == 1


def test_dominance_threshold():
    assert dominance_threshold(fn("chi^{1}(x)")) == TOP
    assert dominance_threshold(fn("-chi^{2}(x) + [e1]")) == BOTTOM
    assert format_cut(PRIME, dominance_threshold(fn("chi^{0}(x) + [e5]"))) \
        == "after(-e5)"


def test_dominance_on_part_of_domain():
    G = fn("chi^{1}(x) + [e4]")
    profile = dominance_analysis(G, Region(after(gen(OMEGA, 5)), TOP))
    assert profile.threshold == TOP
    assert profile.sign_below == profile.sign_above == 1
    assert profile.exceptions == ()


def test_dominance_outside_domain():
    with pytest.raises(RegionError):
        dominance_analysis(fn("chi^{-2}(x)"), WHOLE)
    with pytest.raises(RegionError):
        dominance_analysis(fn("[e2]"), WHOLE)


def test_signed_parts():
    regions, add, remove = signed_parts(fn("chi^{1}(x) + [e4]"), WHOLE, -1)
    assert [format_region(PRIME, r) for r in regions] == ["[c, -e3]"]
    assert add == []
    assert remove == [el("-e3")]


def _window_solutions(G, window):
    domain = dom_of(G)
    found = []
    for p in window:
        if not domain.contains(point_generator(p)):
            continue
        value = eval_chifn(G, p)
        if value is not INF and is_chi_set_point(value):
            found.append((p, value))
    return found


@pytest.mark.parametrize("model", [PRIME, OMEGA_Z1])
def test_solvers_agree_with_window(model, chifn_samples):
    window = window_enum(model, 12)
    for seed in range(chifn_samples):
        G = random_chifunction(model, seed, level_bound=4)
        found = membership_solutions(G)
        if found == ALL_OF_DOMAIN:
            continue
        assert found == _window_solutions(G, window), str(G)
        domain = dom_of(G)
        expected_zeros = [p for p in window
                          if domain.contains(point_generator(p)) and
                          eval_chifn(G, p) is not INF and
                          eval_chifn(G, p).is_zero]
        z = zeros(G)
        if z != ALL_OF_DOMAIN:
            assert z == expected_zeros, str(G)
