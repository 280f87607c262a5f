"""
Seeded random generators for elements, terms, formulas, chi-functions and
(submodel, element) pairs. Every generator takes a numpy Generator or a
seed, so identical seeds reproduce identical draws.
"""
import logging
from fractions import Fraction

import numpy as np

from pdgcalc.chifn.chifunction import make_chifn
from pdgcalc.errors import InvalidArgumentError
from pdgcalc.language.terms import (
    Add, And, Chi, ChiInv, Const, Div, Eq, Literal, Lt, Neg, Not, Or, Var,
)
from pdgcalc.model.group import INF, GroupElement, chi_iter, point
from pdgcalc.model.spec import OMEGA, GeneratorId, Submodel

logger = logging.getLogger(__name__)

DEEP_LEVEL = 10 ** 6


def as_rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def _sign(rng):
    return 1 if rng.random() < 0.5 else -1


def random_rational(rng, coeff_bound=5):
    """A nonzero rational with numerator up to coeff_bound and a small
    denominator"""
    num = int(rng.integers(1, coeff_bound + 1))
    den = int(rng.integers(1, 4))
    return Fraction(_sign(rng) * num, den)


def random_generator(model, rng, level_bound=6, deep=False):
    """
    Args:
        model (ModelSpec): model to draw from
        rng (numpy.random.Generator): source of randomness
        level_bound (int): integer levels are drawn from this range
        deep (bool): now and then draw a level up to 10**6

    Returns:
        GeneratorId
    """
    rng = as_rng(rng)
    choices = model.num_chains + (1 if model.loose else 0)
    pick = int(rng.integers(choices))
    if pick == model.num_chains:
        return model.loose[int(rng.integers(len(model.loose)))].generator
    bound = DEEP_LEVEL if deep and rng.random() < 0.1 else level_bound
    low = 0 if pick == OMEGA else -bound
    return GeneratorId(pick, Fraction(int(rng.integers(low, bound + 1))))


def random_element(model, rng, max_support=4, level_bound=6, coeff_bound=5,
                   deep=False):
    """
    Args:
        model (ModelSpec): model to draw from
        rng (numpy.random.Generator|int): generator or seed
        max_support (int): at most this many terms
        level_bound (int): bound on integer levels
        coeff_bound (int): bound on coefficient numerators
        deep (bool): include occasional very deep levels

    Returns:
        GroupElement
    """
    rng = as_rng(rng)
    size = int(rng.integers(0, max_support + 1))
    return GroupElement(model, [
        (random_generator(model, rng, level_bound, deep),
         random_rational(rng, coeff_bound))
        for _ in range(size)])


def random_nonzero(model, rng, **kwargs):
    x = random_element(model, rng, **kwargs)
    while x.is_zero:
        x = random_element(model, rng, **kwargs)
    return x


def random_point(model, rng, level_bound=6, deep=False):
    """A chi-set point -g"""
    rng = as_rng(rng)
    chain = int(rng.integers(model.num_chains))
    bound = DEEP_LEVEL if deep and rng.random() < 0.1 else level_bound
    low = 1 if chain == OMEGA else -bound
    return point(model, GeneratorId(chain, Fraction(int(
        rng.integers(low, bound + 1)))))


def random_term(model, rng, depth=3, level_bound=4):
    """
    A random one-variable term of depth at most ``depth``

    Returns:
        Term
    """
    rng = as_rng(rng)
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.55:
            return Var()
        elif roll < 0.75:
            return Const(("c", "d", "inf", "0")[int(rng.integers(4))])
        return Literal(random_element(model, rng, max_support=2,
                                      level_bound=level_bound, coeff_bound=3))
    kind = int(rng.integers(6))
    child = random_term(model, rng, depth - 1, level_bound)
    if kind == 0:
        return Add(child, random_term(model, rng, depth - 1, level_bound))
    elif kind == 1:
        return Add(child, Neg(random_term(model, rng, depth - 1,
                                          level_bound)))
    elif kind == 2:
        return Neg(child)
    elif kind == 3:
        return Chi(child)
    elif kind == 4:
        return ChiInv(child)
    return Div(child, int(rng.integers(1, 4)))


def random_formula(model, rng, depth=2, term_depth=3):
    """
    A random quantifier-free formula in x

    Returns:
        Formula
    """
    rng = as_rng(rng)
    if depth <= 0 or rng.random() < 0.35:
        left = random_term(model, rng, term_depth)
        right = random_term(model, rng, term_depth)
        return Eq(left, right) if rng.random() < 0.4 else Lt(left, right)
    kind = int(rng.integers(3))
    if kind == 0:
        return Not(random_formula(model, rng, depth - 1, term_depth))
    elif kind == 1:
        return And(random_formula(model, rng, depth - 1, term_depth),
                   random_formula(model, rng, depth - 1, term_depth))
    return Or(random_formula(model, rng, depth - 1, term_depth),
              random_formula(model, rng, depth - 1, term_depth))


def random_chifunction(model, rng, max_terms=4, max_exponent=3,
                       max_support=4, level_bound=6):
    """
    A random proper chi-function. Constants are often chosen so that the
    function vanishes or hits the chi-set somewhere, which exercises the
    solvers beyond their generic case.

    Returns:
        ChiFunction
    """
    rng = as_rng(rng)
    if rng.random() < 0.1:
        k = int(rng.integers(-max_exponent, max_exponent + 1))
        return make_chifn(model, [(k, 1)], GroupElement.zero(model))

    n = int(rng.integers(1, max_terms + 1))
    exponents = sorted(int(k) for k in rng.choice(
        np.arange(-max_exponent, max_exponent + 1), size=n, replace=False))
    coeffs = [random_rational(rng, 3) for _ in exponents]
    terms = list(zip(exponents, coeffs))

    roll = rng.random()
    if roll < 0.2:
        alpha = GroupElement.zero(model)
    elif roll < 0.6:
        # aim at a point: alpha = p - G_0(x0) for some point x0
        x0 = random_point(model, rng, level_bound)
        target = random_point(model, rng, level_bound) if \
            rng.random() < 0.5 else GroupElement.zero(model)
        value = GroupElement.zero(model)
        for k, q in terms:
            image = chi_iter(x0, k)
            if image is INF:
                value = None
                break
            value = value + image.scale(q)
        alpha = target - value if value is not None else \
            random_element(model, rng, max_support, level_bound)
        if len(alpha.terms) > max_support:
            alpha = GroupElement(model, alpha.terms[:max_support])
    else:
        alpha = random_element(model, rng, max_support, level_bound)
    return make_chifn(model, terms, alpha)


def random_submodel(model, rng):
    """A random chain set containing Omega with some loose classes on it"""
    rng = as_rng(rng)
    chains = {OMEGA} | {pos for pos in range(1, model.num_chains)
                        if rng.random() < 0.5}
    loose = {lc.name for lc in model.loose
             if lc.generator.chain in chains and rng.random() < 0.5}
    return Submodel.of(chains, loose)


def random_submodel_pair(model, rng, max_tries=100):
    """
    Draws a submodel and an element outside its span

    Returns:
        tuple(Submodel, GroupElement)

    Raises:
        InvalidArgumentError: when the model has no proper submodel
    """
    if model.num_chains == 1 and not model.loose:
        raise InvalidArgumentError(
            "{} has no proper submodel".format(model.describe()))
    rng = as_rng(rng)
    for _ in range(max_tries):
        sub = random_submodel(model, rng)
        a = random_nonzero(model, rng)
        if not sub.in_span(a):
            return sub, a
        missing = [g for g in model.generators_near(4)
                   if not sub.contains(model, g)]
        if missing:
            g = missing[int(rng.integers(len(missing)))]
            return sub, a + GroupElement.monomial(model, g,
                                                  random_rational(rng))
    raise InvalidArgumentError("No pair found for {}".format(
        model.describe()))


def shrink(witness, still_fails):
    """
    Greedily drops support terms of the elements of a failing witness while
    it keeps failing

    Args:
        witness (tuple): elements and other values
        still_fails (callable): witness -> bool

    Returns:
        tuple: a witness no single dropped term can make smaller
    """
    witness = tuple(witness)
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(witness):
            if not isinstance(x, GroupElement):
                continue
            for j in range(len(x.terms)):
                smaller = GroupElement._from_sorted(
                    x.model, x.terms[:j] + x.terms[j + 1:])
                candidate = witness[:i] + (smaller,) + witness[i + 1:]
                try:
                    fails = still_fails(candidate)
                except Exception:
                    fails = False
                if fails:
                    witness = candidate
                    changed = True
                    break
            if changed:
                break
    return witness
