"""
Chi-functions on the chi-set: constants, and
``G(x) = q1*chi^{k1}(x) + ... + qn*chi^{kn}(x) + alpha`` with
``k1 < ... < kn`` and every ``qi != 0``.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from pdgcalc.chifn.regions import WHOLE, Cut, CutKind, Region, TOP, canonical
from pdgcalc.errors import InvalidArgumentError
from pdgcalc.model.group import INF, GroupElement, chi_iter
from pdgcalc.model.spec import OMEGA

logger = logging.getLogger(__name__)


class Monotonicity(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"


@dataclass(frozen=True)
class ChiFunction:
    """
    A chi-function in normal form; build it with :func:`make_chifn`,
    :func:`const` or :func:`identity`.

    For a constant ``terms`` is empty and ``alpha`` holds the value, which
    may be INF.
    """
    model: object
    terms: Tuple[Tuple[int, Fraction], ...]
    alpha: object

    @property
    def is_const(self):
        return not self.terms

    @property
    def value(self):
        if not self.is_const:
            raise InvalidArgumentError("Only constants have a value")
        return self.alpha

    @property
    def k1(self):
        return self.terms[0][0]

    @property
    def q1(self):
        return self.terms[0][1]

    def __str__(self):
        from pdgcalc.language.printer import format_chifunction
        return format_chifunction(self)


def make_chifn(model, terms, alpha):
    """
    Normalizes ``sum(q * chi^k(x)) + alpha``: equal exponents are merged,
    zero coefficients dropped, and an empty sum or an infinite alpha
    becomes a constant

    Args:
        model (ModelSpec): owning model
        terms (iterable): (k, q) pairs
        alpha (GroupElement|Infinity): constant part

    Returns:
        ChiFunction
    """
    if alpha is INF:
        return ChiFunction(model, (), INF)
    acc = {}
    for k, q in terms:
        acc[int(k)] = acc.get(int(k), 0) + Fraction(q)
    merged = tuple((k, q) for k, q in sorted(acc.items()) if q)
    return ChiFunction(model, merged, alpha)


def const(model, value):
    return ChiFunction(model, (), value)


def identity(model):
    """The chi-function x = chi^0(x)"""
    return ChiFunction(model, ((0, Fraction(1)),),
                       GroupElement.zero(model))


def chi_power(model, k, q=1):
    return make_chifn(model, [(k, q)], GroupElement.zero(model))


def dom_of(G, model=None):
    """
    The points where G is finite

    Returns:
        Region: the whole chi-set, or the points from chi^{-k1}(c) on when
            k1 < 0
    """
    if G.is_const or G.k1 >= 0:
        return WHOLE
    return Region(canonical(Cut(CutKind.AFTER, OMEGA, Fraction(-G.k1))), TOP)


def eval_chifn(G, x):
    """
    Args:
        G (ChiFunction): function to evaluate
        x (GroupElement): chi-set point

    Returns:
        GroupElement|Infinity
    """
    if G.is_const:
        return G.alpha
    total = G.alpha
    for k, q in G.terms:
        value = chi_iter(x, k)
        if value is INF:
            return INF
        total = total + value.scale(q)
    return total


def negate(G):
    if G.is_const:
        return const(G.model, -G.alpha)
    return ChiFunction(G.model, tuple((k, -q) for k, q in G.terms), -G.alpha)


def chifn_arith(kind, G, H=None, n=None):
    """
    Arithmetic of chi-functions: ``add``, ``subtract`` and ``divide``

    Args:
        kind (str): operation
        G (ChiFunction): first operand
        H (ChiFunction): second operand of add and subtract
        n (int): divisor

    Returns:
        ChiFunction: normal form, pointwise equal to the operation on the
            common domain
    """
    if kind == "subtract":
        return chifn_arith("add", G, negate(H))
    elif kind == "add":
        if G.alpha is INF or H.alpha is INF:
            return const(G.model, INF)
        return make_chifn(G.model, G.terms + H.terms, G.alpha + H.alpha)
    elif kind == "divide":
        if n is None or n < 1:
            raise InvalidArgumentError(
                "Division needs n >= 1, got {}".format(n))
        if G.alpha is INF:
            return G
        return make_chifn(G.model, [(k, q / n) for k, q in G.terms],
                          G.alpha.divide(n))
    raise InvalidArgumentError("Unknown chi-function operation '{}'".format(
        kind))


def monotonicity(G):
    if G.is_const:
        return Monotonicity.CONSTANT
    return Monotonicity.INCREASING if G.q1 > 0 else Monotonicity.DECREASING


