"""
Finite windows of the chi-set used as ground truth: pointwise evaluation
on every window point, with no symbolic machinery involved.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from pdgcalc.errors import InvalidArgumentError
from pdgcalc.extensions.simple import delta_membership
from pdgcalc.language.evaluate import eval_formula
from pdgcalc.model.group import GroupElement, chi, point
from pdgcalc.model.spec import OMEGA, GeneratorId

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 32


@dataclass(frozen=True)
class Window:
    """
    Omega levels 1..size and Z-chain levels -size..size, sorted
    """
    model: object
    size: int
    points: Tuple[object, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def window_enum(model, size=DEFAULT_WINDOW):
    """
    Args:
        model (ModelSpec): model to enumerate
        size (int): level bound W >= 2

    Returns:
        Window: points in increasing order, starting with c
    """
    if size < 2:
        raise InvalidArgumentError("Window size must be >= 2, got {}".format(
            size))
    gens = []
    for chain in range(model.num_chains):
        levels = range(1, size + 1) if chain == OMEGA else \
            range(-size, size + 1)
        gens.extend(GeneratorId(chain, Fraction(level)) for level in levels)
    logger.debug("Window of {} has {} points".format(model.describe(),
                                                     len(gens)))
    return Window(model, size, tuple(point(model, g) for g in sorted(gens)))


def brute_force_set(f, window):
    """
    Returns:
        list(GroupElement): window points satisfying the formula
    """
    return [p for p in window.points if eval_formula(f, p, window.model)]


DELTA_COEFFICIENTS = tuple(Fraction(n, d) for n in (1, -1, 2, -2, 3, -3)
                           for d in (1, 2))


def _span_generators(model, sub, size):
    gens = []
    for chain in sorted(sub.chains):
        levels = range(0, size + 1) if chain == OMEGA else \
            range(-size - 1, size + 1)
        gens.extend(GeneratorId(chain, Fraction(level)) for level in levels)
    gens.extend(lc.generator for lc in model.loose
                if sub.contains(model, lc.generator))
    return gens


def delta_preimage(report, p, size=DEFAULT_WINDOW, chi_fn=chi):
    """
    Searches ``x + q*a``, with q a small nonzero rational and x in the span
    of the submodel, for a negative element that chi sends to p. x ranges
    over 0 and +-g for the submodel's generators up to level ``size``,
    alone or minus ``q`` times the part of ``a`` the submodel holds.

    Args:
        report (DeltaReport): result of delta_gamma
        p (GroupElement): point of Delta to reach
        size (int): level bound for the generators of x
        chi_fn (callable): the chi map

    Returns:
        tuple(GroupElement, Fraction)|None: (x, q), None when nothing in
            the searched range reaches p
    """
    model, sub, a = report.ambient, report.sub, report.a
    held = GroupElement(model, [(g, q) for g, q in a.terms
                                if sub.contains(model, g)])
    monomials = [GroupElement.zero(model)]
    for g in _span_generators(model, sub, size):
        monomials += [GroupElement.monomial(model, g, 1),
                      GroupElement.monomial(model, g, -1)]
    for q in DELTA_COEFFICIENTS:
        shifts = [GroupElement.zero(model)]
        if not held.is_zero:
            shifts.append(held.scale(-q))
        for shift in shifts:
            for m in monomials:
                x = m + shift
                y = x + a.scale(q)
                if y.sign < 0 and chi_fn(y) == p:
                    return x, q
    return None


def delta_points(report, window):
    """
    Returns:
        list(GroupElement): the window points that lie in Delta
    """
    return [p for p in window.points if delta_membership(report, p)]
