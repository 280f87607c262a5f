"""
Finite solvers for chi-functions.

A value ``G(x)`` can only be a chi-set point or 0 when a term of
``sum(qi * chi^{ki}(x))`` lands on a generator of ``alpha`` and cancels
against it. Those *alignment candidates* are finitely many points; every
solver enumerates them and confirms each one by exact evaluation.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from pdgcalc.chifn.chifunction import dom_of, eval_chifn
from pdgcalc.chifn.regions import (
    TOP, Cut, CutKind, canonical, point_key,
)
from pdgcalc.errors import RegionError
from pdgcalc.model.group import INF, is_chi_set_point, point, point_generator
from pdgcalc.model.spec import GeneratorId

logger = logging.getLogger(__name__)

ALL_OF_DOMAIN = "all-of-domain"
"""str: marker returned when every point of the domain is a solution."""


def alignment_candidates(G):
    """
    Points x whose term chi^{ki}(x) sits on a generator of alpha. Loose
    generators of alpha are skipped: chi^{k} of a point is always a
    monomial at an integer level, so it never meets one.

    Args:
        G (ChiFunction): proper chi-function

    Returns:
        list(GroupElement): sorted chi-set points inside Dom_G
    """
    if G.is_const:
        return []
    model = G.model
    domain = dom_of(G, model)
    found = set()
    for a in G.alpha.support:
        if not a.is_integral:
            continue
        for k, _ in G.terms:
            g = GeneratorId(a.chain, a.level - k)
            if model.is_successor_image(g) and domain.contains(g):
                found.add(g)
    return [point(model, g) for g in sorted(found)]


def membership_solutions(G, model=None):
    """
    The points of Dom_G that G sends into the chi-set

    Args:
        G (ChiFunction): function in normal form
        model (ModelSpec): owning model, defaults to G's

    Returns:
        str|list: ALL_OF_DOMAIN for ``chi^k(x)``, otherwise a list of at
            most two (point, value) pairs
    """
    if G.is_const:
        return ALL_OF_DOMAIN if is_chi_set_point(G.alpha) else []
    if len(G.terms) == 1 and G.q1 == 1 and G.alpha.is_zero:
        return ALL_OF_DOMAIN
    solutions = []
    for x in alignment_candidates(G):
        value = eval_chifn(G, x)
        if value is not INF and is_chi_set_point(value):
            solutions.append((x, value))
    logger.debug("Solutions of {} in the chi-set: {}".format(
        G, len(solutions)))
    assert len(solutions) <= 2, "more than two chi-set values for {}".format(G)
    return solutions


def zeros(G, model=None):
    """
    The points of Dom_G where G vanishes

    Returns:
        str|list: ALL_OF_DOMAIN for the constant 0, otherwise a sorted list
            of points
    """
    if G.is_const:
        return ALL_OF_DOMAIN if G.alpha is not INF and G.alpha.is_zero else []
    if G.alpha.is_zero:
        return []
    return [x for x in alignment_candidates(G)
            if eval_chifn(G, x) is not INF and eval_chifn(G, x).is_zero]


def dominance_threshold(G):
    """
    The cut below which the leading term ``q1 * chi^{k1}(x)`` outweighs
    alpha, and above which alpha's dominant class wins

    Returns:
        Cut: canonical cut, TOP when alpha is 0
    """
    if G.alpha.is_zero:
        return TOP
    a = G.alpha.dominant
    level = a.level - G.k1
    return canonical(Cut(CutKind.AFTER, a.chain, Fraction(math.floor(level))))


@dataclass(frozen=True)
class SignProfile:
    """
    Signs of a chi-function over a region: ``sign_below`` at points under
    the threshold cut, ``sign_above`` over it, and exact values at the
    exception points
    """
    threshold: Cut
    sign_below: int
    sign_above: int
    exceptions: Tuple[Tuple[object, object], ...] = ()

    def sign_at(self, p):
        """
        Args:
            p (GroupElement): chi-set point of the analysed region

        Returns:
            int: -1, 0 or 1
        """
        for x, value in self.exceptions:
            if x == p:
                return 1 if value is INF else value.sign
        if point_key(point_generator(p)) > self.threshold.key:
            return self.sign_above
        return self.sign_below


def dominance_analysis(G, R, model=None):
    """
    Splits a region by which part of G(x) is dominant

    Args:
        G (ChiFunction): proper chi-function
        R (Region): region inside Dom_G
        model (ModelSpec): owning model, defaults to G's

    Returns:
        SignProfile

    Raises:
        RegionError: when R is not inside Dom_G
    """
    if G.is_const:
        raise RegionError("Sign profiles need a proper chi-function")
    domain = dom_of(G, model)
    if not R.is_empty and R.left.key < domain.left.key:
        raise RegionError("Region leaves the domain of {}".format(G))
    below = -1 if G.q1 > 0 else 1
    above = G.alpha.sign if not G.alpha.is_zero else below
    threshold = dominance_threshold(G)
    if threshold.key <= R.left.key:
        threshold, below = TOP, above
    elif threshold.key >= R.right.key:
        threshold, above = TOP, below
    exceptions = tuple((x, eval_chifn(G, x))
                       for x in alignment_candidates(G)
                       if R.contains(point_generator(x)))
    return SignProfile(threshold, below, above, exceptions)


def signed_parts(G, R, sign):
    """
    The points of R where G has the given sign, as regions and points

    Returns:
        tuple(list(Region), list(GroupElement), list(GroupElement)): generic
            regions, exception points to add, exception points to remove
    """
    profile = dominance_analysis(G, R)
    lower, upper = R.split(profile.threshold)
    regions = []
    if profile.sign_below == sign and not lower.is_empty:
        regions.append(lower)
    if profile.sign_above == sign and not upper.is_empty:
        regions.append(upper)
    add, remove = [], []
    for x, value in profile.exceptions:
        s = 1 if value is INF else value.sign
        (add if s == sign else remove).append(x)
    return regions, add, remove
