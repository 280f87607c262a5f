"""
Simple extensions Gamma<a> of a submodel Gamma. Everything rests on the set
Delta = chi((Gamma + Q*a)^<0), which is read off the pivot of ``a``: its
most dominant class outside Gamma.
"""
import enum
import logging
from dataclasses import dataclass
from typing import Optional

from pdgcalc.errors import NotInSubmodelError
from pdgcalc.extensions.cuts import SpecialCut
from pdgcalc.model.group import GroupElement, point, point_generator
from pdgcalc.model.spec import GeneratorId

logger = logging.getLogger(__name__)


class DeltaCase(enum.Enum):
    # every element outside the span has a pivot, so Delta always has a
    # maximum; a bare special cut needs an infinite support
    MAX_INSIDE_CHI_SET = "MaxInsideChiSet"
    CUT_PLUS_NEW_POINT = "CutPlusNewPoint"


@dataclass(frozen=True)
class DeltaReport:
    """
    Args:
        case (DeltaCase): which clause of the trichotomy holds
        cut (SpecialCut): the special cut of the submodel below the new
            point, for CUT_PLUS_NEW_POINT
        witness (GroupElement): the maximum b of Delta
        pivot (GeneratorId): most dominant class of ``a`` outside the
            submodel
    """
    ambient: object
    sub: object
    a: GroupElement
    case: DeltaCase
    witness: GroupElement
    pivot: GeneratorId
    cut: Optional[SpecialCut] = None

    def describe(self):
        model = self.ambient
        text = "{} pivot={} b={}".format(
            self.case.value, model.format_generator(self.pivot), self.witness)
        if self.cut is not None:
            text += " cut={}".format(self.cut.m)
        return text


def pivot_of(sub, a):
    """
    Raises:
        NotInSubmodelError: when a already lies in the span of sub
    """
    outside = sub.outside(a)
    if not outside:
        raise NotInSubmodelError("{} lies in the submodel {}".format(
            a, sub.describe(a.model)))
    return outside[0]


def delta_gamma(ambient, sub, a):
    """
    Computes Delta for the simple extension of ``sub`` by ``a``: the points
    -succ(h) for the classes h of sub that dominate the pivot, plus
    -succ(pivot). At most one point of Delta lies outside chi(sub).

    Args:
        ambient (ModelSpec): model holding everything
        sub (Submodel): the submodel Gamma, always with the omega-chain
        a (GroupElement): element of ambient outside the span of sub

    Returns:
        DeltaReport
    """
    pivot = pivot_of(sub, a)
    b = point(ambient, ambient.succ(pivot))
    if sub.contains(ambient, point_generator(b)):
        report = DeltaReport(ambient, sub, a, DeltaCase.MAX_INSIDE_CHI_SET,
                             b, pivot)
    else:
        m = sum(1 for pos in sub.chains if pos < pivot.chain)
        report = DeltaReport(ambient, sub, a, DeltaCase.CUT_PLUS_NEW_POINT,
                             b, pivot, SpecialCut(m))
    logger.debug("Delta for {} over {}: {}".format(
        a, sub.describe(ambient), report.describe()))
    return report


def _preimages(ambient, sub, s):
    """Classes of sub whose successor is s"""
    found = []
    if s.is_integral:
        h = GeneratorId(s.chain, s.level - 1)
        if ambient.is_generator(h) and sub.contains(ambient, h):
            found.append(h)
    found.extend(lc.generator for lc in ambient.loose
                 if lc.succ == s and sub.contains(ambient, lc.generator))
    return found


def delta_membership(report, p):
    """
    Args:
        report (DeltaReport): result of delta_gamma
        p (GroupElement): chi-set point of the ambient model

    Returns:
        bool: True when p lies in Delta
    """
    if p == report.witness:
        return True
    return any(h < report.pivot
               for h in _preimages(report.ambient, report.sub,
                                   point_generator(p)))


def truncate_at_pivot(a, pivot):
    """
    The part of ``a`` down to and including its pivot term; it generates
    the same extension since the pivot term can never be cancelled
    """
    return GroupElement(a.model, [(g, q) for g, q in a.terms if g <= pivot])
