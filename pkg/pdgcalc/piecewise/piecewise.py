"""
Functions on the chi-set given piecewise by chi-functions.

The pieces partition the chi-set in order: piece ``i`` covers the points
between ``cuts[i-1]`` and ``cuts[i]``, with BOTTOM and TOP at the ends.
A single point is just a one-point piece.
"""
import bisect
import logging
from dataclasses import dataclass
from typing import Tuple

from pdgcalc.chifn.chifunction import (
    ChiFunction, chifn_arith, const, dom_of, eval_chifn, identity,
    negate as negate_chifn,
)
from pdgcalc.chifn.regions import (
    BOTTOM, TOP, Region, format_region, point_key,
)
from pdgcalc.errors import ModelMismatchError
from pdgcalc.model.group import INF, point, point_generator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PiecewiseChiFunction:
    model: object
    cuts: Tuple[object, ...]
    functions: Tuple[ChiFunction, ...]

    @property
    def keys(self):
        return [cut.key for cut in self.cuts]

    @property
    def regions(self):
        bounds = (BOTTOM,) + tuple(self.cuts) + (TOP,)
        return [Region(left, right) for left, right in zip(bounds, bounds[1:])]

    @property
    def pieces(self):
        """list(tuple(Region, ChiFunction))"""
        return list(zip(self.regions, self.functions))

    def function_at(self, g):
        """The chi-function in charge of the point -g"""
        return self.functions[bisect.bisect_left(self.keys, point_key(g))]

    def function_on(self, region):
        """The chi-function of the piece containing a nonempty region"""
        return self.functions[bisect.bisect_right(self.keys, region.left.key)]

    def __len__(self):
        return len(self.functions)

    def describe(self):
        """
        Returns:
            list(tuple(str, str)): printed region and function per piece
        """
        return [(format_region(self.model, region), str(F))
                for region, F in self.pieces]


def from_segments(model, segments):
    """
    Builds a normalized function from ordered (Region, ChiFunction) pairs
    that cover the chi-set; empty regions are skipped
    """
    segments = [(R, F) for R, F in segments if not R.is_empty]
    return normalize_segments(model, segments)


def constant_piecewise(model, value):
    return PiecewiseChiFunction(model, (), (const(model, value),))


def identity_piecewise(model):
    return PiecewiseChiFunction(model, (), (identity(model),))


def _restrict_to_domain(segments):
    out = []
    for R, F in segments:
        if F.is_const:
            out.append((R, F))
            continue
        outside, inside = R.split(dom_of(F).left)
        if not outside.is_empty:
            out.append((outside, const(F.model, INF)))
        if not inside.is_empty:
            out.append((inside, F))
    return out


def _freeze_singletons(model, segments):
    out = []
    for R, F in segments:
        g = R.singleton
        if g is not None and not F.is_const:
            F = const(model, eval_chifn(F, point(model, g)))
        out.append((R, F))
    return out


def _merge_once(model, segments):
    for i in range(len(segments) - 1):
        (R1, F1), (R2, F2) = segments[i], segments[i + 1]
        if F1 == F2:
            merged = (Region(R1.left, R2.right), F1)
            return segments[:i] + [merged] + segments[i + 2:], True
    for i, (R, F) in enumerate(segments):
        g = R.singleton
        if g is None or F.alpha is INF:
            continue
        p = point(model, g)
        for j in (i - 1, i + 1):
            if not 0 <= j < len(segments):
                continue
            RN, FN = segments[j]
            if FN.is_const or eval_chifn(FN, p) != F.alpha:
                continue
            lo, hi = min(i, j), max(i, j)
            merged = (Region(segments[lo][0].left, segments[hi][0].right), FN)
            return segments[:lo] + [merged] + segments[hi + 1:], True
    return segments, False


def normalize_segments(model, segments):
    segments = _freeze_singletons(model, _restrict_to_domain(segments))
    changed = True
    while changed:
        segments, changed = _merge_once(model, segments)
    cuts = tuple(R.right for R, _ in segments[:-1])
    return PiecewiseChiFunction(model, cuts, tuple(F for _, F in segments))


def normalize(P):
    """
    Puts P in normal form: proper pieces are cut down to their domain,
    one-point pieces become constants, equal neighbours merge and a point
    whose value a neighbouring piece already gives joins that piece

    Returns:
        PiecewiseChiFunction
    """
    return normalize_segments(P.model, P.pieces)


def eval_piecewise(P, x):
    """
    Args:
        P (PiecewiseChiFunction): function to evaluate
        x (GroupElement): chi-set point

    Returns:
        GroupElement|Infinity
    """
    return eval_chifn(P.function_at(point_generator(x)), x)


def refine(P, Q):
    """
    Walks the common refinement of two partitions

    Yields:
        tuple(Region, ChiFunction, ChiFunction)
    """
    if P.model != Q.model:
        raise ModelMismatchError("Piecewise functions over {} and {}".format(
            P.model.describe(), Q.model.describe()))
    cuts = sorted(set(P.cuts) | set(Q.cuts), key=lambda cut: cut.key)
    bounds = [BOTTOM] + cuts + [TOP]
    for left, right in zip(bounds, bounds[1:]):
        region = Region(left, right)
        yield region, P.function_on(region), Q.function_on(region)


def negate(P):
    return PiecewiseChiFunction(
        P.model, P.cuts, tuple(negate_chifn(F) for F in P.functions))


def combine(P, Q=None, kind="add", n=None):
    """
    Pointwise arithmetic of piecewise functions

    Args:
        P (PiecewiseChiFunction): first operand
        Q (PiecewiseChiFunction): second operand of add and subtract
        kind (str): ``add``, ``subtract`` or ``divide``
        n (int): divisor

    Returns:
        PiecewiseChiFunction: normalized
    """
    if kind == "divide":
        segments = [(R, chifn_arith("divide", F, n=n)) for R, F in P.pieces]
    else:
        segments = [(R, chifn_arith(kind, F, G)) for R, F, G in refine(P, Q)]
    result = normalize_segments(P.model, segments)
    logger.debug("{} of {} and {} pieces gave {}".format(
        kind, len(P), len(Q) if Q is not None else 0, len(result)))
    return result
