"""
Subsets of the chi-set that are finite unions of intervals and points,
kept as sorted, disjoint, merged lists of regions.
"""
import bisect
import logging
from dataclasses import dataclass
from typing import Tuple

from pdgcalc.chifn.regions import (
    BOTTOM, TOP, WHOLE, Region, format_region, point_key, point_region,
)
from pdgcalc.errors import InvalidArgumentError
from pdgcalc.model.group import point_generator

logger = logging.getLogger(__name__)


def merge_regions(regions):
    """
    Merges overlapping and touching regions

    Args:
        regions (iterable(Region)): regions in any order

    Returns:
        tuple(Region): sorted and disjoint, no two of them touching
    """
    ret = []
    left = right = None
    for region in sorted((r for r in regions if not r.is_empty),
                         key=lambda r: r.left.key):
        if left is None:
            left, right = region
            continue
        if region.left.key > right.key:
            ret.append(Region(left, right))
            left, right = region
        elif region.right.key > right.key:
            right = region.right
    if left is not None:
        ret.append(Region(left, right))
    return tuple(ret)


@dataclass(frozen=True)
class SetNormalForm:
    model: object
    items: Tuple[Region, ...] = ()

    @classmethod
    def of(cls, model, regions):
        return cls(model, merge_regions(regions))

    @property
    def is_empty(self):
        return not self.items

    def __str__(self):
        return format_set(self)


def empty(model):
    return SetNormalForm(model, ())


def whole(model):
    return SetNormalForm(model, (WHOLE,))


def from_points(model, points):
    """
    Args:
        model (ModelSpec): owning model
        points (iterable(GroupElement)): chi-set points

    Returns:
        SetNormalForm
    """
    return SetNormalForm.of(model, [point_region(p) for p in points])


def complement(S):
    out = []
    left = BOTTOM
    for region in S.items:
        out.append(Region(left, region.left))
        left = region.right
    out.append(Region(left, TOP))
    return SetNormalForm.of(S.model, out)


def set_algebra(kind, S, T=None):
    """
    Boolean operations on normal forms

    Args:
        kind (str): ``union``, ``intersect``, ``complement`` or ``difference``
        S (SetNormalForm): first operand
        T (SetNormalForm): second operand of the binary operations

    Returns:
        SetNormalForm
    """
    if kind == "complement":
        return complement(S)
    elif kind == "union":
        return SetNormalForm.of(S.model, S.items + T.items)
    elif kind == "intersect":
        return complement(set_algebra("union", complement(S), complement(T)))
    elif kind == "difference":
        return set_algebra("intersect", S, complement(T))
    raise InvalidArgumentError("Unknown set operation '{}'".format(kind))


def member(S, x):
    """
    Args:
        S (SetNormalForm): set
        x (GroupElement): chi-set point

    Returns:
        bool
    """
    key = point_key(point_generator(x))
    i = bisect.bisect_left([r.right.key for r in S.items], key)
    return i < len(S.items) and S.items[i].left.key < key


def cardinality(S):
    """
    Returns:
        int|None: number of points, None when the set is infinite
    """
    total = 0
    for region in S.items:
        if region.size is None:
            return None
        total += region.size
    return total


def format_set(S):
    if not S.items:
        return "empty"
    return " ".join(format_region(S.model, r) for r in S.items)


def format_cardinality(S):
    n = cardinality(S)
    return "infinite" if n is None else "finite: {} points".format(n)
