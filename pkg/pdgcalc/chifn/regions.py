"""
Cuts and regions of the chi-set chi(Gamma^<0).

A chi-set point ``-g`` is addressed by its generator ``g = (chain, level)``.
Points are ordered like their generators: the omega-chain comes first and
``c = -e1`` is the least point. A :class:`Cut` splits the chi-set into a
lower and an upper part; a :class:`Region` is the set of points strictly
between two cuts. In canonical form two different cuts always have a point
between them, so regions compare and merge by their cuts alone.
"""
import enum
import math
from fractions import Fraction
from typing import NamedTuple, Optional

from pdgcalc.errors import InvalidArgumentError
from pdgcalc.model.group import is_chi_set_point, point, point_generator
from pdgcalc.model.spec import OMEGA, GeneratorId


class CutKind(enum.IntEnum):
    BOTTOM = 0
    AFTER = 1
    END = 2
    TOP = 3


class Cut(NamedTuple):
    """
    ``AFTER`` cuts sit right after the point ``-(chain, level)``; ``END``
    cuts sit after every point of ``chain``.
    """
    kind: CutKind
    chain: Optional[int] = None
    level: Optional[Fraction] = None

    @property
    def key(self):
        if self.kind is CutKind.BOTTOM:
            return (-1, 0, 0)
        elif self.kind is CutKind.AFTER:
            return (self.chain, 0, self.level)
        elif self.kind is CutKind.END:
            return (self.chain, 1, 0)
        return (math.inf, 0, 0)


BOTTOM = Cut(CutKind.BOTTOM)
TOP = Cut(CutKind.TOP)


def point_key(g):
    """Sort key of the point -g, comparable with Cut.key"""
    return (g.chain, 0, g.level)


def after(g):
    """The canonical cut right after the point -g"""
    return canonical(Cut(CutKind.AFTER, g.chain, Fraction(g.level)))


def end_of(chain, model):
    return canonical(Cut(CutKind.END, chain), model)


def canonical(cut, model=None):
    """
    Rewrites a cut to the unique name of its position: cuts after omega
    levels below 1 are BOTTOM, the end of the last chain is TOP
    """
    if cut.kind is CutKind.AFTER:
        level = Fraction(math.floor(cut.level))
        if cut.chain == OMEGA and level < 1:
            return BOTTOM
        return Cut(CutKind.AFTER, cut.chain, level)
    if cut.kind is CutKind.END and model is not None and \
            cut.chain >= model.zchains:
        return TOP
    return cut


def cut_before(g):
    """The canonical cut right before the point -g"""
    return after(GeneratorId(g.chain, g.level - 1))


def is_above(g, cut):
    """True when the point -g lies above the cut"""
    return point_key(g) > cut.key


class Region(NamedTuple):
    """
    The chi-set points strictly between two canonical cuts
    """
    left: Cut
    right: Cut

    @property
    def is_empty(self):
        return self.left.key >= self.right.key

    def contains(self, g):
        """
        Args:
            g (GeneratorId): generator of the point -g

        Returns:
            bool
        """
        return self.left.key < point_key(g) <= self.right.key

    @property
    def first(self):
        """GeneratorId|None: least point, if the region has one"""
        if self.is_empty:
            return None
        if self.left.kind is CutKind.BOTTOM:
            return GeneratorId(OMEGA, Fraction(1))
        if self.left.kind is CutKind.AFTER:
            return GeneratorId(self.left.chain, self.left.level + 1)
        return None

    @property
    def last(self):
        """GeneratorId|None: greatest point, if the region has one"""
        if self.is_empty or self.right.kind is not CutKind.AFTER:
            return None
        return GeneratorId(self.right.chain, self.right.level)

    @property
    def size(self):
        """
        int|None: number of points, None when the region is infinite
        """
        if self.is_empty:
            return 0
        first, last = self.first, self.last
        if first is None or last is None or first.chain != last.chain:
            return None
        return int(last.level - first.level) + 1

    @property
    def singleton(self):
        """GeneratorId|None: the only point of a one-point region"""
        return self.first if self.size == 1 else None

    def intersect(self, other):
        left = max(self.left, other.left, key=lambda c: c.key)
        right = min(self.right, other.right, key=lambda c: c.key)
        return Region(left, right)

    def split(self, cut):
        """
        Returns:
            tuple(Region, Region): parts below and above the cut, possibly
                empty
        """
        return (Region(self.left, min(self.right, cut, key=lambda c: c.key)),
                Region(max(self.left, cut, key=lambda c: c.key), self.right))


WHOLE = Region(BOTTOM, TOP)
"""Region: the whole chi-set."""


def singleton(g):
    return Region(cut_before(g), after(g))


def point_region(p):
    """The one-point region of a chi-set point element"""
    if not is_chi_set_point(p):
        raise InvalidArgumentError("{} is not a chi-set point".format(p))
    return singleton(point_generator(p))


def iter_points(region, model, limit):
    """
    Yields the points of a region as elements, at most ``limit`` of them,
    starting from the least point when there is one
    """
    g = region.first
    count = 0
    while g is not None and region.contains(g) and count < limit:
        yield point(model, g)
        g = GeneratorId(g.chain, g.level + 1)
        count += 1


# -- printing --------------------------------------------------------------------

def format_point(model, g):
    if g == GeneratorId(OMEGA, 1):
        return "c"
    return str(point(model, g))


def format_cut(model, cut):
    if cut.kind is CutKind.BOTTOM:
        return "bottom"
    elif cut.kind is CutKind.TOP:
        return "top"
    elif cut.kind is CutKind.END:
        return "end({})".format(model.chain_name(cut.chain))
    return "after({})".format(format_point(model, GeneratorId(
        cut.chain, cut.level)))


def format_region(model, region):
    """
    Args:
        model (ModelSpec): owning model
        region (Region): region to print

    Returns:
        str: ``{p}`` for one point, otherwise ``[p, q]`` with a bracket
            replaced by a parenthesis and cut name where no end point exists
    """
    g = region.singleton
    if g is not None:
        return "{{{}}}".format(format_point(model, g))
    first, last = region.first, region.last
    left = ("[" + format_point(model, first) if first is not None
            else "(" + format_cut(model, region.left))
    right = (format_point(model, last) + "]" if last is not None
             else format_cut(model, region.right) + ")")
    return "{}, {}".format(left, right)
