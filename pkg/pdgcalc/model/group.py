"""
Elements of a model and the L_pdg* operations on them. An element is a
finite-support map from generators to nonzero rationals; the extra point
``INF`` absorbs every operation and sits above every element.
"""
import enum
import functools
import logging
from fractions import Fraction

from pdgcalc.errors import InvalidArgumentError, ModelMismatchError
from pdgcalc.model.spec import OMEGA, GeneratorId

logger = logging.getLogger(__name__)


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


class ValuationOrdering(enum.Enum):
    V_LESS = "v<"
    V_EQUAL = "v="
    V_GREATER = "v>"


class Infinity(object):
    """
    The point at infinity of Gamma_inf. There is exactly one instance, INF.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (Infinity, ())

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("pdgcalc.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __neg__(self):
        return self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __rsub__(self, other):
        return self

    is_zero = False


INF = Infinity()


@functools.total_ordering
class GroupElement(object):
    """
    An element sum(q_g * g) of a model. Terms are kept sorted from the most
    dominant generator down and never hold a zero coefficient.

    Args:
        model (ModelSpec): owning model
        terms (iterable): pairs (GeneratorId, rational); zeros and repeats
            are folded away
    """
    __slots__ = ("model", "terms", "_hash")

    def __init__(self, model, terms=()):
        acc = {}
        for g, q in terms:
            q = Fraction(q)
            if q:
                acc[g] = acc.get(g, 0) + q
        self.model = model
        self.terms = tuple(sorted((g, q) for g, q in acc.items() if q))
        self._hash = None

    @classmethod
    def _from_sorted(cls, model, terms):
        obj = cls.__new__(cls)
        obj.model = model
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, model):
        return cls._from_sorted(model, ())

    @classmethod
    def monomial(cls, model, g, q=1):
        return cls(model, [(g, q)])

    # -- structure --------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def coeffs(self):
        """dict: GeneratorId -> Fraction"""
        return dict(self.terms)

    @property
    def support(self):
        return [g for g, _ in self.terms]

    def coefficient(self, g):
        for h, q in self.terms:
            if h == g:
                return q
        return Fraction(0)

    @property
    def dominant(self):
        """GeneratorId: the most dominant class of the support"""
        if not self.terms:
            raise InvalidArgumentError("0 has no dominant class")
        return self.terms[0][0]

    @property
    def sign(self):
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if other.model != self.model:
            raise ModelMismatchError(
                "Elements of {} and {} cannot be combined".format(
                    self.model.describe(), other.model.describe()))

    def __add__(self, other):
        if other is INF:
            return INF
        self._check(other)
        return GroupElement(self.model, self.terms + other.terms)

    def __neg__(self):
        return GroupElement._from_sorted(
            self.model, tuple((g, -q) for g, q in self.terms))

    def __sub__(self, other):
        if other is INF:
            return INF
        return self + (-other)

    def scale(self, q):
        q = Fraction(q)
        if not q:
            return GroupElement.zero(self.model)
        return GroupElement._from_sorted(
            self.model, tuple((g, c * q) for g, c in self.terms))

    def divide(self, n):
        if n < 1:
            raise InvalidArgumentError(
                "Division needs n >= 1, got {}".format(n))
        return self.scale(Fraction(1, n))

    def __abs__(self):
        return -self if self.sign < 0 else self

    # -- comparisons ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return False
        return self.model == other.model and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        if other is INF:
            return True
        if not isinstance(other, GroupElement):
            return NotImplemented
        return order_cmp(self, other) is Ordering.LESS

    def __repr__(self):
        return "GroupElement({!r})".format(self.terms)

    def __str__(self):
        from pdgcalc.language.printer import format_element
        return format_element(self)


def order_cmp(x, y):
    """
    Compares two elements in the lexicographic order of their model

    Args:
        x (GroupElement): left side
        y (GroupElement): right side

    Returns:
        Ordering: LESS, EQUAL or GREATER

    Raises:
        ModelMismatchError: when x and y come from different models
    """
    x._check(y)
    diff = x - y
    if diff.is_zero:
        return Ordering.EQUAL
    return Ordering.GREATER if diff.sign > 0 else Ordering.LESS


def ext_cmp(x, y):
    """
    order_cmp extended to INF, which is above everything else
    """
    if x is INF or y is INF:
        if x is y:
            return Ordering.EQUAL
        return Ordering.GREATER if x is INF else Ordering.LESS
    return order_cmp(x, y)


def arith(kind, x, y=None, n=None):
    """
    The L_pdg* arithmetic: ``add``, ``negate`` and ``divide`` (delta_n)

    Args:
        kind (str): one of ``add``, ``negate``, ``divide``
        x (GroupElement|Infinity): first operand
        y (GroupElement|Infinity): second operand for ``add``
        n (int): divisor for ``divide``

    Returns:
        GroupElement|Infinity
    """
    if kind == "add":
        if x is INF or y is INF:
            return INF
        return x + y
    elif kind == "negate":
        return -x
    elif kind == "divide":
        if n is None or n < 1:
            raise InvalidArgumentError(
                "Division needs n >= 1, got {}".format(n))
        if x is INF:
            return INF
        return x.divide(n)
    raise InvalidArgumentError("Unknown arithmetic kind '{}'".format(kind))


def chi(x):
    """
    The contraction map: chi(0) = 0, chi(inf) = inf, otherwise the unit
    monomial at the successor of the dominant class, with the sign of x
    """
    if x is INF or x.is_zero:
        return x
    g = x.model.succ(x.dominant)
    return GroupElement._from_sorted(x.model, ((g, Fraction(x.sign)),))


def is_chi_set_point(x):
    """
    True when x is -g for a successor image g, i.e. x lies in chi(Gamma^<0)
    """
    if x is INF or len(x.terms) != 1:
        return False
    g, q = x.terms[0]
    return q == -1 and x.model.is_successor_image(g)


def point_generator(p):
    """
    Args:
        p (GroupElement): a chi-set point -g

    Returns:
        GeneratorId: g
    """
    return p.terms[0][0]


def point(model, g):
    """
    Returns:
        GroupElement: the chi-set point -g
    """
    return GroupElement._from_sorted(model, ((g, Fraction(-1)),))


def chi_inv(x):
    """
    The inverse of chi on the chi-set above c; 0 for 0; inf elsewhere,
    including at c itself
    """
    if x is INF:
        return INF
    if x.is_zero:
        return x
    if not is_chi_set_point(x):
        return INF
    prev = x.model.pred(point_generator(x))
    if prev is None:
        return INF
    return point(x.model, prev)


def chi_set_successor(p):
    """
    The next point of the chi-set above p, in the same chain
    """
    if not is_chi_set_point(p):
        raise InvalidArgumentError("{} is not a chi-set point".format(p))
    g = point_generator(p)
    return point(p.model, GeneratorId(g.chain, g.level + 1))


def chi_set_predecessor(p):
    """
    The point just below p in its chain, INF for c
    """
    if not is_chi_set_point(p):
        raise InvalidArgumentError("{} is not a chi-set point".format(p))
    return chi_inv(p)


def chi_iter(p, k):
    """
    chi^k on a chi-set point; negative k walks back and yields inf once
    the walk leaves the omega-chain's points

    Args:
        p (GroupElement): chi-set point
        k (int): number of steps, any sign

    Returns:
        GroupElement|Infinity
    """
    if p is INF:
        return INF
    g = point_generator(p)
    level = g.level + k
    if g.chain == OMEGA and level < 1:
        return INF
    return point(p.model, GeneratorId(g.chain, level))


def valuation(x):
    """
    The natural valuation of x as its archimedean class

    Returns:
        GeneratorId|None: the dominant class, None for v(0) = infinity
    """
    if x.is_zero:
        return None
    return x.dominant


def valuation_cmp(x, y):
    """
    Compares v(x) and v(y). A more dominant class has a smaller valuation
    and v(0) is the largest value.

    Returns:
        ValuationOrdering
    """
    x._check(y)
    vx, vy = valuation(x), valuation(y)
    if vx == vy:
        return ValuationOrdering.V_EQUAL
    if vx is None:
        return ValuationOrdering.V_GREATER
    if vy is None:
        return ValuationOrdering.V_LESS
    return ValuationOrdering.V_LESS if vx < vy else ValuationOrdering.V_GREATER


def archimedean_equivalent(x, y):
    """
    True when nonzero x and y lie in the same archimedean class
    """
    if x.is_zero or y.is_zero:
        return False
    return valuation_cmp(x, y) is ValuationOrdering.V_EQUAL
