"""
Closing piecewise chi-functions under chi, chi^-1 and the term language,
so that every one-variable term restricted to the chi-set becomes a
:class:`PiecewiseChiFunction`.
"""
import logging
from fractions import Fraction

from pdgcalc.chifn.chifunction import chi_power, const
from pdgcalc.chifn.regions import singleton
from pdgcalc.chifn.solvers import (
    ALL_OF_DOMAIN, dominance_analysis, dominance_threshold,
    membership_solutions, zeros,
)
from pdgcalc.errors import ModelMismatchError
from pdgcalc.language.evaluate import constant_value
from pdgcalc.language.terms import (
    Add, Chi, ChiInv, Const, Div, Literal, Neg, Var,
)
from pdgcalc.model.group import INF, GroupElement, chi, chi_inv, point_generator
from pdgcalc.piecewise.piecewise import (
    combine, constant_piecewise, from_segments, identity_piecewise, negate,
)

logger = logging.getLogger(__name__)


def override_points(segments, overrides):
    """
    Splits ordered segments so that each (point, ChiFunction) override gets
    a one-point segment of its own
    """
    for p, F in overrides:
        g = point_generator(p)
        for i, (R, G) in enumerate(segments):
            if R.contains(g):
                single = singleton(g)
                below = (R.split(single.left)[0], G)
                above = (R.split(single.right)[1], G)
                segments = segments[:i] + [below, (single, F), above] + \
                    segments[i + 1:]
                break
    return [(R, F) for R, F in segments if not R.is_empty]


def compose_chi(P, model=None):
    """
    chi applied after P. Below its dominance threshold a proper piece G has
    chi(G(x)) = sign(q1) * chi^{k1+1}(x); above it chi(G(x)) = chi(alpha);
    the alignment points get their exact values.

    Args:
        P (PiecewiseChiFunction): normalized input
        model (ModelSpec): defaults to P's model

    Returns:
        PiecewiseChiFunction
    """
    model = model or P.model
    segments = []
    exceptions = 0
    for R, G in P.pieces:
        if G.is_const:
            segments.append((R, const(model, chi(G.value))))
            continue
        profile = dominance_analysis(G, R, model)
        lower, upper = R.split(dominance_threshold(G))
        parts = []
        if not lower.is_empty:
            parts.append((lower, chi_power(model, G.k1 + 1,
                                           Fraction(1 if G.q1 > 0 else -1))))
        if not upper.is_empty:
            parts.append((upper, const(model, chi(G.alpha))))
        overrides = [(x, const(model, chi(value)))
                     for x, value in profile.exceptions]
        exceptions += len(overrides)
        segments.extend(override_points(parts, overrides))
    result = from_segments(model, segments)
    assert len(result) <= 2 * len(P) + exceptions
    return result


def compose_chi_inv(P, model=None):
    """
    chi^-1 applied after P: ``chi^k(x)`` pieces step down to
    ``chi^{k-1}(x)``, the finitely many points sent into the chi-set or to
    0 keep exact values, every other point goes to inf
    """
    model = model or P.model
    segments = []
    for R, G in P.pieces:
        if G.is_const:
            segments.append((R, const(model, chi_inv(G.value))))
            continue
        solutions = membership_solutions(G, model)
        if solutions == ALL_OF_DOMAIN:
            segments.append((R, chi_power(model, G.k1 - 1)))
            continue
        overrides = [(x, const(model, chi_inv(value)))
                     for x, value in solutions]
        overrides += [(x, const(model, GroupElement.zero(model)))
                      for x in zeros(G, model)]
        overrides = [(x, F) for x, F in overrides
                     if R.contains(point_generator(x))]
        segments.extend(override_points([(R, const(model, INF))], overrides))
    return from_segments(model, segments)


def term_to_piecewise(t, model):
    """
    The restriction of a one-variable term to the chi-set

    Args:
        t (Term): term
        model (ModelSpec): model to work in

    Returns:
        PiecewiseChiFunction: pointwise equal to eval_term on the chi-set
    """
    if isinstance(t, Var):
        return identity_piecewise(model)
    elif isinstance(t, Const):
        return constant_piecewise(model, constant_value(t.name, model))
    elif isinstance(t, Literal):
        if t.value is not INF and t.value.model != model:
            raise ModelMismatchError("Literal {} is from another model".format(
                t.value))
        return constant_piecewise(model, t.value)
    elif isinstance(t, Add):
        return combine(term_to_piecewise(t.left, model),
                       term_to_piecewise(t.right, model), kind="add")
    elif isinstance(t, Neg):
        return negate(term_to_piecewise(t.arg, model))
    elif isinstance(t, Div):
        return combine(term_to_piecewise(t.arg, model), kind="divide", n=t.n)
    elif isinstance(t, Chi):
        return compose_chi(term_to_piecewise(t.arg, model), model)
    elif isinstance(t, ChiInv):
        return compose_chi_inv(term_to_piecewise(t.arg, model), model)
    raise TypeError("Not a term: {!r}".format(t))
