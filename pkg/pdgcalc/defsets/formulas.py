import logging

from pdgcalc.chifn.chifunction import chifn_arith
from pdgcalc.chifn.solvers import ALL_OF_DOMAIN, signed_parts, zeros
from pdgcalc.defsets.normalform import (
    SetNormalForm, empty, from_points, member, set_algebra,
)
from pdgcalc.language.evaluate import eval_formula
from pdgcalc.language.terms import And, Eq, Lt, Not, Or
from pdgcalc.model.group import INF, point_generator
from pdgcalc.piecewise.compose import term_to_piecewise
from pdgcalc.piecewise.piecewise import refine

logger = logging.getLogger(__name__)


def _atom_on_region(model, atom, R, F, G):
    """
    The points of R satisfying ``F(x) = G(x)`` or ``F(x) < G(x)``

    Returns:
        SetNormalForm
    """
    f_inf, g_inf = F.alpha is INF, G.alpha is INF
    is_eq = isinstance(atom, Eq)
    if f_inf or g_inf:
        if is_eq:
            holds = f_inf and g_inf
        else:
            holds = g_inf and not f_inf
        return SetNormalForm.of(model, [R]) if holds else empty(model)

    D = chifn_arith("subtract", F, G)
    if D.is_const:
        sign = D.value.sign
        holds = sign == 0 if is_eq else sign < 0
        return SetNormalForm.of(model, [R]) if holds else empty(model)
    if is_eq:
        found = zeros(D, model)
        assert found != ALL_OF_DOMAIN
        return from_points(model, [x for x in found
                                   if R.contains(point_generator(x))])
    regions, add, remove = signed_parts(D, R, -1)
    S = SetNormalForm.of(model, regions)
    S = set_algebra("difference", S, from_points(model, remove))
    return set_algebra("union", S, from_points(model, add))


def atom_to_set(atom, model):
    P = term_to_piecewise(atom.left, model)
    Q = term_to_piecewise(atom.right, model)
    S = empty(model)
    for R, F, G in refine(P, Q):
        S = set_algebra("union", S, _atom_on_region(model, atom, R, F, G))
    return S


def formula_to_set(f, model):
    """
    The subset of the chi-set defined by a quantifier-free formula, as a
    finite union of intervals and points

    Args:
        f (Formula): formula in the variable x
        model (ModelSpec): model to work in

    Returns:
        SetNormalForm
    """
    if isinstance(f, (Eq, Lt)):
        S = atom_to_set(f, model)
        logger.debug("Atom {} gave {}".format(f, S))
        return S
    elif isinstance(f, Not):
        return set_algebra("complement", formula_to_set(f.arg, model))
    elif isinstance(f, And):
        return set_algebra("intersect", formula_to_set(f.left, model),
                           formula_to_set(f.right, model))
    elif isinstance(f, Or):
        return set_algebra("union", formula_to_set(f.left, model),
                           formula_to_set(f.right, model))
    raise TypeError("Not a formula: {!r}".format(f))


def brute_force_agrees(f, S, window):
    """
    Compares a normal form with pointwise evaluation on a window

    Returns:
        list(GroupElement): window points where they disagree
    """
    return [p for p in window.points
            if member(S, p) != eval_formula(f, p, window.model)]
