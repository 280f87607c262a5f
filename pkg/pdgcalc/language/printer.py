"""
Text forms of elements, terms, formulas and chi-functions. Everything
printed here parses back to the same value with :mod:`pdgcalc.language.parser`.
"""
from fractions import Fraction

from pdgcalc.language.terms import (
    Add, And, Chi, ChiInv, Const, Div, Eq, Literal, Lt, Neg, Not, Or, Var,
)


def format_rational(q):
    q = Fraction(q)
    return str(q)


def _monomial(model, g, q):
    name = model.format_generator(g)
    if q == 1:
        return name
    return "{}*{}".format(format_rational(q), name)


def _join_signed(parts):
    """
    Joins (coefficient, text-for-absolute-value) pairs as ``a + b - c``
    """
    out = ""
    for i, (q, text) in enumerate(parts):
        if i == 0:
            out = "-" + text if q < 0 else text
        else:
            out += (" - " if q < 0 else " + ") + text
    return out


def format_element(x):
    """
    Args:
        x (GroupElement|Infinity): value to print

    Returns:
        str: e.g. ``3/2*e0 - 2*e3``, ``0`` or ``inf``
    """
    if getattr(x, "terms", None) is None:
        return "inf"
    if not x.terms:
        return "0"
    return _join_signed([(q, _monomial(x.model, g, abs(q)))
                         for g, q in x.terms])


def format_term(t):
    if isinstance(t, Var):
        return t.name
    elif isinstance(t, Const):
        return t.name
    elif isinstance(t, Literal):
        return "[{}]".format(format_element(t.value))
    elif isinstance(t, Add):
        if isinstance(t.right, Neg):
            return "({} - {})".format(format_term(t.left),
                                      format_term(t.right.arg))
        return "({} + {})".format(format_term(t.left), format_term(t.right))
    elif isinstance(t, Neg):
        return "-{}".format(format_term(t.arg))
    elif isinstance(t, Chi):
        return "chi({})".format(format_term(t.arg))
    elif isinstance(t, ChiInv):
        return "ichi({})".format(format_term(t.arg))
    elif isinstance(t, Div):
        return "div({}, {})".format(format_term(t.arg), t.n)
    raise TypeError("Not a term: {!r}".format(t))


def format_formula(f):
    if isinstance(f, Eq):
        return "{} = {}".format(format_term(f.left), format_term(f.right))
    elif isinstance(f, Lt):
        return "{} < {}".format(format_term(f.left), format_term(f.right))
    elif isinstance(f, Not):
        return "not {}".format(format_formula(f.arg))
    elif isinstance(f, And):
        return "({} and {})".format(format_formula(f.left),
                                    format_formula(f.right))
    elif isinstance(f, Or):
        return "({} or {})".format(format_formula(f.left),
                                   format_formula(f.right))
    raise TypeError("Not a formula: {!r}".format(f))


def format_chifunction(G):
    """
    Args:
        G (ChiFunction): function to print

    Returns:
        str: e.g. ``chi^{1}(x) + [e3 - e5]``, or ``[e2]`` for a constant
    """
    if G.is_const:
        if getattr(G.value, "terms", None) is None:
            return "inf"
        return "[{}]".format(format_element(G.value))
    parts = []
    for k, q in G.terms:
        text = "chi^{{{}}}(x)".format(k)
        if abs(q) != 1:
            text = "{}*{}".format(format_rational(abs(q)), text)
        parts.append((q, text))
    out = _join_signed(parts)
    if not G.alpha.is_zero:
        out += " + [{}]".format(format_element(G.alpha))
    return out
