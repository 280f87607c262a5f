import logging

from pdgcalc.errors import ModelMismatchError
from pdgcalc.language.terms import (
    Add, And, Chi, ChiInv, Const, Div, Eq, Literal, Lt, Neg, Not, Or, Var,
)
from pdgcalc.model.group import (
    INF, GroupElement, Ordering, arith, chi, chi_inv, ext_cmp,
)

logger = logging.getLogger(__name__)


def constant_value(name, model):
    if name == "c":
        return model.c
    elif name == "d":
        return model.d
    elif name == "inf":
        return INF
    return GroupElement.zero(model)


def eval_term(t, x, model, chi_fn=chi):
    """
    Evaluates a term at x; total since every operation absorbs inf

    Args:
        t (Term): term to evaluate
        x (GroupElement|Infinity): value of the variable
        model (ModelSpec): model to evaluate in
        chi_fn (callable): contraction map, replaceable for mutation runs

    Returns:
        GroupElement|Infinity
    """
    if isinstance(t, Var):
        return x
    elif isinstance(t, Const):
        return constant_value(t.name, model)
    elif isinstance(t, Literal):
        if t.value is not INF and t.value.model != model:
            raise ModelMismatchError("Literal {} is from another model".format(
                t.value))
        return t.value
    elif isinstance(t, Add):
        return arith("add", eval_term(t.left, x, model, chi_fn),
                     eval_term(t.right, x, model, chi_fn))
    elif isinstance(t, Neg):
        return arith("negate", eval_term(t.arg, x, model, chi_fn))
    elif isinstance(t, Chi):
        return chi_fn(eval_term(t.arg, x, model, chi_fn))
    elif isinstance(t, ChiInv):
        return chi_inv(eval_term(t.arg, x, model, chi_fn))
    elif isinstance(t, Div):
        return arith("divide", eval_term(t.arg, x, model, chi_fn), n=t.n)
    raise TypeError("Not a term: {!r}".format(t))


def eval_formula(f, x, model):
    """
    Decides a formula at x; ``inf = inf`` holds and inf is above every
    group element
    """
    if isinstance(f, Eq):
        return eval_term(f.left, x, model) == eval_term(f.right, x, model)
    elif isinstance(f, Lt):
        left = eval_term(f.left, x, model)
        right = eval_term(f.right, x, model)
        return ext_cmp(left, right) is Ordering.LESS
    elif isinstance(f, Not):
        return not eval_formula(f.arg, x, model)
    elif isinstance(f, And):
        return eval_formula(f.left, x, model) and eval_formula(
            f.right, x, model)
    elif isinstance(f, Or):
        return eval_formula(f.left, x, model) or eval_formula(
            f.right, x, model)
    raise TypeError("Not a formula: {!r}".format(f))
