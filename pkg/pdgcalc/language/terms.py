"""
Abstract syntax of one-variable L_pdg** terms and quantifier-free formulas.
Nodes are frozen dataclasses so trees compare and hash structurally.
"""
from dataclasses import dataclass
from typing import Union

from pdgcalc.errors import InvalidArgumentError

CONSTANT_NAMES = ("c", "d", "inf", "0")


@dataclass(frozen=True)
class Var:
    name: str = "x"


@dataclass(frozen=True)
class Const:
    """A named constant: ``c``, ``d``, ``inf`` or ``0``"""
    name: str

    def __post_init__(self):
        if self.name not in CONSTANT_NAMES:
            raise InvalidArgumentError("Unknown constant '{}'".format(
                self.name))


@dataclass(frozen=True)
class Literal:
    """A group element written inline as ``[element]``"""
    value: object


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Chi:
    arg: "Term"


@dataclass(frozen=True)
class ChiInv:
    arg: "Term"


@dataclass(frozen=True)
class Div:
    arg: "Term"
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError(
                "div needs a divisor n >= 1, got {}".format(self.n))


Term = Union[Var, Const, Literal, Add, Neg, Chi, ChiInv, Div]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    arg: "Formula"


Formula = Union[Eq, Lt, And, Or, Not]


def sub(t, s):
    """``t - s`` as the language spells it"""
    return Add(t, Neg(s))


def term_depth(t):
    if isinstance(t, (Var, Const, Literal)):
        return 0
    if isinstance(t, Add):
        return 1 + max(term_depth(t.left), term_depth(t.right))
    return 1 + term_depth(t.arg)
