"""
Recursive-descent parsers for elements, terms, formulas and chi-functions.

Grammars::

    element  := '0' | ['-'] mono (('+'|'-') mono)*     (or c, d, inf)
    mono     := [rational '*'] generator
    generator:= 'e'NAT | 'b'NAT '.' INT | 'g'NAT
    term     := unary (('+'|'-') unary)*
    unary    := '-' unary | 'x' | 'c' | 'd' | 'inf' | '0' | '[' element ']'
              | 'chi(' term ')' | 'ichi(' term ')' | 'div(' term ',' NAT ')'
              | '(' term ')'
    formula  := conj ('or' conj)*
    conj     := neg ('and' neg)*
    neg      := 'not' neg | term ('='|'<') term | '(' formula ')'
    chifn    := item (('+'|'-') item)*
    item     := [rational '*'] 'chi^{' INT '}(x)' | '[' element ']' | 'inf'
"""
import logging
import re
from fractions import Fraction
from typing import NamedTuple

from pdgcalc.errors import InvalidArgumentError, ModelError, ParseError
from pdgcalc.language.terms import (
    Add, And, Chi, ChiInv, Const, Div, Eq, Literal, Lt, Neg, Not, Or, Var,
)
from pdgcalc.model.group import INF, GroupElement
from pdgcalc.model.spec import OMEGA, gen

logger = logging.getLogger(__name__)

scanner = re.compile(r"""
  (?P<NUMBER>  [0-9]+)                     |
  (?P<NAME>    [A-Za-z_][A-Za-z0-9_]*)     |
  (?P<SYMBOL>  [-+*/()\[\],.=<^{}])        |
  (?P<NEWLINE> \n)                         |
  (?P<WHITE>   [^\S\n]+)                   |
  (?P<ERROR>   .)
""", re.VERBOSE)

GENERATOR_RE = re.compile(r"^(?P<kind>[ebg])(?P<num>[0-9]+)$")
KEYWORDS = {"x", "c", "d", "inf", "chi", "ichi", "div", "and", "or", "not"}


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    column: int


def tokenize(text):
    """
    Splits text into tokens, ending with an ``END`` token

    Raises:
        ParseError: on a character no token starts with
    """
    line, line_start = 1, 0
    for match in scanner.finditer(text):
        kind = match.lastgroup
        value = match.group(kind)
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind == "WHITE":
            continue
        elif kind == "ERROR":
            raise ParseError("Unexpected character '{}'".format(value),
                             line, column)
        else:
            yield Token(kind, value, line, column)
    yield Token("END", "", line, len(text) - line_start + 1)


class Parser(object):
    """
    Parses text for one model; generator names are resolved against it

    Args:
        text (str): input
        model (ModelSpec): model whose generators may be named
    """

    def __init__(self, text, model):
        self.text = text
        self.model = model
        self.tokens = list(tokenize(text))
        self.pos = 0

    # -- token helpers ------------------------------------------------------------

    @property
    def token(self):
        return self.tokens[self.pos]

    def error(self, message, token=None):
        token = token or self.token
        return ParseError(message, token.line, token.column)

    def at(self, value, kind=None):
        tok = self.token
        if kind is not None and tok.kind != kind:
            return False
        return tok.value == value and tok.kind != "END"

    def accept(self, value):
        if self.at(value):
            self.pos += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            found = self.token.value or "end of input"
            raise self.error("Expected '{}' but found '{}'".format(
                value, found))

    def expect_number(self):
        tok = self.token
        if tok.kind != "NUMBER":
            raise self.error("Expected a number but found '{}'".format(
                tok.value or "end of input"))
        self.pos += 1
        return int(tok.value)

    def expect_end(self):
        if self.token.kind != "END":
            raise self.error("Unexpected '{}'".format(self.token.value))

    # -- elements -----------------------------------------------------------------

    def rational(self):
        num = self.expect_number()
        if self.accept("/"):
            den_tok = self.token
            den = self.expect_number()
            if den == 0:
                raise self.error("Zero denominator", den_tok)
            return Fraction(num, den)
        return Fraction(num)

    def generator(self):
        tok = self.token
        match = GENERATOR_RE.match(tok.value) if tok.kind == "NAME" else None
        if not match:
            raise self.error("Expected a generator but found '{}'".format(
                tok.value or "end of input"))
        self.pos += 1
        kind, num = match.group("kind"), int(match.group("num"))
        try:
            if kind == "e":
                return self.model.check_generator(gen(OMEGA, num))
            elif kind == "g":
                return self.model.loose_named(num).generator
            self.expect(".")
            sign = -1 if self.accept("-") else 1
            level = sign * self.expect_number()
            return self.model.check_generator(
                gen(self.model.chain_position(num), level))
        except ModelError as e:
            raise self.error("Unknown generator '{}' ({})".format(
                tok.value, e), tok)

    def monomial(self):
        if self.token.kind == "NUMBER":
            q = self.rational()
            self.expect("*")
        else:
            q = Fraction(1)
        return self.generator(), q

    def element(self):
        if self.at("0", "NUMBER") and self.tokens[self.pos + 1].value != "*" \
                and self.tokens[self.pos + 1].value != "/":
            self.pos += 1
            return GroupElement.zero(self.model)
        terms = []
        sign = -1 if self.accept("-") else 1
        while True:
            g, q = self.monomial()
            terms.append((g, sign * q))
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        return GroupElement(self.model, terms)

    def special_element(self):
        for name in ("c", "d"):
            if self.at(name, "NAME"):
                self.pos += 1
                return getattr(self.model, name)
        if self.at("inf", "NAME"):
            self.pos += 1
            return INF
        return self.element()

    # -- terms --------------------------------------------------------------------

    def term(self):
        t = self.unary()
        while True:
            if self.accept("+"):
                t = Add(t, self.unary())
            elif self.accept("-"):
                t = Add(t, Neg(self.unary()))
            else:
                return t

    def unary(self):
        tok = self.token
        if self.accept("-"):
            return Neg(self.unary())
        if self.accept("("):
            t = self.term()
            self.expect(")")
            return t
        if self.accept("["):
            value = self.element()
            self.expect("]")
            return Literal(value)
        if tok.kind == "NUMBER":
            if tok.value != "0":
                raise self.error("Only 0 may appear as a bare number")
            self.pos += 1
            return Const("0")
        if tok.kind != "NAME":
            raise self.error("Expected a term but found '{}'".format(
                tok.value or "end of input"))
        self.pos += 1
        if tok.value == "x":
            return Var()
        if tok.value in ("c", "d", "inf"):
            return Const(tok.value)
        if tok.value in ("chi", "ichi"):
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return Chi(arg) if tok.value == "chi" else ChiInv(arg)
        if tok.value == "div":
            self.expect("(")
            arg = self.term()
            self.expect(",")
            n_tok = self.token
            n = self.expect_number()
            if n < 1:
                raise self.error("Invalid divisor {}".format(n), n_tok)
            self.expect(")")
            return Div(arg, n)
        if tok.value in KEYWORDS:
            raise self.error("Unexpected '{}'".format(tok.value), tok)
        raise self.error("Unknown variable '{}', only x is allowed".format(
            tok.value), tok)

    # -- formulas -----------------------------------------------------------------

    def formula(self):
        f = self.conjunction()
        while self.accept("or"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self):
        f = self.negation()
        while self.accept("and"):
            f = And(f, self.negation())
        return f

    def negation(self):
        if self.accept("not"):
            return Not(self.negation())
        start = self.pos
        try:
            return self.atom()
        except ParseError as atom_error:
            if self.tokens[start].value != "(":
                raise
            atom_reach = self.pos
            self.pos = start + 1
            try:
                f = self.formula()
                self.expect(")")
                return f
            except ParseError as formula_error:
                # report whichever reading got further
                if self.pos >= atom_reach:
                    raise formula_error
                raise atom_error

    def atom(self):
        left = self.term()
        if self.accept("="):
            return Eq(left, self.term())
        if self.accept("<"):
            return Lt(left, self.term())
        raise self.error("Expected '=' or '<' but found '{}'".format(
            self.token.value or "end of input"))

    # -- chi-functions ------------------------------------------------------------

    def chifunction(self):
        from pdgcalc.chifn.chifunction import make_chifn
        terms = []
        alpha = GroupElement.zero(self.model)
        infinite = False
        sign = -1 if self.accept("-") else 1
        while True:
            if self.accept("["):
                value = self.element()
                self.expect("]")
                alpha = alpha + value.scale(sign)
            elif self.at("inf", "NAME"):
                self.pos += 1
                infinite = True
            else:
                q = self.rational() if self.token.kind == "NUMBER" else 1
                if q != 1 or self.at("*"):
                    self.expect("*")
                self.expect("chi")
                self.expect("^")
                self.expect("{")
                k_sign = -1 if self.accept("-") else 1
                k = k_sign * self.expect_number()
                self.expect("}")
                self.expect("(")
                self.expect("x")
                self.expect(")")
                terms.append((k, sign * Fraction(q)))
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        return make_chifn(self.model, terms, INF if infinite else alpha)


def _run(text, model, rule):
    parser = Parser(text, model)
    result = getattr(parser, rule)()
    parser.expect_end()
    return result


def parse(text, kind, model):
    """
    Parses text in one of the published grammars

    Args:
        text (str): input text
        kind (str): ``term``, ``formula``, ``element`` or ``chifunction``
        model (ModelSpec): resolves generator names

    Returns:
        Term|Formula|GroupElement|Infinity|ChiFunction

    Raises:
        ParseError: with the line and column of the offending token
    """
    rules = {"term": "term", "formula": "formula",
             "element": "special_element", "chifunction": "chifunction"}
    if kind not in rules:
        raise InvalidArgumentError("Unknown parse kind '{}'".format(kind))
    logger.debug("Parsing {}: '{}'".format(kind, text))
    return _run(text, model, rules[kind])


def parse_term(text, model):
    return parse(text, "term", model)


def parse_formula(text, model):
    return parse(text, "formula", model)


def parse_element(text, model):
    return parse(text, "element", model)


def parse_chifunction(text, model):
    return parse(text, "chifunction", model)
