"""Integrand formulas in one variable ``x``.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'

``^`` is right-associative and binds tighter than a leading minus, so
``-x^2`` is ``-(x^2)`` and ``2^3^2`` is ``2^9``.

Evaluation never raises on bad arithmetic: division by zero, logs of
non-positive numbers and overflow come back as inf/nan, and the quadrature
layers turn those into :class:`~chebpv.errors.NonFiniteSample`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "abs": np.abs,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "atan": np.arctan,
}
CONSTANTS = {"pi": math.pi, "e": math.e}


class ParseError(ValueError):
    def __init__(self, position: int, message: str):
        super().__init__(f"position {position}: {message}")
        self.position = position
        self.message = message


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    name: str = "x"


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    argument: "Expr"

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")


Expr = Union[Number, Variable, Unary, Binary, Call]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, text, pos = self.tok
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(pos, f"expected {what}, found {found}")

    def expect(self, text: str):
        if self.tok[1] != text or self.tok[0] != "op":
            self.fail(repr(text))
        self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok[0] != "end":
            self.fail("operator or end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.advance()[1]
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok[0] == "op" and self.tok[1] in "*/":
            op = self.advance()[1]
            node = Binary(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.tok[0] == "op" and self.tok[1] == "-":
            self.advance()
            return Unary("-", self.factor())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok[0] == "op" and self.tok[1] == "^":
            self.advance()
            return Binary("^", base, self.factor())
        return base

    def atom(self) -> Expr:
        kind, text, pos = self.tok
        if kind == "number":
            self.advance()
            return Number(float(text))
        if kind == "name":
            if text == "x":
                self.advance()
                return Variable()
            if text in CONSTANTS:
                self.advance()
                return Number(CONSTANTS[text])
            if text in FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(text, arg)
            raise ParseError(pos, f"unknown name {text!r}")
        if kind == "op" and text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("number, 'x', constant, function call or '('")


def parse(text: str) -> Expr:
    """Parse ``text``; raises :class:`ParseError` with a 0-based position."""
    return _Parser(text).parse()


def _binary(op, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    return np.power(a, b)


def _eval(e: Expr, x):
    if isinstance(e, Number):
        return np.float64(e.value)
    if isinstance(e, Variable):
        return x
    if isinstance(e, Unary):
        return -_eval(e.operand, x)
    if isinstance(e, Binary):
        return _binary(e.op, _eval(e.left, x), _eval(e.right, x))
    if isinstance(e, Call):
        return FUNCTIONS[e.name](_eval(e.argument, x))
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(e: Expr, x):
    """Value of ``e`` at ``x`` (a float or a numpy array)."""
    scalar = np.ndim(x) == 0
    with np.errstate(all="ignore"):
        out = _eval(e, np.asarray(x, dtype=float) if not scalar else np.float64(x))
        if scalar:
            return float(out)
        return np.broadcast_to(out, np.shape(x)).astype(float)


def to_function(e: Expr):
    def f(x):
        return evaluate(e, x)
    return f


def unparse(e: Expr) -> str:
    """Fully parenthesized text that parses back to ``e``."""
    if isinstance(e, Number):
        v = e.value
        if math.isinf(v):
            text = "1e999"
        elif math.isnan(v):
            raise ValueError("NaN literal has no textual form")
        else:
            text = repr(abs(v))
        return f"(-{text})" if math.copysign(1.0, v) < 0 else text
    if isinstance(e, Variable):
        return e.name
    if isinstance(e, Unary):
        return f"(-{unparse(e.operand)})"
    if isinstance(e, Binary):
        return f"({unparse(e.left)}{e.op}{unparse(e.right)})"
    if isinstance(e, Call):
        return f"{e.name}({unparse(e.argument)})"
    raise TypeError(f"not an expression node: {e!r}")
