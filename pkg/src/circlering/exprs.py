"""Expression parsing and lowering to trig polynomials.

Grammar (EBNF; also documented in the README):

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = "-" unary | power ;
    power   = atom [ "^" unary ] ;
    atom    = NUMBER | "pi" | "x" | ("cos" | "sin") "(" expr ")" | "(" expr ")" ;

Precedence: ^ binds tighter than unary minus, which binds tighter than * and
/, which bind tighter than + and -. ^ is right-associative. Exponents must
lower to nonnegative integers. Division is supported only by a nonzero
constant (so "pi/2" works); trig arguments must reduce to k*x + c with
integer k. Everything else raises ``UnsupportedConstruct``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError, UnsupportedConstruct
from .trigpoly import TrigPoly


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Trig:
    func: str  # "cos" or "sin"
    arg: "Expression"


Expression = Union[Num, Pi, Var, Neg, BinOp, Trig]


# -- tokenizer / parser ------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)"
    r"|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group("number"):
            tokens.append(_Token("number", m.group("number"), m.start("number")))
        elif m.group("name"):
            tokens.append(_Token("name", m.group("name"), m.start("name")))
        else:
            tokens.append(_Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)

    def parse(self) -> Expression:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.next().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.next().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expression:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.next()
            return BinOp("^", node, self.unary())
        return node

    def atom(self) -> Expression:
        tok = self.next()
        if tok.kind == "number":
            return Num(float(tok.text))
        if tok.kind == "name":
            if tok.text == "pi":
                return Pi()
            if tok.text == "x":
                return Var()
            if tok.text in ("cos", "sin"):
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Trig(tok.text, arg)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        shown = tok.text if tok.text else "end of input"
        raise ParseError(f"unexpected {shown!r}", tok.pos)


def parse(text: str) -> Expression:
    """Parse expression text into an AST (not yet lowered)."""
    return _Parser(text).parse()


# -- lowering ----------------------------------------------------------------


def _as_constant(poly: TrigPoly, what: str) -> float:
    if poly.degree != 0:
        raise UnsupportedConstruct(f"{what} must be constant")
    return poly.cos_coeffs[0]


def _lower_linear(node: Expression) -> tuple[float, float]:
    """Lower a trig argument to the linear form (k, c) meaning k*x + c."""
    if isinstance(node, Num):
        return 0.0, node.value
    if isinstance(node, Pi):
        return 0.0, math.pi
    if isinstance(node, Var):
        return 1.0, 0.0
    if isinstance(node, Neg):
        k, c = _lower_linear(node.operand)
        return -k, -c
    if isinstance(node, BinOp):
        if node.op in "+-":
            k1, c1 = _lower_linear(node.left)
            k2, c2 = _lower_linear(node.right)
            if node.op == "+":
                return k1 + k2, c1 + c2
            return k1 - k2, c1 - c2
        if node.op == "*":
            k1, c1 = _lower_linear(node.left)
            k2, c2 = _lower_linear(node.right)
            if k1 != 0.0 and k2 != 0.0:
                raise UnsupportedConstruct("trig argument must be linear in x")
            return k1 * c2 + k2 * c1, c1 * c2
        if node.op == "/":
            denom = _as_constant(lower(node.right), "divisor")
            if denom == 0.0:
                raise UnsupportedConstruct("division by zero")
            k, c = _lower_linear(node.left)
            return k / denom, c / denom
        if node.op == "^":
            # Only constant subtrees are allowed under ^ inside a trig argument.
            return 0.0, _constant_subtree(node)
    if isinstance(node, Trig):
        return 0.0, _constant_subtree(node)
    raise UnsupportedConstruct("unsupported trig argument")


def _constant_subtree(node: Expression) -> float:
    try:
        return _as_constant(lower(node), "trig argument")
    except UnsupportedConstruct:
        raise UnsupportedConstruct(
            "trig argument must reduce to k*x + c with integer k"
        ) from None


def _lower_trig(func: str, arg: Expression) -> TrigPoly:
    kf, c = _lower_linear(arg)
    k = round(kf)
    if abs(kf - k) > 1e-9:
        raise UnsupportedConstruct(f"non-integer harmonic {kf!r} in {func}()")
    k = int(k)
    # Normalize to k >= 0: cos is even, sin is odd.
    flip = 1.0
    if k < 0:
        k, c = -k, -c
        if func == "sin":
            flip = -1.0
    cos_c, sin_c = math.cos(c), math.sin(c)
    if k == 0:
        return TrigPoly.constant(cos_c if func == "cos" else flip * sin_c)
    if func == "cos":
        # cos(kx + c) = cos(c)cos(kx) - sin(c)sin(kx)
        return TrigPoly.cosine(k, cos_c) + TrigPoly.sine(k, -sin_c)
    # sin(kx + c) = cos(c)sin(kx) + sin(c)cos(kx)
    return (TrigPoly.sine(k, cos_c) + TrigPoly.cosine(k, sin_c)).scale(flip)


def lower(node: Expression) -> TrigPoly:
    """Expand an AST into a trig polynomial."""
    if isinstance(node, Num):
        return TrigPoly.constant(node.value)
    if isinstance(node, Pi):
        return TrigPoly.constant(math.pi)
    if isinstance(node, Var):
        raise UnsupportedConstruct("bare x is not a trig polynomial; wrap it in cos/sin")
    if isinstance(node, Neg):
        return -lower(node.operand)
    if isinstance(node, Trig):
        return _lower_trig(node.func, node.arg)
    if isinstance(node, BinOp):
        if node.op == "+":
            return lower(node.left) + lower(node.right)
        if node.op == "-":
            return lower(node.left) - lower(node.right)
        if node.op == "*":
            return lower(node.left).multiply(lower(node.right))
        if node.op == "/":
            denom = _as_constant(lower(node.right), "divisor")
            if denom == 0.0:
                raise UnsupportedConstruct("division by zero")
            return lower(node.left).scale(1.0 / denom)
        if node.op == "^":
            exp = _as_constant(lower(node.right), "exponent")
            n = round(exp)
            if abs(exp - n) > 1e-9 or n < 0:
                raise UnsupportedConstruct(f"exponent must be a nonnegative integer, got {exp!r}")
            return lower(node.left) ** int(n)
    raise UnsupportedConstruct(f"unsupported node {node!r}")


def parse_trigpoly(text: str) -> TrigPoly:
    """Parse and lower in one step."""
    return lower(parse(text))


def parse_constant(text: str, what: str = "value") -> float:
    """Parse a constant expression such as ``pi/2`` or ``3*pi/4``."""
    return _as_constant(parse_trigpoly(text), what)


def format_trigpoly(T: TrigPoly) -> str:
    """Render T so that ``parse_trigpoly`` recovers it coefficientwise."""
    return str(T)
