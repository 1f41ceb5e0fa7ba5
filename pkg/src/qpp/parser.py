"""Recursive-descent parser for the q-series expression language.

    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := "-" factor | atom ("^" power)?
    power   := ["-"] integer | ident | "(" exppoly ")"
    atom    := integer | "q" | poch | sum | bsum | "(" expr ")"
    poch    := "poch" "(" ("1" | "-1") "," exppoly ";" integer ")" "_" ("(" exppoly ")" | "inf")
    sum     := "sum" "(" ident "=" exppoly ".." (exppoly | "inf") "," expr ")"
    bsum    := "bsum" "(" ident "," expr ")"

`q^e` is a monomial whose exponent `e` may use the bound indices; any other base raised
to a power is an `IntPow`. Summation bounds must be affine in the enclosing indices.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from qpp.expr import (
    Add,
    BSum,
    Div,
    ExpPoly,
    Expr,
    IntPow,
    Mul,
    Neg,
    Poch,
    QPow,
    RationalLit,
    Sub,
    Sum,
)
from qpp.failures import QppError

logger = logging.getLogger(__name__)

MAX_DEPTH = 200
MAX_POLY_POWER = 64
MAX_POLY_DEGREE = 64
MAX_POLY_WORK = 20_000
MAX_COEFFICIENT_BITS = 32_768
KEYWORDS = frozenset({"q", "poch", "sum", "bsum", "inf"})

_TOKEN = re.compile(
    r"(?P<space>[ \t\r\n]+)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op>\.\.|[-+*/^(),;_=])"
)


class ParseError(QppError, ValueError):
    def __init__(self, position: int, message: str, expected: tuple[str, ...] = ()) -> None:
        self.position = position
        self.message = message
        self.expected = expected
        detail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(position, f"Unexpected character {text[position]!r}")
        kind = match.lastgroup or "op"
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self._index = 0
        self._depth = 0
        self._scope: list[str] = []

    @property
    def token(self) -> Token:
        return self._tokens[self._index]

    def advance(self) -> Token:
        token = self.token
        if token.kind != "end":
            self._index += 1
        return token

    def at(self, text: str) -> bool:
        return self.token.kind in {"op", "ident"} and self.token.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"Unexpected {self._describe()}", (repr(text),))
        return self.advance()

    def error(self, message: str, expected: tuple[str, ...] = ()) -> ParseError:
        return ParseError(self.token.position, message, expected)

    def _describe(self) -> str:
        return "end of input" if self.token.kind == "end" else repr(self.token.text)

    def _enter(self) -> None:
        self._depth += 1
        if self._depth > MAX_DEPTH:
            raise self.error(f"Expression nests deeper than {MAX_DEPTH} levels")

    def _leave(self) -> None:
        self._depth -= 1

    def parse(self) -> Expr:
        node = self.expr()
        if self.token.kind != "end":
            raise self.error(f"Unexpected {self._describe()}", ("operator", "end of input"))
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            right = self.factor()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def factor(self) -> Expr:
        negations = 0
        while self.at("-"):
            self.advance()
            negations += 1
            self._enter()
        bare_q = self.at("q")
        node = self.atom()
        if self.at("^"):
            self.advance()
            exponent = self.power()
            node = QPow(exponent) if bare_q else IntPow(node, exponent)
        for _ in range(negations):
            node = Neg(node)
            self._leave()
        return node

    def power(self) -> ExpPoly:
        if self.at("("):
            self.advance()
            poly = self.exppoly()
            self.expect(")")
            return poly
        if self.at("-"):
            self.advance()
            return -ExpPoly.constant(self.integer())
        if self.token.kind == "ident":
            return self.index_name()
        if self.token.kind == "int":
            return ExpPoly.constant(self.integer())
        raise self.error(f"Unexpected {self._describe()} after '^'", ("integer", "index", "'('"))

    def atom(self) -> Expr:
        token = self.token
        if token.kind == "int":
            return RationalLit(Fraction(self.integer()))
        if self.at("q"):
            self.advance()
            return QPow(ExpPoly.constant(1))
        if self.at("poch"):
            return self.poch()
        if self.at("sum"):
            return self.sum()
        if self.at("bsum"):
            return self.bsum()
        if self.at("("):
            self.advance()
            self._enter()
            node = self.expr()
            self._leave()
            self.expect(")")
            return node
        raise self.error(
            f"Unexpected {self._describe()}",
            ("integer", "'q'", "'poch'", "'sum'", "'bsum'", "'('"),
        )

    def integer(self) -> int:
        if self.token.kind != "int":
            raise self.error(f"Unexpected {self._describe()}", ("integer",))
        token = self.token
        try:
            value = int(token.text)
        except ValueError as exc:
            raise self.error("Integer literal is too long") from exc
        self.advance()
        return value

    def index_name(self) -> ExpPoly:
        token = self.token
        if token.kind != "ident" or token.text in KEYWORDS:
            raise self.error(f"Unexpected {self._describe()}", ("index variable",))
        if token.text not in self._scope:
            raise self.error(f"Index {token.text!r} is not bound by an enclosing sum")
        self.advance()
        return ExpPoly.variable(token.text)

    def binder(self) -> str:
        token = self.token
        if token.kind != "ident" or token.text in KEYWORDS:
            raise self.error(f"Unexpected {self._describe()}", ("index variable",))
        self.advance()
        return token.text

    def poch(self) -> Poch:
        self.expect("poch")
        self.expect("(")
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        position = self.token.position
        if self.integer() != 1:
            raise ParseError(position, "Pochhammer sign must be 1 or -1", ("1", "-1"))
        self.expect(",")
        exponent = self.exppoly()
        self.expect(";")
        position = self.token.position
        modulus = self.integer()
        if modulus < 1:
            raise ParseError(position, "Pochhammer modulus must be positive")
        self.expect(")")
        self.expect("_")
        if self.at("inf"):
            self.advance()
            return Poch(sign, exponent, modulus, None)
        self.expect("(")
        length = self.exppoly()
        self.expect(")")
        return Poch(sign, exponent, modulus, length)

    def sum(self) -> Sum:
        self.expect("sum")
        self.expect("(")
        var = self.binder()
        self.expect("=")
        lower = self.bound()
        self.expect("..")
        upper = None
        if self.at("inf"):
            self.advance()
        else:
            upper = self.bound()
        self.expect(",")
        body = self.scoped_body(var)
        self.expect(")")
        return Sum(var, lower, upper, body)

    def bsum(self) -> BSum:
        self.expect("bsum")
        self.expect("(")
        var = self.binder()
        self.expect(",")
        body = self.scoped_body(var)
        self.expect(")")
        return BSum(var, body)

    def scoped_body(self, var: str) -> Expr:
        self._scope.append(var)
        self._enter()
        try:
            return self.expr()
        finally:
            self._leave()
            self._scope.pop()

    def bound(self) -> ExpPoly:
        position = self.token.position
        poly = self.exppoly()
        if poly.degree > 1:
            raise ParseError(position, "Summation bounds must be affine in the indices")
        return poly

    def exppoly(self) -> ExpPoly:
        poly = self.poly_term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.poly_term()
            poly = poly + right if op == "+" else poly - right
        return poly

    def poly_term(self) -> ExpPoly:
        poly = self.poly_factor()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            position = self.token.position
            right = self.poly_factor()
            if op == "*":
                poly = _product(poly, right, position)
                continue
            if not right.is_constant or right.value() == 0:
                raise ParseError(position, "Exponents may only be divided by nonzero constants")
            poly = poly.scaled(1 / right.value())
        return poly

    def poly_factor(self) -> ExpPoly:
        if self.at("-"):
            self.advance()
            self._enter()
            try:
                return -self.poly_factor()
            finally:
                self._leave()
        token = self.token
        if token.kind == "int":
            base = ExpPoly.constant(self.integer())
        elif token.kind == "ident":
            base = self.index_name()
        elif self.at("("):
            self.advance()
            self._enter()
            base = self.exppoly()
            self._leave()
            self.expect(")")
        else:
            raise self.error(
                f"Unexpected {self._describe()} in exponent", ("integer", "index", "'('")
            )
        if self.at("^"):
            self.advance()
            position = self.token.position
            k = self.integer()
            if k > MAX_POLY_POWER:
                raise ParseError(position, f"Exponent powers are limited to {MAX_POLY_POWER}")
            power = ExpPoly.constant(1)
            for _ in range(k):
                power = _product(power, base, position)
            base = power
        return base


def _coefficient_bits(poly: ExpPoly) -> int:
    return max(
        (c.numerator.bit_length() + c.denominator.bit_length() for _, c in poly.terms),
        default=0,
    )


def _product(a: ExpPoly, b: ExpPoly, position: int) -> ExpPoly:
    """`a * b`, refused before it is computed if the result would be unreasonably large."""

    if a.degree + b.degree > MAX_POLY_DEGREE:
        raise ParseError(position, f"Exponent polynomials are limited to degree {MAX_POLY_DEGREE}")
    if len(a.terms) * len(b.terms) > MAX_POLY_WORK:
        raise ParseError(position, "Exponent polynomial has too many terms")
    if _coefficient_bits(a) + _coefficient_bits(b) > MAX_COEFFICIENT_BITS:
        raise ParseError(position, "Exponent polynomial coefficients are too large")
    return a * b


def parse(source: str | bytes) -> Expr:
    """Parse DSL text; any syntax problem raises `ParseError` with its byte position."""

    if isinstance(source, bytes):
        for position, byte in enumerate(source):
            if byte > 0x7F:
                raise ParseError(position, "Non-ASCII byte in input")
        text = source.decode("ascii")
    else:
        text = source
        for position, ch in enumerate(text):
            if ord(ch) > 0x7F:
                raise ParseError(position, "Non-ASCII character in input")
    parser = Parser(tokenize(text))
    try:
        return parser.parse()
    except RecursionError as exc:
        logger.debug("recursion limit hit while parsing %d characters", len(text))
        raise parser.error("Expression nests too deeply") from exc
