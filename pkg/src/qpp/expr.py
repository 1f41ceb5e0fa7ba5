"""Syntax tree of the q-series expression language."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from qpp.failures import QppError

Monomial = tuple[tuple[str, int], ...]


class NonIntegerExponentError(QppError, ValueError):
    pass


class FreeVariableError(QppError, ValueError):
    pass


def _monomial_product(a: Monomial, b: Monomial) -> Monomial:
    powers: dict[str, int] = dict(a)
    for name, power in b:
        powers[name] = powers.get(name, 0) + power
    return tuple(sorted(powers.items()))


@dataclass(frozen=True)
class ExpPoly:
    """Polynomial with rational coefficients in the bound index variables."""

    terms: tuple[tuple[Monomial, Fraction], ...] = ()

    @classmethod
    def _build(cls, mapping: Mapping[Monomial, Fraction]) -> ExpPoly:
        return cls(tuple(sorted((m, c) for m, c in mapping.items() if c != 0)))

    @classmethod
    def constant(cls, value: int | Fraction) -> ExpPoly:
        return cls._build({(): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> ExpPoly:
        return cls._build({((name, 1),): Fraction(1)})

    def __add__(self, other: ExpPoly) -> ExpPoly:
        merged = dict(self.terms)
        for monomial, c in other.terms:
            merged[monomial] = merged.get(monomial, Fraction(0)) + c
        return ExpPoly._build(merged)

    def __neg__(self) -> ExpPoly:
        return ExpPoly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: ExpPoly) -> ExpPoly:
        return self + (-other)

    def __mul__(self, other: ExpPoly) -> ExpPoly:
        product: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                key = _monomial_product(ma, mb)
                product[key] = product.get(key, Fraction(0)) + ca * cb
        return ExpPoly._build(product)

    def __pow__(self, k: int) -> ExpPoly:
        if k < 0:
            raise ValueError("Exponent polynomials only take nonnegative powers.")
        result = ExpPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def scaled(self, c: Fraction) -> ExpPoly:
        return ExpPoly._build({m: v * c for m, v in self.terms})

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(name for monomial, _ in self.terms for name, _ in monomial)

    @property
    def degree(self) -> int:
        return max((sum(p for _, p in m) for m, _ in self.terms), default=0)

    @property
    def is_constant(self) -> bool:
        return not self.variables

    def value(self, env: Mapping[str, int] | None = None) -> Fraction:
        env = env or {}
        total = Fraction(0)
        for monomial, c in self.terms:
            term = c
            for name, power in monomial:
                if name not in env:
                    raise FreeVariableError(f"Index variable {name!r} is not bound.")
                term *= env[name] ** power
            total += term
        return total

    def integer_value(self, env: Mapping[str, int] | None = None) -> int:
        value = self.value(env)
        if value.denominator != 1:
            raise NonIntegerExponentError(f"{self} evaluates to {value}, not an integer.")
        return value.numerator

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for monomial, c in reversed(self.terms):
            factors = [f"{name}^{p}" if p > 1 else name for name, p in monomial]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = f"-{body}" if sign == "-" else body
        for sign, body in pieces[1:]:
            text += f"{sign}{body}"
        return text


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


@dataclass(frozen=True)
class QPow:
    exponent: ExpPoly


@dataclass(frozen=True)
class Poch:
    """(sign q^exponent; q^modulus)_length; `length=None` is the infinite product."""

    sign: int
    exponent: ExpPoly
    modulus: int
    length: ExpPoly | None


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class IntPow:
    base: Expr
    exponent: ExpPoly


@dataclass(frozen=True)
class Sum:
    var: str
    lower: ExpPoly
    upper: ExpPoly | None
    body: Expr


@dataclass(frozen=True)
class BSum:
    var: str
    body: Expr


Expr = Union[RationalLit, QPow, Poch, Add, Sub, Mul, Div, Neg, IntPow, Sum, BSum]


def lit(value: int | Fraction) -> RationalLit:
    return RationalLit(Fraction(value))


def free_variables(expr: Expr) -> frozenset[str]:
    match expr:
        case RationalLit():
            return frozenset()
        case QPow(exponent=e):
            return e.variables
        case Poch(exponent=e, length=length):
            return e.variables | (length.variables if length is not None else frozenset())
        case Add(left=a, right=b) | Sub(left=a, right=b) | Mul(left=a, right=b) | Div(
            left=a, right=b
        ):
            return free_variables(a) | free_variables(b)
        case Neg(operand=a):
            return free_variables(a)
        case IntPow(base=a, exponent=e):
            return free_variables(a) | e.variables
        case Sum(var=var, lower=lower, upper=upper, body=body):
            bounds = lower.variables | (upper.variables if upper is not None else frozenset())
            return bounds | (free_variables(body) - {var})
        case BSum(var=var, body=body):
            return free_variables(body) - {var}
    raise TypeError(f"Not an expression node: {expr!r}")
