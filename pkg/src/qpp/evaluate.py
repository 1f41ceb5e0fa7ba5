"""Evaluate a parsed expression to a truncated series."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Mapping

from qpp.expr import (
    Add,
    BSum,
    Div,
    ExpPoly,
    Expr,
    FreeVariableError,
    IntPow,
    Mul,
    Neg,
    Poch,
    QPow,
    RationalLit,
    Sub,
    Sum,
    free_variables,
)
from qpp.products import MonomialArg, poch_finite, poch_inf
from qpp.series import (
    QSeries,
    add,
    constant,
    inverse,
    is_constant,
    monomial,
    mul,
    neg,
    power,
    scale,
    shift,
    sub,
)
from qpp.summation import NegativeExponentError, sum_series

logger = logging.getLogger(__name__)

Env = Mapping[str, int]


def _exponent(poly: ExpPoly, env: Env) -> int:
    value = poly.integer_value(env)
    if value < 0:
        raise NegativeExponentError(f"q-exponent {poly} is {value} at {dict(env)}.")
    return value


def _shifted_binomial(den: Expr, env: Env) -> tuple[int, Fraction, int]:
    """Recognise a denominator c +- q^e with e < 0 at `env`.

    Returns (k, a, b) with q^k * den = a q^k + b, or k = 0 for any other denominator.
    """

    match den:
        case Add(left=RationalLit(value=c), right=QPow(exponent=e)):
            a, b, exponent = c, 1, e
        case Sub(left=RationalLit(value=c), right=QPow(exponent=e)):
            a, b, exponent = c, -1, e
        case Add(left=QPow(exponent=e), right=RationalLit(value=c)):
            a, b, exponent = c, 1, e
        case Sub(left=QPow(exponent=e), right=RationalLit(value=c)):
            a, b, exponent = -c, 1, e
        case _:
            return 0, Fraction(0), 0
    value = exponent.integer_value(env)
    if value >= 0:
        return 0, Fraction(0), 0
    return -value, a, b


def valuation_bound(expr: Expr, env: Env) -> int:
    """A lower bound for the valuation of `expr` at `env`, cheap to compute."""

    match expr:
        case QPow(exponent=e):
            return e.integer_value(env)
        case Add(left=a, right=b) | Sub(left=a, right=b):
            return min(valuation_bound(a, env), valuation_bound(b, env))
        case Mul(left=a, right=b):
            return valuation_bound(a, env) + valuation_bound(b, env)
        case Div(left=a, right=b):
            k, _, _ = _shifted_binomial(b, env)
            return valuation_bound(a, env) + k
        case Neg(operand=a):
            return valuation_bound(a, env)
        case IntPow(base=a, exponent=e):
            k = e.integer_value(env)
            return k * valuation_bound(a, env) if k >= 0 else 0
    return 0


class Evaluator:
    def __init__(self, order: int) -> None:
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}.")
        self.order = order

    def eval(self, expr: Expr, env: Env) -> QSeries:
        order = self.order
        match expr:
            case RationalLit(value=c):
                return constant(c, order)
            case QPow(exponent=e):
                return monomial(1, _exponent(e, env), order)
            case Poch(sign=sign, exponent=e, modulus=m, length=length):
                arg = MonomialArg(sign, _exponent(e, env))
                if length is None:
                    return poch_inf(arg, m, order)
                n = length.integer_value(env)
                if n < 0:
                    raise ValueError(f"Pochhammer length {length} is {n} at {dict(env)}.")
                return poch_finite(arg, m, n, order)
            case Add(left=a, right=b):
                return add(self.eval(a, env), self.eval(b, env))
            case Sub(left=a, right=b):
                return sub(self.eval(a, env), self.eval(b, env))
            case Mul(left=a, right=b):
                left = self.eval(a, env)
                right = self.eval(b, env)
                if is_constant(right):
                    return scale(left, right[0])
                if is_constant(left):
                    return scale(right, left[0])
                return mul(left, right)
            case Div(left=a, right=b):
                return self._divide(a, b, env)
            case Neg(operand=a):
                return neg(self.eval(a, env))
            case IntPow(base=a, exponent=e):
                return power(self.eval(a, env), e.integer_value(env))
            case Sum(var=var, lower=lower, upper=upper, body=body):
                start = lower.integer_value(env)
                stop = upper.integer_value(env) if upper is not None else None
                return sum_series(self._term(var, body, env), order, start=start, stop=stop)
            case BSum(var=var, body=body):
                term = self._term(var, body, env)
                upper_half = sum_series(term, order, start=0)
                lower_half = sum_series(term, order, start=-1, step=-1)
                return add(upper_half, lower_half)
        raise TypeError(f"Not an expression node: {expr!r}")

    def _term(self, var: str, body: Expr, env: Env) -> Callable[[int], QSeries | None]:
        def term(n: int) -> QSeries | None:
            inner = {**env, var: n}
            if valuation_bound(body, inner) > self.order:
                return None
            return self.eval(body, inner)

        return term

    def _divide(self, numerator: Expr, denominator: Expr, env: Env) -> QSeries:
        k, a, b = _shifted_binomial(denominator, env)
        top = self.eval(numerator, env)
        if k:
            # X / (c +- q^-k) = X q^k / (c q^k +- 1)
            logger.debug("rewriting negative-exponent denominator, shift %d", k)
            bottom = add(monomial(a, k, self.order), constant(b, self.order))
            return mul(shift(top, k), inverse(bottom))
        bottom = self.eval(denominator, env)
        if is_constant(bottom) and bottom[0] != 0:
            return scale(top, Fraction(1) / Fraction(bottom[0]))
        return mul(top, inverse(bottom))


def evaluate(expr: Expr, order: int, env: Env | None = None) -> QSeries:
    env = dict(env or {})
    free = free_variables(expr) - set(env)
    if free:
        raise FreeVariableError(f"Unbound index variables: {', '.join(sorted(free))}.")
    return Evaluator(order).eval(expr, env)
