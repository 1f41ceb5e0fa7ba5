"""Truncated formal power series in q with exact rational coefficients.

A `QSeries` of order N stores the coefficients of q^0 .. q^N. Binary operations truncate
to the smaller order of their operands. Coefficients are `int` whenever they are
integral and `Fraction` otherwise, so partition-counting series stay on plain integer
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from qpp.failures import QppError

Rational = int | Fraction


class ZeroConstantTermError(QppError, ZeroDivisionError):
    pass


class IndexOutOfRangeError(QppError, IndexError):
    pass


def normalize(value: Rational | str) -> Rational:
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return normalize(Fraction(value.strip()))
    raise TypeError(f"Not an exact rational: {value!r}")


def format_rational(value: Rational) -> str:
    return str(normalize(value))


def parse_rational(text: str) -> Rational:
    return normalize(text)


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("A series needs at least its constant coefficient.")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.coeffs)

    def __getitem__(self, k: int) -> Rational:
        return coeff(self, k)

    def __neg__(self) -> QSeries:
        return neg(self)

    def __add__(self, other: QSeries | Rational) -> QSeries:
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: QSeries | Rational) -> QSeries:
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other: QSeries | Rational) -> QSeries:
        return sub(_coerce(other, self.order), self)

    def __mul__(self, other: QSeries | Rational) -> QSeries:
        if isinstance(other, QSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: QSeries | Rational) -> QSeries:
        if isinstance(other, QSeries):
            return mul(self, inverse(other))
        if other == 0:
            raise ZeroConstantTermError("Division of a series by zero.")
        return scale(self, Fraction(1) / Fraction(other))

    def __rtruediv__(self, other: Rational) -> QSeries:
        return scale(inverse(self), other)

    def __pow__(self, k: int) -> QSeries:
        return power(self, k)


def _series(values: Iterable[Rational]) -> QSeries:
    return QSeries(tuple(normalize(v) for v in values))


def _coerce(value: QSeries | Rational, order: int) -> QSeries:
    if isinstance(value, QSeries):
        return value
    return constant(value, order)


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"Truncation order must be nonnegative, got {order}.")


def from_coefficients(values: Iterable[Rational | str]) -> QSeries:
    return _series(values)


def zero(order: int) -> QSeries:
    _check_order(order)
    return QSeries((0,) * (order + 1))


def constant(c: Rational, order: int) -> QSeries:
    _check_order(order)
    return QSeries((normalize(c),) + (0,) * order)


def one(order: int) -> QSeries:
    return constant(1, order)


def monomial(c: Rational, k: int, order: int) -> QSeries:
    """c q^k truncated at `order`; exponents above the order vanish."""

    _check_order(order)
    if k < 0:
        raise ValueError(f"Exponent must be nonnegative, got {k}.")
    values: list[Rational] = [0] * (order + 1)
    if k <= order:
        values[k] = normalize(c)
    return QSeries(tuple(values))


def coeff(a: QSeries, k: int) -> Rational:
    if k < 0 or k > a.order:
        raise IndexOutOfRangeError(f"Exponent {k} outside 0..{a.order}.")
    return a.coeffs[k]


def truncate(a: QSeries, order: int) -> QSeries:
    _check_order(order)
    if order > a.order:
        raise IndexOutOfRangeError(f"Cannot raise order {a.order} to {order} by truncation.")
    return QSeries(a.coeffs[: order + 1])


def valuation(a: QSeries) -> int | None:
    """Smallest exponent with a nonzero coefficient, `None` for zero up to the order."""

    for k, value in enumerate(a.coeffs):
        if value:
            return k
    return None


def is_constant(a: QSeries) -> bool:
    return not any(a.coeffs[1:])


def add(a: QSeries, b: QSeries) -> QSeries:
    order = min(a.order, b.order)
    return _series(a.coeffs[k] + b.coeffs[k] for k in range(order + 1))


def sub(a: QSeries, b: QSeries) -> QSeries:
    order = min(a.order, b.order)
    return _series(a.coeffs[k] - b.coeffs[k] for k in range(order + 1))


def neg(a: QSeries) -> QSeries:
    return QSeries(tuple(-v for v in a.coeffs))


def scale(a: QSeries, c: Rational) -> QSeries:
    c = normalize(c)
    return _series(c * v for v in a.coeffs)


def shift(a: QSeries, k: int) -> QSeries:
    """Multiply by q^k keeping the order; coefficients pushed past it are dropped."""

    if k < 0:
        raise ValueError(f"Shift must be nonnegative, got {k}.")
    if k > a.order:
        return zero(a.order)
    return truncate(lift(a, k), a.order)


def lift(a: QSeries, k: int) -> QSeries:
    """Multiply by q^k; a series known to order M is then known to order M + k."""

    if k < 0:
        raise ValueError(f"Lift must be nonnegative, got {k}.")
    return QSeries((0,) * k + a.coeffs)


def _scaled_integers(values: tuple[Rational, ...]) -> tuple[int, list[int]]:
    denominator = 1
    for v in values:
        if isinstance(v, Fraction):
            denominator = math.lcm(denominator, v.denominator)
    if denominator == 1:
        return 1, list(values)  # type: ignore[arg-type]
    scaled = [
        v.numerator * (denominator // v.denominator)
        if isinstance(v, Fraction)
        else v * denominator
        for v in values
    ]
    return denominator, scaled


def _divide_all(values: list[int], denominator: int) -> QSeries:
    if denominator == 1:
        return QSeries(tuple(values))
    return _series(Fraction(v, denominator) for v in values)


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to the smaller order."""

    order = min(a.order, b.order)
    da, xs = _scaled_integers(a.coeffs[: order + 1])
    db, ys = _scaled_integers(b.coeffs[: order + 1])
    outer = [(i, x) for i, x in enumerate(xs) if x]
    inner = [(j, y) for j, y in enumerate(ys) if y]
    if len(outer) > len(inner):
        outer, inner = inner, outer

    out = [0] * (order + 1)
    for i, x in outer:
        limit = order - i
        for j, y in inner:
            if j > limit:
                break
            out[i + j] += x * y
    return _divide_all(out, da * db)


def inverse(a: QSeries) -> QSeries:
    if a.coeffs[0] == 0:
        raise ZeroConstantTermError("Cannot invert a series with zero constant term.")

    order = a.order
    scale_by, xs = _scaled_integers(a.coeffs)
    lead = xs[0]
    tail = [(j, x) for j, x in enumerate(xs) if j > 0 and x]

    if lead in (1, -1):
        ys = [0] * (order + 1)
        ys[0] = lead
        for k in range(1, order + 1):
            acc = 0
            for j, x in tail:
                if j > k:
                    break
                acc += x * ys[k - j]
            ys[k] = -lead * acc
        return QSeries(tuple(scale_by * y for y in ys))

    # 1/A = sum_k C_k / lead^(k+1) keeps the recursion in integers.
    powers = [1]
    for _ in range(order + 1):
        powers.append(powers[-1] * lead)
    cs = [0] * (order + 1)
    cs[0] = 1
    for k in range(1, order + 1):
        acc = 0
        for j, x in tail:
            if j > k:
                break
            acc += x * cs[k - j] * powers[j - 1]
        cs[k] = -acc
    return _series(Fraction(scale_by * cs[k], powers[k + 1]) for k in range(order + 1))


def power(a: QSeries, k: int) -> QSeries:
    if k < 0:
        return power(inverse(a), -k)
    if is_constant(a):
        return constant(a.coeffs[0] ** k, a.order)
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def compose_power(a: QSeries, sign: int, m: int) -> QSeries:
    """Substitute q -> sign * q^m, keeping the order of `a`."""

    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}.")
    if m < 1:
        raise ValueError(f"Power must be positive, got {m}.")
    values: list[Rational] = [0] * (a.order + 1)
    for k in range(a.order // m + 1):
        value = a.coeffs[k]
        values[k * m] = -value if sign == -1 and k % 2 else value
    return QSeries(tuple(values))


def mul_binomial(a: QSeries, c: Rational, e: int) -> QSeries:
    """Multiply by 1 + c q^e in linear time."""

    if e < 0:
        raise ValueError(f"Exponent must be nonnegative, got {e}.")
    if e == 0:
        return scale(a, 1 + c)
    values = list(a.coeffs)
    for k in range(a.order, e - 1, -1):
        values[k] += c * values[k - e]
    return _series(values)


def div_binomial(a: QSeries, c: Rational, e: int) -> QSeries:
    """Divide by 1 + c q^e in linear time."""

    if e < 0:
        raise ValueError(f"Exponent must be nonnegative, got {e}.")
    if e == 0:
        if 1 + c == 0:
            raise ZeroConstantTermError("Division by 1 - q^0.")
        return scale(a, Fraction(1) / (1 + Fraction(c)))
    values = list(a.coeffs)
    for k in range(e, a.order + 1):
        values[k] -= c * values[k - e]
    return _series(values)


def first_mismatch(a: QSeries, b: QSeries, order: int) -> int | None:
    if order > a.order or order > b.order:
        raise IndexOutOfRangeError(
            f"Cannot compare to order {order}; operands are known to {a.order} and {b.order}."
        )
    for k in range(order + 1):
        if a.coeffs[k] != b.coeffs[k]:
            return k
    return None


def eq_up_to(a: QSeries, b: QSeries, order: int) -> bool:
    return first_mismatch(a, b, order) is None
