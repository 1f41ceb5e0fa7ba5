"""q-Pochhammer symbols with monomial arguments a = +-q^r."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from qpp.failures import QppError
from qpp.series import QSeries, div_binomial, mul_binomial, one, zero

_ARG_PATTERN = re.compile(r"^\s*(?P<sign>[+-]?)\s*(?:(?P<one>1)|q(?:\^(?P<exp>\d+))?)\s*$")


class ZeroExponentError(QppError, ValueError):
    pass


@dataclass(frozen=True)
class MonomialArg:
    sign: int
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"Monomial sign must be +1 or -1, got {self.sign}.")
        if self.exponent < 0:
            raise ValueError(f"Monomial exponent must be nonnegative, got {self.exponent}.")

    @classmethod
    def parse(cls, text: str) -> MonomialArg:
        """Read `1`, `-1`, `q`, `-q^3` and the like."""

        match = _ARG_PATTERN.match(text or "")
        if not match:
            raise ValueError(f"Not a monomial of the form +-q^r: {text!r}")
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("one"):
            return cls(sign, 0)
        return cls(sign, int(match.group("exp") or 1))

    def __str__(self) -> str:
        prefix = "-" if self.sign == -1 else ""
        if self.exponent == 0:
            return f"{prefix}1"
        if self.exponent == 1:
            return f"{prefix}q"
        return f"{prefix}q^{self.exponent}"


def apply_poch(
    s: QSeries,
    a: MonomialArg,
    m: int,
    n: int | None = None,
    *,
    inverse: bool = False,
) -> QSeries:
    """Multiply (or divide) `s` by (a; q^m)_n; `n=None` is the infinite product.

    Factors 1 - a q^(r + mj) with r + mj beyond the order of `s` contribute 1.
    """

    if m < 1:
        raise ValueError(f"Modulus must be positive, got {m}.")
    if n is not None and n < 0:
        raise ValueError(f"Product length must be nonnegative, got {n}.")

    result = s
    j = 0
    while n is None or j < n:
        e = a.exponent + m * j
        if e > s.order:
            break
        if inverse:
            result = div_binomial(result, -a.sign, e)
        elif e == 0 and a.sign == 1:
            return zero(s.order)
        else:
            result = mul_binomial(result, -a.sign, e)
        j += 1
    return result


def poch_finite(a: MonomialArg, m: int, n: int, order: int) -> QSeries:
    return apply_poch(one(order), a, m, n)


@lru_cache(maxsize=512)
def poch_inf(a: MonomialArg, m: int, order: int) -> QSeries:
    return apply_poch(one(order), a, m)


def inv_one_plus_pow(m: int, order: int) -> QSeries:
    """1/(1 + q^m) = 1 - q^m + q^2m - ..."""

    if m == 0:
        raise ZeroExponentError("1/(1 + q^0) is the constant 1/2; handle n = 0 separately.")
    if m < 0:
        raise ValueError(f"Exponent must be positive, got {m}.")
    values = [0] * (order + 1)
    for k in range(0, order // m + 1):
        values[k * m] = -1 if k % 2 else 1
    return QSeries(tuple(values))


def pentagonal(order: int) -> QSeries:
    """Euler's pentagonal sum: sum over k in Z of (-1)^k q^(k(3k-1)/2)."""

    values = [0] * (order + 1)
    values[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        values[k * (3 * k - 1) // 2] += sign
        generalized = k * (3 * k + 1) // 2
        if generalized <= order:
            values[generalized] += sign
        k += 1
    return QSeries(tuple(values))
