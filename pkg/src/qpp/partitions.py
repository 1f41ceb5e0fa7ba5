"""Brute-force enumeration of partitions whose parts are separated by parity.

In every family the parts of one parity (the "smaller" parity) are all strictly below the
parts of the other parity. The larger subpartition may always be empty; the smaller one
may be empty only for OU_EU and OD_EU. These conventions are the ones forced by the sum
sides in `qpp.families`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum, StrEnum
from typing import Iterator

from qpp.config import enumeration_bound
from qpp.failures import QppError
from qpp.series import QSeries

logger = logging.getLogger(__name__)


class BoundExceededError(QppError, ValueError):
    pass


class Parity(StrEnum):
    ODD = "odd"
    EVEN = "even"

    @property
    def smallest(self) -> int:
        return 1 if self is Parity.ODD else 2

    @property
    def other(self) -> Parity:
        return Parity.EVEN if self is Parity.ODD else Parity.ODD


class ParityClass(Enum):
    """The eight families; the tag reads `<larger parity>_<smaller parity>`."""

    OU_EU = ("ou_eu", Parity.ODD, False, False, True)
    OD_EU = ("od_eu", Parity.ODD, True, False, True)
    OU_ED = ("ou_ed", Parity.ODD, False, True, False)
    OD_ED = ("od_ed", Parity.ODD, True, True, False)
    EU_OU = ("eu_ou", Parity.EVEN, False, False, False)
    ED_OU = ("ed_ou", Parity.EVEN, True, False, False)
    EU_OD = ("eu_od", Parity.EVEN, False, True, False)
    ED_OD = ("ed_od", Parity.EVEN, True, True, False)

    def __init__(
        self,
        tag: str,
        larger_parity: Parity,
        larger_distinct: bool,
        smaller_distinct: bool,
        smaller_may_be_empty: bool,
    ) -> None:
        self.tag = tag
        self.larger_parity = larger_parity
        self.larger_distinct = larger_distinct
        self.smaller_distinct = smaller_distinct
        self.smaller_may_be_empty = smaller_may_be_empty

    @property
    def smaller_parity(self) -> Parity:
        return self.larger_parity.other


def parity_class(tag: str) -> ParityClass:
    normalized = (tag or "").strip().lower().replace("-", "_")
    for cls in ParityClass:
        if cls.tag == normalized or cls.name.lower() == normalized:
            return cls
    known = ", ".join(cls.tag for cls in ParityClass)
    raise ValueError(f"Unknown partition family {tag!r} (expected one of: {known}).")


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"Parts must be positive: {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"Parts must be nonincreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def smaller_parts(self, cls: ParityClass) -> tuple[int, ...]:
        return tuple(p for p in self.parts if _has_parity(p, cls.smaller_parity))

    def larger_parts(self, cls: ParityClass) -> tuple[int, ...]:
        return tuple(p for p in self.parts if _has_parity(p, cls.larger_parity))

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.parts) + "}"


def _has_parity(part: int, parity: Parity) -> bool:
    return part % 2 == (1 if parity is Parity.ODD else 0)


def _parts(
    total: int,
    parity: Parity,
    *,
    lowest: int,
    highest: int,
    distinct: bool,
) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of `parity` parts in [lowest, highest] summing to `total`."""

    if total == 0:
        yield ()
        return
    top = min(highest, total)
    if not _has_parity(top, parity):
        top -= 1
    for part in range(top, lowest - 1, -2):
        below = part - 2 if distinct else part
        for rest in _parts(total - part, parity, lowest=lowest, highest=below, distinct=distinct):
            yield (part, *rest)


def _generate(cls: ParityClass, n: int) -> Iterator[tuple[int, ...]]:
    small = cls.smaller_parity
    large = cls.larger_parity
    for k in range(0, n + 1):
        if k == 0 and not cls.smaller_may_be_empty:
            continue
        for smaller in _parts(
            k, small, lowest=small.smallest, highest=k, distinct=cls.smaller_distinct
        ):
            floor = smaller[0] + 1 if smaller else 1
            if not _has_parity(floor, large):
                floor += 1
            for larger in _parts(
                n - k, large, lowest=floor, highest=n - k, distinct=cls.larger_distinct
            ):
                yield larger + smaller


def count(cls: ParityClass, n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}.")
    return sum(1 for _ in _generate(cls, n))


def enumerate_partitions(cls: ParityClass, n: int) -> list[Partition]:
    bound = enumeration_bound()
    if n > bound:
        raise BoundExceededError(
            f"Enumeration is limited to n <= {bound} (set QPP_ENUMERATION_BOUND to raise it)."
        )
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}.")
    return [Partition(parts) for parts in _generate(cls, n)]


def oracle_series(cls: ParityClass, order: int) -> QSeries:
    """Sum of count(cls, n) q^n for n = 0 .. order."""

    if order < 0:
        raise ValueError(f"Truncation order must be nonnegative, got {order}.")
    coefficients = tuple(count(cls, n) for n in range(order + 1))
    logger.debug("oracle %s to order %d: %s", cls.tag, order, coefficients[-1])
    return QSeries(coefficients)
