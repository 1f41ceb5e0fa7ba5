from __future__ import annotations

import pytest

from qpp.families import family_series
from qpp.partitions import (
    BoundExceededError,
    Parity,
    ParityClass,
    Partition,
    count,
    enumerate_partitions,
    oracle_series,
    parity_class,
)

pytestmark = pytest.mark.unit


def test_count_examples() -> None:
    assert count(ParityClass.OU_EU, 0) == 1
    assert count(ParityClass.OD_ED, 0) == 0
    assert count(ParityClass.OD_ED, 2) == 1
    assert count(ParityClass.OD_ED, 5) == 1
    assert count(ParityClass.OD_ED, 6) == 2


def test_enumerate_examples() -> None:
    assert enumerate_partitions(ParityClass.OD_ED, 2) == [Partition((2,))]
    assert enumerate_partitions(ParityClass.ED_OD, 1) == [Partition((1,))]
    assert enumerate_partitions(ParityClass.OD_ED, 1) == []
    assert [str(p) for p in enumerate_partitions(ParityClass.OD_ED, 5)] == ["{3,2}"]


def test_oracle_series_example() -> None:
    assert oracle_series(ParityClass.OD_ED, 2).coeffs == (0, 0, 1)


@pytest.mark.parametrize("cls", list(ParityClass))
def test_enumerated_partitions_respect_their_class(cls: ParityClass) -> None:
    for n in range(13):
        found = enumerate_partitions(cls, n)
        assert len(found) == count(cls, n)
        assert len(set(found)) == len(found)
        for partition in found:
            assert partition.size == n
            smaller = partition.smaller_parts(cls)
            larger = partition.larger_parts(cls)
            assert len(smaller) + len(larger) == len(partition.parts)
            if not cls.smaller_may_be_empty:
                assert smaller
            if smaller and larger:
                assert max(smaller) < min(larger)
            if cls.smaller_distinct:
                assert len(set(smaller)) == len(smaller)
            if cls.larger_distinct:
                assert len(set(larger)) == len(larger)


@pytest.mark.parametrize("cls", list(ParityClass))
def test_sum_side_matches_brute_force(cls: ParityClass) -> None:
    order = 40
    assert family_series(cls, order) == oracle_series(cls, order)


def test_parity_class_lookup() -> None:
    assert parity_class("od_ed") is ParityClass.OD_ED
    assert parity_class(" ED-OU ") is ParityClass.ED_OU
    assert ParityClass.OD_ED.smaller_parity is Parity.EVEN
    with pytest.raises(ValueError):
        parity_class("ox_ey")


def test_enumeration_bound(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QPP_ENUMERATION_BOUND", "10")
    with pytest.raises(BoundExceededError):
        enumerate_partitions(ParityClass.OU_EU, 11)
    assert enumerate_partitions(ParityClass.OU_EU, 10)


def test_partition_validation() -> None:
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
