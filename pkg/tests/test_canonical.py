from __future__ import annotations

import pytest

from qpp.bailey import bailey_lemma_rhs, beta_side_sum
from qpp.canonical import CANONICAL_TEXTS, Side, canonical_text
from qpp.evaluate import evaluate
from qpp.identities import IdentityId, UnknownTagError, lhs_series, rhs_series
from qpp.parser import parse

pytestmark = pytest.mark.unit

ORDER = 60


def test_every_identity_has_canonical_text() -> None:
    assert set(IdentityId) <= set(CANONICAL_TEXTS)
    assert "bailey.lemma" in CANONICAL_TEXTS


def test_examples() -> None:
    assert canonical_text("thm1.od_ed", Side.RHS) == (
        "q*poch(-1,1;2)_inf/(1-q^1) * (1 - poch(-1,2;2)_inf/poch(-1,1;2)_inf)"
    )
    assert canonical_text(IdentityId.AND1_OU_EU, "rhs") == "1/((1-q^1)*poch(1,2;2)_inf)"


def test_unknown_tag() -> None:
    with pytest.raises(UnknownTagError):
        canonical_text("s3.degenerate", Side.LHS)


@pytest.mark.slow
@pytest.mark.parametrize("id", list(IdentityId))
def test_texts_evaluate_to_the_catalog_sides(id: IdentityId) -> None:
    lhs = evaluate(parse(canonical_text(id, Side.LHS)), ORDER)
    rhs = evaluate(parse(canonical_text(id, Side.RHS)), ORDER)
    assert lhs == lhs_series(id, ORDER)
    assert rhs == rhs_series(id, ORDER)


def test_bailey_lemma_texts() -> None:
    order = 40
    assert evaluate(parse(canonical_text("bailey.lemma", "lhs")), order) == beta_side_sum(order)
    assert evaluate(parse(canonical_text("bailey.lemma", "rhs")), order) == bailey_lemma_rhs(order)
