from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpp.expr import (
    Add,
    BSum,
    Div,
    ExpPoly,
    IntPow,
    Mul,
    Neg,
    Poch,
    QPow,
    Sub,
    Sum,
    free_variables,
    lit,
)
from qpp.parser import MAX_DEPTH, ParseError, parse, tokenize

pytestmark = pytest.mark.unit

n = ExpPoly.variable("n")
one = ExpPoly.constant(1)


def test_geometric_quotient() -> None:
    assert parse("1/(1-q^1)") == Div(lit(1), Sub(lit(1), QPow(one)))


def test_bare_q_is_q_to_the_one() -> None:
    assert parse("q") == QPow(one)
    assert parse("  q ^ 3 ") == QPow(ExpPoly.constant(3))


def test_nested_pochhammer_sum() -> None:
    parsed = parse("sum(n=0..inf, q^(n^2+n) / (poch(-1,1;1)_(n)^2 * (1+q^(n+1))))")
    body = Div(
        QPow(n**2 + n),
        Mul(
            IntPow(Poch(-1, one, 1, n), ExpPoly.constant(2)),
            Add(lit(1), QPow(n + one)),
        ),
    )
    assert parsed == Sum("n", ExpPoly.constant(0), None, body)


def test_infinite_pochhammer() -> None:
    assert parse("poch(-1,1;2)_inf") == Poch(-1, one, 2, None)


def test_precedence_and_negation() -> None:
    assert parse("1+2*q") == Add(lit(1), Mul(lit(2), QPow(one)))
    assert parse("-q^2*3") == Mul(Neg(QPow(ExpPoly.constant(2))), lit(3))
    assert parse("--1") == Neg(Neg(lit(1)))


def test_signed_powers_of_minus_one_in_a_bilateral_sum() -> None:
    parsed = parse("bsum(n, (-1)^(n)*q^(n*(3*n+1)/2))")
    assert isinstance(parsed, BSum)
    assert parsed.body == Mul(
        IntPow(Neg(lit(1)), n),
        QPow((n * (ExpPoly.constant(3) * n + one)).scaled(Fraction(1, 2))),
    )


def test_exponent_polynomials() -> None:
    assert str(ExpPoly.constant(3) * n**2 - n + one) == "3*n^2-n+1"
    assert (n * n).degree == 2
    assert (n**2 + n).scaled(Fraction(1, 2)).integer_value({"n": 3}) == 6
    assert ExpPoly().is_constant and str(ExpPoly()) == "0"


def test_nested_sums_bind_their_indices() -> None:
    parsed = parse("sum(j=1..inf, sum(n=j..inf, q^(n+j)))")
    assert free_variables(parsed) == frozenset()
    inner = parsed.body
    assert isinstance(inner, Sum)
    assert free_variables(inner) == frozenset({"j"})


def test_finite_upper_bound() -> None:
    parsed = parse("sum(k=0..5, q^k)")
    assert isinstance(parsed, Sum)
    assert parsed.upper == ExpPoly.constant(5)


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("1 +", 3),
        ("q^", 2),
        ("x", 0),
        ("(1", 2),
        ("1)", 1),
        ("q^m", 2),
        ("poch(2,1;1)_inf", 5),
        ("poch(1,1;0)_inf", 9),
        ("sum(k=0..inf, sum(n=0..k^2, q^n))", 23),
        ("sum(n=0..inf, q^(n/0))", 19),
        ("sum(n=0..inf, q^(2/n))", 19),
        ("q²", 1),
        ("1 # 2", 2),
        ("sum(q=0..inf, 1)", 4),
    ],
)
def test_parse_errors_carry_positions(text: str, position: int) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert f"position {position}" in str(excinfo.value)


def test_unbound_index_is_rejected_at_parse_time() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse("sum(n=0..inf, q^(n+m))")
    assert "'m'" in excinfo.value.message


def test_expected_tokens_are_listed() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse("poch(-1,1;2)_q")
    assert excinfo.value.expected == ("'('",)


def test_deep_nesting_is_a_parse_error() -> None:
    with pytest.raises(ParseError):
        parse("(" * (MAX_DEPTH + 50) + "q" + ")" * (MAX_DEPTH + 50))
    with pytest.raises(ParseError):
        parse("-" * 5000 + "q")
    with pytest.raises(ParseError):
        parse("q^(" + "(" * 5000 + "1" + ")" * 5000 + ")")


def test_exponent_power_cap() -> None:
    with pytest.raises(ParseError):
        parse("sum(n=0..inf, q^(n^65))")


@pytest.mark.parametrize(
    "text",
    [
        "sum(a=0..1, sum(b=0..1, q^(((a+b+1)^64)^64)))",
        "sum(n=0..inf, q^(n^40*n^40))",
        "q^(((2^64)^64)^64)",
        "sum(a=0..1, sum(b=0..1, sum(c=0..1, sum(d=0..1, q^((a+b+c+d+1)^40)))))",
    ],
)
def test_exponent_blowup_is_refused(text: str) -> None:
    with pytest.raises(ParseError):
        parse(text)


def test_exponent_degree_up_to_the_cap_is_accepted() -> None:
    parsed = parse("sum(n=0..inf, q^(n^32*n^32))")
    assert isinstance(parsed, Sum)
    assert parsed.body == QPow(n**64)


def test_oversized_literal() -> None:
    with pytest.raises(ParseError):
        parse("9" * 10000)


def test_bytes_input() -> None:
    assert parse(b"q") == QPow(one)
    with pytest.raises(ParseError) as excinfo:
        parse("q+é".encode("utf-8"))
    assert excinfo.value.position == 2


def test_tokenize() -> None:
    kinds = [t.kind for t in tokenize("sum(n=0..inf, q)")]
    assert kinds == ["ident", "op", "ident", "op", "int", "op", "ident", "op", "ident", "op", "end"]


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.text(alphabet="q0123456789+-*/^()_,;=.nsumpochbif ", max_size=40))
def test_parser_is_total(text: str) -> None:
    try:
        parse(text)
    except ParseError:
        pass


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.binary(max_size=30))
def test_parser_is_total_on_bytes(data: bytes) -> None:
    try:
        parse(data)
    except ParseError:
        pass


_FRAGMENTS = (
    "sum(n=0..inf, ",
    "sum(k=0..n, ",
    "bsum(m, ",
    "poch(-1,1;2)_inf",
    "poch(1,n;1)_(k)",
    "q^(",
    "q",
    "n",
    "k",
    "m",
    "^64",
    "^2",
    "(",
    ")",
    "*",
    "/",
    "+",
    "-",
    "1",
    "0",
)


@pytest.mark.slow
def test_parser_is_total_on_token_soup() -> None:
    rng = random.Random(20261018)
    for _ in range(10_000):
        text = "".join(rng.choice(_FRAGMENTS) for _ in range(rng.randint(1, 24)))
        try:
            parse(text)
        except ParseError:
            pass
