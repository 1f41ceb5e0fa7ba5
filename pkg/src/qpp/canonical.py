"""Every catalogued identity written out in the expression language."""

from __future__ import annotations

from enum import StrEnum

from qpp.identities import IdentityId, UnknownTagError


class Side(StrEnum):
    LHS = "lhs"
    RHS = "rhs"


_AND5_LHS = "sum(n=0..inf, -q^(2*n+1)*poch(-1,2*n+2;2)_inf/poch(-1,1;2)_(n+1))"
_PF_DECOMPOSED = (
    "sum(n=0..inf, (-1)^(n)*q^(3*n*(n+1)/2)*(1/(1+q^(n)) - q^(n+1)/(1+q^(n+1))))"
)

CANONICAL_TEXTS: dict[str, tuple[str, str]] = {
    IdentityId.AND1_OU_EU: (
        "sum(n=0..inf, q^(2*n)/(poch(1,2;2)_(n)*poch(1,2*n+1;2)_inf))",
        "1/((1-q^1)*poch(1,2;2)_inf)",
    ),
    IdentityId.AND2_OD_EU: (
        "sum(n=0..inf, q^(2*n)*poch(-1,2*n+1;2)_inf/poch(1,2;2)_(n))",
        "1/2*(1/poch(1,2;2)_inf + poch(-1,1;2)_inf^2)",
    ),
    IdentityId.AND3_OU_ED: (
        "sum(n=0..inf, poch(-1,2;2)_(n)*q^(2*n+2)/poch(-1,2*n+3;2)_inf)",
        "1/(2*poch(-1,1;2)_inf)*(poch(-1,1;1)_inf - 1"
        " - sum(n=0..inf, q^(n*(3*n-1)/2)*(1-q^(n))))",
    ),
    IdentityId.AND4_EU_OU: (
        "sum(n=0..inf, q^(2*n+1)/(poch(1,1;2)_(n+1)*poch(1,2*n+2;2)_inf))",
        "1/(1-q^1)*(1/poch(1,1;2)_inf - 1/poch(1,2;2)_inf)",
    ),
    IdentityId.AND5_ED_OU: (
        _AND5_LHS,
        "-poch(-1,2;2)_inf/2*(2 - 1/poch(-1,1;1)_inf"
        " - sum(n=0..inf, q^(n^2+n)/(poch(-1,1;1)_(n)^2*(1+q^(n+1)))))",
    ),
    IdentityId.AND6_EU_OD: (
        "sum(n=0..inf, -q^(2*n+1)*poch(1,1;2)_(n)/poch(1,2*n+2;2)_inf)",
        "-1/poch(1,2;2)_inf*sum(j=1..inf, sum(n=j..inf,"
        " (-1)^(n+j)*q^(n*(3*n+1)/2-j^2)*(1-q^(2*n+1))))",
    ),
    IdentityId.THM1_ODED: (
        "sum(n=0..inf, q^(2*n+2)*poch(-1,2;2)_(n)*poch(-1,2*n+3;2)_inf)",
        "q*poch(-1,1;2)_inf/(1-q^1) * (1 - poch(-1,2;2)_inf/poch(-1,1;2)_inf)",
    ),
    IdentityId.THM1_EDOD: (
        "sum(n=0..inf, q^(2*n+1)*poch(-1,1;2)_(n)*poch(-1,2*n+2;2)_inf)",
        "q*poch(-1,2;2)_inf/(1-q^1)*(2 - poch(-1,1;2)_inf/poch(-1,2;2)_inf)",
    ),
    IdentityId.THM1_EDOU: (
        _AND5_LHS,
        "-poch(-1,2;2)_inf/2*(2 - 1/poch(-1,1;1)_inf"
        " - 2/poch(1,1;1)_inf*bsum(n, (-1)^(n)*q^(3*n*(n+1)/2)/(1+q^(n))))",
    ),
    IdentityId.REMARK_F: (
        "sum(n=0..inf, q^(n^2)/poch(-1,1;1)_(n)^2)",
        "2/poch(1,1;1)_inf*bsum(n, (-1)^(n)*q^(n*(3*n+1)/2)/(1+q^(n)))",
    ),
    IdentityId.PF_DECOMP: (
        "sum(n=0..inf, (-1)^(n)*q^(3*n*(n+1)/2)*(1-q^(2*n+1))/((1+q^(n))*(1+q^(n+1))))",
        _PF_DECOMPOSED,
    ),
    IdentityId.BILATERAL_RECOMB: (
        _PF_DECOMPOSED,
        "bsum(n, (-1)^(n)*q^(3*n*(n+1)/2)/(1+q^(n)))",
    ),
    IdentityId.S3_DOUBLE_SUM: (
        "sum(n=0..inf, -q^(2*n+1)*poch(1,1;2)_(n)*poch(-1,2*n+2;2)_inf)",
        "-q*poch(1,1;1)_inf*poch(-1,2;2)_inf/poch(1,2;2)_inf^2*sum(m=0..inf, sum(n=0..inf,"
        " (-1)^(m)*q^(n*(n+3)/2+2*n*m+2*m^2+2*m)*(1+q^(2*m+1))))",
    ),
    IdentityId.S3_THETA_DIFF: (
        "sum(m=0..inf, sum(n=0..inf, (-1)^(m)*q^(n*(n+3)/2+2*n*m+2*m*(m+1))))"
        " - sum(b=1..inf, sum(a=1..inf, (-1)^(b)*q^(a*(a-3)/2+2*a*b+2*b*(b-1))))",
        "2*poch(1,2;2)_inf/((1+q^1)*poch(1,1;2)_inf)"
        " - poch(1,2;2)_inf/((1+q^1)*poch(-1,2;2)_inf)",
    ),
    "bailey.lemma": (
        "sum(n=0..inf, q^(n^2+n)/(poch(-1,1;1)_(n)^2*(1+q^(n+1))))",
        "1/poch(1,2;1)_inf*sum(n=0..inf, 2*(-1)^(n)*q^(n^2+n+n*(n+1)/2)*(1-q^(2*n+1))"
        "/((1-q^1)*(1+q^(n))*(1+q^(n+1))))",
    ),
}


def canonical_text(tag: str, side: Side | str) -> str:
    """The DSL text of one side of a catalogued identity."""

    try:
        texts = CANONICAL_TEXTS[str(tag)]
    except KeyError as exc:
        raise UnknownTagError(f"No canonical text for {tag!r}.") from exc
    return texts[0] if Side(side) is Side.LHS else texts[1]
