"""Builders for the named q-series: Pochhammer products, the overpartition
generating function, Ramanujan's sigma series, the specialized 1phi1 sum,
and the three sigma-mex generating functions with their per-m count series.

Infinite products are truncated at order N; any factor whose lowest
exponent exceeds N is omitted since it cannot move a retained coefficient.
The same rule bounds every sum with a leading q^(m choose 2) or
q^(m+1 choose 2) factor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import series
from .series import Series


class MexVariant(enum.Enum):
    """Which parts of an overpartition feed the minimal-excludant set."""

    NON_OVERLINED = "nonoverlined"
    OVERLINED = "overlined"
    ALL = "all"


@dataclass(frozen=True)
class PochSpec:
    """One q-Pochhammer product.

    Factors are (1 + sign * q^e) for e = first, first+step, ... ; sign=-1
    gives the classical (q^first; q^step) product, sign=+1 the (-q^first;
    q^step) one.  length is the number of factors, or None for the
    infinite product (truncated at the working order).  first defaults to
    step, which covers (q;q), (-q;q) and (q^2;q^2); (q;q^2) needs an
    explicit first=1.
    """

    sign: int
    step: int = 1
    first: int | None = None
    length: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step not in (1, 2):
            raise ValueError("step must be 1 or 2")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be non-negative")

    @property
    def start(self) -> int:
        return self.step if self.first is None else self.first


# The products the theorems actually use.
Q_Q_INF = PochSpec(sign=-1, step=1)            # (q;q)_inf
NEGQ_Q_INF = PochSpec(sign=+1, step=1)         # (-q;q)_inf
Q2_Q2_INF = PochSpec(sign=-1, step=2)          # (q^2;q^2)_inf
Q_Q2_INF = PochSpec(sign=-1, step=2, first=1)  # (q;q^2)_inf


def finite_poch(sign: int, length: int) -> PochSpec:
    """(q;q)_m (sign=-1) or (-q;q)_m (sign=+1)."""
    return PochSpec(sign=sign, step=1, length=length)


@lru_cache(maxsize=None)
def pochhammer(spec: PochSpec, N: int) -> Series:
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    acc = series.one(N)
    e = spec.start
    count = 0
    while e <= N and (spec.length is None or count < spec.length):
        acc = series.mul_binomial(acc, spec.sign, e)
        e += spec.step
        count += 1
    return acc


@lru_cache(maxsize=None)
def overpartition_gf(N: int) -> Series:
    """(-q;q)_inf / (q;q)_inf: coefficient of q^n is the overpartition
    number.  Built factor by factor, which beats a dense invert-and-
    multiply by a large margin at N in the thousands."""
    acc = series.one(N)
    for k in range(1, N + 1):
        acc = series.mul_binomial(acc, +1, k)
        acc = series.div_binomial(acc, -1, k)
    return acc


@lru_cache(maxsize=None)
def ramanujan_sigma(N: int) -> Series:
    """The Lost Notebook series sum_{m>=0} q^(m+1 choose 2) / (-q;q)_m."""
    acc = series.zero(N)
    inv = series.one(N)  # 1 / (-q;q)_m, updated incrementally
    m = 0
    while comb(m + 1, 2) <= N:
        if m > 0:
            inv = series.div_binomial(inv, +1, m)
        acc = series.add(acc, series.shift(inv, comb(m + 1, 2)))
        m += 1
    return acc


@lru_cache(maxsize=None)
def phi11(N: int) -> Series:
    """The basic hypergeometric specialization 1phi1(q; -q; q, -2q),
    computed term by term from the defining sum

        sum_n [(q;q)_n / ((-q;q)_n (q;q)_n)] * (-1)^n q^(n choose 2) * (-2q)^n

    with no symbolic cancellation: the numerator factors (1-q^j) are
    multiplied onto the inverted denominator explicitly.
    """
    acc = series.zero(N)
    den_inv = series.one(N)  # 1 / ((-q;q)_n (q;q)_n)
    n = 0
    while comb(n, 2) + n <= N:
        if n > 0:
            den_inv = series.div_binomial(den_inv, +1, n)
            den_inv = series.div_binomial(den_inv, -1, n)
        lead = comb(n, 2) + n  # q^(n choose 2) * q^n from (-2q)^n
        term = series.truncate(den_inv, N - lead)
        for j in range(1, n + 1):  # numerator (q;q)_n
            if j <= term.trunc_order:
                term = series.mul_binomial(term, -1, j)
        weight = (-1) ** n * (-2) ** n  # = 2^n
        term = series.pad(series.scale(term, weight), N)
        acc = series.add(acc, series.shift(term, lead))
        n += 1
    return acc


@lru_cache(maxsize=None)
def phi11_simplified(N: int) -> Series:
    """The collapsed form sum_n 2^n q^(n+1 choose 2) / (-q;q)_n; must agree
    with phi11 coefficient by coefficient."""
    acc = series.zero(N)
    inv = series.one(N)
    n = 0
    while comb(n + 1, 2) <= N:
        if n > 0:
            inv = series.div_binomial(inv, +1, n)
        acc = series.add(acc, series.shift(series.scale(inv, 2**n), comb(n + 1, 2)))
        n += 1
    return acc


@lru_cache(maxsize=None)
def overlined_mex_weighted_sum(N: int) -> Series:
    """sum_{m>=1} m q^(m choose 2) / (-q;q)_m: the pre-telescoping form
    whose product with the overpartition series gives the overlined
    sigma-mex generating function."""
    acc = series.zero(N)
    inv = series.one(N)
    m = 1
    while comb(m, 2) <= N:
        inv = series.div_binomial(inv, +1, m)
        acc = series.add(acc, series.shift(series.scale(inv, m), comb(m, 2)))
        m += 1
    return acc


@lru_cache(maxsize=None)
def all_mex_raw_sum(N: int) -> Series:
    """sum_{m>=1} m 2^(m-1) q^(m choose 2) (1 - q^m) / (-q;q)_m: the raw
    derivative of the all-parts double series, before simplification."""
    acc = series.zero(N)
    inv = series.one(N)
    m = 1
    while comb(m, 2) <= N:
        inv = series.div_binomial(inv, +1, m)
        term = series.mul_binomial(inv, -1, m)  # (1 - q^m) factor
        weight = m * 2 ** (m - 1)
        acc = series.add(acc, series.shift(series.scale(term, weight), comb(m, 2)))
        m += 1
    return acc


@lru_cache(maxsize=None)
def sigma_mex_gf(variant: MexVariant, N: int) -> Series:
    """Generating function of the chosen sigma-mex statistic; the q^0
    coefficient is 1 under the value-1-at-zero convention in all three
    variants."""
    if variant is MexVariant.OVERLINED:
        return series.mul(overpartition_gf(N), ramanujan_sigma(N))
    if variant is MexVariant.ALL:
        return series.mul(overpartition_gf(N), phi11(N))
    # Non-overlined: distinct parts in three colors, (-q;q)_inf^3.
    p = pochhammer(NEGQ_Q_INF, N)
    return series.mul(series.mul(p, p), p)


def mex_count_gf(variant: MexVariant, m: int, N: int) -> Series:
    """Series whose q^n coefficient counts overpartitions of n whose
    variant-mex equals m."""
    if m < 1:
        raise ValueError("mex value m must be >= 1")
    lead = comb(m, 2)
    if variant is MexVariant.OVERLINED:
        # Forced overlined parts 1..m-1, free overlined parts above m.
        inv = series.invert(pochhammer(finite_poch(+1, m), N))
        return series.shift(series.mul(overpartition_gf(N), inv), lead)
    if variant is MexVariant.ALL:
        # Parts 1..m-1 present (first copy overlinable), part m absent.
        inv = series.invert(pochhammer(finite_poch(+1, m), N))
        body = series.mul_binomial(inv, -1, m)
        return series.shift(
            series.scale(series.mul(overpartition_gf(N), body), 2 ** (m - 1)), lead
        )
    # Non-overlined: build the full overpartition product with the
    # non-overlined parts forced to contain 1..m-1 and exclude m; the
    # overlined parts stay unconstrained.
    acc = pochhammer(NEGQ_Q_INF, N)
    for j in range(1, N + 1):
        if j != m:
            acc = series.div_binomial(acc, -1, j)
    return series.shift(acc, lead)


def feasible_mex_values(variant: MexVariant, n: int) -> range:
    """All m that can occur as a variant-mex of some overpartition of n:
    the forced parts 1..m-1 already weigh (m choose 2)."""
    m = 1
    while comb(m, 2) <= n:
        m += 1
    return range(1, m)
