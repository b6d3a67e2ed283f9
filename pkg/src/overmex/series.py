"""Truncated formal power series with exact integer coefficients.

Every generating function in this package lives in Z[[q]] truncated at a
fixed order N: a Series keeps the coefficients of q^0 .. q^N and nothing
else.  Binary operations silently truncate to the smaller of the two
operands' orders; callers build every factor at one global N, so the
common case never loses information.

Series values are immutable and safe to share between workers; all
operations are pure functions returning new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Series:
    """Coefficients of q^0 .. q^trunc_order, exact Python integers."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a Series needs at least the q^0 coefficient")

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __mul__(self, other: "Series") -> "Series":
        return mul(self, other)

    def invert(self) -> "Series":
        return invert(self)

    def evaluate_real(self, q0: float) -> float:
        return evaluate_real(self, q0)

    def reduce_mod(self, m: int) -> "Series":
        return reduce_mod(self, m)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series([{head}{tail}], N={self.trunc_order})"


def from_coeffs(values: Sequence[int], trunc_order: int) -> Series:
    """Series with the given low-order coefficients, zero-padded up to N."""
    if trunc_order < 0:
        raise ValueError("trunc_order must be non-negative")
    if not values:
        raise ValueError("values must be non-empty")
    if trunc_order < len(values) - 1:
        raise ValueError(
            f"trunc_order {trunc_order} cannot hold {len(values)} coefficients"
        )
    coeffs = tuple(values) + (0,) * (trunc_order + 1 - len(values))
    return Series(coeffs)


def zero(trunc_order: int) -> Series:
    return from_coeffs([0], trunc_order)


def one(trunc_order: int) -> Series:
    return from_coeffs([1], trunc_order)


def monomial(exponent: int, trunc_order: int, coefficient: int = 1) -> Series:
    """The single term coefficient * q^exponent (zero if it overflows N)."""
    if exponent > trunc_order:
        return zero(trunc_order)
    c = [0] * (trunc_order + 1)
    c[exponent] = coefficient
    return Series(tuple(c))


def add(a: Series, b: Series) -> Series:
    n = min(a.trunc_order, b.trunc_order)
    return Series(tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])))


def sub(a: Series, b: Series) -> Series:
    n = min(a.trunc_order, b.trunc_order)
    return Series(tuple(x - y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller order, exact arithmetic.

    The outer loop runs over the operand with fewer nonzero coefficients,
    which makes products against sparse series (theta-like sums, single
    monomials) effectively linear.
    """
    n = min(a.trunc_order, b.trunc_order)
    ac = a.coeffs[: n + 1]
    bc = b.coeffs[: n + 1]
    if _nnz(bc) < _nnz(ac):
        ac, bc = bc, ac
    out = [0] * (n + 1)
    for i, ai in enumerate(ac):
        if ai:
            for j, bj in enumerate(bc[: n + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return Series(tuple(out))


def _nnz(coeffs) -> int:
    return sum(1 for c in coeffs if c)


def invert(a: Series) -> Series:
    """Multiplicative inverse to order N; constant term must be +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(
            f"cannot invert series with constant term {a0}; only units +-1 supported"
        )
    n = a.trunc_order
    nz = [(k, ak) for k, ak in enumerate(a.coeffs) if k > 0 and ak]
    b = [0] * (n + 1)
    b[0] = a0
    for i in range(1, n + 1):
        s = 0
        for k, ak in nz:
            if k > i:
                break
            s += ak * b[i - k]
        b[i] = -a0 * s
    return Series(tuple(b))


def evaluate_real(a: Series, q0: float) -> float:
    """Sum coeffs[n] * q0^n in double precision, Horner from the top down."""
    if not 0.0 < q0 < 1.0:
        raise ValueError(f"q0 must lie in (0, 1), got {q0}")
    acc = 0.0
    for c in reversed(a.coeffs):
        acc = acc * q0 + c
    return acc


def reduce_mod(a: Series, m: int) -> Series:
    """Coefficientwise residues in [0, m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return Series(tuple(c % m for c in a.coeffs))


def mul_binomial(a: Series, coefficient: int, exponent: int) -> Series:
    """a * (1 + coefficient * q^exponent) in O(N) -- the Pochhammer workhorse."""
    if exponent < 1:
        raise ValueError("binomial exponent must be positive")
    n = a.trunc_order
    out = list(a.coeffs)
    for i in range(n, exponent - 1, -1):
        out[i] += coefficient * a.coeffs[i - exponent]
    return Series(tuple(out))


def div_binomial(a: Series, coefficient: int, exponent: int) -> Series:
    """a / (1 + coefficient * q^exponent) in O(N)."""
    if exponent < 1:
        raise ValueError("binomial exponent must be positive")
    out = list(a.coeffs)
    for i in range(exponent, a.trunc_order + 1):
        out[i] -= coefficient * out[i - exponent]
    return Series(tuple(out))


def shift(a: Series, k: int) -> Series:
    """a * q^k; coefficients pushed past the truncation order are dropped."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    n = a.trunc_order
    if k == 0:
        return a
    return Series((0,) * min(k, n + 1) + a.coeffs[: n + 1 - k])


def scale(a: Series, c: int) -> Series:
    return Series(tuple(c * x for x in a.coeffs))


def pad(a: Series, trunc_order: int) -> Series:
    """Zero-extend up to the given order (no-op if already there)."""
    if trunc_order < a.trunc_order:
        raise ValueError("pad cannot shrink a series; use truncate")
    return Series(a.coeffs + (0,) * (trunc_order - a.trunc_order))


def truncate(a: Series, trunc_order: int) -> Series:
    """Drop coefficients above the given order (which must not exceed N)."""
    if trunc_order > a.trunc_order:
        raise ValueError("cannot extend a truncated series")
    return Series(a.coeffs[: trunc_order + 1])
