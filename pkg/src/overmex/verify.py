"""Executable renderings of the theorems: identity equalities to order N,
parity sweeps, density measurements, and asymptotic ratio tables.

Each check returns a VerifyReport; failures carry a concrete witness, and
nothing here raises on a mathematical mismatch.  Large parity sweeps run
on mod-2 reduced series held as Python-int bitmasks (bit n = coefficient
of q^n mod 2), which keeps n_max = 10^4 cheap; twenty full-integer spot
checks guard the reduction itself.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import combinat, qfactory, series
from .qfactory import MexVariant
from .series import Series

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class VerifyReport:
    check_name: str
    status: str
    range_checked: str
    first_failure: tuple | None = None
    metrics: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = {
            "check_name": self.check_name,
            "status": self.status,
            "range_checked": self.range_checked,
        }
        if self.first_failure is not None:
            d["first_failure"] = list(self.first_failure)
        if self.metrics:
            d["metrics"] = self.metrics
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class AsymRow:
    n: int
    exact: int
    predicted: float
    ratio: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "exact": str(self.exact),
            "predicted": self.predicted,
            "ratio": self.ratio,
        }


# --------------------------------------------------------------------------
# GF(2) series as int bitmasks: bit n is the coefficient of q^n mod 2.
# Note (1 - q^k) and (1 + q^k) coincide mod 2.


def _gf2_mask(N: int) -> int:
    return (1 << (N + 1)) - 1


def _gf2_mul(a: int, b: int, N: int) -> int:
    mask = _gf2_mask(N)
    out = 0
    x, i = a, 0
    while x:
        if x & 1:
            out ^= b << i
        x >>= 1
        i += 1
    return out & mask


def _gf2_mul_binomial(a: int, k: int, N: int) -> int:
    """a * (1 + q^k) mod 2."""
    return (a ^ (a << k)) & _gf2_mask(N)


def _gf2_div_binomial(a: int, k: int, N: int) -> int:
    """a / (1 + q^k) mod 2, via 1/(1+x) = prod (1 + x^(2^i))."""
    mask = _gf2_mask(N)
    out = a
    s = k
    while s <= N:
        out = (out ^ (out << s)) & mask
        s *= 2
    return out


def _gf2_pochhammer(N: int, step: int = 1, first: int | None = None) -> int:
    """Any (+-q^first; q^step)_inf product mod 2 (signs are invisible)."""
    out = 1
    e = step if first is None else first
    while e <= N:
        out = _gf2_mul_binomial(out, e, N)
        e += step
    return out


def _gf2_overpartition(N: int) -> int:
    num = _gf2_pochhammer(N)
    den_inv = 1
    for k in range(1, N + 1):
        den_inv = _gf2_div_binomial(den_inv, k, N)
    return _gf2_mul(num, den_inv, N)


def _gf2_weighted_poch_sum(weights, N: int) -> int:
    """sum_m weights(m) q^(m+1 choose 2) / (-q;q)_m mod 2; even weights
    vanish, which is exactly how the 2^n terms of the 1phi1 sum drop out."""
    acc = 0
    inv = 1
    m = 0
    while comb(m + 1, 2) <= N:
        if m > 0:
            inv = _gf2_div_binomial(inv, m, N)
        if weights(m) % 2:
            acc ^= inv << comb(m + 1, 2)
        m += 1
    return acc & _gf2_mask(N)


def _gf2_sigma_mex(variant: MexVariant, N: int) -> int:
    pbar = _gf2_overpartition(N)
    if variant is MexVariant.OVERLINED:
        sigma = _gf2_weighted_poch_sum(lambda m: 1, N)
        return _gf2_mul(pbar, sigma, N)
    if variant is MexVariant.ALL:
        phi = _gf2_weighted_poch_sum(lambda m: 2**m, N)
        return _gf2_mul(pbar, phi, N)
    p = _gf2_pochhammer(N)
    return _gf2_mul(_gf2_mul(p, p, N), p, N)


# --------------------------------------------------------------------------
# Shared helpers


def _compare_series(name: str, a: Series, b: Series, range_desc: str) -> VerifyReport:
    n = min(a.trunc_order, b.trunc_order)
    for i in range(n + 1):
        if a[i] != b[i]:
            return VerifyReport(name, FAIL, range_desc, first_failure=(i, a[i], b[i]))
    return VerifyReport(name, PASS, range_desc)


def _merge(name: str, range_desc: str, parts: Sequence[VerifyReport]) -> VerifyReport:
    for p in parts:
        if not p.passed:
            return VerifyReport(
                name, FAIL, range_desc, first_failure=p.first_failure,
                metrics={"failed_subcheck": p.check_name, **p.metrics},
            )
    merged = {}
    for p in parts:
        merged.update(p.metrics)
    return VerifyReport(name, PASS, range_desc, metrics=merged)


# --------------------------------------------------------------------------
# Checks


def check_gf_vs_oracle(
    variant: MexVariant,
    n_max: int,
    count_n_max: int | None = None,
    limit: int = combinat.DEFAULT_ORACLE_LIMIT,
) -> VerifyReport:
    """Generating-function coefficients against exhaustive enumeration:
    sigma values for n <= n_max and per-m counts for n <= count_n_max."""
    if count_n_max is None:
        count_n_max = n_max
    name = f"gf_vs_oracle:{variant.value}"
    rng = f"sigma n <= {n_max}, counts n <= {count_n_max}"
    gf = qfactory.sigma_mex_gf(variant, n_max)
    for n in range(n_max + 1):
        expected = combinat.sigma_mex_oracle(n, variant, limit)
        if gf[n] != expected:
            return VerifyReport(
                name, FAIL, rng, first_failure=(n, expected, gf[n]),
                metrics={"where": "sigma"},
            )
    count_gfs = {
        m: qfactory.mex_count_gf(variant, m, count_n_max)
        for m in qfactory.feasible_mex_values(variant, count_n_max)
    }
    for n in range(count_n_max + 1):
        counts = {}
        for pi in combinat.enumerate_overpartitions(n, limit):
            m = combinat.mex_statistic(pi, variant)
            counts[m] = counts.get(m, 0) + 1
        if n == 0:
            counts[1] = 1  # the empty overpartition
        for m, gf_m in count_gfs.items():
            if gf_m[n] != counts.get(m, 0):
                return VerifyReport(
                    name, FAIL, rng,
                    first_failure=(n, counts.get(m, 0), gf_m[n]),
                    metrics={"where": "count", "m": m},
                )
    return VerifyReport(name, PASS, rng)


def check_euler_identity(N: int) -> VerifyReport:
    """(-q;q)_inf = 1/(q;q^2)_inf = (q^2;q^2)_inf / (q;q)_inf to order N."""
    if N < 1:
        raise ValueError("order must be >= 1")
    rng = f"order <= {N}"
    a = qfactory.pochhammer(qfactory.NEGQ_Q_INF, N)
    b = series.invert(qfactory.pochhammer(qfactory.Q_Q2_INF, N))
    c = series.mul(
        qfactory.pochhammer(qfactory.Q2_Q2_INF, N),
        series.invert(qfactory.pochhammer(qfactory.Q_Q_INF, N)),
    )
    return _merge(
        "euler_identity", rng,
        [
            _compare_series("euler:neg_vs_odd_inverse", a, b, rng),
            _compare_series("euler:neg_vs_even_over_full", a, c, rng),
        ],
    )


def check_identity_suite(N: int) -> VerifyReport:
    """The exact-series identity chain: the 1phi1 defining sum against its
    collapsed form, the raw all-parts sum against the collapsed product,
    and the pre-telescoping overlined sum against P-bar * sigma."""
    rng = f"order <= {N}"
    pbar = qfactory.overpartition_gf(N)
    parts = [
        _compare_series(
            "identity:phi11_defining_vs_simplified",
            qfactory.phi11(N), qfactory.phi11_simplified(N), rng,
        ),
        _compare_series(
            "identity:all_raw_vs_simplified",
            series.mul(pbar, qfactory.all_mex_raw_sum(N)),
            series.mul(pbar, qfactory.phi11_simplified(N)),
            rng,
        ),
        _compare_series(
            "identity:overlined_telescoped",
            series.mul(pbar, qfactory.overlined_mex_weighted_sum(N)),
            series.mul(pbar, qfactory.ramanujan_sigma(N)),
            rng,
        ),
    ]
    return _merge("identity_suite", rng, parts)


def _spot_check_mod2(bits: int, full: Series, n_count: int, seed: int) -> bool:
    rng = random.Random(seed)
    N = full.trunc_order
    for _ in range(n_count):
        n = rng.randrange(N + 1)
        if (bits >> n) & 1 != full[n] % 2:
            return False
    return True


def check_parity_all_even(n_max: int, spot_order: int = 200) -> VerifyReport:
    """All-parts sigma-mex and the overpartition numbers are even for every
    1 <= n <= n_max; computed mod 2, spot-checked against full integers."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    name = "parity_all_even"
    rng_desc = f"1 <= n <= {n_max}"
    pbar_bits = _gf2_overpartition(n_max)
    all_bits = _gf2_sigma_mex(MexVariant.ALL, n_max)
    for n in range(1, n_max + 1):
        if (pbar_bits >> n) & 1:
            return VerifyReport(
                name, FAIL, rng_desc, first_failure=(n, 0, 1),
                metrics={"where": "overpartition_number"},
            )
        if (all_bits >> n) & 1:
            return VerifyReport(
                name, FAIL, rng_desc, first_failure=(n, 0, 1),
                metrics={"where": "sigma_mex_all"},
            )
    m = min(spot_order, n_max)
    ok = _spot_check_mod2(
        pbar_bits, qfactory.overpartition_gf(m).reduce_mod(2), 20, seed=11
    ) and _spot_check_mod2(
        all_bits, qfactory.sigma_mex_gf(MexVariant.ALL, m).reduce_mod(2), 20, seed=12
    )
    if not ok:
        return VerifyReport(
            name, FAIL, rng_desc, metrics={"where": "mod2_spot_check"}
        )
    return VerifyReport(name, PASS, rng_desc)


def _density_report(
    name: str, odd_bits: int, n_max: int, floor: float, trend_slack: float
) -> VerifyReport:
    """Density of even positions over [1, X] for dyadic prefixes X."""
    rng_desc = f"1 <= n <= {n_max}"

    def density(upto: int) -> float:
        mask = ((1 << (upto + 1)) - 1) & ~1  # positions 1..upto
        odd = (odd_bits & mask).bit_count()
        return 1.0 - odd / upto

    prefixes = {}
    x = n_max
    while x >= max(4, n_max // 8):
        prefixes[x] = density(x)
        x //= 2
    final = density(n_max)
    quarter = density(max(1, n_max // 4))
    metrics = {f"density_upto_{x}": d for x, d in sorted(prefixes.items())}
    metrics["density"] = final
    ok = final >= floor and final >= quarter - trend_slack
    return VerifyReport(name, PASS if ok else FAIL, rng_desc, metrics=metrics)


def check_parity_density(
    n_max: int, floor: float = 0.85, trend_slack: float = 0.01
) -> VerifyReport:
    """The overlined sigma-mex is almost always even: regression guard on
    the observed even-density over [1, n_max] and its dyadic trend."""
    if n_max < 100:
        raise ValueError("n_max must be >= 100 for a meaningful density")
    odd_bits = _gf2_sigma_mex(MexVariant.OVERLINED, n_max)
    return _density_report("parity_density", odd_bits, n_max, floor, trend_slack)


def check_triangular_parity(n_max: int) -> VerifyReport:
    """The non-overlined sigma-mex is odd exactly at triangular n."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    name = "triangular_parity"
    rng_desc = f"1 <= n <= {n_max}"
    bits = _gf2_sigma_mex(MexVariant.NON_OVERLINED, n_max)
    triangular = set()
    j = 1
    while j * (j + 1) // 2 <= n_max:
        triangular.add(j * (j + 1) // 2)
        j += 1
    for n in range(1, n_max + 1):
        is_odd = (bits >> n) & 1
        should = n in triangular
        if bool(is_odd) != should:
            return VerifyReport(
                name, FAIL, rng_desc, first_failure=(n, int(should), is_odd)
            )
    return VerifyReport(name, PASS, rng_desc)


def _predicted_growth(n: int) -> float:
    return math.exp(math.pi * math.sqrt(n)) / (4 * n)


def asym_ratio_table(
    points: Sequence[int],
    final_dev: float = 0.25,
    step_slack: float = 1.02,
    regime_min: int = 100,
    gf: Series | None = None,
) -> tuple:
    """Exact overlined sigma-mex against e^(pi sqrt(n))/(4n).

    Returns (rows, report).  The report passes iff |ratio - 1| is
    non-increasing (up to the multiplicative step slack) across the given
    points that are >= regime_min, and the deviation at the largest point
    is below final_dev; smaller points are recorded but not judged.
    """
    if not points:
        raise ValueError("points must be non-empty")
    pts = sorted(points)
    name = "asym_ratio"
    rng_desc = f"points {pts}"
    if gf is None:
        gf = qfactory.sigma_mex_gf(MexVariant.OVERLINED, pts[-1])
    rows = []
    for n in pts:
        exact = gf[n]
        predicted = _predicted_growth(n)
        rows.append(AsymRow(n, exact, predicted, exact / predicted))
    devs = [(r.n, abs(r.ratio - 1.0)) for r in rows if r.n >= regime_min]
    metrics = {f"dev_at_{n}": d for n, d in devs}
    ok = bool(devs) and devs[-1][1] < final_dev
    for (n0, d0), (n1, d1) in zip(devs, devs[1:]):
        if d1 > d0 * step_slack:
            ok = False
            metrics["monotonicity_break_at"] = n1
            break
    report = VerifyReport(name, PASS if ok else FAIL, rng_desc, metrics=metrics)
    return rows, report


# Degree-4 prefix of the sigma(e^-t) expansion at t -> 0+, with the
# magnitude of the next coefficient for the tolerance band.
_SIGMA_TAYLOR = (2.0, -2.0, 5.0, -55.0 / 3.0, 1073.0 / 12.0)
_SIGMA_NEXT_COEFF = 32671.0 / 60.0


def check_sigma_taylor(
    t_values: Sequence[float] = (0.05, 0.1), N: int = 400
) -> VerifyReport:
    """Truncated sigma(q) evaluated at q = e^-t against the degree-4
    expansion polynomial, within twice the next term's magnitude."""
    if N < 400:
        raise ValueError("series truncation must be >= 400")
    name = "sigma_taylor"
    rng_desc = f"t in {list(t_values)}"
    sigma = qfactory.ramanujan_sigma(N)
    metrics = {}
    for t in t_values:
        if not 0.0 < t <= 0.2:
            raise ValueError(f"t must lie in (0, 0.2], got {t}")
        value = sigma.evaluate_real(math.exp(-t))
        poly = sum(c * t**k for k, c in enumerate(_SIGMA_TAYLOR))
        bound = 2.0 * _SIGMA_NEXT_COEFF * t**5
        err = abs(value - poly)
        metrics[f"err_at_t={t}"] = err
        if err > bound:
            return VerifyReport(
                name, FAIL, rng_desc, first_failure=(t, poly, value), metrics=metrics
            )
    return VerifyReport(name, PASS, rng_desc, metrics=metrics)


def _ingham_scaled(gf: Series, t: float) -> float:
    a = gf.evaluate_real(math.exp(-t))
    return a * math.sqrt(math.pi) / math.sqrt(t) * math.exp(-math.pi**2 / (4 * t))


def check_ingham_scaling(
    N: int = 2000,
    t_grid: Sequence[float] = (0.30, 0.25, 0.20),
    gf: Series | None = None,
) -> VerifyReport:
    """The overlined sigma-mex series at q = e^-t, rescaled by the
    Tauberian growth sqrt(t)/sqrt(pi) * e^(pi^2/(4t)), approaches 1
    monotonically as t decreases; also spot-checks the weakly increasing
    coefficient precondition."""
    if N < 800:
        raise ValueError("order must be >= 800 for a trustworthy tail")
    name = "ingham_scaling"
    rng_desc = f"N={N}, t in {list(t_grid)}"
    for t in t_grid:
        if math.exp(-t * N) >= 1e-8:
            raise ValueError(
                f"t={t} leaves a truncation tail above 1e-8 at order {N}"
            )
    if gf is None:
        gf = qfactory.sigma_mex_gf(MexVariant.OVERLINED, N)
    for n in range(min(N, 2000)):
        if gf[n + 1] < gf[n]:
            return VerifyReport(
                name, FAIL, rng_desc, first_failure=(n, gf[n], gf[n + 1]),
                metrics={"where": "weakly_increasing"},
            )
    grid = sorted(t_grid, reverse=True)
    scaled = [_ingham_scaled(gf, t) for t in grid]
    metrics = {f"scaled_at_t={t}": s for t, s in zip(grid, scaled)}
    devs = [abs(s - 1.0) for s in scaled]
    ok = all(d1 <= d0 for d0, d1 in zip(devs, devs[1:]))
    return VerifyReport(name, PASS if ok else FAIL, rng_desc, metrics=metrics)


# --------------------------------------------------------------------------
# Aggregate runner (fixed order, used by the CLI)

DEFAULT_ASYM_POINTS = (100, 400, 900, 1600, 2500)


def run_all(
    order: int = 2000,
    oracle_n_max: int = 20,
    parity_n_max: int = 10000,
    triangular_n_max: int = 5000,
    only: str | None = None,
) -> list:
    """Run every check (or the one named by `only`) in a fixed order."""
    asym_n = max(DEFAULT_ASYM_POINTS[-1], order)
    overlined_gf = None

    def _overlined():
        nonlocal overlined_gf
        if overlined_gf is None:
            overlined_gf = qfactory.sigma_mex_gf(MexVariant.OVERLINED, asym_n)
        return overlined_gf

    registry = {
        "gf_vs_oracle:nonoverlined": lambda: check_gf_vs_oracle(
            MexVariant.NON_OVERLINED, oracle_n_max
        ),
        "gf_vs_oracle:overlined": lambda: check_gf_vs_oracle(
            MexVariant.OVERLINED, oracle_n_max
        ),
        "gf_vs_oracle:all": lambda: check_gf_vs_oracle(MexVariant.ALL, oracle_n_max),
        "euler": lambda: check_euler_identity(order),
        "identities": lambda: check_identity_suite(order),
        "parity_all_even": lambda: check_parity_all_even(parity_n_max),
        "parity_density": lambda: check_parity_density(parity_n_max),
        "triangular_parity": lambda: check_triangular_parity(triangular_n_max),
        "asym_ratio": lambda: asym_ratio_table(
            DEFAULT_ASYM_POINTS, gf=_overlined()
        )[1],
        "sigma_taylor": lambda: check_sigma_taylor(),
        "ingham_scaling": lambda: check_ingham_scaling(
            N=asym_n, gf=_overlined()
        ),
    }
    if only is not None:
        if only not in registry:
            raise KeyError(
                f"unknown check {only!r}; choose from {sorted(registry)}"
            )
        return [registry[only]()]
    return [build() for build in registry.values()]
