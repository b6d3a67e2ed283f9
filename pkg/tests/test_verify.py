import json
import math

import pytest

from overmex import qfactory as qf
from overmex import series as se
from overmex import verify as vf
from overmex.qfactory import MexVariant


class TestReport:
    def test_json_schema(self):
        r = vf.VerifyReport("demo", vf.PASS, "n <= 5", metrics={"density": 0.5})
        d = json.loads(r.to_json())
        assert d == {
            "check_name": "demo",
            "status": "PASS",
            "range_checked": "n <= 5",
            "metrics": {"density": 0.5},
        }

    def test_failure_carries_witness(self):
        a = se.from_coeffs([1, 2, 3], 4)
        b = se.from_coeffs([1, 2, 4], 4)
        r = vf._compare_series("demo", a, b, "n <= 4")
        assert not r.passed
        assert r.first_failure == (2, 3, 4)


class TestGfVsOracle:
    @pytest.mark.parametrize("variant", list(MexVariant))
    def test_passes(self, variant):
        r = vf.check_gf_vs_oracle(variant, 10)
        assert r.passed


class TestEuler:
    def test_passes(self):
        assert vf.check_euler_identity(300).passed

    def test_order_one(self):
        assert vf.check_euler_identity(1).passed

    def test_perturbed_fails_with_witness(self):
        a = qf.pochhammer(qf.NEGQ_Q_INF, 50)
        bad = se.add(a, se.monomial(7, 50))
        r = vf._compare_series("euler:perturbed", a, bad, "n <= 50")
        assert not r.passed
        assert r.first_failure[0] == 7


class TestParity:
    def test_all_even(self):
        assert vf.check_parity_all_even(500).passed

    def test_gf2_matches_full_series(self):
        N = 120
        bits = vf._gf2_sigma_mex(MexVariant.OVERLINED, N)
        full = qf.sigma_mex_gf(MexVariant.OVERLINED, N)
        for n in range(N + 1):
            assert (bits >> n) & 1 == full[n] % 2

    def test_gf2_pbar_is_one(self):
        # Every overpartition number at n >= 1 is even.
        assert vf._gf2_overpartition(2000) == 1

    def test_density_passes(self):
        r = vf.check_parity_density(1000)
        assert r.passed
        assert r.metrics["density"] >= 0.85

    def test_density_negative_control(self):
        # A constant-odd parity sequence has even-density zero.
        n_max = 1000
        all_odd = (1 << (n_max + 1)) - 1
        r = vf._density_report("control", all_odd, n_max, 0.85, 0.01)
        assert not r.passed
        assert r.metrics["density"] == 0.0

    def test_triangular(self):
        assert vf.check_triangular_parity(500).passed

    def test_triangular_small_values(self):
        bits = vf._gf2_sigma_mex(MexVariant.NON_OVERLINED, 10)
        assert (bits >> 1) & 1 == 1  # n=1 = 1*2/2 triangular, odd
        assert (bits >> 2) & 1 == 0  # n=2 not triangular, even


class TestGf2Arithmetic:
    def test_mul_matches_integer_mul(self):
        a = qf.pochhammer(qf.NEGQ_Q_INF, 40)
        b = qf.overpartition_gf(40)
        prod = se.mul(a, b)
        bits_a = sum((c % 2) << n for n, c in enumerate(a.coeffs))
        bits_b = sum((c % 2) << n for n, c in enumerate(b.coeffs))
        got = vf._gf2_mul(bits_a, bits_b, 40)
        assert got == sum((c % 2) << n for n, c in enumerate(prod.coeffs))

    def test_div_binomial_roundtrip(self):
        x = 0b1011011101
        for k in (1, 2, 5):
            y = vf._gf2_div_binomial(x, k, 30)
            assert vf._gf2_mul_binomial(y, k, 30) == x

    def test_binomial_identity_mod_two(self):
        # (q^2;q^2)_inf and (q;q)_inf^2 agree coefficientwise mod 2.
        N = 500
        even = vf._gf2_pochhammer(N, step=2)
        full = vf._gf2_pochhammer(N)
        assert even == vf._gf2_mul(full, full, N)


class TestAsymptotics:
    def test_table_shape(self):
        gf = qf.sigma_mex_gf(MexVariant.OVERLINED, 400)
        rows, report = vf.asym_ratio_table((100, 400), gf=gf)
        assert [r.n for r in rows] == [100, 400]
        assert all(r.predicted > 0 and r.ratio > 0 for r in rows)

    def test_prediction_formula(self):
        assert vf._predicted_growth(100) == pytest.approx(
            math.exp(math.pi * 10) / 400
        )

    def test_small_points_recorded_but_not_judged(self):
        gf = qf.sigma_mex_gf(MexVariant.OVERLINED, 400)
        rows, report = vf.asym_ratio_table((4, 100, 400), final_dev=0.2, gf=gf)
        assert rows[0].n == 4
        assert "dev_at_4" not in report.metrics

    def test_empty_points_rejected(self):
        with pytest.raises(ValueError):
            vf.asym_ratio_table(())


class TestSigmaTaylor:
    def test_passes(self):
        assert vf.check_sigma_taylor().passed

    def test_limit_toward_two(self):
        # Leading expansion term is 2; at t=0.02 the truncation tail at
        # N=400 is already below e^-8 per unit coefficient.
        sigma = qf.ramanujan_sigma(400)
        assert sigma.evaluate_real(math.exp(-0.02)) == pytest.approx(2.0, abs=0.05)

    def test_t_out_of_range(self):
        with pytest.raises(ValueError):
            vf.check_sigma_taylor(t_values=(0.5,))


class TestInghamScaling:
    def test_passes(self):
        gf = qf.sigma_mex_gf(MexVariant.OVERLINED, 900)
        assert vf.check_ingham_scaling(N=900, gf=gf).passed

    def test_tail_rule_enforced(self):
        gf = qf.sigma_mex_gf(MexVariant.OVERLINED, 900)
        with pytest.raises(ValueError):
            vf.check_ingham_scaling(N=900, t_grid=(0.01,), gf=gf)

    def test_constant_series_control(self):
        flat = se.one(900)
        r = vf.check_ingham_scaling(N=900, gf=flat)
        assert not r.passed


class TestRunAll:
    def test_single_check_selection(self):
        reports = vf.run_all(order=100, oracle_n_max=5, parity_n_max=200,
                             triangular_n_max=100, only="euler")
        assert len(reports) == 1
        assert reports[0].check_name == "euler_identity"

    def test_unknown_check(self):
        with pytest.raises(KeyError):
            vf.run_all(only="nope")

    def test_reports_deterministic(self):
        a = vf.check_parity_density(400)
        b = vf.check_parity_density(400)
        assert a.to_dict() == b.to_dict()
