"""Tests for the theorem-check battery and the suite driver."""

import dataclasses

import numpy as np
import pytest

from spdmeans import (
    CheckOutcome,
    OracleTally,
    SuiteConfig,
    check_chain,
    check_geometric_power,
    check_lambda1,
    check_limit_sandwich,
    check_limit_spectral,
    check_loewner_heinz,
    check_loewner_monotone_geometric,
    check_means_identities,
    check_natlog,
    check_natlog_counterexample,
    check_similarity,
    check_spectral_not_monotone,
    check_spectral_power,
    check_trace_corollary,
    run_suite,
    sample_pd,
    summarize,
)
from spdmeans.errors import PreconditionNotMet, SOutOfRange
from spdmeans.suite import (
    MONOTONE_COUNTEREXAMPLE,
    NATLOG_COUNTEREXAMPLE,
    dyadic_grid,
    s_bound,
    s_provable_bound,
)

DIAG_A = np.diag([1.0, 4.0])
DIAG_B = np.diag([9.0, 1.0])

# Frozen refutation of the wider exponent gate min(1/t, 2): at t = 1/3 and
# s = 2.0 (inside the gate, beyond the provable bound 3/2) this pair
# violates the sandwich-vs-mean ordering; the top-prefix log margin is
# -1.2270644e-4, confirmed with 50-digit arithmetic.
GATE_REFUTATION = {
    "t": 1.0 / 3.0,
    "s": 2.0,
    "A": np.array([
        [0.5491268716385025, 0.028127532844051718],
        [0.028127532844051718, 1.2730660176672972],
    ]),
    "B": np.array([
        [6.474714607305535, -0.9121578595115005],
        [-0.9121578595115005, 0.25290787052925184],
    ]),
    "margin": -1.2270644e-4,
}


class TestGeometricPower:
    def test_unit_power_is_equality(self):
        out = check_geometric_power(sample_pd(3, 1, 20.0), sample_pd(3, 2, 20.0), 0.4, 1.0)
        assert out.verdict
        assert abs(out.worst_margin) <= 1e-12

    def test_commuting_inputs_give_equality(self):
        out = check_geometric_power(DIAG_A, DIAG_B, 0.4, 2.0)
        assert out.verdict
        assert abs(out.worst_margin) <= 1e-12

    def test_random_power_two(self):
        tally = OracleTally()
        out = check_geometric_power(
            sample_pd(3, 3, 10.0), sample_pd(3, 4, 10.0), 0.4, 2.0, tally=tally
        )
        assert out.verdict
        assert tally.comparisons == 2 and tally.mismatches == 0

    def test_fractional_power(self):
        out = check_geometric_power(sample_pd(4, 5, 10.0), sample_pd(4, 6, 10.0), 0.7, 0.3)
        assert out.verdict

    def test_rejects_nonpositive_power(self):
        with pytest.raises(ValueError):
            check_geometric_power(DIAG_A, DIAG_B, 0.5, 0.0)


class TestSpectralPower:
    def test_unit_power_is_equality(self):
        out = check_spectral_power(sample_pd(3, 7, 20.0), sample_pd(3, 8, 20.0), 0.5, 1.0)
        assert out.verdict and abs(out.worst_margin) <= 1e-12

    def test_random_power_three_two_by_two(self):
        out = check_spectral_power(sample_pd(2, 9, 10.0), sample_pd(2, 10, 10.0), 0.5, 3.0)
        assert out.verdict

    def test_exponent_pair_half_and_two(self):
        # (q, p) = (0.5, 2) exercised through the r=0.5 and r=2 trials
        for r in (0.5, 2.0):
            out = check_spectral_power(
                sample_pd(3, 11, 10.0), sample_pd(3, 12, 10.0), 0.25, r
            )
            assert out.verdict
            assert "exponent_monotone" in out.detail


class TestNatlog:
    def test_unit_exponent_commuting_equality(self):
        out = check_natlog(DIAG_A, DIAG_B, 0.5, 1.0)
        assert out.verdict and abs(out.worst_margin) <= 1e-12

    def test_unit_exponent_random(self):
        out = check_natlog(sample_pd(4, 13, 50.0), sample_pd(4, 14, 50.0), 0.6, 1.0)
        assert out.verdict

    def test_provable_bound_holds(self):
        rng = np.random.default_rng(99)
        for _ in range(20):
            t = float(rng.uniform(0.05, 0.95))
            s = s_provable_bound(t)
            out = check_natlog(
                sample_pd(3, int(rng.integers(2**62)), 30.0),
                sample_pd(3, int(rng.integers(2**62)), 30.0),
                t,
                s,
            )
            assert out.verdict, (t, s, out.worst_margin)

    def test_out_of_range_requires_force(self):
        with pytest.raises(SOutOfRange):
            check_natlog(DIAG_A, DIAG_B, 1.0 / 3.0, 2.1)
        out = check_natlog(*NATLOG_COUNTEREXAMPLE_ARGS, force=True)
        assert not out.verdict

    def test_gate_wider_than_provable_bound_is_refuted(self):
        # the gate min(1/t, 2) admits genuine counterexamples for t < 1/2
        ref = GATE_REFUTATION
        assert ref["s"] <= s_bound(ref["t"])
        assert ref["s"] > s_provable_bound(ref["t"])
        out = check_natlog(ref["A"], ref["B"], ref["t"], ref["s"])
        assert not out.verdict
        assert out.worst_margin == pytest.approx(ref["margin"], rel=1e-5)


NATLOG_COUNTEREXAMPLE_ARGS = (
    NATLOG_COUNTEREXAMPLE["A"],
    NATLOG_COUNTEREXAMPLE["B"],
    NATLOG_COUNTEREXAMPLE["t"],
    NATLOG_COUNTEREXAMPLE["s"],
)


class TestChain:
    def test_equal_arguments_all_links_tight(self):
        A = sample_pd(3, 15, 20.0)
        out = check_chain(A, A, 0.7)
        assert out.verdict and abs(out.worst_margin) <= 1e-11

    def test_endpoint_t_zero(self):
        out = check_chain(DIAG_A, DIAG_B, 0.0)
        assert out.verdict and abs(out.worst_margin) <= 1e-12

    def test_random_four_by_four(self):
        out = check_chain(sample_pd(4, 16, 100.0), sample_pd(4, 17, 100.0), 0.7)
        assert out.verdict
        for key in (
            "metric_vs_logeuclid",
            "logeuclid_vs_sandwich",
            "sandwich_vs_spectral",
            "metric_vs_spectral",
        ):
            assert out.detail[key] >= -1e-8


class TestTraceCorollary:
    def test_zero_matrices(self):
        out = check_trace_corollary(np.zeros((2, 2)), np.zeros((2, 2)), 0.5, dyadic_grid(6))
        assert out.verdict
        assert out.detail["trace_target"] == pytest.approx(2.0)
        assert abs(out.worst_margin) <= 1e-13

    def test_commuting_equality(self):
        A = np.diag([0.5, -0.3])
        B = np.diag([0.1, 0.4])
        out = check_trace_corollary(A, B, 0.3, dyadic_grid(6))
        assert out.verdict and abs(out.worst_margin) <= 1e-10

    def test_random_descent(self):
        rng = np.random.default_rng(18)
        Z = rng.standard_normal((3, 3))
        A = (Z + Z.T) / 2
        A /= np.max(np.abs(np.linalg.eigvalsh(A)))
        Z = rng.standard_normal((3, 3))
        B = (Z + Z.T) / 2
        B /= np.max(np.abs(np.linalg.eigvalsh(B)))
        out = check_trace_corollary(A, B, 0.5, dyadic_grid(10))
        assert out.verdict

    def test_rejects_bad_grid(self):
        with pytest.raises(ValueError):
            check_trace_corollary(np.zeros((2, 2)), np.zeros((2, 2)), 0.5, (0.5, 1.0))


class TestLimits:
    def setup_method(self):
        rng = np.random.default_rng(19)
        Z = rng.standard_normal((3, 3))
        self.A = (Z + Z.T) / 2
        self.A /= np.max(np.abs(np.linalg.eigvalsh(self.A)))
        Z = rng.standard_normal((3, 3))
        self.B = (Z + Z.T) / 2
        self.B /= np.max(np.abs(np.linalg.eigvalsh(self.B)))

    def test_spectral_equal_arguments_zero_error(self):
        out = check_limit_spectral(self.A, self.A, 0.5, dyadic_grid(10))
        assert out.verdict
        assert out.detail["final_err"] <= 1e-11

    def test_spectral_commuting_zero_error(self):
        A = np.diag([0.9, -0.4])
        B = np.diag([0.2, 0.6])
        out = check_limit_spectral(A, B, 0.3, dyadic_grid(10))
        assert out.verdict and out.detail["final_err"] <= 1e-11

    def test_spectral_random_descent(self):
        out = check_limit_spectral(self.A, self.B, 0.6, dyadic_grid(10))
        assert out.verdict
        assert out.detail["final_err"] <= 1e-2
        assert out.detail["err_monotone"] >= -1e-8

    def test_sandwich_equal_arguments(self):
        out = check_limit_sandwich(self.A, self.A, 0.4, dyadic_grid(10))
        assert out.verdict and out.detail["final_err"] <= 1e-11

    def test_sandwich_endpoint_t_zero(self):
        out = check_limit_sandwich(self.A, self.B, 0.0, dyadic_grid(10))
        assert out.verdict and out.detail["final_err"] <= 1e-11

    def test_sandwich_random_descent_and_upper_bound(self):
        out = check_limit_sandwich(self.A, self.B, 0.5, dyadic_grid(10))
        assert out.verdict
        assert any(k.startswith("upper_bound_") for k in out.detail)


class TestLoewnerChecks:
    def test_monotone_equal_pairs(self):
        out = check_loewner_monotone_geometric(DIAG_A, DIAG_B, DIAG_A, DIAG_B, 0.5)
        assert out.verdict and abs(out.worst_margin) <= 1e-12

    def test_monotone_scalars(self):
        out = check_loewner_monotone_geometric(
            np.array([[4.0]]), np.array([[9.0]]), np.array([[1.0]]), np.array([[1.0]]), 0.5
        )
        assert out.verdict
        assert out.worst_margin > 0

    def test_monotone_random_shrunk(self):
        rng = np.random.default_rng(20)
        A = sample_pd(3, 21, 30.0)
        B = sample_pd(3, 22, 30.0)
        wA = np.linalg.eigvalsh(A)[0]
        wB = np.linalg.eigvalsh(B)[0]
        P = sample_pd(3, 23, 5.0)
        Q = sample_pd(3, 24, 5.0)
        C = A - P * (0.5 * wA / np.linalg.eigvalsh(P)[-1])
        D = B - Q * (0.5 * wB / np.linalg.eigvalsh(Q)[-1])
        out = check_loewner_monotone_geometric(A, B, C, D, 0.35)
        assert out.verdict

    def test_monotone_precondition(self):
        with pytest.raises(PreconditionNotMet):
            check_loewner_monotone_geometric(DIAG_A, DIAG_B, 2 * DIAG_A, DIAG_B, 0.5)

    def test_heinz_endpoints(self):
        A = DIAG_A + np.eye(2)
        for r in (1.0, 0.0):
            out = check_loewner_heinz(A, DIAG_A, r)
            assert out.verdict

    def test_heinz_random_half(self):
        B = sample_pd(3, 25, 20.0)
        P = sample_pd(3, 26, 5.0)
        A = B + P
        out = check_loewner_heinz(A, B, 0.5)
        assert out.verdict

    def test_heinz_precondition_and_range(self):
        with pytest.raises(PreconditionNotMet):
            check_loewner_heinz(DIAG_A, DIAG_A + np.eye(2), 0.5)
        with pytest.raises(ValueError):
            check_loewner_heinz(DIAG_A + np.eye(2), DIAG_A, 1.5)


class TestLambda1:
    def test_unit_exponent_equality(self):
        out = check_lambda1(DIAG_A, DIAG_B, 1.0)
        assert out.verdict and abs(out.worst_margin) <= 1e-12

    def test_zero_exponent_identity(self):
        out = check_lambda1(DIAG_A, DIAG_B, 0.0)
        assert out.verdict and abs(out.worst_margin) <= 1e-13

    def test_random_half(self):
        tally = OracleTally()
        out = check_lambda1(sample_pd(3, 27, 50.0), sample_pd(3, 28, 50.0), 0.5, tally=tally)
        assert out.verdict
        assert tally.mismatches == 0

    def test_range_validation(self):
        with pytest.raises(ValueError):
            check_lambda1(DIAG_A, DIAG_B, 1.2)


class TestIdentityAndWitnessChecks:
    def test_means_identities_random(self):
        out = check_means_identities(sample_pd(3, 29, 100.0), sample_pd(3, 30, 100.0), 0.4)
        assert out.verdict

    def test_similarity_random(self):
        out = check_similarity(sample_pd(3, 31, 50.0), sample_pd(3, 32, 50.0), 0.3)
        assert out.verdict


class TestCounterexampleChecks:
    def test_natlog_counterexample(self):
        out = check_natlog_counterexample()
        assert not out.verdict
        assert out.detail["reproduction_ok"] == 1.0
        assert out.detail["delta_spectrum_sandwich"] <= 5e-4
        assert out.detail["delta_spectrum_mean"] <= 5e-4
        assert out.detail["delta_entries_sandwich"] <= 1e-3
        assert out.detail["delta_entries_mean"] <= 1e-3

    def test_monotone_counterexample(self):
        out = check_spectral_not_monotone()
        assert not out.verdict
        assert out.detail["reproduction_ok"] == 1.0
        assert out.detail["b1_ge_b2"] >= 0.0
        assert out.detail["delta_diff_eigs"] <= 5e-3
        # one negative and one positive eigenvalue around the references
        N1 = MONOTONE_COUNTEREXAMPLE["printed_mean_b1"]
        diff_eigs = MONOTONE_COUNTEREXAMPLE["printed_diff_eigs"]
        assert diff_eigs[0] < 0 < diff_eigs[1]
        assert out.detail["delta_entries_mean_b1"] <= 1e-3
        assert N1.shape == (2, 2)


class TestRunSuite:
    def test_zero_trials_runs_only_fixed_rows(self):
        cfg = SuiteConfig(trials=0, limit_trials=0)
        outs = run_suite(cfg)
        assert all(out.trial < 0 for out in outs)
        ids = {out.check_id for out in outs}
        assert "counterexample_natlog" in ids and "counterexample_monotone" in ids
        assert summarize(outs, cfg)["ok"]

    def test_deterministic_for_equal_configs(self):
        cfg = SuiteConfig(trials=6, limit_trials=2, seed=77)
        a = run_suite(cfg)
        b = run_suite(SuiteConfig(trials=6, limit_trials=2, seed=77))
        assert len(a) == len(b)
        for x, y in zip(a, b):
            assert (x.check_id, x.trial, x.seed, x.verdict) == (
                y.check_id,
                y.trial,
                y.seed,
                y.verdict,
            )
            assert x.worst_margin == y.worst_margin
            assert x.detail == y.detail

    def test_small_run_meets_expectations(self):
        cfg = SuiteConfig(trials=10, limit_trials=3, seed=5)
        outs = run_suite(cfg)
        summary = summarize(outs, cfg)
        assert summary["ok"]
        assert summary["checks"]["oracle_agreement"]["failures"] == 0

    def test_forced_out_of_range_rows_are_informational(self):
        cfg = SuiteConfig(
            trials=40, limit_trials=0, seed=11,
            s_grid=(0.5, 1.0, 2.1), force_out_of_range=True,
        )
        outs = run_suite(cfg)
        forced = [
            o for o in outs
            if o.check_id == "natlog_order" and o.detail.get("out_of_range") == 1.0
        ]
        assert forced
        assert summarize(outs, cfg)["ok"]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SuiteConfig(trials=-1).validate()
        with pytest.raises(ValueError):
            SuiteConfig(dims=(4, 2)).validate()
        with pytest.raises(ValueError):
            SuiteConfig(t_grid=(0.0, 1.5)).validate()
        with pytest.raises(ValueError):
            SuiteConfig(s_grid=(0.5, 2.5)).validate()
        SuiteConfig(s_grid=(0.5, 2.5), force_out_of_range=True).validate()

    def test_config_roundtrip(self):
        cfg = SuiteConfig(trials=3, dims=(2, 4), t_grid=(0.25, 0.5))
        again = SuiteConfig.from_dict(cfg.to_dict())
        assert dataclasses.asdict(again) == dataclasses.asdict(cfg)
        with pytest.raises(ValueError):
            SuiteConfig.from_dict({"bogus": 1})

    def test_outcome_shape(self):
        out = check_chain(DIAG_A, DIAG_B, 0.5)
        assert isinstance(out, CheckOutcome)
        assert out.witness is None
        assert isinstance(out.detail, dict)
