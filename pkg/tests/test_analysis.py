import json
import math

import numpy as np
import pandas as pd
import pytest

from src.analysis.bounds import (RateBoundInputs, theoretical_bound, theoretical_bound_convex,
                                 theoretical_bound_iterate, theoretical_bound_nonsmooth_sc,
                                 theoretical_bound_smooth_sc)
from src.analysis.ivt import RandomPolynomial, ivt_witness, run_ivt_campaign, verify_ivt
from src.analysis.rates import fit_loglog_slope, iterate_error_series, optimality_gap_series
from src.analysis.report import SLOPE_WINDOWS, run_rate_check, write_rate_report
from src.core.config import Config
from src.core.errors import InvalidInputError, NumericError
from src.core.regions import Box
from src.core.schedules import Fixed, InverseT, StronglyConvexDecay
from src.problems.benchmarks import benchmark_problem
from src.problems.constants import ProblemConstants, compute_constants
from src.problems.problem import QuadraticPair, Regime, quadratic_pair
from src.problems.registry import canonical_problem, get_problem
from src.solver.alternation import AlternationSpec, Pattern
from src.solver.sa2gd import RunConfig, run_sa2gd

UNIT_SMOOTH = ProblemConstants(theta=1.0, L_a=1.0, L_b=1.0, c_a=1.0, c_b=1.0, M_nabla_a=0.0, M_nabla_b=0.0,
                               G=1.0, G_bar=0.0)
UNIT_NONSMOOTH = ProblemConstants(theta=1.0, L_hat_a=1.0, L_hat_b=1.0, L_tilde_a=1.0, L_tilde_b=1.0,
                                  c_hat_a=1.0, c_hat_b=1.0)


def _config(n_a=1, n_b=1, schedule=None, pattern=Pattern.BLOCK_A_THEN_B, seed=0):
    return RunConfig(T=0, schedule=schedule or StronglyConvexDecay(1.0, n_a + n_b),
                     alternation=AlternationSpec(n_a, n_b, pattern), master_seed=seed)


# Closed-form bounds

def test_smooth_sc_bound_examples():
    inputs = RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    assert theoretical_bound_smooth_sc(inputs, 1) == pytest.approx(4.0)
    assert theoretical_bound_smooth_sc(inputs, 3) == pytest.approx(2.0)
    assert theoretical_bound(inputs, 3) == theoretical_bound_smooth_sc(inputs, 3)


def test_nonsmooth_sc_bound_example():
    inputs = RateBoundInputs(UNIT_NONSMOOTH, 2, 1, Regime.NONSMOOTH_STRONGLY_CONVEX)
    assert theoretical_bound_nonsmooth_sc(inputs, 1) == pytest.approx(8.0)


def test_convex_bound_examples():
    smooth = RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.SMOOTH_CONVEX, alpha_bar=1.0)
    nonsmooth = RateBoundInputs(UNIT_NONSMOOTH, 1, 1, Regime.NONSMOOTH_CONVEX, alpha_bar=1.0)
    assert theoretical_bound(smooth, 1) == pytest.approx(4.5)
    assert theoretical_bound(nonsmooth, 1) == pytest.approx(6.5)
    assert theoretical_bound(smooth, 4) == pytest.approx(2.25)
    assert theoretical_bound_convex(nonsmooth, 4, smooth=False) == pytest.approx(3.25)


def test_bound_inputs_reject_missing_constants():
    with pytest.raises(InvalidInputError, match="c"):
        RateBoundInputs(ProblemConstants(theta=1.0), 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    with pytest.raises(InvalidInputError, match="alpha_bar"):
        RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.SMOOTH_CONVEX)
    with pytest.raises(InvalidInputError):
        RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.NONCONVEX_BENCHMARK)
    with pytest.raises(InvalidInputError):
        RateBoundInputs(UNIT_SMOOTH, 0, 0, Regime.SMOOTH_STRONGLY_CONVEX)
    inputs = RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    with pytest.raises(InvalidInputError):
        theoretical_bound(inputs, 0)


@pytest.mark.parametrize("regime", [r for r in Regime if r.has_bounds])
def test_bounds_strictly_decrease(regime):
    constants = UNIT_SMOOTH if regime.smooth else UNIT_NONSMOOTH
    inputs = RateBoundInputs(constants, 3, 1, regime, alpha_bar=0.5)
    values = [theoretical_bound(inputs, T) for T in range(1, 200)]
    assert all(b < a for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("T", [1, 7, 100, 1023])
def test_bound_scaling_laws(T):
    sc = RateBoundInputs(UNIT_SMOOTH, 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    assert theoretical_bound(sc, 2 * T) / theoretical_bound(sc, T) == pytest.approx((T + 1) / (2 * T + 1))
    convex = RateBoundInputs(UNIT_NONSMOOTH, 1, 1, Regime.NONSMOOTH_CONVEX, alpha_bar=2.0)
    assert theoretical_bound(convex, 4 * T) / theoretical_bound(convex, T) == pytest.approx(0.5)


def test_bounds_on_canonical_instances():
    smooth = compute_constants(canonical_problem(Regime.SMOOTH_STRONGLY_CONVEX, 0.1))
    inputs = RateBoundInputs(smooth, 3, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    expected = 4 / 101 * (10.02 + math.sqrt(20) * math.sqrt(10.02))
    assert theoretical_bound(inputs, 100) == pytest.approx(expected)

    nonsmooth = compute_constants(canonical_problem(Regime.NONSMOOTH_STRONGLY_CONVEX, 0.1))
    inputs = RateBoundInputs(nonsmooth, 3, 1, Regime.NONSMOOTH_STRONGLY_CONVEX)
    expected = 4 / 101 * (40.04 + 2 * math.sqrt(20) * math.sqrt(20.02))
    assert theoretical_bound(inputs, 100) == pytest.approx(expected)


def test_iterate_bound():
    constants = ProblemConstants(theta=2.0, L_a=1.0, L_b=1.0, c_a=1.0, c_b=1.0, M_nabla_a=4.0, M_nabla_b=4.0,
                                 G=0.5, G_bar=1.0)
    inputs = RateBoundInputs(constants, 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    assert theoretical_bound_iterate(inputs, 1.0, 1.0, 100) == pytest.approx(0.4662741699796952)
    # the start error dominates once it exceeds the noise term
    assert theoretical_bound_iterate(inputs, 1.0, 100.0, 100) == pytest.approx(1.0)
    with pytest.raises(InvalidInputError, match="gamma"):
        theoretical_bound_iterate(inputs, 0.25, 1.0, 100)
    with pytest.raises(InvalidInputError):
        theoretical_bound_iterate(inputs, 1.0, -1.0, 100)


def test_iterate_bound_without_noise_term():
    constants = ProblemConstants(theta=2.0, L_a=1.0, L_b=1.0, c_a=1.0, c_b=1.0, M_nabla_a=0.0, M_nabla_b=0.0,
                                 G=0.0, G_bar=1.0)
    inputs = RateBoundInputs(constants, 1, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    assert inputs.M == 0.0
    assert theoretical_bound_iterate(inputs, 1.0, 3.0, 10) == pytest.approx(0.3)


# Slope fits and gap series

@pytest.mark.parametrize("power", [-1.0, -0.5, 0.0])
def test_fit_loglog_slope(power):
    horizons = [16, 32, 64, 128, 256]
    gaps = [3.0 * T ** power for T in horizons]
    assert fit_loglog_slope(horizons, gaps) == pytest.approx(power)


def test_fit_loglog_slope_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        fit_loglog_slope([1, 2], [1.0, 0.5])
    with pytest.raises(InvalidInputError):
        fit_loglog_slope([1, 2, 4], [1.0, 0.0, 0.5])
    with pytest.raises(InvalidInputError):
        fit_loglog_slope([1, 2, 4], [1.0, 0.5])


def test_gap_series_is_zero_when_objectives_agree():
    problem = quadratic_pair([1.0], [1.0], 1.0, 1.0, Box([0.0], [2.0]))
    series = optimality_gap_series(problem, _config(), [4, 8], replications=3)
    assert series.s_star == 0.0
    assert np.allclose(series.gaps, 0.0, atol=1e-12)
    assert np.allclose(series.aggregated_gaps, 0.0, atol=1e-6)


def test_gap_series_single_replication_is_running_minimum():
    problem = get_problem('quad-2d', 0.1)
    config = _config(3, 1, seed=9)
    series = optimality_gap_series(problem, config, [20, 5, 10, 10], replications=1)
    assert list(series.horizons) == [5, 10, 20]
    assert np.all(series.std_errs == 0.0)

    traj = run_sa2gd(RunConfig(T=20, schedule=config.schedule, alternation=config.alternation, master_seed=9),
                     problem)
    gaps = traj.s_values - series.s_star
    expected = [np.min(gaps[1:T + 1]) for T in (5, 10, 20)]
    assert np.allclose(series.gaps, expected)


def test_gap_series_with_noise():
    problem = canonical_problem(Regime.SMOOTH_STRONGLY_CONVEX, 0.1)
    series = optimality_gap_series(problem, _config(3, 1, StronglyConvexDecay(1.0, 4), Pattern.RANDOM_POSITIONS),
                                   [8, 16, 32, 64], replications=8)
    assert series.lam == 0.75
    assert np.all(series.gaps >= 0)
    assert np.all(np.diff(series.gaps) <= 0)
    frame = series.to_frame()
    assert list(frame.columns) == ['T', 'empirical_gap', 'std_err', 'aggregated_gap', 'aggregated_std_err']


def test_gap_series_rejects_problems_without_minimizer():
    with pytest.raises(InvalidInputError):
        optimality_gap_series(benchmark_problem('MOP1'), _config(), [4, 8, 16], replications=1)
    with pytest.raises(InvalidInputError):
        optimality_gap_series(get_problem('quad-1d'), _config(), [4, 8, 16], replications=0)
    with pytest.raises(InvalidInputError):
        optimality_gap_series(get_problem('quad-1d'), _config(), [0, 8], replications=1)


def test_negative_gap_slack_follows_config(monkeypatch):
    # report b as the λ = 0.5 minimizer, so every gap sits near S(1) - S(2) = -0.5
    monkeypatch.setattr(QuadraticPair, 'analytic_weighted_minimizer', lambda self, lam: self.b.copy())
    problem = get_problem('quad-1d', 0.1)
    with pytest.raises(NumericError):
        optimality_gap_series(problem, _config(), [4, 8], replications=3)

    monkeypatch.setattr(Config, 'STAT_SLACK_SE', 1e9)
    series = optimality_gap_series(problem, _config(), [4, 8], replications=3)
    assert np.all(series.gaps < 0)


def test_iterate_error_within_bound():
    problem = canonical_problem(Regime.SMOOTH_STRONGLY_CONVEX, 0.1)
    config = _config(3, 1, InverseT(0.5), Pattern.RANDOM_POSITIONS, seed=4)
    series = iterate_error_series(problem, config, (16, 64, 256), replications=20)
    inputs = RateBoundInputs(compute_constants(problem), 3, 1, Regime.SMOOTH_STRONGLY_CONVEX)
    for T, error, se in zip(series.horizons, series.errors, series.std_errs):
        assert error <= theoretical_bound_iterate(inputs, 0.5, series.x0_error, int(T)) + 3 * se
    assert series.errors[-1] < series.errors[0]


# Mean-value witness

def test_witness_of_linear_function():
    witness = ivt_witness(lambda x: float(x[0]), [0.0, 1.0, 2.0])
    assert witness.w[0] == pytest.approx(1.0, abs=1e-9)
    assert witness.is_convex_certificate()


def test_witness_of_square():
    witness = ivt_witness(lambda x: float(x[0] ** 2), [0.0, 2.0])
    assert witness.w[0] == pytest.approx(math.sqrt(2.0), abs=1e-9)
    assert witness.weights == pytest.approx([1 - math.sqrt(2.0) / 2, math.sqrt(2.0) / 2], abs=1e-9)


def test_witness_of_single_and_identical_points():
    single = ivt_witness(lambda x: float(x @ x), [[0.3, -0.2]])
    assert np.array_equal(single.w, [0.3, -0.2])
    assert single.residual == 0.0 and list(single.weights) == [1.0]

    same = ivt_witness(lambda x: float(x @ x), [[1.0, 1.0]] * 3)
    assert np.allclose(same.w, [1.0, 1.0])
    assert same.residual == 0.0


def test_witness_fails_for_step_function():
    with pytest.raises(NumericError) as info:
        ivt_witness(lambda x: 1.0 if x[0] > 0.5 else 0.0, [0.0, 1.0])
    assert info.value.residual == pytest.approx(1.0)


def test_witness_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        ivt_witness(lambda x: 0.0, np.empty((0, 2)))
    with pytest.raises(NumericError):
        ivt_witness(lambda x: float('nan'), [0.0, 1.0])


def test_witness_reports_blended_point():
    # finite at both samples, undefined in between
    def phi(x):
        return float('nan') if 0.2 < x[0] < 0.8 else float(x[0])

    with pytest.raises(NumericError) as info:
        ivt_witness(phi, [0.0, 1.0])
    assert 0.2 < info.value.point[0] < 0.8


def test_verify_random_polynomial():
    rng = np.random.default_rng(12)
    phi = RandomPolynomial.draw(rng, 3, 4)
    points = rng.uniform(-1.0, 1.0, size=(6, 3))
    ok, witness = verify_ivt(phi, points)
    assert ok
    assert 6 * phi(witness.w) == pytest.approx(sum(phi(x) for x in points), abs=1e-8)


def test_campaign_passes():
    seen = []
    result = run_ivt_campaign(instances=200, master_seed=3, on_instance=lambda i, ok: seen.append(i))
    assert result.all_passed, result.failures[:5]
    assert seen == list(range(200))
    assert result.max_relative_residual <= 1e-9


def test_campaign_edge_cases():
    empty = run_ivt_campaign(instances=0)
    assert empty.instances == 0 and empty.all_passed
    strict = run_ivt_campaign(instances=50, tol=0.0, master_seed=3)
    assert not strict.all_passed
    assert len(strict.failures) == strict.instances - strict.passed
    with pytest.raises(InvalidInputError):
        run_ivt_campaign(instances=5, max_points=0)
    with pytest.raises(InvalidInputError):
        run_ivt_campaign(instances=5, tol=-1.0)


def test_campaign_is_deterministic():
    first = run_ivt_campaign(instances=30, tol=0.0, master_seed=8)
    second = run_ivt_campaign(instances=30, tol=0.0, master_seed=8)
    assert first.failures == second.failures


@pytest.mark.slow
def test_campaign_full_size():
    assert run_ivt_campaign(instances=1000, master_seed=20240101).all_passed


# Rate harness

def test_rate_check_writes_report(tmp_path):
    report = run_rate_check('smooth-sc', horizons=(8, 16, 32), replications=4, master_seed=1)
    assert set(report.checks) == {'bound_dominance', 'aggregated_bound_dominance', 'slope_in_window'}
    assert report.checks['bound_dominance']
    assert report.pattern is Pattern.RANDOM_POSITIONS

    written = write_rate_report(report, tmp_path)
    assert written['csv'].name == 'rate_smooth-sc.csv'
    frame = pd.read_csv(written['csv'])
    assert list(frame['T']) == [8, 16, 32]
    assert {'empirical_gap', 'std_err', 'theoretical_bound', 'regime', 'n_a', 'n_b', 'seed_count'} <= set(frame)
    summary = json.loads(written['json'].read_text())
    assert summary['regime'] == 'smooth-sc'
    assert summary['replications'] == 4
    assert summary['passed'] == report.passed


def test_rate_check_rejects_benchmark_regime():
    with pytest.raises(InvalidInputError):
        run_rate_check(Regime.NONCONVEX_BENCHMARK)


def test_rate_check_fixed_schedule_is_not_used():
    report = run_rate_check('nonsmooth-convex', horizons=(4, 8, 16), replications=2)
    assert not isinstance(report.schedule, Fixed)
    assert report.schedule.describe().startswith('sqrt')


@pytest.mark.slow
@pytest.mark.parametrize("regime", [r for r in Regime if r.has_bounds])
def test_rate_check_default_settings(regime):
    report = run_rate_check(regime, master_seed=20240101)
    low, high = SLOPE_WINDOWS[regime]
    assert report.checks['bound_dominance']
    assert low <= report.slope <= high
    assert report.passed
