import itertools

import numpy as np
import pandas as pd
import pytest

from src.core.errors import InvalidInputError, NumericError
from src.core.noise import NoiseStream
from src.core.oracles import GradientOracle
from src.core.regions import Box
from src.core.schedules import Fixed, StronglyConvexDecay
from src.problems.benchmarks import benchmark_problem
from src.problems.objectives import QuadraticObjective
from src.problems.problem import BiObjectiveProblem, Regime, attach_noise, quadratic_pair
from src.problems.registry import get_problem
from src.solver.alternation import AlternationSpec, Pattern, alternation_order
from src.solver.replications import run_replications
from src.solver.sa2gd import RunConfig, run_sa2gd, run_weighted_sum_sgd, sa2gd_iteration
from src.solver.trajectory import (AggregationMode, Method, Trajectory, aggregate_iterates,
                                   write_trajectory_csv)


class LinearObjective(GradientOracle):
    def __init__(self, slope):
        self.slope = np.asarray(slope, dtype=float)

    def value(self, x):
        return float(self.slope @ x)

    def deterministic_gradient(self, x):
        return self.slope.copy()


class ExplodingObjective(GradientOracle):
    def value(self, x):
        return 0.0

    def deterministic_gradient(self, x):
        raise AssertionError("f_a must not be sampled")


class NanObjective(GradientOracle):
    def value(self, x):
        return 0.0

    def deterministic_gradient(self, x):
        return np.full(len(x), np.nan)


def _wide_quadratic(curvature_b=1.0):
    return quadratic_pair([0.0], [2.0], 1.0, curvature_b, Box([-10.0], [10.0]), name='wide')


def _trajectory(points):
    points = np.asarray(points, dtype=float).reshape(len(points), -1)
    zeros = np.zeros(len(points))
    return Trajectory(
        iterates=points, f_a=zeros, f_b=zeros, s_values=zeros, step_sizes=np.zeros(len(points) - 1),
        lam=0.5, method=Method.SA2GD, problem='manual', master_seed=0, replication_id=0,
    )


# Alternation orders

def test_block_order():
    assert alternation_order(AlternationSpec(2, 1)) == ('a', 'a', 'b')


@pytest.mark.parametrize(
    "n_a, n_b, expected",
    [(1, 1, ('a', 'b')), (3, 1, ('a', 'a', 'b', 'a')), (1, 3, ('b', 'a', 'b', 'b')), (0, 2, ('b', 'b'))],
)
def test_interleaved_order(n_a, n_b, expected):
    assert alternation_order(AlternationSpec(n_a, n_b, Pattern.INTERLEAVED)) == expected


def test_random_order_replays_key():
    key = NoiseStream(9).order_key(0, 4)
    order = alternation_order(AlternationSpec(2, 1, Pattern.RANDOM_POSITIONS), key)
    assert order in {('a', 'a', 'b'), ('a', 'b', 'a'), ('b', 'a', 'a')}
    positions = set(key.generator().choice(3, size=2, replace=False).tolist())
    assert order == tuple('a' if j in positions else 'b' for j in range(3))
    assert alternation_order(AlternationSpec(2, 1, 'random'), key) == order


def test_random_order_is_uniform():
    stream = NoiseStream(1)
    spec = AlternationSpec(2, 1, Pattern.RANDOM_POSITIONS)
    orders = [alternation_order(spec, stream.order_key(0, t)) for t in range(3000)]
    for arrangement in set(itertools.permutations('aab')):
        assert abs(orders.count(arrangement) / len(orders) - 1 / 3) < 0.05


def test_orders_have_exact_counts():
    stream = NoiseStream(2)
    for n_a, n_b, pattern in itertools.product(range(6), range(6), Pattern):
        if n_a + n_b == 0:
            continue
        order = alternation_order(AlternationSpec(n_a, n_b, pattern), stream.order_key(n_a, n_b))
        assert len(order) == n_a + n_b
        assert order.count('a') == n_a and order.count('b') == n_b


def test_alternation_spec_validation():
    with pytest.raises(InvalidInputError):
        AlternationSpec(0, 0)
    with pytest.raises(InvalidInputError):
        AlternationSpec(-1, 2)
    with pytest.raises(InvalidInputError):
        alternation_order(AlternationSpec(1, 1, Pattern.RANDOM_POSITIONS))


# One outer iteration

def test_iteration_hand_trace():
    config = RunConfig(T=1, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1))
    x_next, record = sa2gd_iteration(np.array([0.0]), 0, config, _wide_quadratic())
    assert np.allclose(x_next, [0.2])
    assert record.order == ('a', 'b')
    assert np.allclose(record.intermediates, [[0.0], [0.2]])


def test_iteration_only_f_a():
    config = RunConfig(T=1, schedule=Fixed(0.5), alternation=AlternationSpec(2, 0))
    x_next, _ = sa2gd_iteration(np.array([1.0]), 0, config, _wide_quadratic())
    assert np.allclose(x_next, [0.25])


def test_iteration_without_a_steps_never_samples_f_a():
    problem = BiObjectiveProblem(
        name='one-sided', region=Box([-1.0], [1.0]), oracle_a=ExplodingObjective(),
        oracle_b=QuadraticObjective([0.5], 1.0), regime=Regime.SMOOTH_CONVEX,
    )
    config = RunConfig(T=3, schedule=Fixed(0.1), alternation=AlternationSpec(0, 2))
    traj = run_sa2gd(config, problem)
    assert traj.T == 3


def test_intermediates_are_not_projected():
    problem = quadratic_pair([0.0], [2.0], 1.0, 1.0, Box([0.0], [1.0]))
    config = RunConfig(T=1, schedule=Fixed(1.5), alternation=AlternationSpec(0, 1))
    x_next, record = sa2gd_iteration(np.array([0.0]), 0, config, problem)
    assert np.allclose(record.intermediates, [[3.0]])
    assert np.allclose(x_next, [1.0])


def test_iteration_reports_failing_step():
    problem = BiObjectiveProblem(
        name='nan', region=Box([-1.0], [1.0]), oracle_a=QuadraticObjective([0.0], 1.0),
        oracle_b=NanObjective(), regime=Regime.SMOOTH_CONVEX,
    )
    config = RunConfig(T=5, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1))
    with pytest.raises(NumericError) as info:
        sa2gd_iteration(np.array([0.5]), 3, config, problem)
    assert info.value.t == 3 and info.value.r == 1
    with pytest.raises(NumericError) as info:
        run_sa2gd(config, problem)
    assert info.value.t == 0


def test_sqrt_benchmark_leaving_domain_is_numeric_error():
    # unit steps on 2 sqrt(x_1) from x_1 = 1.5 overshoot past zero inside the first iteration
    config = RunConfig(T=5, schedule=Fixed(1.0), alternation=AlternationSpec(4, 0), initial_point=[1.5, 1.5])
    with pytest.raises(NumericError) as info:
        run_sa2gd(config, benchmark_problem('IM1'))
    assert info.value.t == 0
    assert info.value.point[0] <= 0.0


# Full runs

def test_zero_iterations():
    config = RunConfig(T=0, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1), initial_point=[0.3])
    traj = run_sa2gd(config, _wide_quadratic())
    assert traj.T == 0
    assert np.allclose(traj.iterates, [[0.3]])
    assert traj.step_sizes.size == 0


@pytest.mark.parametrize("n_a, n_b, expected", [(1, 1, 1.0), (3, 1, 0.5)])
def test_run_converges_to_weighted_minimizer(n_a, n_b, expected):
    config = RunConfig(
        T=500, schedule=StronglyConvexDecay(1.0, n_a + n_b), alternation=AlternationSpec(n_a, n_b),
        initial_point=[5.0],
    )
    traj = run_sa2gd(config, _wide_quadratic())
    assert abs(traj.final[0] - expected) < 1e-2
    assert traj.lam == n_a / (n_a + n_b)


@pytest.mark.parametrize("n_a", range(9))
def test_effort_split_targets_weighted_minimizer(n_a):
    problem = get_problem('quad-2d')
    config = RunConfig(T=500, schedule=StronglyConvexDecay(1.0, 8), alternation=AlternationSpec(n_a, 8 - n_a),
                       master_seed=n_a)
    lam = n_a / 8
    target = lam * np.array([0.0, 0.0]) + (1 - lam) * np.array([2.0, 0.0])
    assert np.linalg.norm(run_sa2gd(config, problem).final - target) <= 1e-2


def test_trajectory_lengths_and_feasibility():
    problem = get_problem('nonsmooth-2d', sigma=0.5)
    config = RunConfig(
        T=200, schedule=Fixed(0.05), alternation=AlternationSpec(2, 3, Pattern.RANDOM_POSITIONS),
        master_seed=4, record_intermediates=True,
    )
    traj = run_sa2gd(config, problem)
    assert traj.iterates.shape == (201, 2)
    assert len(traj.f_a) == len(traj.f_b) == len(traj.s_values) == 201
    assert len(traj.step_sizes) == 200
    assert len(traj.intermediates) == len(traj.orders) == 200
    assert all(block.shape == (5, 2) for block in traj.intermediates)
    assert all(problem.region.contains(x) for x in traj.iterates)


def test_runs_are_deterministic():
    problem = get_problem('quad-2d', sigma=0.1)
    config = RunConfig(T=50, schedule=Fixed(0.05), alternation=AlternationSpec(2, 1, Pattern.RANDOM_POSITIONS),
                       master_seed=123, replication_id=7)
    first, second = run_sa2gd(config, problem), run_sa2gd(config, problem)
    assert np.array_equal(first.iterates, second.iterates)
    assert np.array_equal(first.s_values, second.s_values)
    other = run_sa2gd(config.for_replication(8), problem)
    assert not np.array_equal(first.iterates[0], other.iterates[0])


def test_initial_point_must_be_feasible():
    config = RunConfig(T=1, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1), initial_point=[20.0])
    with pytest.raises(InvalidInputError):
        run_sa2gd(config, _wide_quadratic())
    with pytest.raises(InvalidInputError):
        RunConfig(T=-1, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1))


def test_noiseless_weighted_sum_decreases():
    config = RunConfig(T=300, schedule=StronglyConvexDecay(1.0, 2), alternation=AlternationSpec(1, 1),
                       initial_point=[5.0])
    traj = run_sa2gd(config, _wide_quadratic())
    assert np.all(np.diff(traj.s_values[2:]) <= 1e-15)


def test_block_and_random_orders_commute_for_linear_objectives():
    problem = BiObjectiveProblem(
        name='linear', region=Box([-10.0, -10.0], [10.0, 10.0]),
        oracle_a=LinearObjective([1.0, 2.0]), oracle_b=LinearObjective([-3.0, 0.5]),
        regime=Regime.SMOOTH_CONVEX,
    )
    x = np.array([0.3, -0.7])
    results = []
    for pattern in (Pattern.BLOCK_A_THEN_B, Pattern.RANDOM_POSITIONS, Pattern.INTERLEAVED):
        config = RunConfig(T=1, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1, pattern))
        results.append(sa2gd_iteration(x, 0, config, problem)[0])
    assert all(np.allclose(r, results[0], rtol=0, atol=1e-15) for r in results)


def test_sa2gd_matches_weighted_sum_to_first_order():
    problem = _wide_quadratic(curvature_b=3.0)

    def difference(alpha):
        sa2gd = run_sa2gd(RunConfig(T=1, schedule=Fixed(alpha), alternation=AlternationSpec(1, 1),
                                    initial_point=[1.0]), problem)
        baseline = run_weighted_sum_sgd(RunConfig(T=1, schedule=Fixed(2 * alpha), alternation=AlternationSpec(1, 1),
                                                  initial_point=[1.0]), 0.5, problem)
        return float(np.linalg.norm(sa2gd.final - baseline.final))

    coarse, fine = difference(0.1), difference(0.05)
    assert coarse > 0
    assert coarse / fine == pytest.approx(4.0, rel=1e-6)


# Weighted-sum baseline

def test_weighted_sum_single_step():
    config = RunConfig(T=1, schedule=Fixed(0.5), alternation=AlternationSpec(1, 0), initial_point=[1.0])
    traj = run_weighted_sum_sgd(config, 1.0, _wide_quadratic())
    assert np.allclose(traj.final, [0.5])
    assert traj.method is Method.WEIGHTED_SUM


def test_weighted_sum_converges():
    config = RunConfig(T=500, schedule=StronglyConvexDecay(1.0, 1), alternation=AlternationSpec(1, 1),
                       initial_point=[-4.0])
    traj = run_weighted_sum_sgd(config, 0.5, _wide_quadratic())
    assert abs(traj.final[0] - 1.0) < 1e-2


def test_weighted_sum_at_zero_replays_sa2gd():
    problem = attach_noise(_wide_quadratic(), 0.2)
    config = RunConfig(T=40, schedule=Fixed(0.05), alternation=AlternationSpec(0, 1), master_seed=17,
                       initial_point=[3.0])
    sa2gd = run_sa2gd(config, problem)
    baseline = run_weighted_sum_sgd(config, 0.0, problem)
    assert np.array_equal(sa2gd.iterates, baseline.iterates)


def test_weighted_sum_rejects_lambda():
    config = RunConfig(T=1, schedule=Fixed(0.5), alternation=AlternationSpec(1, 1))
    with pytest.raises(InvalidInputError):
        run_weighted_sum_sgd(config, 1.2, _wide_quadratic())


# Aggregation and trajectory files

def test_aggregate_examples():
    traj = _trajectory([0.0, 1.0, 2.0])
    assert np.allclose(aggregate_iterates(traj, AggregationMode.TRIANGULAR_WEIGHTS).point, [5 / 3])
    assert np.allclose(aggregate_iterates(traj, AggregationMode.UNIFORM_MEAN).point, [1.5])
    assert np.allclose(aggregate_iterates(traj, 'uniform', horizon=1).point, [1.0])


@pytest.mark.parametrize("mode", list(AggregationMode))
def test_aggregate_constant_trajectory(mode):
    traj = _trajectory([[9.0, 9.0], [2.0, -1.0], [2.0, -1.0], [2.0, -1.0]])
    assert np.allclose(aggregate_iterates(traj, mode).point, [2.0, -1.0])


def test_aggregate_matches_direct_formula():
    rng = np.random.default_rng(0)
    traj = _trajectory(rng.normal(size=(51, 3)))
    t = np.arange(1, 51)
    direct = (t[:, None] * traj.iterates[1:]).sum(axis=0) / t.sum()
    assert np.allclose(aggregate_iterates(traj).point, direct, rtol=0, atol=1e-12)


def test_aggregate_rejects_empty_trajectory():
    with pytest.raises(InvalidInputError):
        aggregate_iterates(_trajectory([1.0]))
    with pytest.raises(InvalidInputError):
        aggregate_iterates(_trajectory([0.0, 1.0]), horizon=2)


def test_trajectory_rejects_inconsistent_lengths():
    with pytest.raises(InvalidInputError):
        Trajectory(iterates=np.zeros((3, 1)), f_a=np.zeros(3), f_b=np.zeros(3), s_values=np.zeros(2),
                   step_sizes=np.zeros(2), lam=0.5, method=Method.SA2GD, problem='p',
                   master_seed=0, replication_id=0)


def test_trajectory_csv(tmp_path):
    config = RunConfig(T=4, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1), initial_point=[0.0, 0.5])
    traj = run_sa2gd(config, get_problem('quad-2d'))
    path = write_trajectory_csv(traj, tmp_path / "traj.csv")
    frame = pd.read_csv(path)
    assert list(frame.columns) == ['t', 'x0', 'x1', 'f_a', 'f_b', 'S_lambda', 'alpha_t']
    assert len(frame) == 5
    assert np.allclose(frame['alpha_t'].iloc[:4], 0.1)
    assert np.isnan(frame['alpha_t'].iloc[4])


def test_replications_are_ordered_and_independent():
    problem = get_problem('quad-1d', sigma=0.1)
    config = RunConfig(T=10, schedule=Fixed(0.1), alternation=AlternationSpec(1, 1), master_seed=3)
    runs = run_replications(config, problem, 3)
    assert [traj.replication_id for traj in runs] == [0, 1, 2]
    assert np.array_equal(runs[1].iterates, run_sa2gd(config.for_replication(1), problem).iterates)
    assert not np.array_equal(runs[0].iterates, runs[1].iterates)
