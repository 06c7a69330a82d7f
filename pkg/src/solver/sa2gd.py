"""
Stochastic alternating bi-objective gradient/subgradient descent.

One outer iteration takes n_a steps on f^a and n_b steps on f^b (in the
order given by the alternation pattern) with a shared step size α_t, then
projects the last intermediate point onto the feasible region. Intermediate
points are not projected. Smooth and nonsmooth objectives share this code
path; a nonsmooth oracle simply returns its chosen subgradient element.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from ..core.errors import InvalidInputError, NumericError
from ..core.noise import NoiseStream
from ..core.oracles import sample_gradient
from ..core.scalarization import lambda_star
from ..core.schedules import StepSchedule
from ..core.session_logger import RunSessionLogger
from ..core.types import Point, as_point
from .alternation import AlternationSpec, alternation_order
from .trajectory import Method, Trajectory

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RunConfig:
    T: int
    schedule: StepSchedule
    alternation: AlternationSpec
    master_seed: int = 0
    replication_id: int = 0
    record_intermediates: bool = False
    initial_point: Optional[Point] = None  # None: uniform random in the region

    def __post_init__(self):
        if int(self.T) < 0:
            raise InvalidInputError(f"T must be nonnegative, got {self.T}")
        if self.initial_point is not None:
            object.__setattr__(self, 'initial_point', as_point(self.initial_point))

    def for_replication(self, replication_id: int) -> "RunConfig":
        return replace(self, replication_id=replication_id)


@dataclass(frozen=True, eq=False)
class IterationRecord:
    order: Tuple[str, ...]
    alpha: float
    intermediates: np.ndarray  # row r is the point after step r, before projection


def _starting_point(config: RunConfig, problem) -> Point:
    region = problem.region
    if config.initial_point is not None:
        x0 = as_point(config.initial_point, region.dimension)
        if not region.contains(x0):
            raise InvalidInputError(f"Initial point {x0} lies outside the feasible region of {problem.name}")
        return x0
    rng = NoiseStream(config.master_seed).start_key(config.replication_id).generator()
    return np.asarray(region.sample_uniform(rng), dtype=float)


def sa2gd_iteration(x_t: Point, t: int, config: RunConfig, problem) -> Tuple[Point, IterationRecord]:
    """
    One outer iteration x_t -> x_{t+1}.

    Step r draws its noise from path (replication, t, r), so every one of the
    n_a + n_b oracle calls uses a distinct random variable.
    """
    alpha = config.schedule.for_iteration(t)
    stream = NoiseStream(config.master_seed)
    order = alternation_order(config.alternation, stream.order_key(config.replication_id, t))

    y = np.array(x_t, dtype=float)
    intermediates = np.empty((len(order), y.size))
    for r, tag in enumerate(order):
        oracle = problem.oracle_a if tag == 'a' else problem.oracle_b
        try:
            grad = sample_gradient(oracle, y, stream.gradient_key(config.replication_id, t, r))
        except NumericError as e:
            raise e.with_context(t=t, r=r) from e
        y = y - alpha * grad
        if not np.all(np.isfinite(y)):
            raise NumericError("Intermediate iterate is not finite", point=y, t=t, r=r)
        intermediates[r] = y

    return problem.region.project(y), IterationRecord(order, alpha, intermediates)


def _evaluate(problem, x: Point) -> Tuple[float, float]:
    return float(problem.oracle_a.value(x)), float(problem.oracle_b.value(x))


def run_sa2gd(config: RunConfig, problem) -> Trajectory:
    """Run T outer iterations of SA2GD from x_0; deterministic given seed and replication id"""
    spec = config.alternation
    lam = lambda_star(spec.n_a, spec.n_b)
    session = RunSessionLogger(problem.name, Method.SA2GD.value, spec.n_a, spec.n_b, config.replication_id)
    session.log_start(config.T, config.schedule)

    x = _starting_point(config, problem)
    iterates = np.empty((config.T + 1, x.size))
    f_a = np.empty(config.T + 1)
    f_b = np.empty(config.T + 1)
    steps = np.empty(config.T)
    intermediates = [] if config.record_intermediates else None
    orders = [] if config.record_intermediates else None

    iterates[0] = x
    f_a[0], f_b[0] = _evaluate(problem, x)
    try:
        for t in range(config.T):
            x, record = sa2gd_iteration(x, t, config, problem)
            iterates[t + 1] = x
            f_a[t + 1], f_b[t + 1] = _evaluate(problem, x)
            steps[t] = record.alpha
            if intermediates is not None:
                intermediates.append(record.intermediates)
                orders.append(record.order)
            session.log_progress(t + 1, lam * f_a[t + 1] + (1 - lam) * f_b[t + 1])
    except NumericError as e:
        session.log_failure(e)
        raise

    s_values = lam * f_a + (1.0 - lam) * f_b
    session.log_finish(f_a[-1], f_b[-1], s_values[-1])
    return Trajectory(
        iterates=iterates, f_a=f_a, f_b=f_b, s_values=s_values, step_sizes=steps,
        lam=lam, method=Method.SA2GD, problem=problem.name,
        master_seed=config.master_seed, replication_id=config.replication_id,
        n_a=spec.n_a, n_b=spec.n_b, intermediates=intermediates, orders=orders,
    )


def run_weighted_sum_sgd(config: RunConfig, lam: float, problem) -> Trajectory:
    """
    Projected SGD on S(·, λ): one combined stochastic gradient λ g^a + (1 − λ) g^b per iteration.

    An objective with zero weight is not sampled, and the sampled ones take
    consecutive step indices, so λ = 0 replays SA2GD with n_a = 0, n_b = 1.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidInputError(f"lambda must lie in [0, 1], got {lam}")
    session = RunSessionLogger(problem.name, Method.WEIGHTED_SUM.value, '-', '-', config.replication_id)
    session.log_start(config.T, config.schedule)

    stream = NoiseStream(config.master_seed)
    weighted = [(w, oracle) for w, oracle in ((lam, problem.oracle_a), (1.0 - lam, problem.oracle_b)) if w > 0]

    x = _starting_point(config, problem)
    iterates = np.empty((config.T + 1, x.size))
    f_a = np.empty(config.T + 1)
    f_b = np.empty(config.T + 1)
    steps = np.empty(config.T)
    iterates[0] = x
    f_a[0], f_b[0] = _evaluate(problem, x)
    try:
        for t in range(config.T):
            alpha = config.schedule.for_iteration(t)
            grad = np.zeros(x.size)
            for r, (w, oracle) in enumerate(weighted):
                try:
                    grad = grad + w * sample_gradient(oracle, x, stream.gradient_key(config.replication_id, t, r))
                except NumericError as e:
                    raise e.with_context(t=t, r=r) from e
            y = x - alpha * grad
            if not np.all(np.isfinite(y)):
                raise NumericError("Iterate is not finite", point=y, t=t)
            x = problem.region.project(y)
            iterates[t + 1] = x
            f_a[t + 1], f_b[t + 1] = _evaluate(problem, x)
            steps[t] = alpha
            session.log_progress(t + 1, lam * f_a[t + 1] + (1 - lam) * f_b[t + 1])
    except NumericError as e:
        session.log_failure(e)
        raise

    s_values = lam * f_a + (1.0 - lam) * f_b
    session.log_finish(f_a[-1], f_b[-1], s_values[-1])
    return Trajectory(
        iterates=iterates, f_a=f_a, f_b=f_b, s_values=s_values, step_sizes=steps,
        lam=float(lam), method=Method.WEIGHTED_SUM, problem=problem.name,
        master_seed=config.master_seed, replication_id=config.replication_id,
    )
