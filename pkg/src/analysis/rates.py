import logging
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd
from scipy import stats

from ..core.config import Config
from ..core.errors import InvalidInputError, NumericError
from ..solver.replications import run_replications
from ..solver.sa2gd import RunConfig
from ..solver.trajectory import AggregationMode, aggregate_iterates

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GapSeries:
    """
    min over t = 1..T of the replication-mean S(x_t, λ) - S(x_*, λ), per horizon T.

    std_errs are the standard errors of the mean at the minimizing t.
    aggregated_gaps hold the mean gap at the aggregated iterate x̄_T.
    """
    horizons: np.ndarray
    gaps: np.ndarray
    std_errs: np.ndarray
    replications: int
    lam: float
    s_star: float
    aggregated_gaps: Optional[np.ndarray] = None
    aggregated_std_errs: Optional[np.ndarray] = None
    aggregation: Optional[AggregationMode] = None

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({'T': self.horizons, 'empirical_gap': self.gaps, 'std_err': self.std_errs})
        if self.aggregated_gaps is not None:
            frame['aggregated_gap'] = self.aggregated_gaps
            frame['aggregated_std_err'] = self.aggregated_std_errs
        return frame


@dataclass(frozen=True, eq=False)
class IterateErrorSeries:
    horizons: np.ndarray
    errors: np.ndarray
    std_errs: np.ndarray
    x0_error: float
    replications: int


def _check_horizons(horizons: Sequence[int]) -> np.ndarray:
    horizons = np.asarray(sorted(set(int(T) for T in horizons)), dtype=int)
    if horizons.size == 0 or horizons[0] < 1:
        raise InvalidInputError(f"Horizons must be positive integers, got {list(horizons)}")
    return horizons


def _std_err(samples: np.ndarray) -> np.ndarray:
    if samples.shape[0] < 2:
        return np.zeros(samples.shape[1:])
    return samples.std(axis=0, ddof=1) / np.sqrt(samples.shape[0])


def _minimizer(problem, lam: float):
    x_star = problem.analytic_weighted_minimizer(lam)
    if x_star is None:
        raise InvalidInputError(f"{problem.name} has no analytic weighted-sum minimizer")
    return x_star


def optimality_gap_series(problem, config: RunConfig, horizons: Sequence[int], replications: int,
                          lam: Optional[float] = None,
                          aggregation: Union[AggregationMode, str, None] = None,
                          workers: Optional[int] = None) -> GapSeries:
    """
    Empirical counterpart of min_{t=1..T} E[S(x_t, λ)] - S(x_*, λ).

    Replications 0..K-1 run once to the largest horizon. S is averaged over
    replications for every t before the running minimum over t is taken.

    Args:
        problem: problem with an analytic weighted-sum minimizer
        config: run template; its T is replaced by the largest horizon
        horizons: horizons T_k at which the running minimum is reported
        replications: K >= 1
        lam: weight, λ_* = n_a/(n_a + n_b) of the config by default
        aggregation: mode of x̄_T, by default triangular for strongly
            convex regimes and uniform otherwise
        workers: process-pool width

    Returns:
        GapSeries over the sorted distinct horizons
    """
    if int(replications) < 1:
        raise InvalidInputError(f"replications must be at least 1, got {replications}")
    horizons = _check_horizons(horizons)
    spec = config.alternation
    lam = spec.n_a / spec.n_total if lam is None else float(lam)
    x_star = _minimizer(problem, lam)
    ws = problem.weighted_sum(lam)
    s_star = ws.value(x_star)

    if aggregation is None:
        strongly_convex = getattr(getattr(problem, 'regime', None), 'strongly_convex', True)
        aggregation = AggregationMode.TRIANGULAR_WEIGHTS if strongly_convex else AggregationMode.UNIFORM_MEAN
    aggregation = AggregationMode(aggregation)

    logger.info(f"[RATE]  {problem.name} | K={replications} | T_max={horizons[-1]} | λ={lam:g}")
    trajectories = run_replications(replace(config, T=int(horizons[-1])), problem, int(replications), workers)

    gaps_by_rep = np.array([lam * traj.f_a + (1.0 - lam) * traj.f_b for traj in trajectories]) - s_star
    mean = gaps_by_rep.mean(axis=0)
    se = _std_err(gaps_by_rep)

    gaps, std_errs = np.empty(horizons.size), np.empty(horizons.size)
    agg_gaps, agg_errs = np.empty(horizons.size), np.empty(horizons.size)
    for k, T in enumerate(horizons):
        t_best = 1 + int(np.argmin(mean[1:T + 1]))
        gaps[k], std_errs[k] = mean[t_best], se[t_best]
        agg = np.array([ws.value(aggregate_iterates(traj, aggregation, T).point) for traj in trajectories]) - s_star
        agg_gaps[k], agg_errs[k] = agg.mean(), _std_err(agg[:, None])[0]

    slack = Config.STAT_SLACK_SE * std_errs + 1e-12 * (1.0 + abs(s_star))
    if np.any(gaps < -slack):
        raise NumericError(f"Mean gap of {problem.name} is significantly negative; S(x_*) is not the minimum",
                           residual=float(gaps.min()))

    return GapSeries(
        horizons=horizons, gaps=gaps, std_errs=std_errs, replications=int(replications),
        lam=lam, s_star=float(s_star),
        aggregated_gaps=agg_gaps, aggregated_std_errs=agg_errs, aggregation=aggregation,
    )


def iterate_error_series(problem, config: RunConfig, horizons: Sequence[int], replications: int,
                         workers: Optional[int] = None) -> IterateErrorSeries:
    """Replication mean of ||x_T - x_*||² at each horizon, plus the mean ||x_0 - x_*||²"""
    if int(replications) < 1:
        raise InvalidInputError(f"replications must be at least 1, got {replications}")
    horizons = _check_horizons(horizons)
    spec = config.alternation
    x_star = _minimizer(problem, spec.n_a / spec.n_total)

    trajectories = run_replications(replace(config, T=int(horizons[-1])), problem, int(replications), workers)
    sq_errors = np.array([np.sum((traj.iterates - x_star) ** 2, axis=1) for traj in trajectories])
    at_horizons = sq_errors[:, horizons]
    return IterateErrorSeries(
        horizons=horizons,
        errors=at_horizons.mean(axis=0),
        std_errs=_std_err(at_horizons),
        x0_error=float(sq_errors[:, 0].mean()),
        replications=int(replications),
    )


def fit_loglog_slope(series: Union[GapSeries, Sequence[float]], gaps: Optional[Sequence[float]] = None) -> float:
    """
    Least-squares slope of log(gap) against log(T).

    Accepts a GapSeries, or horizons and gaps as two sequences.
    """
    if isinstance(series, GapSeries):
        horizons, gaps = series.horizons, series.gaps
    else:
        horizons = series
    horizons = np.asarray(horizons, dtype=float)
    gaps = np.asarray(gaps, dtype=float)
    if horizons.size < 3 or horizons.size != gaps.size:
        raise InvalidInputError(f"Slope fit needs at least 3 (T, gap) pairs, got {horizons.size}")
    if np.any(gaps <= 0) or np.any(horizons <= 0):
        raise InvalidInputError("Slope fit needs positive horizons and gaps")
    return float(stats.linregress(np.log(horizons), np.log(gaps)).slope)
