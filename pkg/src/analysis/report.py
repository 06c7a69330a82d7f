import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from ..core.artifacts import atomic_write_text
from ..core.config import Config
from ..core.errors import InvalidInputError
from ..core.schedules import ConvexSqrtDecay, StepSchedule, StronglyConvexDecay
from ..problems.constants import ProblemConstants, compute_constants
from ..problems.problem import Regime
from ..problems.registry import canonical_problem
from ..solver.alternation import AlternationSpec, Pattern
from ..solver.sa2gd import RunConfig
from .bounds import RateBoundInputs, theoretical_bound
from .rates import GapSeries, fit_loglog_slope, optimality_gap_series

logger = logging.getLogger(__name__)

DEFAULT_HORIZONS = (16, 32, 64, 128, 256, 512, 1024)

SLOPE_WINDOWS = {
    Regime.SMOOTH_STRONGLY_CONVEX: (-1.3, -0.7),
    Regime.NONSMOOTH_STRONGLY_CONVEX: (-1.3, -0.7),
    Regime.SMOOTH_CONVEX: (-0.8, -0.3),
    Regime.NONSMOOTH_CONVEX: (-0.8, -0.3),
}


class RateSummary(BaseModel):
    problem: str
    regime: str
    n_a: int
    n_b: int
    pattern: str
    sigma: float
    schedule: str
    replications: int
    master_seed: int
    horizons: List[int]
    fitted_slope: Optional[float]
    slope_window: Tuple[float, float]
    checks: Dict[str, bool]
    passed: bool
    constants: Dict[str, Optional[float]]


@dataclass(eq=False)
class RateReport:
    problem: str
    regime: Regime
    n_a: int
    n_b: int
    pattern: Pattern
    sigma: float
    schedule: StepSchedule
    master_seed: int
    series: GapSeries
    bounds: np.ndarray
    constants: ProblemConstants
    slope: Optional[float]
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({
            'T': self.series.horizons,
            'empirical_gap': self.series.gaps,
            'std_err': self.series.std_errs,
            'theoretical_bound': self.bounds,
            'regime': self.regime.value,
            'n_a': self.n_a,
            'n_b': self.n_b,
            'seed_count': self.series.replications,
        })
        if self.series.aggregated_gaps is not None:
            frame['aggregated_gap'] = self.series.aggregated_gaps
            frame['aggregated_std_err'] = self.series.aggregated_std_errs
        return frame

    def summary(self) -> RateSummary:
        constants = {k: (None if v is None else float(v)) for k, v in self.constants.to_dict().items()
                     if not isinstance(v, bool)}
        return RateSummary(
            problem=self.problem, regime=self.regime.value, n_a=self.n_a, n_b=self.n_b,
            pattern=self.pattern.value, sigma=self.sigma, schedule=self.schedule.describe(),
            replications=self.series.replications, master_seed=self.master_seed,
            horizons=[int(T) for T in self.series.horizons],
            fitted_slope=self.slope, slope_window=SLOPE_WINDOWS[self.regime],
            checks=dict(self.checks), passed=self.passed, constants=constants,
        )


def regime_schedule(regime: Regime, constants: ProblemConstants, n_total: int, alpha_bar: float) -> StepSchedule:
    """Step-size rule under which the regime's bound holds"""
    if regime is Regime.SMOOTH_STRONGLY_CONVEX:
        return StronglyConvexDecay(constants.c, n_total)
    if regime is Regime.NONSMOOTH_STRONGLY_CONVEX:
        return StronglyConvexDecay(constants.c_hat, n_total)
    return ConvexSqrtDecay(alpha_bar, n_total)


def run_rate_check(regime: Union[Regime, str], n_a: int = 3, n_b: int = 1, sigma: Optional[float] = None,
                   horizons: Sequence[int] = DEFAULT_HORIZONS, replications: int = 100,
                   master_seed: int = 0, alpha_bar: float = 1.0,
                   pattern: Union[Pattern, str] = Pattern.RANDOM_POSITIONS,
                   slack_se: Optional[float] = None, workers: Optional[int] = None) -> RateReport:
    """
    Measure the gap series on the canonical problem of a regime and check it
    against the theoretical bound and the expected log-log slope.

    Checks:
        bound_dominance: gap <= bound + slack_se standard errors at every horizon
        aggregated_bound_dominance: the same for the aggregated iterate
        slope_in_window: fitted slope inside the regime's window
    """
    regime = Regime(regime)
    if not regime.has_bounds:
        raise InvalidInputError(f"No rate check for regime {regime.value}")
    slack_se = Config.STAT_SLACK_SE if slack_se is None else slack_se

    problem = canonical_problem(regime, sigma)
    constants = compute_constants(problem)
    spec = AlternationSpec(n_a, n_b, Pattern(pattern))
    schedule = regime_schedule(regime, constants, spec.n_total, alpha_bar)
    config = RunConfig(T=0, schedule=schedule, alternation=spec, master_seed=master_seed)

    series = optimality_gap_series(problem, config, horizons, replications, workers=workers)
    inputs = RateBoundInputs(constants, n_a, n_b, regime, alpha_bar=alpha_bar)
    bounds = np.array([theoretical_bound(inputs, int(T)) for T in series.horizons])

    checks = {
        'bound_dominance': bool(np.all(series.gaps <= bounds + slack_se * series.std_errs)),
        'aggregated_bound_dominance': bool(
            np.all(series.aggregated_gaps <= bounds + slack_se * series.aggregated_std_errs)
        ),
    }
    try:
        slope = fit_loglog_slope(series)
    except InvalidInputError as e:
        logger.warning(f"⚠️ [RATE]  slope fit skipped: {e}")
        slope = None
    low, high = SLOPE_WINDOWS[regime]
    checks['slope_in_window'] = slope is not None and low <= slope <= high

    report = RateReport(
        problem=problem.name, regime=regime, n_a=n_a, n_b=n_b, pattern=spec.pattern, sigma=problem.sigma,
        schedule=schedule, master_seed=master_seed, series=series, bounds=bounds,
        constants=constants, slope=slope, checks=checks,
    )
    status = "✅" if report.passed else "❌"
    slope_text = "n/a" if slope is None else f"{slope:.3f}"
    logger.info(f"{status} [RATE]  {regime.value} | slope={slope_text} in [{low}, {high}] | checks={checks}")
    return report


def write_rate_report(report: RateReport, out_dir: Union[str, Path], stem: str = "rate") -> Dict[str, Path]:
    """<stem>_<regime>.csv with the per-horizon table and <stem>_<regime>.json with the summary"""
    out_dir = Path(out_dir)
    name = f"{stem}_{report.regime.value}"
    csv_path = atomic_write_text(out_dir / f"{name}.csv", report.to_frame().to_csv(index=False, lineterminator='\n'))
    json_path = atomic_write_text(out_dir / f"{name}.json", report.summary().model_dump_json(indent=2) + '\n')
    return {'csv': csv_path, 'json': json_path}
