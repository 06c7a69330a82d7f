import logging
from enum import IntEnum

import numpy as np

from ..analysis.ivt import run_ivt_campaign
from ..analysis.report import run_rate_check, write_rate_report
from ..core.errors import InvalidInputError
from ..core.schedules import StepSchedule, parse_schedule
from ..pareto.artifacts import write_fronts
from ..pareto.front import front_metrics
from ..pareto.sweep import sweep
from ..problems.benchmarks import load_manifest
from ..problems.constants import compute_constants
from ..problems.registry import SYNTHETIC_DESCRIPTIONS, get_problem
from ..solver.alternation import AlternationSpec, Pattern
from ..solver.sa2gd import RunConfig, run_sa2gd
from ..solver.trajectory import Method, write_trajectory_csv
from .configs import IvtConfig, RateConfig, SolveConfig, SweepConfig

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    NUMERIC_ERROR = 1
    BAD_INPUT = 2
    CHECK_FAILED = 3


METHODS = {
    'sa2gd': (Method.SA2GD,),
    'weighted-sum': (Method.WEIGHTED_SUM,),
    'both': (Method.SA2GD, Method.WEIGHTED_SUM),
}


def _schedule_for(problem, text: str, n_total: int) -> StepSchedule:
    # a bare sc-decay takes its modulus from the problem
    c = 1.0
    if text.strip().lower() == 'sc-decay':
        constants = compute_constants(problem)
        modulus = constants.c if constants.c is not None else constants.c_hat
        if modulus is None:
            raise InvalidInputError(f"{problem.name} has no strong-convexity modulus; use sc-decay:<c> or another schedule")
        c = modulus
    return parse_schedule(text, c=c, n_total=n_total)


def cmd_solve(config: SolveConfig) -> ExitCode:
    """One SA2GD run; writes the trajectory CSV and prints the final objectives"""
    problem = get_problem(config.problem, config.sigma)
    spec = AlternationSpec(config.n_a, config.n_b, Pattern(config.pattern))
    run = RunConfig(
        T=config.T, schedule=_schedule_for(problem, config.schedule, spec.n_total), alternation=spec,
        master_seed=config.seed, replication_id=config.replication,
    )
    traj = run_sa2gd(run, problem)

    path = config.output_dir() / f"solve_{problem.name}_na{config.n_a}_nb{config.n_b}_rep{config.replication}.csv"
    write_trajectory_csv(traj, path)
    print(f"x_T = {np.array2string(traj.final, precision=8)}")
    print(f"f_a = {traj.f_a[-1]:.10g}  f_b = {traj.f_b[-1]:.10g}  S = {traj.s_values[-1]:.10g}")
    print(f"trajectory: {path}")
    return ExitCode.OK


def cmd_sweep(config: SweepConfig) -> ExitCode:
    """Effort sweep for one or both methods; writes front CSVs and SVG scatters"""
    problem = get_problem(config.problem, config.sigma)
    schedule = _schedule_for(problem, config.step, config.n_total)
    fronts = []
    for method in METHODS[config.method]:
        front = sweep(problem, config.n_total, config.T, schedule, replications=config.replications,
                      method=method, master_seed=config.seed, pattern=Pattern(config.pattern),
                      workers=config.workers)
        fronts.append(front)
        if len(front):
            metrics = front_metrics(front)
            print(f"{method.value}: {len(front.candidates)} runs, {metrics.cardinality} non-dominated, "
                  f"f_a extent {metrics.extent_f_a:.6g}, max f_a gap {metrics.max_gap_f_a:.6g}")
        else:
            print(f"{method.value}: {len(front.candidates)} runs, empty front")

    written = write_fronts(fronts, config.output_dir(), f"sweep_{problem.name}")
    for path in written.values():
        print(f"wrote {path}")
    return ExitCode.OK


def cmd_rate(config: RateConfig) -> ExitCode:
    """Gap series against the theoretical bound; exit 3 when a check fails"""
    report = run_rate_check(
        config.regime, n_a=config.n_a, n_b=config.n_b, sigma=config.sigma, horizons=config.horizons,
        replications=config.replications, master_seed=config.seed, alpha_bar=config.alpha_bar,
        pattern=Pattern(config.pattern), workers=config.workers,
    )
    written = write_rate_report(report, config.output_dir())
    print(report.to_frame().to_string(index=False))
    slope = "n/a" if report.slope is None else f"{report.slope:.4f}"
    print(f"fitted slope: {slope}")
    for name, ok in report.checks.items():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    for path in written.values():
        print(f"wrote {path}")
    return ExitCode.OK if report.passed else ExitCode.CHECK_FAILED


def cmd_ivt_check(config: IvtConfig) -> ExitCode:
    """Randomized mean-value witness campaign; exit 0 iff every instance passes"""
    result = run_ivt_campaign(
        instances=config.instances, max_points=config.max_points, max_dim=config.max_dim,
        degree=config.degree, tol=config.tol, master_seed=config.seed,
    )
    print(f"passed {result.passed}/{result.instances}, max relative residual {result.max_relative_residual:.3e}")
    for failure in result.failures[:10]:
        print(f"  {failure}")
    return ExitCode.OK if result.all_passed else ExitCode.CHECK_FAILED


def cmd_problems_list() -> ExitCode:
    """Print the named synthetic problems and the benchmark manifest"""
    print("Synthetic problems:")
    for name, description in SYNTHETIC_DESCRIPTIONS.items():
        print(f"  {name:<14} {description}")
    manifest = load_manifest()
    print(f"Benchmarks (manifest v{manifest.version}; {manifest.collection}):")
    for name, entry in manifest.problems.items():
        print(f"  {name:<14} n={entry.dimension}  region={entry.region}")
        print(f"  {'':<14} f_a = {entry.f_a}")
        print(f"  {'':<14} f_b = {entry.f_b}")
        print(f"  {'':<14} source: {entry.source}")
        if entry.notes:
            print(f"  {'':<14} notes: {entry.notes}")
    return ExitCode.OK
