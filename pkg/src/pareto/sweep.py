"""
Scalarization-by-effort sweep.

SA2GD cells split a fixed budget n_total into (n_a, n_total - n_a) for
n_a = 0..n_total; weighted-sum cells use λ = k / n_total instead. Every cell
starts from its own uniform random point and contributes its final iterate.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Union

from ..core.errors import InvalidInputError, NumericError
from ..core.parallel import parallel_map
from ..core.schedules import StepSchedule
from ..solver.alternation import AlternationSpec, Pattern
from ..solver.sa2gd import RunConfig, run_sa2gd, run_weighted_sum_sgd
from ..solver.trajectory import Method, Trajectory
from .front import Front, FrontPoint, nondominated_filter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepCell:
    index: int
    n_a: int
    n_b: int
    method: Method

    @property
    def lam(self) -> float:
        return self.n_a / (self.n_a + self.n_b)


def sweep_cells(n_total: int, method: Method) -> List[SweepCell]:
    if int(n_total) < 1:
        raise InvalidInputError(f"n_total must be at least 1, got {n_total}")
    return [SweepCell(k, k, n_total - k, Method(method)) for k in range(n_total + 1)]


def _front_point(traj: Trajectory, cell: SweepCell) -> FrontPoint:
    return FrontPoint(
        x=traj.final, f_a=float(traj.f_a[-1]), f_b=float(traj.f_b[-1]),
        n_a=cell.n_a, n_b=cell.n_b, lambda_star=traj.lam,
        method=cell.method, seed=traj.replication_id,
    )


def _run_cell(cell: SweepCell, problem, T: int, schedule: StepSchedule, pattern: Pattern,
              master_seed: int, replications: int) -> List[FrontPoint]:
    points = []
    for k in range(replications):
        # replication ids are unique across cells so every run has its own start and noise
        config = RunConfig(
            T=T, schedule=schedule, alternation=AlternationSpec(cell.n_a, cell.n_b, pattern),
            master_seed=master_seed, replication_id=cell.index * replications + k,
        )
        try:
            if cell.method is Method.SA2GD:
                traj = run_sa2gd(config, problem)
            else:
                traj = run_weighted_sum_sgd(config, cell.lam, problem)
        except NumericError as e:
            raise NumericError(
                f"{cell.method.value} cell (n_a={cell.n_a}, n_b={cell.n_b}): {e.base_message}",
                point=e.point, t=e.t, r=e.r, residual=e.residual,
            ) from e
        points.append(_front_point(traj, cell))
    return points


def sweep(problem, n_total: int, T: int, schedule: StepSchedule, replications: int = 1,
          method: Union[Method, str] = Method.SA2GD, master_seed: int = 0,
          pattern: Pattern = Pattern.BLOCK_A_THEN_B, workers: Optional[int] = None) -> Front:
    """
    Run every cell of the sweep and filter the final iterates.

    Args:
        problem: problem to sweep
        n_total: per-iteration step budget n_a + n_b (weighted-sum: λ grid resolution)
        T: outer iterations per run
        schedule: step-size schedule shared by all cells
        replications: runs per cell, each adding one candidate point
        method: SA2GD or WEIGHTED_SUM
        master_seed: seed of every random draw of the sweep
        workers: process-pool width, Config.WORKERS by default

    Returns:
        The filtered Front; its candidates hold every cell's points in cell order
    """
    method = Method(method)
    if int(replications) < 1:
        raise InvalidInputError(f"replications must be at least 1, got {replications}")
    cells = sweep_cells(n_total, method)
    logger.info(f"[SWEEP] {problem.name} | {method.value} | {len(cells)} cells | T={T} | {schedule.describe()}")

    run = partial(_run_cell, problem=problem, T=T, schedule=schedule, pattern=Pattern(pattern),
                  master_seed=master_seed, replications=int(replications))
    candidates = [point for cell_points in parallel_map(run, cells, workers) for point in cell_points]

    params = {
        'n_total': int(n_total), 'T': int(T), 'schedule': schedule.describe(),
        'method': method.value, 'replications': int(replications), 'master_seed': int(master_seed),
    }
    front = nondominated_filter(candidates, problem.name, params)
    logger.info(f"✅ [SWEEP] {problem.name} | {method.value} | kept {len(front)}/{len(candidates)} points")
    return front
