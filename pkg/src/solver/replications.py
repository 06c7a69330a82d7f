import logging
from functools import partial
from typing import List, Optional

from ..core.parallel import parallel_map
from .sa2gd import RunConfig, run_sa2gd
from .trajectory import Trajectory

logger = logging.getLogger(__name__)


def _run_replication(replication_id: int, config: RunConfig, problem) -> Trajectory:
    return run_sa2gd(config.for_replication(replication_id), problem)


def run_replications(config: RunConfig, problem, replications: int, workers: Optional[int] = None) -> List[Trajectory]:
    """
    Run independent SA2GD replications 0..K-1 of the same configuration.

    Each replication draws from its own noise path, so the runs share no
    state; the result list is ordered by replication id.
    """
    logger.debug(f"[RUN]   {problem.name}: {replications} replications")
    return parallel_map(partial(_run_replication, config=config, problem=problem), range(replications), workers)
