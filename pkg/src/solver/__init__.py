# SA2GD solver: alternation orders, outer loop, baseline, trajectories
from .alternation import AlternationSpec, Pattern, alternation_order
from .replications import run_replications
from .sa2gd import IterationRecord, RunConfig, run_sa2gd, run_weighted_sum_sgd, sa2gd_iteration
from .trajectory import (AggregatedIterate, AggregationMode, Method, Trajectory, aggregate_iterates,
                         write_trajectory_csv)

__all__ = [
    'AlternationSpec', 'Pattern', 'alternation_order',
    'run_replications',
    'IterationRecord', 'RunConfig', 'run_sa2gd', 'run_weighted_sum_sgd', 'sa2gd_iteration',
    'AggregatedIterate', 'AggregationMode', 'Method', 'Trajectory', 'aggregate_iterates', 'write_trajectory_csv',
]
