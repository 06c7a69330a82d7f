# Bi-objective problem families, benchmarks and their constants
from .benchmarks import BenchmarkManifest, benchmark_names, benchmark_problem, load_manifest
from .constants import ProblemConstants, compute_constants
from .problem import (BenchmarkProblem, BiObjectiveProblem, NonsmoothPair, QuadraticPair, Regime, attach_noise,
                      nonsmooth_pair, quadratic_pair)
from .registry import SYNTHETIC_DESCRIPTIONS, canonical_problem, get_problem, problem_names

__all__ = [
    'BenchmarkManifest', 'benchmark_names', 'benchmark_problem', 'load_manifest',
    'ProblemConstants', 'compute_constants',
    'BenchmarkProblem', 'BiObjectiveProblem', 'NonsmoothPair', 'QuadraticPair', 'Regime', 'attach_noise',
    'nonsmooth_pair', 'quadratic_pair',
    'SYNTHETIC_DESCRIPTIONS', 'canonical_problem', 'get_problem', 'problem_names',
]
