import logging
from typing import Callable, Dict, List, Optional

from ..core.config import Config
from ..core.errors import UnknownProblemError
from ..core.regions import Box
from .benchmarks import benchmark_names, benchmark_problem, load_manifest
from .problem import BiObjectiveProblem, Regime, attach_noise, nonsmooth_pair, quadratic_pair

logger = logging.getLogger(__name__)


def _canonical_box() -> Box:
    return Box([-1.0, -1.0], [3.0, 1.0])


SYNTHETIC: Dict[str, Callable[[], BiObjectiveProblem]] = {
    'quad-1d': lambda: quadratic_pair([0.0], [2.0], 1.0, 1.0, Box([-1.0], [3.0]), name='quad-1d'),
    'quad-2d': lambda: quadratic_pair([0.0, 0.0], [2.0, 0.0], 1.0, 1.0, _canonical_box(), name='quad-2d'),
    'nonsmooth-1d': lambda: nonsmooth_pair([0.0], [2.0], 1.0, Box([-1.0], [3.0]), name='nonsmooth-1d'),
    'nonsmooth-2d': lambda: nonsmooth_pair([0.0, 0.0], [2.0, 0.0], 1.0, _canonical_box(), name='nonsmooth-2d'),
}

SYNTHETIC_DESCRIPTIONS = {
    'quad-1d': "(1/2)(x - 0)^2 and (1/2)(x - 2)^2 on [-1, 3]",
    'quad-2d': "(1/2)||x - (0,0)||^2 and (1/2)||x - (2,0)||^2 on [-1,3]x[-1,1]",
    'nonsmooth-1d': "(1/2)(x - p)^2 + |x - p| for p = 0, 2 on [-1, 3]",
    'nonsmooth-2d': "(1/2)||x - p||^2 + ||x - p||_1 for p = (0,0), (2,0) on [-1,3]x[-1,1]",
}


def problem_names() -> List[str]:
    return list(SYNTHETIC) + benchmark_names()


def get_problem(name: str, sigma: float = 0.0) -> BiObjectiveProblem:
    """
    Look up a named problem and attach Gaussian gradient noise of scale sigma.

    Raises:
        UnknownProblemError: name is neither a synthetic instance nor a benchmark
    """
    if name in SYNTHETIC:
        problem = SYNTHETIC[name]()
    elif name in load_manifest().problems:
        problem = benchmark_problem(name)
    else:
        raise UnknownProblemError(name, problem_names())
    return attach_noise(problem, sigma) if sigma else problem


def canonical_problem(regime: Regime, sigma: Optional[float] = None) -> BiObjectiveProblem:
    """
    Instance used by the rate harness for each convex regime.

    p_a = (0, 0), p_b = (2, 0) on [-1, 3] x [-1, 1], so the weighted minimizer
    for λ_* = 3/4 is interior and the diameter stays below 6.
    """
    regime = Regime(regime)
    sigma = Config.DEFAULT_SIGMA if sigma is None else sigma
    name = f"canonical-{regime.value}"
    a, b = [0.0, 0.0], [2.0, 0.0]
    if regime in (Regime.SMOOTH_STRONGLY_CONVEX, Regime.SMOOTH_CONVEX):
        problem = quadratic_pair(a, b, 1.0, 1.0, _canonical_box(), name=name, regime=regime)
    elif regime is Regime.NONSMOOTH_STRONGLY_CONVEX:
        problem = nonsmooth_pair(a, b, 1.0, _canonical_box(), name=name)
    elif regime is Regime.NONSMOOTH_CONVEX:
        problem = nonsmooth_pair(a, b, 0.0, _canonical_box(), name=name)
    else:
        raise UnknownProblemError(name, [r.value for r in Regime if r.has_bounds])
    return attach_noise(problem, sigma)
