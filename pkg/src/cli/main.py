"""
Command-line front end: solve, sweep, rate, ivt-check and problems list.

Exit codes: 0 success, 1 numeric failure, 2 bad input, 3 failed check.
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..core.config import Config
from ..core.errors import InvalidInputError, NumericError
from .commands import ExitCode, cmd_ivt_check, cmd_problems_list, cmd_rate, cmd_solve, cmd_sweep
from .configs import IvtConfig, RateConfig, SolveConfig, SweepConfig, load_config

logger = logging.getLogger(__name__)


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--config', help='JSON file with command settings (flags take precedence)')
    parser.add_argument('--seed', type=int, help='master seed')
    parser.add_argument('--out', help=f'output directory (default: $SA2GD_OUTPUT_DIR or {Config.OUTPUT_DIR})')
    parser.add_argument('--workers', type=int, help='worker processes for replications and sweep cells')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='sa2gd', description='Stochastic alternating bi-objective gradient descent')
    parser.add_argument('--log-level', default=None, help='logging level (default: $SA2GD_LOG_LEVEL or INFO)')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='run SA2GD once and write its trajectory')
    solve.add_argument('--problem', help='named problem, see "problems list"')
    solve.add_argument('--na', dest='n_a', type=int, help='steps on f_a per iteration')
    solve.add_argument('--nb', dest='n_b', type=int, help='steps on f_b per iteration')
    solve.add_argument('--T', dest='T', type=int, help='outer iterations')
    solve.add_argument('--schedule', help='sc-decay[:c], inverse-t:<gamma>, sqrt[:<alpha_bar>] or fixed:<alpha>')
    solve.add_argument('--pattern', choices=['block', 'interleaved', 'random'])
    solve.add_argument('--sigma', type=float, help='Gaussian gradient noise scale')
    solve.add_argument('--replication', type=int, help='replication id (selects start point and noise)')
    _add_common(solve)

    sweep = commands.add_parser('sweep', help='effort sweep over n_a = 0..n_total and the weighted-sum baseline')
    sweep.add_argument('--problem')
    sweep.add_argument('--n-total', dest='n_total', type=int)
    sweep.add_argument('--T', dest='T', type=int)
    sweep.add_argument('--step', help='step-size schedule, e.g. fixed:1e-3')
    sweep.add_argument('--method', choices=['sa2gd', 'weighted-sum', 'both'])
    sweep.add_argument('--pattern', choices=['block', 'interleaved', 'random'])
    sweep.add_argument('--sigma', type=float)
    sweep.add_argument('--replications', type=int, help='runs per cell')
    _add_common(sweep)

    rate = commands.add_parser('rate', help='measure the optimality-gap rate against the theoretical bound')
    rate.add_argument('--regime', choices=['smooth-sc', 'nonsmooth-sc', 'smooth-convex', 'nonsmooth-convex'])
    rate.add_argument('--na', dest='n_a', type=int)
    rate.add_argument('--nb', dest='n_b', type=int)
    rate.add_argument('--sigma', type=float)
    rate.add_argument('--horizons', type=int, nargs='+')
    rate.add_argument('--replications', type=int)
    rate.add_argument('--alpha-bar', dest='alpha_bar', type=float, help='constant of the sqrt schedule')
    rate.add_argument('--pattern', choices=['block', 'interleaved', 'random'])
    _add_common(rate)

    ivt = commands.add_parser('ivt-check', help='randomized mean-value witness campaign')
    ivt.add_argument('--instances', type=int)
    ivt.add_argument('--max-points', dest='max_points', type=int)
    ivt.add_argument('--max-dim', dest='max_dim', type=int)
    ivt.add_argument('--degree', type=int)
    ivt.add_argument('--tol', type=float, help='residual tolerance, scaled by 1 + |sum of phi|')
    _add_common(ivt)

    problems = commands.add_parser('problems', help='inspect the problem registry')
    problems.add_argument('action', choices=['list'])

    return parser


COMMANDS = {
    'solve': (SolveConfig, cmd_solve),
    'sweep': (SweepConfig, cmd_sweep),
    'rate': (RateConfig, cmd_rate),
    'ivt-check': (IvtConfig, cmd_ivt_check),
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else int(ExitCode.OK)

    level = (args.log_level or Config.LOG_LEVEL).upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO),
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        Config.validate()
        if args.command == 'problems':
            return int(cmd_problems_list())

        model, command = COMMANDS[args.command]
        overrides = {k: v for k, v in vars(args).items() if k not in ('command', 'config', 'log_level')}
        config = load_config(model, args.config, overrides)
        logger.debug(f"[CMD]   {args.command}: {config.model_dump_json()}")
        return int(command(config))
    except NumericError as e:
        logger.error(f"❌ Numeric failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.NUMERIC_ERROR)
    except (InvalidInputError, ValueError) as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.BAD_INPUT)
