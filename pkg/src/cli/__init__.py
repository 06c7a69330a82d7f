# Command-line front end
from .commands import ExitCode
from .configs import IvtConfig, RateConfig, SolveConfig, SweepConfig, load_config
from .main import build_parser, main

__all__ = ['ExitCode', 'IvtConfig', 'RateConfig', 'SolveConfig', 'SweepConfig', 'load_config', 'build_parser', 'main']
