import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

class Config:
    # Output Configuration
    OUTPUT_DIR = os.getenv('SA2GD_OUTPUT_DIR', 'results')

    # Logging
    LOG_LEVEL = os.getenv('SA2GD_LOG_LEVEL', 'INFO').upper()

    # Execution
    WORKERS = int(os.getenv('SA2GD_WORKERS', 1))  # 1 = run replications/cells in-process
    MASTER_SEED = int(os.getenv('SA2GD_MASTER_SEED', 20240101))

    # Noise Model
    DEFAULT_SIGMA = float(os.getenv('SA2GD_DEFAULT_SIGMA', 0.1))

    # Numerical Tolerances
    IVT_BISECTION_XTOL = float(os.getenv('SA2GD_IVT_XTOL', 1e-14))
    IVT_RESIDUAL_TOL = float(os.getenv('SA2GD_IVT_TOL', 1e-9))
    FINITE_DIFF_STEP = float(os.getenv('SA2GD_FD_STEP', 1e-6))
    MEMBERSHIP_TOL = 1e-12

    # Rate Harness
    STAT_SLACK_SE = float(os.getenv('SA2GD_STAT_SLACK_SE', 3.0))  # standard errors of slack on bound checks

    # Progress logging cadence (iterations between [RUN] progress lines)
    PROGRESS_EVERY = int(os.getenv('SA2GD_PROGRESS_EVERY', 0))  # 0 disables progress lines

    @classmethod
    def set_output_dir(cls, path: str):
        """Set the default output directory dynamically"""
        cls.OUTPUT_DIR = path.strip()

    @classmethod
    def set_workers(cls, workers: int):
        """Set the process-pool width used for replications and sweep cells"""
        cls.WORKERS = max(1, int(workers))

    @classmethod
    def validate(cls):
        """Validate that the loaded configuration is usable"""
        problems = []
        if not cls.OUTPUT_DIR:
            problems.append('SA2GD_OUTPUT_DIR is empty')
        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            problems.append(f'SA2GD_LOG_LEVEL={cls.LOG_LEVEL!r} is not a logging level')
        if cls.WORKERS < 1:
            problems.append('SA2GD_WORKERS must be at least 1')
        if cls.DEFAULT_SIGMA < 0:
            problems.append('SA2GD_DEFAULT_SIGMA must be nonnegative')
        if cls.IVT_BISECTION_XTOL <= 0 or cls.IVT_RESIDUAL_TOL < 0:
            problems.append('IVT tolerances must be positive')
        if cls.STAT_SLACK_SE < 0:
            problems.append('SA2GD_STAT_SLACK_SE must be nonnegative')

        if problems:
            raise ValueError(f"Invalid configuration: {', '.join(problems)}")

        return True
