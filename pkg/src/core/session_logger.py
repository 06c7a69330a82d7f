import logging

from .config import Config

logger = logging.getLogger(__name__)


class RunSessionLogger:
    def __init__(self, problem, method, n_a, n_b, replication_id=0):
        self.problem = problem
        self.method = method
        self.n_a = n_a
        self.n_b = n_b
        self.replication_id = replication_id

    def _tag(self):
        return f"{self.problem} | {self.method} | n_a={self.n_a} n_b={self.n_b} | rep={self.replication_id}"

    def log_start(self, T, schedule):
        logger.debug(f"[RUN]   {self._tag()} | T={T} | schedule={schedule.describe()}")

    def log_progress(self, t, s_value):
        every = Config.PROGRESS_EVERY
        if every and t % every == 0:
            logger.info(f"[RUN]   {self._tag()} | t={t} | S={s_value:.6g}")

    def log_finish(self, f_a, f_b, s_value):
        logger.debug(f"[DONE]  {self._tag()} | f_a={f_a:.6g} f_b={f_b:.6g} S={s_value:.6g}")

    def log_failure(self, error):
        logger.error(f"[FAIL]  {self._tag()} | {error}")
