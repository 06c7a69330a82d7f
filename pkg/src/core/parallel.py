import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config import Config

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Map fn over items, in a process pool when more than one worker is configured.

    Results come back in input order either way, so callers merge by index and
    sequential and parallel runs produce identical output. fn and the items
    must be picklable when workers > 1.
    """
    items = list(items)
    workers = Config.WORKERS if workers is None else max(1, int(workers))
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"Dispatching {len(items)} tasks to {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
