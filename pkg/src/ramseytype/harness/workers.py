"""Progress bars and the worker pool shared by the harness runs.

Results always come back in task order, so a run with several workers
produces the same output as a run with one.
"""

import logging
from multiprocessing import Pool
from typing import Any, Callable, Iterable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

BAR_FORMAT = "{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})"


def pbar(it: Iterable[T], total: Optional[int] = None, desc: Optional[str] = None,
         verbose: bool = False) -> Iterable[T]:
    """Wrap it in a tqdm bar on stderr when verbose."""
    if verbose:
        return tqdm(it, total=total, desc=desc, ncols=80, leave=True, bar_format=BAR_FORMAT)
    return it


def apply_pool(func: Callable[[T], R], tasks: Sequence[T], jobs: int = 1,
               progress: bool = False, desc: Optional[str] = None) -> List[R]:
    """Apply func to every task, in order, on up to jobs processes.

    Args:
        func: A module-level function, so it pickles
        tasks: The arguments, one per call
        jobs: Worker processes; 1 runs in this process
        progress: Show a progress bar
        desc: Progress bar label

    Returns:
        func(task) for every task, in task order
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [func(task) for task in pbar(tasks, len(tasks), desc, progress)]
    chunksize = max(1, len(tasks) // (jobs * 8))
    logger.info("%s: %d task(s) on %d worker(s), chunks of %d",
                desc or "pool", len(tasks), jobs, chunksize)
    with Pool(processes=jobs) as pool:
        results: Iterable[Any] = pool.imap(func, tasks, chunksize=chunksize)
        return list(pbar(results, len(tasks), desc, progress))
