from math import nan
from time import perf_counter
from typing import Any

from .types import Self


class Stopwatch:
    """Stopwatch measures the wall-clock time spent in the `with` body.

    >>> with Stopwatch() as watch:
    ...     _ = sum(i * i for i in range(1000))
    >>> 0.0 <= watch.elapsed < 1.0
    True
    >>> str(Stopwatch())
    'nan s'
    """

    def __init__(self) -> None:
        self.start: float = nan
        self.end: float = nan

    @property
    def elapsed(self) -> float:
        return self.end - self.start

    def __enter__(self: Self) -> Self:
        self.start = perf_counter()
        return self

    def __exit__(self, *_: Any) -> None:
        self.end = perf_counter()

    def __str__(self) -> str:
        return f"{self.elapsed:.3f} s"
