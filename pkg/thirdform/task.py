import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .model import Record
from .options import RunOptions


@dataclass
class TaskRuntime:
    """TaskRuntime is the argument passed to Task.execute,
    with the runtime environment for the task to act upon.
    """

    options: RunOptions
    rng: np.random.Generator
    records: list[Record] = field(default_factory=list[Record])

    @classmethod
    def seeded(cls, options: RunOptions) -> "TaskRuntime":
        """seeded creates a runtime whose random generator is seeded with options.seed."""
        return cls(options, np.random.default_rng(options.seed))

    def failed_records(self) -> list[Record]:
        return [r for r in self.records if not r.passed]


class Task(ABC):
    """Task is the fundamental block of a Pipeline,
    responsible for running a single check and appending its records to the runtime.
    """

    name: str
    logger: logging.Logger

    def __init__(self, name: Optional[str] = None) -> None:
        self.name = name or type(self).__name__
        self.logger = logging.getLogger(f"Task.{self.name}")

    @abstractmethod
    def execute(self, r: TaskRuntime) -> None:
        """execute runs the check in the runtime environment.

        Tasks are run in a single thread, but execute may be called multiple times
        with different runtimes. Any execute-related state should be
        reset on entry to execute.
        """
        raise NotImplementedError

    def report(self, r: TaskRuntime, record: Record) -> None:
        """report appends a record to the runtime and logs its outcome."""
        r.records.append(record)
        if record.passed:
            self.logger.debug("%s record passed", record.record_kind())
        else:
            self.logger.warning("%s record failed: %s", record.record_kind(), record.as_json())
