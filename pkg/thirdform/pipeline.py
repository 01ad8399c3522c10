import logging
from math import inf

from .errors import CheckFailed, GeometryError
from .model import CheckRecord, Record
from .options import RunOptions
from .task import Task, TaskRuntime
from .tools.timing import Stopwatch


class Pipeline:
    def __init__(
        self,
        tasks: list[Task],
        options: RunOptions = RunOptions(),
        name: str = "",
    ) -> None:
        self.name: str = name
        self.logger: logging.Logger = logging.getLogger(f"{name}.Pipeline" if name else "Pipeline")
        self.tasks: list[Task] = tasks
        self.options: RunOptions = options

        # Update task loggers
        if self.name:
            for task in self.tasks:
                task.logger = logging.getLogger(f"{name}.Task.{task.name}")

    def run(self) -> list[Record]:
        """run executes all tasks in order and returns the records they produced.

        A GeometryError escaping a task is turned into a failed "task-error" record.
        Raises CheckFailed (with the records attached) if any record did not pass.
        With options.fail_fast, no more tasks are started after the first failure.
        """
        runtime = TaskRuntime.seeded(self.options)
        failed_tasks: list[str] = []

        for task in self.tasks:
            self.logger.info(f"Executing task {task.name}")
            failed_before = len(runtime.failed_records())
            records_before = len(runtime.records)
            with Stopwatch() as watch:
                try:
                    task.execute(runtime)
                except GeometryError as e:
                    self.logger.error(f"Task {task.name} raised {type(e).__name__}: {e}")
                    runtime.records.append(
                        CheckRecord("task-error", task.name, inf, 0.0, details={"error": str(e)})
                    )
            self.logger.debug(
                f"Task {task.name} finished in {watch}, "
                f"{len(runtime.records) - records_before} record(s)"
            )

            if len(runtime.failed_records()) > failed_before:
                failed_tasks.append(task.name)
                if self.options.fail_fast:
                    self.logger.error(f"Task {task.name} failed, stopping")
                    break

        if failed_tasks:
            raise CheckFailed(failed_tasks, runtime.records)

        self.logger.info("All tasks finished")
        return runtime.records
