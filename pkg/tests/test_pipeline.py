from typing import Optional, final
from unittest import TestCase

from thirdform import Pipeline, RunOptions, Task, TaskRuntime
from thirdform.errors import CheckFailed, DegenerateImmersion
from thirdform.model import CheckRecord


@final
class DummyTask(Task):
    def __init__(self, name: Optional[str] = None, value: float = 0.0) -> None:
        super().__init__(name)
        self.executed_count = 0
        self.value = value

    def execute(self, r: TaskRuntime) -> None:
        self.executed_count += 1
        self.report(r, CheckRecord("dummy", self.name, self.value, 1.0))


@final
class RaisingTask(Task):
    def execute(self, r: TaskRuntime) -> None:
        raise DegenerateImmersion("at (0, 0) of cone")


class TestPipeline(TestCase):
    def test_executes_tasks(self) -> None:
        t1 = DummyTask("DummyTask1")
        t2 = DummyTask("DummyTask2")
        p = Pipeline([t1, t2])
        records = p.run()

        self.assertEqual(t1.executed_count, 1)
        self.assertEqual(t2.executed_count, 1)
        self.assertEqual(len(records), 2)

    def test_renames_task_loggers(self) -> None:
        foo = DummyTask("Foo")
        bar = DummyTask("Bar")

        p = Pipeline(tasks=[foo, bar])
        self.assertEqual(p.name, "")
        self.assertEqual(p.logger.name, "Pipeline")
        self.assertEqual(foo.name, "Foo")
        self.assertEqual(foo.logger.name, "Task.Foo")
        self.assertEqual(bar.name, "Bar")
        self.assertEqual(bar.logger.name, "Task.Bar")

        p = Pipeline(tasks=[foo, bar], name="Eggs")
        self.assertEqual(p.name, "Eggs")
        self.assertEqual(p.logger.name, "Eggs.Pipeline")
        self.assertEqual(foo.name, "Foo")
        self.assertEqual(foo.logger.name, "Eggs.Task.Foo")
        self.assertEqual(bar.name, "Bar")
        self.assertEqual(bar.logger.name, "Eggs.Task.Bar")

    def test_runtime_is_seeded(self) -> None:
        draws: list[float] = []

        @final
        class DrawingTask(Task):
            def execute(self, r: TaskRuntime) -> None:
                draws.append(float(r.rng.random()))

        Pipeline([DrawingTask()], RunOptions(seed=7)).run()
        Pipeline([DrawingTask()], RunOptions(seed=7)).run()
        Pipeline([DrawingTask()], RunOptions(seed=8)).run()

        self.assertEqual(draws[0], draws[1])
        self.assertNotEqual(draws[0], draws[2])

    def test_raises_check_failed(self) -> None:
        t1 = DummyTask("Bad", 5.0)
        t2 = DummyTask("Good")
        p = Pipeline([t1, t2])

        with self.assertRaises(CheckFailed) as ctx:
            p.run()

        self.assertEqual(ctx.exception.failed, ["Bad"])
        self.assertEqual(len(ctx.exception.records), 2)
        self.assertEqual(t2.executed_count, 1)

    def test_fail_fast(self) -> None:
        t1 = DummyTask("Bad", 5.0)
        t2 = DummyTask("Good")
        p = Pipeline([t1, t2], RunOptions(fail_fast=True))

        with self.assertRaises(CheckFailed) as ctx:
            p.run()

        self.assertEqual(len(ctx.exception.records), 1)
        self.assertEqual(t2.executed_count, 0)

    def test_geometry_error_becomes_record(self) -> None:
        t = DummyTask("After")
        p = Pipeline([RaisingTask(), t])

        with self.assertLogs("Pipeline", "ERROR"):
            with self.assertRaises(CheckFailed) as ctx:
                p.run()

        error, after = ctx.exception.records
        assert isinstance(error, CheckRecord)
        self.assertEqual(error.check, "task-error")
        self.assertEqual(error.surface, "RaisingTask")
        self.assertFalse(error.passed)
        self.assertIn("cone", str(error.details["error"]))
        self.assertTrue(after.passed)
        self.assertEqual(t.executed_count, 1)
