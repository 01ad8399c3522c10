from typing import ClassVar, cast
from unittest import TestCase

from thirdform import RunOptions, TaskRuntime
from thirdform.model import CheckRecord, Record


class AbstractTestTask:
    # NOTE: Nested classes are necessary to prevent abstract test cases
    #       from being discovered and run.
    #       See https://stackoverflow.com/a/50176291.

    class Template(TestCase):
        options: ClassVar[RunOptions] = RunOptions()

        runtime: TaskRuntime

        def setUp(self) -> None:
            super().setUp()
            self.runtime = TaskRuntime.seeded(self.options)

        def records(self, kind: str) -> list[Record]:
            return [r for r in self.runtime.records if r.record_kind() == kind]

        def checks(self, check: str) -> list[CheckRecord]:
            return [
                cast(CheckRecord, r)
                for r in self.records("check")
                if cast(CheckRecord, r).check == check
            ]

        def assertAllPassed(self) -> None:
            self.assertGreater(len(self.runtime.records), 0)
            for record in self.runtime.records:
                with self.subTest(record=record.as_json()):
                    self.assertTrue(record.passed)
