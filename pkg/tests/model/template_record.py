import json
import re
import unittest
from abc import ABC, abstractmethod

from thirdform.model import Record

RECORD_KIND_REGEX = re.compile(r"^[a-z][a-z_-]*[a-z]$")
CSV_COLUMN_REGEX = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class AbstractTestRecord:
    # NOTE: Nested classes are necessary to prevent abstract test cases
    #       from being discovered and run.
    #       See https://stackoverflow.com/a/50176291.

    class Template(ABC, unittest.TestCase):
        @abstractmethod
        def get_record(self) -> Record:
            raise NotImplementedError

        def test_record_kind(self) -> None:
            self.assertRegex(self.get_record().record_kind(), RECORD_KIND_REGEX)

        def test_as_json_is_serializable(self) -> None:
            data = self.get_record().as_json()
            self.assertNotIn("kind", data)
            json.dumps(data, allow_nan=False)

        def test_passed_is_reported(self) -> None:
            record = self.get_record()
            self.assertIs(record.as_json()["passed"], record.passed)
            self.assertIs(record.csv_row()["passed"], record.passed)

        def test_csv_row(self) -> None:
            row = self.get_record().csv_row()
            self.assertNotIn("kind", row)
            for key, value in row.items():
                self.assertRegex(key, CSV_COLUMN_REGEX)
                self.assertIsInstance(value, (type(None), bool, int, float, str))

        def test_csv_columns_are_stable(self) -> None:
            self.assertListEqual(
                list(self.get_record().csv_row()),
                list(self.get_record().csv_row()),
            )
