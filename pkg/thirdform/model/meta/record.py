import math
from typing import Mapping, Protocol, Sequence, TypeVar, Union

from typing_extensions import LiteralString

JSONValue = Union[None, bool, int, float, str, Sequence["JSONValue"], Mapping[str, "JSONValue"]]
CSVValue = Union[None, bool, int, float, str]

RecordT = TypeVar("RecordT", bound="Record")


class Record(Protocol):
    """Record is a protocol for marshalling results into report entries.
    Every report record defined in the model implements this protocol.
    """

    @staticmethod
    def record_kind() -> LiteralString:
        """record_kind returns the value of the "kind" field of the JSON representation."""
        ...

    @property
    def passed(self) -> bool:
        """passed is True iff the check behind this record met its thresholds."""
        ...

    def as_json(self) -> dict[str, JSONValue]:
        """as_json converts the record into a JSON-compatible mapping.
        The "kind" key is added by the report writer."""
        ...

    def csv_row(self) -> dict[str, CSVValue]:
        """csv_row converts the record into a flat row. All records of a single kind
        must return rows with identical keys in identical order."""
        ...


def json_float(x: float) -> float | None:
    """json_float maps non-finite floats to None, as JSON has no representation for them,
    and rounds everything else to 12 significant digits for stable reports.

    >>> json_float(0.1 + 0.2)
    0.3
    >>> json_float(float("inf")) is None
    True
    """
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def json_floats(xs: Sequence[float]) -> list[float | None]:
    """
    >>> json_floats([1, 2.5])
    [1.0, 2.5]
    """
    return [json_float(x) for x in xs]
