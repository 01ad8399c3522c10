from typing import TYPE_CHECKING, Iterable, Optional, TypeVar

if TYPE_CHECKING:
    from .model import Record

_T = TypeVar("_T")


class GeometryError(ValueError):
    """GeometryError represents any error related to incorrect input data
    or a numerically unusable configuration (a point outside of a chart,
    a degenerate form, too few samples).

    The main point of GeometryErrors is that they may be caught
    and any batch process may continue with the next item. Thus, any function
    raising GeometryError must not leave shared state in an undefined state.
    """

    pass


class OutOfDomain(GeometryError):
    def __init__(self, surface: str, u: float, v: float) -> None:
        self.surface = surface
        self.u = u
        self.v = v
        super().__init__(f"Point ({u:.6g}, {v:.6g}) lies outside of the domain of {surface}")


class DegenerateImmersion(GeometryError):
    def __init__(self, where: str) -> None:
        self.where = where
        super().__init__(f"Surface is not immersive {where}: x_u × x_v ≈ 0")


class SingularMetric(GeometryError):
    def __init__(self, det: float) -> None:
        self.det = det
        super().__init__(f"First fundamental form is singular (det = {det:.3g})")


class SingularForm(GeometryError):
    def __init__(self, det: float, what: str = "form") -> None:
        self.det = det
        super().__init__(f"Degenerate {what} (det = {det:.3g}); parabolic point?")


class StencilOutsideDomain(GeometryError):
    def __init__(self, surface: str, u: float, v: float, h: float) -> None:
        self.surface = surface
        super().__init__(
            f"Finite-difference stencil of step {h:.3g} around ({u:.6g}, {v:.6g}) "
            f"leaves the domain of {surface}"
        )


class InsufficientSamples(GeometryError):
    def __init__(self, surface: str, got: int, needed: int) -> None:
        self.surface = surface
        self.got = got
        self.needed = needed
        super().__init__(
            f"Only {got} sample point(s) of {surface} survived the guards, need at least {needed}"
        )


class RankDeficient(GeometryError):
    def __init__(self, rank: int, needed: int) -> None:
        self.rank = rank
        self.needed = needed
        super().__init__(
            f"Least-squares design matrix has rank {rank}, need {needed} "
            "(degenerate sampling?)"
        )


class NormalizationViolated(GeometryError):
    def __init__(self, what: str, s: float, deviation: float) -> None:
        self.what = what
        self.s = s
        self.deviation = deviation
        super().__init__(
            f"Curve pair violates {what} at s = {s:.6g} (deviation {deviation:.3g})"
        )


class IllConditionedVandermonde(GeometryError):
    def __init__(self, condition: float) -> None:
        self.condition = condition
        super().__init__(f"Vandermonde system is ill-conditioned (cond = {condition:.3g})")


class DomainViolation(GeometryError):
    def __init__(self, what: str) -> None:
        super().__init__(what)


class MultipleGeometryErrors(GeometryError):
    """MultipleGeometryErrors is raised when a batch process encounters
    a non-zero amount of GeometryErrors.

    For most use cases the catch_all helper can be used to catch any GeometryErrors
    that might be encountered.
    """

    def __init__(self, when: str, errors: list[GeometryError]) -> None:
        self.errors = errors
        super().__init__(
            f"{len(errors)} error(s) encountered during {when}:\n    "
            + "\n    ".join(err.args[0] for err in errors)
        )

    @classmethod
    def catch_all(cls, context: str, may_raise_geometry_error: Iterable[_T]) -> list[_T]:
        """catch_all takes an iterable that may raise GeometryError when retrieving
        the next item; and catches all the GeometryErrors to raise a single
        MultipleGeometryErrors once the iterable is exhausted.

        If no GeometryErrors were thrown, returns all non-None items.
        Any other Exception is passed through to the caller.

        Note that `may_raise_geometry_error` must not be a generator expression,
        and should usually be a `map` object. Generator expressions stop at the
        first raised exception.

        >>> def invert(x: float) -> float:
        ...    if x == 0:
        ...        raise SingularMetric(x)
        ...    return 1 / x
        >>> MultipleGeometryErrors.catch_all("inversion", map(invert, [1, 2, 4]))
        [1.0, 0.5, 0.25]
        >>> MultipleGeometryErrors.catch_all("inversion", map(invert, [1, 0, 0]))
        Traceback (most recent call last):
        ...
        thirdform.errors.MultipleGeometryErrors: 2 error(s) encountered during inversion:
            First fundamental form is singular (det = 0)
            First fundamental form is singular (det = 0)
        """
        it = iter(may_raise_geometry_error)
        errors: list[GeometryError] = []
        elements: list[_T] = []
        done: bool = False

        while not done:
            try:
                element = next(it)
                if element is not None:
                    elements.append(element)
            except StopIteration:
                done = True
            except GeometryError as e:
                errors.append(e)

        if errors:
            raise MultipleGeometryErrors(context, errors)

        return elements


class ConfigError(ValueError):
    """ConfigError is raised on an invalid run configuration or surface config file.
    The command-line interface maps it to exit code 2."""

    pass


class CheckFailed(Exception):
    """CheckFailed is raised by the Pipeline once all tasks ran,
    if at least one of the checks did not pass.
    The command-line interface maps it to exit code 1."""

    def __init__(self, failed: list[str], records: Optional[list["Record"]] = None) -> None:
        self.failed = failed
        self.records = records or []
        super().__init__(f"{len(failed)} check(s) failed: {', '.join(failed)}")
