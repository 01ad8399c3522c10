import logging
import os
import sys
from abc import ABC, abstractmethod
from argparse import SUPPRESS, ArgumentParser, ArgumentTypeError, Namespace
from contextlib import nullcontext
from typing import IO, Any, Mapping, Optional, final

from .errors import CheckFailed, ConfigError
from .model import Quadric1Params, Quadric2Params, Record, VerdictKind
from .options import RunOptions, Tolerances
from .pipeline import Pipeline
from .quadrics import default_quadric_families
from .report import write_report
from .ruled import RuledSurface
from .surfaces import SurfacePatch
from .surfaces.config import FAMILIES, build_surface, load_surface
from .tasks import FitLambda, QuadricTable, RuledCoefficients, surface_checks, verification_suite
from .tools.logs import initialize as initialize_logging

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2

CRITERIA = range(1, 11)

logger = logging.getLogger("App")


def parse_grid(value: str) -> tuple[int, int]:
    """parse_grid parses the `NxM` grid specification.

    >>> parse_grid("6x8")
    (6, 8)
    >>> parse_grid("6")
    Traceback (most recent call last):
    ...
    argparse.ArgumentTypeError: grid must look like NxM, got '6'
    """
    try:
        n_u, n_v = value.lower().split("x")
        return int(n_u), int(n_v)
    except ValueError:
        raise ArgumentTypeError(f"grid must look like NxM, got {value!r}") from None


class App(ABC):
    """App is a command-line frontend which turns its arguments into a Pipeline,
    runs it and writes the produced records onto the report stream.

    run returns the process exit code: 0 if all checks passed,
    1 if any check failed and 2 on configuration errors.
    """

    def __init__(
        self,
        name: str,
        stdout: Optional[IO[str]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> None:
        self.name = name
        self.stdout = stdout
        self.environ = environ

    @abstractmethod
    def prepare(self, args: Namespace, options: RunOptions) -> Pipeline:
        raise NotImplementedError

    def add_arguments(self, parser: ArgumentParser) -> None:
        pass  # Default to no extra arguments

    def command_name(self, args: Namespace) -> str:
        return self.name

    @final
    def _get_common_options_parser(self, with_defaults: bool = True) -> ArgumentParser:
        """_get_common_options_parser returns a parent parser with the options shared by
        every command. Subcommand parsers use it `with_defaults=False`, so that
        their defaults don't override options given before the subcommand."""
        argument_default = None if with_defaults else SUPPRESS
        parser = ArgumentParser(add_help=False, argument_default=argument_default)
        parser.add_argument(
            "--grid",
            type=parse_grid,
            help="number of sample points along u and v (default: 6x6)",
        )
        parser.add_argument("--eps-k", type=float, help="parabolic point guard on |K|")
        parser.add_argument("--eps-q", type=float, help="ruled surface guard on q(t)")
        parser.add_argument("--tau", type=float, help="classification threshold")
        parser.add_argument("--fd-step", type=float, help="finite-difference step")
        parser.add_argument("--seed", type=int, help="seed of randomized checks")
        parser.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit the generated_at field from JSON reports",
        )
        parser.add_argument(
            "--expect",
            choices=[k.value for k in VerdictKind],
            help="pass fit checks iff the verdict equals this one",
        )
        parser.add_argument(
            "--format",
            choices=["json", "csv", "text"],
            help="report format (default: json)",
        )
        parser.add_argument("-o", "--output", help="write the report to a file instead of stdout")
        parser.add_argument("--workers", type=int, help="sample evaluation threads")
        parser.add_argument(
            "--fail-fast",
            action="store_true",
            help="stop after the first failed check",
        )
        parser.add_argument(
            "-v",
            "--verbose",
            action="store_true",
            help="show DEBUG logging messages",
        )
        if with_defaults:
            parser.set_defaults(grid=(6, 6), seed=0, format="json", workers=1)
        return parser

    @final
    def _get_arg_parser_with_default_options(self) -> ArgumentParser:
        parser = ArgumentParser(prog=self.name, parents=[self._get_common_options_parser()])
        return parser

    def _options(self, args: Namespace) -> RunOptions:
        tolerances = Tolerances.from_env(self.environ).with_overrides(
            eps_K=args.eps_k,
            eps_q=args.eps_q,
            tau=args.tau,
            fd_step=args.fd_step,
        )
        return RunOptions(
            tolerances=tolerances,
            grid=args.grid,
            output=args.format,
            seed=args.seed,
            expect=args.expect,
            timestamp=not args.no_timestamp,
            workers=args.workers,
            fail_fast=args.fail_fast,
        )

    @final
    def _parse_args(self, args_str: Optional[list[str]] = None) -> Namespace:
        parser = self._get_arg_parser_with_default_options()
        self.add_arguments(parser)
        return parser.parse_args(args_str)

    @final
    def run(self, args_str: Optional[list[str]] = None) -> int:
        args = self._parse_args(args_str)
        initialize_logging(verbose=args.verbose)

        try:
            options = self._options(args)
            pipeline = self.prepare(args, options)
        except ConfigError as e:
            logger.error("%s", e)
            return EXIT_CONFIG_ERROR

        try:
            records = pipeline.run()
            exit_code = EXIT_OK
        except CheckFailed as e:
            logger.error("%s", e)
            records = e.records
            exit_code = EXIT_CHECK_FAILED

        try:
            self._write(args, options, records)
        except OSError as e:
            logger.error("Failed to write the report to %s: %s", args.output, e.strerror)
            return EXIT_CONFIG_ERROR
        return exit_code

    def _write(self, args: Namespace, options: RunOptions, records: list[Record]) -> None:
        if args.output:
            target: Any = open(args.output, "w", encoding="utf-8", newline="")
        else:
            target = nullcontext(self.stdout or sys.stdout)

        with target as out:
            write_report(records, self.command_name(args), options.output, out, options.timestamp)


@final
class ThirdFormApp(App):
    """ThirdFormApp is the `thirdform` command-line interface with the subcommands
    check, fit-lambda, verify-paper, quadric-table and ruled-coeffs."""

    def __init__(
        self,
        stdout: Optional[IO[str]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> None:
        super().__init__("thirdform", stdout, environ)

    def command_name(self, args: Namespace) -> str:
        return args.command

    def add_arguments(self, parser: ArgumentParser) -> None:
        common = self._get_common_options_parser(with_defaults=False)
        surface = self._get_surface_options_parser()
        commands = parser.add_subparsers(dest="command", required=True)

        commands.add_parser(
            "check",
            parents=[common, surface],
            help="fit Λ and run the pointwise identities on a single surface",
        )

        fit = commands.add_parser(
            "fit-lambda",
            parents=[common, surface],
            help="fit Δx = Λx on a single surface",
        )
        fit.add_argument("--mode", choices=["strict", "affine"], default="strict")
        fit.add_argument("--form", choices=["I", "II", "III"], default="III")

        verify = commands.add_parser(
            "verify-paper",
            parents=[common],
            help="run the full classification verification suite",
        )
        verify.add_argument("--all", action="store_true", help="run every criterion (default)")
        verify.add_argument(
            "--criterion",
            type=int,
            action="append",
            choices=CRITERIA,
            help="run only the given criterion; may be repeated",
        )

        table = commands.add_parser(
            "quadric-table",
            parents=[common],
            help="classify quadrics of the first and second kind",
        )
        table.add_argument("--kind", choices=["I", "II", "both"], default="both")
        table.add_argument(
            "--c",
            type=float,
            action="append",
            dest="c_values",
            help="c of kind-I quadrics; may be repeated (default: 1)",
        )

        coeffs = commands.add_parser(
            "ruled-coeffs",
            parents=[common, surface],
            help="compare closed-form and probed operator coefficients of a ruled surface",
        )
        coeffs.add_argument("--s", type=float, nargs="+", help="values of s to probe at")

    @staticmethod
    def _get_surface_options_parser() -> ArgumentParser:
        parser = ArgumentParser(add_help=False)
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--surface", choices=sorted(FAMILIES), help="catalog surface family")
        source.add_argument("--config", help="YAML or JSON surface config file")
        parser.add_argument("--radius", type=float)
        parser.add_argument("--center", type=float, nargs=3, metavar=("X", "Y", "Z"))
        parser.add_argument("--a", type=float)
        parser.add_argument("--b", type=float)
        parser.add_argument("--c", type=float)
        parser.add_argument("--c5", type=float)
        parser.add_argument("--lam", type=float)
        parser.add_argument("--theta", type=float)
        parser.add_argument(
            "--pair",
            choices=["helicoid", "spherical", "loxodrome"],
            help="curve pair of the ruled family (default: helicoid)",
        )
        return parser

    def prepare(self, args: Namespace, options: RunOptions) -> Pipeline:
        if args.command == "check":
            return Pipeline(surface_checks(self.surface(args)), options, "check")
        elif args.command == "fit-lambda":
            task = FitLambda(self.surface(args), mode=args.mode, form=args.form)
            return Pipeline([task], options, "fit-lambda")
        elif args.command == "verify-paper":
            include = None if args.all or not args.criterion else set(args.criterion)
            return Pipeline(verification_suite(include), options, "verify-paper")
        elif args.command == "quadric-table":
            families = default_quadric_families(args.c_values)
            if args.kind == "I":
                families = [p for p in families if isinstance(p, Quadric1Params)]
            elif args.kind == "II":
                families = [p for p in families if isinstance(p, Quadric2Params)]
            return Pipeline([QuadricTable(families)], options, "quadric-table")
        else:
            surface = self.surface(args, default_family="ruled")
            if not isinstance(surface, RuledSurface):
                raise ConfigError(f"ruled-coeffs needs a ruled surface, got {surface.name}")
            return Pipeline([RuledCoefficients(surface, args.s)], options, "ruled-coeffs")

    def surface(self, args: Namespace, default_family: Optional[str] = None) -> SurfacePatch:
        if args.config:
            return load_surface(args.config)
        family = args.surface or default_family
        if family is None:
            raise ConfigError("either --surface or --config is required")
        return build_surface(family, surface_params(family, args))


def surface_params(family: str, args: Namespace) -> dict[str, Any]:
    """surface_params picks the constructor parameters of a family
    from the command-line flags which were given."""
    if family == "ruled":
        pair = args.pair or "helicoid"
        if pair == "helicoid":
            candidates: dict[str, Any] = {"c5": args.c5, "lam": args.lam}
        elif pair == "loxodrome":
            candidates = {"theta0": args.theta, "c": args.c}
        else:
            candidates = {"theta": args.theta, "lam0": args.lam}
        return {"pair": pair, **{k: v for k, v in candidates.items() if v is not None}}

    candidates = {
        "sphere": {"r": args.radius, "center": args.center},
        "plane": {},
        "cylinder": {"r": args.radius},
        "helicoid": {"c5": args.c5, "lam": args.lam},
        "catenoid": {"c": args.c},
        "quadric1": {"a": args.a, "b": args.b, "c": args.c},
        "quadric2": {"a": args.a, "b": args.b},
    }[family]
    return {k: v for k, v in candidates.items() if v is not None}


def main(args_str: Optional[list[str]] = None) -> int:
    return ThirdFormApp(environ=os.environ).run(args_str)
