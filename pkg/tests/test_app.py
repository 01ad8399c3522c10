import json
from argparse import ArgumentParser, Namespace
from io import StringIO
from typing import Any, Optional, final
from unittest import TestCase

from thirdform import App, Pipeline, RunOptions, Task, TaskRuntime, ThirdFormApp
from thirdform.app import EXIT_CHECK_FAILED, EXIT_CONFIG_ERROR, EXIT_OK
from thirdform.model import CheckRecord
from thirdform.tools.testing_mocks import MockFile


@final
class DummyTask(Task):
    def __init__(self, value: float = 0.0) -> None:
        super().__init__()
        self.executed_count = 0
        self.value = value

    def execute(self, r: TaskRuntime) -> None:
        self.executed_count += 1
        self.report(r, CheckRecord("dummy", "nothing", self.value, 1.0))


class TestApp(TestCase):
    def test(self) -> None:
        @final
        class DummyApp(App):
            def __init__(self) -> None:
                super().__init__("DummyApp", stdout=StringIO(), environ={})
                self.task = DummyTask()

            def prepare(self, args: Namespace, options: RunOptions) -> Pipeline:
                return Pipeline([self.task], options=options)

        app = DummyApp()
        self.assertEqual(app.run(["--no-timestamp"]), EXIT_OK)
        self.assertEqual(app.task.executed_count, 1)

        assert isinstance(app.stdout, StringIO)
        report = json.loads(app.stdout.getvalue())
        self.assertEqual(report["command"], "DummyApp")
        self.assertEqual(len(report["records"]), 1)

    def test_custom_arguments(self) -> None:
        @final
        class DummyApp(App):
            def __init__(self) -> None:
                super().__init__("DummyApp", stdout=StringIO(), environ={})
                self.foo = None
                self.bar = None
                self.options: RunOptions | None = None

            def add_arguments(self, parser: ArgumentParser) -> None:
                parser.add_argument("foo", type=int)
                parser.add_argument("--bar", nargs="*")

            def prepare(self, args: Namespace, options: RunOptions) -> Pipeline:
                self.foo = args.foo
                self.bar = args.bar
                self.options = options
                return Pipeline([], options=options)

        app = DummyApp()
        app.run(["42", "--bar", "a", "b", "--grid", "4x5", "--tau", "1e-3"])
        self.assertEqual(app.foo, 42)
        self.assertEqual(app.bar, ["a", "b"])
        assert app.options is not None
        self.assertEqual(app.options.grid, (4, 5))
        self.assertEqual(app.options.tolerances.tau, 1e-3)

    def test_failed_check(self) -> None:
        @final
        class DummyApp(App):
            def __init__(self) -> None:
                super().__init__("DummyApp", stdout=StringIO(), environ={})

            def prepare(self, args: Namespace, options: RunOptions) -> Pipeline:
                return Pipeline([DummyTask(2.0), DummyTask(0.5)], options=options)

        app = DummyApp()
        self.assertEqual(app.run([]), EXIT_CHECK_FAILED)

        assert isinstance(app.stdout, StringIO)
        report = json.loads(app.stdout.getvalue())
        self.assertFalse(report["passed"])
        self.assertEqual([r["passed"] for r in report["records"]], [False, True])


class TestThirdFormApp(TestCase):
    def run_app(self, *args: str, environ: Optional[dict[str, str]] = None) -> tuple[int, str]:
        out = StringIO()
        code = ThirdFormApp(stdout=out, environ=environ or {}).run(list(args))
        return code, out.getvalue()

    def run_json(self, *args: str) -> tuple[int, dict[str, Any]]:
        code, out = self.run_app(*args, "--no-timestamp")
        return code, json.loads(out)

    def test_check_sphere(self) -> None:
        code, report = self.run_json("check", "--surface", "sphere", "--radius", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["command"], "check")
        self.assertTrue(report["passed"])
        self.assertEqual(report["records"][0]["kind"], "fit")
        self.assertEqual(report["records"][0]["verdict"], "SphereType")

    def test_fit_lambda_quadric(self) -> None:
        code, report = self.run_json("fit-lambda", "--surface", "quadric2", "--a", "1", "--b", "1")
        self.assertEqual(code, EXIT_CHECK_FAILED)
        self.assertEqual(report["records"][0]["verdict"], "NotCoordinateFiniteType")

        code, report = self.run_json(
            "fit-lambda",
            "--surface",
            "quadric2",
            "--a",
            "1",
            "--b",
            "1",
            "--expect",
            "NotCoordinateFiniteType",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["records"][0]["expected"], "NotCoordinateFiniteType")

    def test_options_before_command(self) -> None:
        code, out = self.run_app("--format", "text", "check", "--surface", "catenoid")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("PASS fit: "))
        self.assertTrue(out.endswith("check: 3 record(s), 0 failed\n"))

    def test_deterministic_without_timestamp(self) -> None:
        args = ("check", "--surface", "helicoid", "--c5", "1.5", "--no-timestamp")
        _, first = self.run_app(*args)
        _, second = self.run_app(*args)
        self.assertEqual(first, second)
        self.assertNotIn("generated_at", first)

    def test_output_file(self) -> None:
        with MockFile(suffix=".csv") as path:
            code, out = self.run_app(
                "fit-lambda", "--surface", "sphere", "--format", "csv", "-o", str(path)
            )
            content = path.read_text(encoding="utf-8")

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "")
        self.assertTrue(content.startswith("kind,surface,mode,lambda_0,"))
        self.assertEqual(len(content.splitlines()), 2)

    def test_config_errors(self) -> None:
        cases = [
            ("check",),
            ("check", "--surface", "quadric1", "--a", "0"),
            ("check", "--surface", "sphere", "--tau", "0"),
            ("ruled-coeffs", "--surface", "sphere"),
            ("check", "--config", "/nonexistent/surface.yml"),
            ("check", "--surface", "sphere", "--radius", "0"),
            ("check", "--surface", "helicoid", "--c5", "0"),
            ("check", "--surface", "ruled", "--pair", "helicoid", "--c5", "0"),
        ]
        for args in cases:
            with self.subTest(args=args):
                code, out = self.run_app(*args)
                self.assertEqual(code, EXIT_CONFIG_ERROR)
                self.assertEqual(out, "")

    def test_config_file_errors(self) -> None:
        for params in ("{r: abc}", "{r: 0}", "{r: [1, 2]}", "{center: [1, 2]}"):
            with self.subTest(params=params), MockFile(suffix=".yml") as path:
                path.write_text(f"family: sphere\nparams: {params}\n", encoding="utf-8")
                code, out = self.run_app("check", "--config", str(path))
                self.assertEqual(code, EXIT_CONFIG_ERROR)
                self.assertEqual(out, "")

    def test_bad_environment(self) -> None:
        code, _ = self.run_app("check", "--surface", "sphere", environ={"THIRDFORM_TAU": "x"})
        self.assertEqual(code, EXIT_CONFIG_ERROR)

    def test_unknown_family(self) -> None:
        with self.assertRaises(SystemExit) as ctx:
            self.run_app("check", "--surface", "torus")
        self.assertEqual(ctx.exception.code, 2)

    def test_verify_single_criterion(self) -> None:
        code, report = self.run_json("verify-paper", "--criterion", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["command"], "verify-paper")
        self.assertEqual(len(report["records"]), 4)
        self.assertSetEqual({r["check"] for r in report["records"]}, {"sphere-eigenrelation"})

    def test_quadric_table_kind_ii(self) -> None:
        _, report = self.run_json("quadric-table", "--kind", "II")
        rows = [r for r in report["records"] if r["kind"] == "quadric"]
        self.assertEqual(len(rows), 9)
        self.assertTrue(all(r["family"] == "quadric2" for r in rows))
