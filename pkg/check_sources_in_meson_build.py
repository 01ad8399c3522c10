# pyright: basic
from pathlib import Path
from sys import exit

from mesonbuild import mparser

PACKAGE = "thirdform"


def read_meson_build() -> mparser.CodeBlockNode:
    content = Path("meson.build").read_text("utf-8")
    return mparser.Parser(content, "meson.build").parse()


def find_declared_python_sources(meson_build: mparser.CodeBlockNode) -> set[str]:
    python_sources = set[str]()

    for node in meson_build.lines:
        # Only "py.install_sources(...)" declares sources
        if (
            not isinstance(node, mparser.MethodNode)
            or not isinstance(node.source_object, mparser.IdNode)
            or node.source_object.value != "py"
            or node.name.value != "install_sources"
        ):
            continue

        python_sources.update(
            arg.value for arg in node.args.arguments if isinstance(arg, mparser.StringNode)
        )

    return python_sources


def find_actual_sources() -> set[str]:
    return {f.as_posix() for f in Path(PACKAGE).glob("**/*.py")}


def report(header: str, files: set[str]) -> None:
    print(header)
    for file in sorted(files):
        print(f"- {file}")


def main() -> int:
    declared = find_declared_python_sources(read_meson_build())
    actual = find_actual_sources()

    missing = declared - actual
    undeclared = actual - declared
    if missing:
        report("✘ The following sources from meson.build couldn't be found:", missing)
    if undeclared:
        report("✘ The following sources weren't declared in meson.build:", undeclared)

    if missing or undeclared:
        return 1
    print("✔ Source files match with declarations in meson.build")
    return 0


if __name__ == "__main__":
    exit(main())
