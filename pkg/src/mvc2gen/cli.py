"""``mvc2gen`` command line.

Exit codes: 0 success, 1 invalid model or differences found, 2 unparseable
input, 3 I/O failure. Diagnostics go to stderr, summaries to stdout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from mvc2gen import codegen, pim, psm
from mvc2gen.crud import build_crud_module
from mvc2gen.engine import execute
from mvc2gen.errors import Mvc2GenError, ParseError
from mvc2gen.modelio import (
    diff_psm,
    dump_psm_xmi,
    parse_pim_dsl,
    parse_pim_xmi,
    parse_psm_xmi,
    parse_xml,
)
from mvc2gen.modelio.xmltree import local_name

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise _Exit(EXIT_IO, f"{path}: cannot read: {exc}") from exc


def _input_format(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".uml":
        return "uml"
    if suffix == ".xmi" or suffix == ".xml":
        return "xmi"
    raise _Exit(EXIT_PARSE, f"{path}: cannot tell the input format, use --format uml|xmi")


def _load(path: str, fmt: str | None = None):
    """Load *path* as a source or target model; returns ``(kind, model)``."""
    text = _read(path)
    try:
        if _input_format(path, fmt) == "uml":
            return "pim", parse_pim_dsl(text)
        doc = parse_xml(text)
        root = local_name(doc.tag)
        if root == "UMLPackage":
            return "pim", parse_pim_xmi(doc)
        if root == "XMI":
            return "psm", parse_psm_xmi(doc, strict=False)
        raise ParseError("schema-violation", f"unknown document root <{root}>", "/")
    except Mvc2GenError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}") from exc


def _load_psm(path: str) -> psm.StrutsModel:
    kind, model = _load(path, "xmi")
    if kind != "psm":
        raise _Exit(EXIT_PARSE, f"{path}: not a PSM document")
    return model


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_IO, f"{path}: cannot write: {exc}") from exc


def _report(problems) -> None:
    for v in problems:
        print(v, file=sys.stderr)


def cmd_transform(args) -> int:
    kind, model = _load(args.input, args.format)
    if kind != "pim":
        raise _Exit(EXIT_PARSE, f"{args.input}: expected a UML model")
    problems = pim.validate_pim(model)
    if problems:
        _report(problems)
        return EXIT_INVALID
    try:
        result, _ = execute(build_crud_module(), model)
        text = dump_psm_xmi(result)
    except Mvc2GenError as exc:
        raise _Exit(EXIT_INVALID, str(exc)) from exc
    _write(args.output, text)
    print(f"views={len(result.views)} actions={len(result.actions)} forms={len(result.forms)}")
    return EXIT_OK


def cmd_validate(args) -> int:
    kind, model = _load(args.input, args.format)
    problems = pim.validate_pim(model) if kind == "pim" else psm.validate_psm(model)
    if problems:
        for v in problems:
            print(v)
        return EXIT_INVALID
    print("OK")
    return EXIT_OK


def cmd_diff(args) -> int:
    expected, actual = _load_psm(args.a), _load_psm(args.b)
    diff = diff_psm(expected, actual)
    for d in diff:
        print(d)
    return EXIT_OK if diff.empty else EXIT_INVALID


def cmd_codegen(args) -> int:
    model = _load_psm(args.input)
    try:
        files = codegen.generate(model, args.package)
    except Mvc2GenError as exc:
        raise _Exit(EXIT_INVALID, str(exc)) from exc
    try:
        files.write(args.output)
    except OSError as exc:
        raise _Exit(EXIT_IO, f"{args.output}: cannot write: {exc}") from exc
    print(f"files={len(files)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvc2gen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="UML model (.uml/.xmi) to PSM XMI")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--format", choices=("uml", "xmi"))
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("validate", help="check a UML model or a PSM document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=("uml", "xmi"))
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("diff", help="structural difference of two PSM documents")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("codegen", help="struts-config.xml and stubs from a PSM document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--package", default=codegen.DEFAULT_PACKAGE)
    p.set_defaults(func=cmd_codegen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if exc.message:
            print(f"mvc2gen: {exc.message}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
