"""Command-line front end.

Commands: opinion validate, op <id>, combine, audit, plot.

Exit codes: 0 ok, 1 audit discrepancy, 2 usage/parse error, 3 invariant
violation, 4 I/O failure.  Opinions are accepted inline as "b,d,u",
as inline JSON objects, or as paths to JSON files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .audit import (
    AuditConfig,
    audit_table,
    discrepancies,
    format_table,
    report_to_dict,
)
from .combine import combine_traced
from .constants import DEFAULT_SEED
from .errors import SubjectiveLogicError, UnknownOperatorError
from .opinion import (
    Opinion,
    classify,
    expectation,
    make_opinion,
    opinion_from_dict,
    opinion_to_dict,
)
from .operators import CLI_NAMES, apply, operator_from_name
from .plot import MIN_WIDTH_PX, PlotSpec, default_color, write_svg

EXIT_OK = 0
EXIT_DISCREPANT = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_IO = 4

_EPILOG = """exit codes:
  0  success
  1  audit found a cell contradicting the reference verdicts
  2  usage or parse error
  3  opinion invariant violation
  4  output path not writable

opinions are given inline as "b,d,u", as inline JSON
('{"belief": ..., "disbelief": ..., "uncertainty": ...}'), or as a path
to a JSON file with the same object.  SL_TRUST_SEED overrides the default
audit seed."""


class _ParseFailure(Exception):
    """Bad user input that is not an opinion-invariant violation."""


def _parse_opinion(text: str) -> Opinion:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _ParseFailure(f"invalid JSON: {exc}") from exc
        return opinion_from_dict(data)
    if "," in text:
        parts = text.split(",")
        if len(parts) != 3:
            raise _ParseFailure(
                f"shorthand needs exactly belief,disbelief,uncertainty: {text!r}"
            )
        try:
            b, d, u = (float(p) for p in parts)
        except ValueError as exc:
            raise _ParseFailure(f"non-numeric component in {text!r}") from exc
        return make_opinion(b, d, u)
    if os.path.exists(text):
        try:
            with open(text, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise _ParseFailure(f"cannot read opinion file {text!r}: {exc}") from exc
        return opinion_from_dict(data)
    raise _ParseFailure(f"not an opinion: {text!r} (no such file, not b,d,u or JSON)")


def _print_json(payload: dict) -> None:
    print(json.dumps(payload))


def _cmd_opinion_validate(args: argparse.Namespace) -> int:
    opinion = _parse_opinion(args.opinion)
    _print_json(
        {
            **opinion_to_dict(opinion),
            "kind": classify(opinion).value,
            "expectation": expectation(opinion),
        }
    )
    return EXIT_OK


def _cmd_op(args: argparse.Namespace) -> int:
    op_id = operator_from_name(args.name)
    left = _parse_opinion(args.left)
    right = _parse_opinion(args.right)
    result = apply(op_id, left, right)
    if isinstance(result, Opinion):
        _print_json(opinion_to_dict(result))
    else:
        _print_json(result.to_dict())
    return EXIT_OK


def _cmd_combine(args: argparse.Namespace) -> int:
    trust = _parse_opinion(args.trust)
    confidence = _parse_opinion(args.confidence)
    trace = combine_traced(trust, confidence)
    payload = opinion_to_dict(trace.result)
    if args.trace:
        payload["trace"] = trace.to_dict()
    _print_json(payload)
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    cfg = AuditConfig(sample_count=args.samples, seed=args.seed)
    rows = audit_table(cfg)
    if args.format == "json":
        _print_json(report_to_dict(rows, cfg))
    else:
        print(format_table(rows, cfg))
    return EXIT_DISCREPANT if discrepancies(rows) else EXIT_OK


def _cmd_plot(args: argparse.Namespace) -> int:
    points = []
    for index, raw in enumerate(args.point or []):
        label, _, rest = raw.partition("=")
        if not label or not rest:
            raise _ParseFailure(f"--point needs LABEL=b,d,u[=color], got {raw!r}")
        triple, _, color = rest.partition("=")
        points.append(
            (label, _parse_opinion(triple), color or default_color(index))
        )
    segments = []
    for raw in args.segment or []:
        first, sep, second = raw.partition(":")
        if not sep:
            raise _ParseFailure(f"--segment needs b,d,u:b,d,u, got {raw!r}")
        segments.append((_parse_opinion(first), _parse_opinion(second)))
    try:
        spec = PlotSpec(
            points=tuple(points),
            segments=tuple(segments),
            width_px=args.width,
            output_path=args.out,
        )
    except ValueError as exc:
        raise _ParseFailure(str(exc)) from exc
    try:
        write_svg(spec)
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sltrust",
        description="Subjective-logic opinions, operators, and the trust-confidence combination.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_opinion = sub.add_parser("opinion", help="opinion utilities")
    opinion_sub = p_opinion.add_subparsers(dest="opinion_command", required=True)
    p_validate = opinion_sub.add_parser("validate", help="validate and normalize an opinion")
    p_validate.add_argument("opinion")
    p_validate.set_defaults(func=_cmd_opinion_validate)

    p_op = sub.add_parser("op", help="apply a classical binary operator")
    p_op.add_argument("name", help=f"one of: {', '.join(sorted(CLI_NAMES))}")
    p_op.add_argument("left")
    p_op.add_argument("right")
    p_op.set_defaults(func=_cmd_op)

    p_combine = sub.add_parser("combine", help="trust-confidence combination")
    p_combine.add_argument("trust")
    p_combine.add_argument("confidence")
    p_combine.add_argument("--trace", action="store_true", help="include intermediates")
    p_combine.set_defaults(func=_cmd_combine)

    default_seed = int(os.environ.get("SL_TRUST_SEED", DEFAULT_SEED))
    p_audit = sub.add_parser("audit", help="audit the operator table")
    p_audit.add_argument("--samples", type=int, default=10000)
    p_audit.add_argument("--seed", type=int, default=default_seed)
    p_audit.add_argument("--format", choices=("table", "json"), default="table")
    p_audit.set_defaults(func=_cmd_audit)

    p_plot = sub.add_parser("plot", help="render opinions into an SVG triangle")
    p_plot.add_argument("--point", action="append", metavar="LABEL=b,d,u[=color]")
    p_plot.add_argument("--segment", action="append", metavar="b,d,u:b,d,u")
    p_plot.add_argument("--width", type=int, default=640, help=f"pixels, >= {MIN_WIDTH_PX}")
    p_plot.add_argument("--out", required=True)
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownOperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SubjectiveLogicError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
