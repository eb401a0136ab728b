"""Command-line front end.

One verb per module: ``eval`` (numerals), ``card`` and ``cmp`` (sets and
comparison), ``measure`` (measurements, optionally relative to a numeral
system), ``system`` (numeral-system queries), ``define`` (inverse-defined
numbers), ``demo`` (the half-plane construction).

Exit codes: 0 success, 1 domain error (inexpressible value, inexact
division, ...), 2 syntax error in a numeral, set expression, descriptor
or the command line itself.  With ``--format json`` the output is a
single JSON object ``{"result": ...}`` or ``{"error": ...}`` matching the
shipped schema; ``--ascii`` renders ① as G1 so the tool survives
non-Unicode terminals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import derived, geometry, measure, numeral_system, sets
from .errors import GrossoneError, NotExpressible, ParseError
from .gnum import (
    GROSSONE,
    GrossNumber,
    Sign,
    classify,
    cmp,
    format_numeral,
    parse_numeral,
)

__all__ = ["main", "console_main", "run_command"]


def _sign_word(sign: Sign) -> str:
    return sign.name.lower()


class _Renderer:
    """Shared numeral/set formatting for one invocation."""

    def __init__(self, ascii_mode: bool):
        self.ascii_mode = ascii_mode

    def numeral(self, x: GrossNumber) -> str:
        return format_numeral(x, ascii_mode=self.ascii_mode)

    def interval_set(self, s: sets.IntervalSet) -> str:
        if s.is_empty:
            return "{}"
        return "|".join(
            f"[{self.numeral(part.lo)}..{self.numeral(part.hi)}]" for part in s.parts
        )

    def real_interval(self, r: geometry.RealInterval) -> str:
        return f"[{self.numeral(r.lo)}..{self.numeral(r.hi)}]"

    def strip(self, s: geometry.Strip) -> str:
        return f"{self.real_interval(s.x)}x{self.real_interval(s.y)}"


# ----------------------------------------------------------------------- verbs
#
# Each handler returns (result_dict, text_lines); the dict feeds the JSON
# envelope, the lines feed text mode.


def _cmd_eval(args, r: _Renderer):
    value = parse_numeral(args.numeral)
    kind = classify(value)
    result = {
        "value": r.numeral(value),
        "class": {
            "integer": kind.is_integer,
            "finite": kind.is_finite,
            "infinite": kind.is_infinite,
            "infinitesimal": kind.is_infinitesimal,
        },
    }
    return result, [r.numeral(value)]


def _cmd_card(args, r: _Renderer):
    s = sets.parse_set_expression(args.set)
    count = sets.cardinality(s)
    result = {"set": r.interval_set(s), "cardinality": r.numeral(count)}
    return result, [r.numeral(count)]


def _cmd_cmp(args, r: _Renderer):
    sign = cmp(parse_numeral(args.left), parse_numeral(args.right))
    return {"sign": _sign_word(sign)}, [_sign_word(sign)]


def _cmd_measure(args, r: _Renderer):
    s = sets.parse_set_expression(args.set)
    if args.system is None:
        m = measure.canonical_measurement(s)
    else:
        m = numeral_system.measure_in(numeral_system.parse_system(args.system), s)
    result = {"measurement": measure.to_jsonable(m, ascii_mode=r.ascii_mode)}
    text = measure.to_text(m, ascii_mode=r.ascii_mode).rstrip("\n").split("\n")
    return result, text


def _cmd_system(args, r: _Renderer):
    sys_ = numeral_system.parse_system(args.descriptor)
    if args.query == "max-finite":
        value = numeral_system.max_finite(sys_)
        return {"system": sys_.describe(), "max_finite": r.numeral(value)}, [r.numeral(value)]
    if args.query == "min-infinite":
        value = numeral_system.min_infinite(sys_)
        return {"system": sys_.describe(), "min_infinite": r.numeral(value)}, [r.numeral(value)]
    # args.query == "expressible"
    if args.value is None:
        raise ParseError("expressible needs a numeral argument", args.query, 0)
    probe = parse_numeral(args.value)
    ok = numeral_system.expressible(sys_, probe)
    result = {"system": sys_.describe(), "numeral": r.numeral(probe), "expressible": ok}
    return result, ["true" if ok else "false"]


def _cmd_define(args, r: _Renderer):
    d = derived.parse_defined(args.expression)
    result: dict = {"defined": derived.format_defined(d, ascii_mode=r.ascii_mode)}
    lines = [result["defined"]]
    if classify(d.kappa).is_finite:
        resolved = derived.resolve_finite(d)
        result["resolved"] = r.numeral(resolved)
        lines = [r.numeral(resolved)]
    if args.cmp is not None:
        outcome = derived.cmp_defined(d, parse_numeral(args.cmp))
        word = "incomparable" if outcome is derived.INCOMPARABLE else _sign_word(outcome)
        result["cmp"] = word
        lines.append(word)
    return result, lines


def _cmd_demo(args, r: _Renderer):
    if args.topic != "halfplane":
        raise ParseError(f"unknown demo {args.topic!r}", args.topic, 0)
    a = _finite_rational(args.a, "--a")
    d = _finite_rational(args.d, "--d")
    report = geometry.halfplane_demo(a, d, parse_numeral(args.b), parse_numeral(args.c))
    result = {
        "A": r.strip(report.strip_a),
        "C": r.strip(report.strip_c),
        "B": r.strip(report.strip_b),
        "subset": report.subset,
        "uncovered": r.numeral(report.uncovered),
        "uncovered_left": None
        if report.uncovered_left is None
        else r.real_interval(report.uncovered_left),
        "uncovered_right": None
        if report.uncovered_right is None
        else r.real_interval(report.uncovered_right),
        "classical_subset": report.classical_subset,
    }
    lines = [
        f"A {result['A']}",
        f"C {result['C']}",
        f"B {result['B']}",
        f"subset {'true' if report.subset else 'false'}",
        f"uncovered {result['uncovered']}",
    ]
    if report.uncovered_left is not None:
        lines.append(f"uncovered-left {result['uncovered_left']}")
    if report.uncovered_right is not None:
        lines.append(f"uncovered-right {result['uncovered_right']}")
    lines.append(f"classical-subset {'true' if report.classical_subset else 'false'}")
    return result, lines


def _finite_rational(text: str, flag: str) -> Fraction:
    value = parse_numeral(text)
    try:
        return value.as_fraction()
    except ValueError:
        raise ParseError(f"{flag} must be a finite rational", text, 0) from None


# ------------------------------------------------------------------- plumbing


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        dest="output_format",
        help="output rendering (default text)",
    )
    common.add_argument(
        "--ascii",
        action="store_true",
        help="write the infinite unit as G1 instead of ①",
    )

    parser = argparse.ArgumentParser(
        prog="grossone",
        description="Exact arithmetic and set measurement with the infinite unit ①.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", parents=[common], help="canonicalize and classify a numeral")
    p.add_argument("numeral", help="numeral, e.g. '2①+1' or '2*G1+1'")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("card", parents=[common], help="element count of a set expression")
    p.add_argument("set", help="set expression, e.g. '[1..①]\\{1}'")
    p.set_defaults(handler=_cmd_card)

    p = sub.add_parser("cmp", parents=[common], help="three-way comparison of two numerals")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_cmp)

    p = sub.add_parser("measure", parents=[common], help="explicit measurement of a set")
    p.add_argument("set", help="set expression")
    p.add_argument(
        "--system",
        help="numeral system descriptor; the measurement must be writable in it",
    )
    p.set_defaults(handler=_cmd_measure)

    p = sub.add_parser("system", parents=[common], help="numeral-system queries")
    p.add_argument("descriptor", help="piraha | finite:<digits>:<base> | gross:<t>:<cd>:<ed>")
    p.add_argument("query", choices=("max-finite", "min-infinite", "expressible"))
    p.add_argument("value", nargs="?", help="numeral for the expressible query")
    p.set_defaults(handler=_cmd_system)

    p = sub.add_parser("define", parents=[common], help="numbers defined by inverting g")
    p.add_argument("expression", help="sqrtfloor(k) | logfloor(b, k) | invfloor(pow n, k)")
    p.add_argument("--cmp", help="probe numeral to compare the defined number against")
    p.set_defaults(handler=_cmd_define)

    p = sub.add_parser("demo", parents=[common], help="worked constructions")
    p.add_argument("topic", choices=("halfplane",))
    p.add_argument("--a", required=True, help="right edge of the base strip (finite rational)")
    p.add_argument("--d", required=True, help="axis of the second reflection (finite rational)")
    p.add_argument("--b", default="①", help="left extent as a numeral (default ①)")
    p.add_argument("--c", default="①", help="half-height as a numeral (default ①)")
    p.set_defaults(handler=_cmd_demo)

    return parser


def _emit_json(payload: dict):
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n")


def _error_payload(exc: GrossoneError) -> dict:
    entry = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotExpressible):
        entry["value"] = format_numeral(exc.value)
    return {"error": entry}


def run_command(args) -> int:
    renderer = _Renderer(ascii_mode=args.ascii)
    try:
        result, lines = args.handler(args, renderer)
    except ParseError as exc:
        if args.output_format == "json":
            _emit_json(_error_payload(exc))
        else:
            sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except GrossoneError as exc:
        if args.output_format == "json":
            _emit_json(_error_payload(exc))
        else:
            sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    if args.output_format == "json":
        _emit_json({"result": result})
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run_command(args)


def console_main():
    sys.exit(main())
