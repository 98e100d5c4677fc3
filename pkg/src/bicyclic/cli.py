"""Command line interface.

Exit status convention: 0 for yes/ok, 1 for no/refuted, 2 for errors
(bad syntax, invalid parameters, unreadable files).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .coverage import KERNEL, coverage, cross_validate
from .elements import multiply, inverse, parse_element
from .iorder import decide_left_iorder, decide_right_iorder, decision_lines
from .render import render_window
from .specfile import SpecError, SpecSyntaxError, SpecValidationError, parse_spec, parse_spec_unchecked
from .subsemigroups import validate
from .witness import NotLeftIOrderError, decompose, verify_witness
from .words import word_normalize

__all__ = ["main"]


def _read_spec_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc


def _load_spec(path: str):
    return parse_spec(_read_spec_text(path))


def _cmd_mul(args) -> int:
    print(multiply(parse_element(args.left), parse_element(args.right)))
    return 0


def _cmd_inv(args) -> int:
    print(inverse(parse_element(args.element)))
    return 0


def _cmd_normalize(args) -> int:
    print(word_normalize(args.word))
    return 0


def _cmd_classify(args) -> int:
    spec = parse_spec_unchecked(_read_spec_text(args.file))
    report = validate(spec)
    print(f"form={spec.form}")
    print(f"valid={'yes' if report.ok else 'no'}")
    for note in report.notes:
        print(f"note={note}")
    for violation in report.violations:
        print(f"violation={violation}")
    return 0 if report.ok else 1


def _cmd_decide(args) -> int:
    spec = _load_spec(args.file)
    if args.right:
        decision = decide_right_iorder(spec)
        side = "right"
    else:
        decision = decide_left_iorder(spec)
        side = "left"
    for line in decision_lines(decision, side=side):
        print(line)
    return 0 if decision.verdict else 1


def _cmd_witness(args) -> int:
    spec = _load_spec(args.file)
    q = parse_element(args.element)
    try:
        w = decompose(spec, q)
    except NotLeftIOrderError as exc:
        for line in decision_lines(exc.decision):
            print(line)
        print("witness=refused")
        return 1
    assert verify_witness(spec, w)
    print(w)
    return 0


def _cmd_render(args) -> int:
    spec = _load_spec(args.file)
    print(render_window(spec, args.window))
    return 0


def _cmd_coverage(args) -> int:
    spec = _load_spec(args.file)
    report = coverage(spec, args.window, args.pairs)
    print(f"window={report.window}")
    print(f"pair_bound={report.pair_bound}")
    print(f"covered={len(report.covered)}")
    print(f"gaps={len(report.gaps)}")
    for gap in sorted(report.gaps):
        print(f"gap={gap}")
    return 0 if not report.gaps else 1


def _cmd_crosscheck(args) -> int:
    spec = _load_spec(args.file)
    report = cross_validate(spec, args.window)
    print(f"verdict={'yes' if report.decision.verdict else 'no'}")
    print(f"window={report.coverage.window}")
    print(f"pair_bound={report.coverage.pair_bound}")
    print(f"coverage_gaps={len(report.coverage.gaps)}")
    if report.closure is None:
        print("closure=ok")
    else:
        print(f"closure=counterexample {report.closure.x} {report.closure.y} {report.closure.product}")
    for note in report.notes:
        print(f"note={note}")
    print(f"result={'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicyclic",
        description="Exact arithmetic and I-order decisions in the bicyclic monoid "
        f"(coverage kernel: {KERNEL})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mul", help="multiply two elements (i,j) (k,l)")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=_cmd_mul)

    s = sub.add_parser("inv", help="invert an element (i,j)")
    s.add_argument("element")
    s.set_defaults(func=_cmd_inv)

    s = sub.add_parser("normalize", help="normalize a word over {a,b}")
    s.add_argument("word")
    s.set_defaults(func=_cmd_normalize)

    s = sub.add_parser("classify", help="parse a spec file and report validation")
    s.add_argument("file")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("decide", help="decide the left (or right) I-order question")
    s.add_argument("file")
    s.add_argument("--right", action="store_true", help="decide the right I-order instead")
    s.set_defaults(func=_cmd_decide)

    s = sub.add_parser("witness", help="decompose an element over the subsemigroup")
    s.add_argument("file")
    s.add_argument("element")
    s.set_defaults(func=_cmd_witness)

    s = sub.add_parser("render", help="draw the subsemigroup on a window")
    s.add_argument("file")
    s.add_argument("--window", type=int, required=True)
    s.set_defaults(func=_cmd_render)

    s = sub.add_parser("coverage", help="brute-force coverage report on a window")
    s.add_argument("file")
    s.add_argument("--window", type=int, required=True)
    s.add_argument("--pairs", type=int, default=None, help="override the pair window bound")
    s.set_defaults(func=_cmd_coverage)

    s = sub.add_parser("crosscheck", help="cross-validate the decision against coverage")
    s.add_argument("file")
    s.add_argument("--window", type=int, required=True)
    s.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecValidationError as exc:
        for violation in exc.violations:
            print(f"violation={violation}", file=sys.stderr)
        print("error=invalid spec", file=sys.stderr)
        return 2
    except SpecSyntaxError as exc:
        print(f"error={exc}", file=sys.stderr)
        return 2
    except (SpecError, ValueError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
