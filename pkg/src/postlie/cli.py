"""Command-line front end.

    python3 -m postlie expand --what magnus --order 5 --format text
    python3 -m postlie verify --suite theorem5 --order 7
    python3 -m postlie bch --order 4 --format latex
    python3 -m postlie count --order 4

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .coeffs import LAMBDA
from .formats import emit_latex, series_text, series_to_dict
from .lie import bch_table, bracket_text
from .magnus import inverse_postlie_magnus, postlie_magnus
from .rblift import bch_recursion, bch_recursion_inverse, verify_main_theorem
from .report import Report
from .trees import enumerate_forests, enumerate_trees

__all__ = ["main", "run", "build_parser"]

EXPANSIONS = ("magnus", "magnus-inv", "bch-rec", "bch-rec-inv")
SUITES = ("appendixA", "appendixB", "theorem5", "glf", "hopf", "rbmodel")
SYMBOLS = {"magnus": r"\chi", "magnus-inv": r"\theta", "bch-rec": r"\chi_{\lambda}", "bch-rec-inv": r"\chi_{\lambda}^{-1}"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("order must be >= 0")
    return n


def _weight(text: str):
    if text in ("symbolic", "lambda", "L"):
        return LAMBDA
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"weight must be a rational or 'symbolic': {text!r}")
    if not w:
        raise argparse.ArgumentTypeError("weight must be nonzero")
    return w


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="postlie", description="Post-Lie Magnus expansion and BCH-recursion.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("expand", help="print expansion components")
    p.add_argument("--what", choices=EXPANSIONS, default="magnus")
    p.add_argument("--order", type=_order, default=5)
    p.add_argument("--weight", type=_weight, default=LAMBDA, help="rational or 'symbolic' (bch-rec only)")
    p.add_argument("--simplified", action="store_true", help="use the simplified recursion (bch-rec only)")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--order", type=_order, default=None)
    p.add_argument("--dim", type=_order, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_order, default=100)

    p = sub.add_parser("bch", help="print the bracketed BCH series")
    p.add_argument("--order", type=_order, default=4)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("count", help="count planar forests of a degree")
    p.add_argument("--order", type=_order, required=True)
    p.add_argument("--alphabet", default="o", help="comma-separated labels")
    p.add_argument("--trees", action="store_true", help="count trees instead of forests")
    return parser


# commands -------------------------------------------------------------------


def _expansion(args):
    n = args.order
    if args.what == "magnus":
        return postlie_magnus(n)
    if args.what == "magnus-inv":
        return inverse_postlie_magnus(n)
    if args.what == "bch-rec":
        return bch_recursion(n, args.weight, simplified=args.simplified)
    return bch_recursion_inverse(n, args.weight)


def cmd_expand(args, out) -> int:
    if args.order < 1:
        raise UsageError("expand: --order must be >= 1")
    exp = _expansion(args)
    if args.format == "text":
        for _, comp in exp.items():
            print(series_text(comp), file=out)
    elif args.format == "latex":
        print(emit_latex(exp, SYMBOLS[args.what]), file=out)
    else:
        doc = {
            "what": args.what,
            "order": exp.order,
            "components": [{"degree": n, "series": series_to_dict(c)} for n, c in exp.items()],
        }
        print(json.dumps(doc, indent=1), file=out)
    return 0


def cmd_bch(args, out) -> int:
    if args.order < 1:
        raise UsageError("bch: --order must be >= 1")
    table = bch_table(args.order)
    if args.format == "text":
        for _, comp in table.items():
            print(comp, file=out)
    elif args.format == "latex":
        print(emit_latex(table, r"\mathrm{BCH}"), file=out)
    else:
        doc = {"order": args.order, "components": []}
        for n, comp in table.items():
            terms = [
                {"bracket": bracket_text(br), "coeff": {"num": c.numerator, "den": c.denominator}}
                for br, c in comp.sorted_items()
            ]
            doc["components"].append({"degree": n, "terms": terms})
        print(json.dumps(doc, indent=1), file=out)
    return 0


def cmd_count(args, out) -> int:
    alphabet = tuple(a for a in args.alphabet.split(",") if a)
    if not alphabet:
        raise UsageError("count: empty alphabet")
    items = enumerate_trees(args.order, alphabet) if args.trees else enumerate_forests(args.order, alphabet)
    print(len(items), file=out)
    return 0


def _suite_appendix(which: str) -> Report:
    from .reference import inverse_magnus_table, magnus_table

    report = Report(which)
    if which == "appendixA":
        ours, ref = postlie_magnus(5), magnus_table()
    else:
        ours, ref = inverse_postlie_magnus(5), inverse_magnus_table()
    for n in range(1, 6):
        report.add(f"degree {n}", ours[n] == ref[n])
    return report


def _suite_theorem(order: int) -> Report:
    rep = verify_main_theorem(order)
    report = Report("theorem")
    for what, n, good in rep.checked:
        report.add(f"{what} degree {n}", good)
    for what, n, diff in rep.mismatches:
        report.add(f"{what} degree {n} difference", False, series_text(diff))
    return report


def _suite_rbmodel(order: int, dim: int, seed: int, samples: int) -> Report:
    from . import matrix_model as mm

    rng = np.random.default_rng(seed)
    report = Report("rbmodel")
    report.merge(mm.verify_rb_identity(samples, seed, dim))
    report.merge(mm.verify_order_two_identity(samples, seed, dim))
    x = mm.random_matrix(dim, rng)
    report.merge(mm.verify_et9(x, order))
    for n in range(0, min(3, order) + 1):
        report.merge(mm.verify_derivative_identity(x, n, order))
    a = mm.random_matrix(dim, rng)
    report.merge(mm.verify_spitzer(a, min(order, 6)))
    return report


def cmd_verify(args, out) -> int:
    from .checks import glf_suite, hopf_suite

    suite = args.suite
    if args.order is not None and args.order < 1:
        raise UsageError("verify: --order must be >= 1")
    if suite in ("appendixA", "appendixB"):
        report = _suite_appendix(suite)
    elif suite == "theorem5":
        report = _suite_theorem(args.order or 7)
    elif suite == "glf":
        report = glf_suite(args.order or 6)
    elif suite == "hopf":
        report = hopf_suite(args.order or 6)
    else:
        order = args.order or 8
        if args.dim < 1:
            raise UsageError("verify: --dim must be >= 1")
        report = _suite_rbmodel(order, args.dim, args.seed, args.samples)
    for line in report.lines():
        print(line, file=out)
    print(f"{suite}: {'PASS' if report.ok else 'FAIL'}", file=out)
    return 0 if report.ok else 1


COMMANDS = {"expand": cmd_expand, "verify": cmd_verify, "bch": cmd_bch, "count": cmd_count}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=err)
        return 2


def main() -> None:
    sys.exit(run())
