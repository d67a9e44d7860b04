"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 the corpus could not be
read/parsed/validated (or a bad argument), 3 the instantiation budget ran out.
"""
from __future__ import annotations

import argparse
import os
import sys

from .depgraph import build_graph, indirect_closure
from .elicitor import NeedSet, direct_needs, elicit_all, minimize_attachments
from .errors import BaselineFailed, BudgetExceeded, ParseError, ValidationError
from .frontend import parse_library
from .report import emit, property_usage_table
from .verifier import (
    DEFAULT_BUDGET,
    DEFAULT_ORACLE_BOUND,
    brute_force_verdict,
    check_problem,
    ground,
    problem_for,
)

EXIT_OK, EXIT_FAILED, EXIT_CORPUS, EXIT_BUDGET = 0, 1, 2, 3


class _CorpusError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"propneed: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise _CorpusError(f"cannot read corpus {path}: {exc.strerror}") from None
    try:
        return parse_library(data)
    except ParseError as exc:
        raise _CorpusError(f"{path}:{exc}") from None
    except ValidationError as exc:
        lines = "\n".join(f"  {d}" for d in exc.diagnostics)
        raise _CorpusError(f"{path}: invalid corpus\n{lines}") from None


def _select(lib, item_id):
    if item_id is None:
        return list(lib.items)
    try:
        return [lib.item(item_id)]
    except KeyError:
        raise _CorpusError(f"no item {item_id} in corpus") from None


def _cmd_check(args, out) -> int:
    lib = _load(args.corpus)
    status = EXIT_OK
    for item in _select(lib, args.item):
        gp = ground(problem_for(item, lib), args.budget)
        verdict = check_problem(gp)
        print(f"{item.id} {verdict.status.value}", file=out)
        if verdict.failed:
            status = EXIT_FAILED
            for line in verdict.witness.describe():
                print("  " + line, file=out)
        if args.cross_check:
            if len(gp.atoms) > args.oracle_bound:
                _err(f"{item.id}: {len(gp.atoms)} atoms, oracle skipped")
            elif brute_force_verdict(gp, args.oracle_bound).status is not verdict.status:
                _err(f"{item.id}: oracle disagrees with checker")
                status = EXIT_FAILED
    return status


def _cmd_elicit(args, out) -> int:
    lib = _load(args.corpus)
    if args.item is None:
        needs = elicit_all(lib, budget=args.budget, jobs=args.jobs)
    else:
        needs = {i.id: direct_needs(i, lib, budget=args.budget) for i in _select(lib, args.item)}
    for item_id, ns in needs.items():
        print(ns, file=out)
        if args.minimize:
            env = minimize_attachments(item_id, lib, budget=args.budget)
            print(NeedSet(item_id, env.attachments, "minimal"), file=out)
    return EXIT_OK


def _all_needs(args):
    lib = _load(args.corpus)
    direct = elicit_all(lib, budget=args.budget, jobs=args.jobs)
    return lib, direct, indirect_closure(build_graph(lib), direct)


def _cmd_closure(args, out) -> int:
    _, _, indirect = _all_needs(args)
    for ns in indirect.values():
        print(ns, file=out)
    return EXIT_OK


def _cmd_report(args, out) -> int:
    lib, direct, indirect = _all_needs(args)
    report = property_usage_table(lib, direct, indirect, corpus=os.path.basename(args.corpus))
    out.flush()
    data = emit(report, args.format)
    if hasattr(out, "buffer"):
        out.buffer.write(data)
        out.buffer.flush()
    else:
        out.write(data.decode())
    return EXIT_OK


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    def d(value):
        return value if defaults else argparse.SUPPRESS

    parser.add_argument("--budget", type=_positive, default=d(DEFAULT_BUDGET),
                        help="maximum number of ground axiom instances per check")
    parser.add_argument("--oracle-bound", type=_positive, default=d(DEFAULT_ORACLE_BOUND),
                        help="maximum atom count for the brute-force oracle")
    parser.add_argument("--jobs", type=_positive, default=d(1),
                        help="worker processes for per-item elicitation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="propneed", description=__doc__.splitlines()[0])
    _global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)
    common.add_argument("--corpus", required=True, help="corpus file")

    p = sub.add_parser("check", parents=[common], help="verify items in the full environment")
    p.add_argument("--item")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the brute-force oracle on items within --oracle-bound")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("elicit", parents=[common], help="print direct need sets")
    p.add_argument("--item")
    p.add_argument("--minimize", action="store_true",
                   help="also print a greedily minimized sufficient attachment set")
    p.set_defaults(func=_cmd_elicit)

    p = sub.add_parser("closure", parents=[common], help="print indirect need sets")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("report", parents=[common], help="print per-property usage counts")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CORPUS if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _CorpusError as exc:
        _err(str(exc))
        return EXIT_CORPUS
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    except BaselineFailed as exc:
        _err(str(exc))
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
