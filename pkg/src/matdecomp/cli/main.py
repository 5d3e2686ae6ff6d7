"""Command-line front end.

    matdecomp oracle FILE ELEMENTS...         independent=0|1
    matdecomp classes FILE --U 1,2 [--relation sim|refine]
    matdecomp width FILE [--which bw|dw]
    matdecomp parse-tree FILE [--lam K]
    matdecomp gen NAME [--seed S] [--count K] [--max-elements N]
    matdecomp suite NAME [--seed S] [--count K] [--max-elements N] [--format csv|text]

Results go to stdout one per line. The exit status is 0 when every check
passed, 1 when a check failed and 2 on bad input or a size guard.
"""
from __future__ import annotations

import argparse
import sys

from ..automata import lattice_parse
from ..core import DomainError, SizeGuardError, guard
from ..decomp import branch_width, decomposition_width, sim_count
from ..pigeonhole import class_count, refinement_for
from ..zoo import LatticePathPresentation, oracle_for
from .formats import parse_instance, write_instance, write_parse_tree
from .generators import GENERATORS, generate
from .suites import SUITES, run_suite

__all__ = ["main", "build_parser"]


def _read(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _ids(text: str) -> list:
    return [int(x) for x in text.replace(",", " ").split()] if text else []


def cmd_oracle(args) -> int:
    M = oracle_for(_read(args.file))
    X = [int(x) for x in args.elements]
    unknown = [x for x in X if x not in M.ground]
    if unknown:
        raise DomainError(f"element {unknown[0]} is not in the ground set")
    print(f"independent={int(M.is_independent(X))}")
    return 0


def cmd_classes(args) -> int:
    p = _read(args.file)
    M = oracle_for(p)
    U = _ids(args.U)
    if not set(U) <= set(M.ground):
        raise DomainError("U is not a subset of the ground set")
    guard(len(M.ground), args.max_elements or 16)
    if args.relation == "sim":
        print(f"classes={sim_count(M, U)}")
    else:
        print(f"classes={class_count(M, U, refinement_for(p, M, U))}")
    return 0


def cmd_width(args) -> int:
    M = oracle_for(_read(args.file))
    limit = args.max_elements or 10
    if args.which == "bw":
        print(f"bw={branch_width(M, limit=limit)}")
    else:
        print(f"dw={decomposition_width(M, limit=limit)}")
    if len(M.ground) <= 2:
        # no tree with an internal edge exists; the value counts classes of singleton displays
        print("note: two or fewer elements, width taken from singleton displays", file=sys.stderr)
    return 0


def cmd_parse_tree(args) -> int:
    p = _read(args.file)
    if not isinstance(p, LatticePathPresentation):
        raise DomainError("parse trees are built for lattice path instances")
    sys.stdout.write(write_parse_tree(lattice_parse(p, args.lam)))
    return 0


def cmd_gen(args) -> int:
    for i, p in enumerate(generate(args.name, args.seed, args.count, args.max_elements)):
        if i:
            print("---")
        sys.stdout.write(write_instance(p))
    return 0


def cmd_suite(args) -> int:
    report = run_suite(args.name, args.seed, args.count, args.max_elements)
    sys.stdout.write(report.to_csv() if args.format == "csv" else report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matdecomp", description="Matroid decompositions and boundary classes")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--max-elements", type=int, default=None)
        p.add_argument("--format", choices=("csv", "text"), default="csv")

    p = sub.add_parser("oracle", help="query the independence oracle")
    p.add_argument("file")
    p.add_argument("elements", nargs="*")
    p.set_defaults(func=cmd_oracle)
    common(p)

    p = sub.add_parser("classes", help="count boundary classes of U")
    p.add_argument("file")
    p.add_argument("--U", required=True, help="comma-separated elements")
    p.add_argument("--relation", choices=("sim", "refine"), default="sim")
    p.set_defaults(func=cmd_classes)
    common(p)

    p = sub.add_parser("width", help="exact branch-width or decomposition-width")
    p.add_argument("file")
    p.add_argument("--which", choices=("bw", "dw"), default="bw")
    p.set_defaults(func=cmd_width)
    common(p)

    p = sub.add_parser("parse-tree", help="parse tree and automaton of a lattice path matroid")
    p.add_argument("file")
    p.add_argument("--lam", type=int, default=None)
    p.set_defaults(func=cmd_parse_tree)
    common(p)

    p = sub.add_parser("gen", help="random instances")
    p.add_argument("name", choices=sorted(GENERATORS))
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)
    common(p)

    p = sub.add_parser("suite", help="run an experiment suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--count", type=int, default=None, help="instances per class")
    p.set_defaults(func=cmd_suite)
    common(p)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
