"""Command-line front end: ``octoclifford gen|verify|rank``.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 I/O error.  Reports go to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import matrix as mx
from .algebra import DIMENSIONS
from .appendix import APPENDIX_RECIPES, appendix_tables
from .clifford import NAIVE, PRIORITY, cliff70_set, cliff76_set, quaternion_gamma_set, so7_basis, so8_basis
from .matrix import IntMatrix, MatrixLabel, span_rank
from .reps import complex_basis, left_matrix, mixed_matrix, quaternion_operators, right_matrix
from .suites import SUITE_NAMES, run_suite
from .words import LEFT, RIGHT, degrees_of_freedom, parse_word, r_op, translate

log = logging.getLogger("octoclifford")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

GAMMA_SETS = {
    "quaternion": (quaternion_gamma_set, 1),
    "cliff70-left": (lambda: cliff70_set(LEFT), 1),
    "cliff70-right": (lambda: cliff70_set(RIGHT), 1),
    "cliff76": (cliff76_set, 0),
}


class UsageError(Exception):
    pass


# -- gen ------------------------------------------------------------------------

def _gamma_matrices(set_name: str) -> list[IntMatrix]:
    build, first = GAMMA_SETS[set_name]
    gs = build()
    out = []
    for k, w in enumerate(gs.generators, start=first):
        lefts, rights = w.lefts(), w.rights()
        if lefts and rights:
            # a barred generator has no single faithful matrix: emit both sectors
            for side, idxs, make in (("left", lefts, left_matrix), ("right", rights, right_matrix)):
                m = mx.product([make(gs.algebra, i) for i in idxs], DIMENSIONS[gs.algebra])
                out.append(m.relabel(MatrixLabel(gs.algebra, side, tuple(idxs),
                                                 f"gamma{k}:{side} ({w.paper_notation()})")))
        else:
            out.append(translate(w, gs.algebra).relabel(
                MatrixLabel(gs.algebra, "left" if lefts else "right", tuple(lefts or rights),
                            f"gamma{k} ({w.paper_notation()})")))
    return out


def _gen_matrices(args) -> list[IntMatrix]:
    idx = args.index or []
    if args.target in ("left", "right"):
        if len(idx) != 1:
            raise UsageError(f"gen {args.target} needs exactly one --index")
        make = left_matrix if args.target == "left" else right_matrix
        return [make(args.algebra, idx[0])]
    if args.target == "mixed":
        if len(idx) != 2:
            raise UsageError("gen mixed needs two --index values (left, right)")
        if args.algebra not in ("H", "O"):
            raise UsageError("gen mixed needs --algebra H or O")
        return [mixed_matrix(idx[0], idx[1], args.algebra)]
    if args.target == "appendix":
        tables = appendix_tables()
        if args.label is None:
            return list(tables.values())
        if args.label not in tables:
            raise UsageError(f"unknown appendix label {args.label!r}; choose from {', '.join(APPENDIX_RECIPES)}")
        return [tables[args.label]]
    if args.target == "gamma":
        return _gamma_matrices(args.set)
    raise UsageError(f"unknown target {args.target!r}")


def _serialize(ms: list[IntMatrix], fmt: str) -> str:
    if fmt == "json":
        return mx.to_json(ms[0] if len(ms) == 1 else ms, indent=None) + "\n"
    chunks = []
    for m in ms:
        body = mx.to_csv(m) if fmt == "csv" else mx.to_plain(m) + "\n"
        chunks.append(body if len(ms) == 1 else f"# {m.label}\n{body}")
    return "\n".join(chunks)


def cmd_gen(args) -> int:
    try:
        ms = _gen_matrices(args)
    except (IndexError, ValueError, UsageError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    text = _serialize(ms, args.format)
    if args.output and args.output != "-":
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            log.error("cannot write %s: %s", args.output, exc)
            return EXIT_IO
        log.info("wrote %d matrices to %s", len(ms), args.output)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify -----------------------------------------------------------------------

def cmd_verify(args) -> int:
    log.info("running suite %s (%s semantics)", args.suite, args.semantics)
    report = run_suite(args.suite, args.semantics)
    for r in report["results"]:
        log.info("  %-20s %4d checks  %s", r["suite"], r["checks_run"], "PASS" if r["pass"] else "FAIL")
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output and args.output != "-":
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            log.error("cannot write %s: %s", args.output, exc)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["pass"] else EXIT_FAIL


# -- rank -------------------------------------------------------------------------

def _preset_octonion_two_sided():
    ops = [left_matrix("O", i) for i in range(1, 8)] + [right_matrix("O", j) for j in range(1, 8)]
    ops += [translate(r_op(i, j)) for i in range(1, 8) for j in range(1, 8)]
    return span_rank(ops)


# name -> (callable returning the rank, expected value or None)
PRESETS = {
    "quaternion-16": (lambda: span_rank(quaternion_operators()), 16),
    "complex-basis": (lambda: span_rank(complex_basis()), 4),
    "octonion-two-sided": (_preset_octonion_two_sided, 63),
    "octonion-128": (lambda: degrees_of_freedom()["parameter_count"], 128),
    "so7-left": (lambda: so7_basis(LEFT).dimension, 21),
    "so7-right": (lambda: so7_basis(RIGHT).dimension, 21),
    "so8-left": (lambda: so8_basis(LEFT).dimension, 28),
    "so8-right": (lambda: so8_basis(RIGHT).dimension, 28),
}


def cmd_rank(args) -> int:
    if args.preset and args.words:
        log.error("give either word literals or --preset, not both")
        return EXIT_USAGE
    if args.preset:
        compute, expected = PRESETS[args.preset]
        r = compute()
        print(r)
        if expected is not None:
            print(f"expected: {expected}")
            return EXIT_OK if r == expected else EXIT_FAIL
        return EXIT_OK
    if not args.words:
        log.error("nothing to rank: pass word literals such as L1 R4 L2.R3, or --preset")
        return EXIT_USAGE
    try:
        ms = [translate(parse_word(w), args.algebra) for w in args.words]
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    print(span_rank(ms))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octoclifford", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit operator matrices")
    g.add_argument("target", choices=["left", "right", "mixed", "appendix", "gamma"])
    g.add_argument("--algebra", choices=["C", "H", "O"], default="O")
    g.add_argument("--index", type=int, action="append", help="imaginary unit index (repeat for mixed)")
    g.add_argument("--label", help="appendix entry, e.g. e3 or 1|e6 (default: all 14)")
    g.add_argument("--set", choices=sorted(GAMMA_SETS), default="cliff76")
    g.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    g.add_argument("-o", "--output", help="write to a file instead of stdout")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=list(SUITE_NAMES) + ["all"], default="all")
    v.add_argument("--semantics", choices=[PRIORITY, NAIVE], default=PRIORITY)
    v.add_argument("-o", "--output", help="write the report to a file instead of stdout")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rank", help="span rank of operator words or a preset list")
    r.add_argument("words", nargs="*", help="word literals such as L1, R4, L2.L1.R4")
    r.add_argument("--preset", choices=sorted(PRESETS))
    r.add_argument("--algebra", choices=["H", "O"], default="O")
    r.set_defaults(func=cmd_rank)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
