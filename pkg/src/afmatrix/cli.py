"""ICCMA-style command line front end.

    afmatrix --problem EE-ST --file x.apx
    afmatrix --problem DC-CO --file x.apx --arg b
    afmatrix supports
    afmatrix gen -n 12 -p 0.15 --seed 7
    afmatrix bench --sizes 20,40,60 -p 0.05 --figure bench.png
"""

import argparse
import csv
import sys
import time

from . import oracle
from .framework import AFError, detect_format, parse_af
from .generate import gen, random_af
from .solver import (
    SEMANTICS,
    TASKS,
    Stats,
    TaskSpec,
    UnknownQueryArgument,
    enumerate as enumerate_extensions,
    solve,
)
from .state import Mode, canonical_dump, render_matrix

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_QUERY = 4

PROBLEMS = [f"{t}-{s}" for t in TASKS for s in SEMANTICS]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _sort_key(af, numeric):
    if numeric:
        return lambda i: int(af.arguments[i])
    return lambda i: af.arguments[i]


def render_extension(af, ext, numeric=False):
    names = [af.arguments[i] for i in sorted(ext, key=_sort_key(af, numeric))]
    return "[" + ",".join(names) + "]"


def render_answer(af, task, answer, numeric=False):
    if task.task in ("DC", "DS"):
        return "YES" if answer else "NO"
    if task.task == "SE":
        return "NO" if answer is None else render_extension(af, answer, numeric)
    rendered = sorted(render_extension(af, e, numeric) for e in answer)
    return "[" + ",".join(rendered) + "]"


def _oracle_answer(af, task):
    kind = oracle.SemanticsKind.STABLE if task.mode is Mode.STABLE else oracle.SemanticsKind.COMPLETE
    exts = sorted(oracle.enumerate_brute(af, kind))
    if task.task == "EE":
        return exts
    if task.task == "SE":
        return exts[0] if exts else None
    if task.query not in af.index:
        raise UnknownQueryArgument(task.query)
    q = af.index[task.query]
    if task.task == "DC":
        return any(q in e for e in exts)
    return all(q in e for e in exts)


def _solve_parser():
    p = _Parser(prog="afmatrix", description="Stable and complete extensions of argumentation frameworks.")
    p.add_argument("--problem", "-p", required=True, help="one of: " + ", ".join(PROBLEMS))
    p.add_argument("--file", "-f", required=True)
    p.add_argument("--arg", "-a", dest="query")
    p.add_argument("--format", "-fo", choices=["apx", "iccma"], default=None)
    p.add_argument("--limit", type=int, default=None, help="stop EE after this many extensions")
    p.add_argument("--trace", action="store_true", help="dump every generated state to stderr")
    p.add_argument("--stats", action="store_true", help="print search counters to stderr")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    return p


def _run_solve(argv):
    args = _solve_parser().parse_args(argv)
    try:
        task = TaskSpec.parse(args.problem, args.query)
    except ValueError as e:
        print(f"afmatrix: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.limit is not None and args.limit < 1:
        print("afmatrix: error: --limit must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        af = parse_af(text, args.format)
    except OSError as e:
        print(f"afmatrix: error: cannot read {args.file}: {e.strerror}", file=sys.stderr)
        return EXIT_PARSE
    except AFError as e:
        print(f"afmatrix: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    numeric = (args.format or detect_format(text)) == "iccma"

    trace = None
    if args.trace:
        def trace(s):
            print(canonical_dump(s), file=sys.stderr)
            print(render_matrix(s), file=sys.stderr)
            print(file=sys.stderr)

    stats = Stats()
    try:
        if args.oracle:
            answer = _oracle_answer(af, task)
        elif task.task == "EE" and args.limit is not None:
            result = enumerate_extensions(af, task.mode, limit=args.limit, trace=trace)
            answer, stats = result.answer, result.stats
        else:
            result = solve(af, task, trace=trace)
            answer, stats = result.answer, result.stats
    except UnknownQueryArgument as e:
        print(f"afmatrix: error: unknown query argument {e}", file=sys.stderr)
        return EXIT_QUERY
    except oracle.TooLarge as e:
        print(f"afmatrix: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render_answer(af, task, answer, numeric))
    if args.stats:
        print(" ".join(f"{k}={v}" for k, v in stats.as_dict().items()), file=sys.stderr)
    return 0


def _run_supports(argv):
    _Parser(prog="afmatrix supports").parse_args(argv)
    for problem in PROBLEMS:
        print(problem)
    return 0


def _run_gen(argv):
    p = _Parser(prog="afmatrix gen", description="Write a seeded random apx instance.")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, required=True, help="attack probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--self-attack", type=float, default=0.0)
    args = p.parse_args(argv)
    try:
        sys.stdout.write(gen(args.n, args.p, args.seed, args.self_attack))
    except ValueError as e:
        print(f"afmatrix gen: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return 0


BENCH_FIELDS = [
    "problem", "n", "p", "seed", "extensions", "seconds",
    "states_expanded", "states_abandoned", "duplicates_suppressed", "peak_frontier",
]


def _run_bench(argv):
    p = _Parser(prog="afmatrix bench", description="Time enumeration on seeded random instances.")
    p.add_argument("--sizes", default="20,40,60,80,100")
    p.add_argument("-p", default="0.05", help="comma-separated attack probabilities")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--problem", default="EE-ST", choices=[x for x in PROBLEMS if x.startswith("EE")])
    p.add_argument("--figure", help="write a runtime plot to this path")
    args = p.parse_args(argv)
    try:
        sizes = [int(x) for x in args.sizes.split(",")]
        probs = [float(x) for x in args.p.split(",")]
    except ValueError:
        p.error("--sizes and -p take comma-separated numbers")
    task = TaskSpec.parse(args.problem)

    rows = []
    out = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS, lineterminator="\n")
    out.writeheader()
    for prob in probs:
        for n in sizes:
            for seed in range(args.seeds):
                af = random_af(n, prob, seed)
                t0 = time.perf_counter()
                result = solve(af, task)
                row = dict(
                    problem=args.problem, n=n, p=prob, seed=seed,
                    extensions=len(result.answer),
                    seconds=round(time.perf_counter() - t0, 4),
                    **result.stats.as_dict(),
                )
                out.writerow(row)
                sys.stdout.flush()
                rows.append(row)
    if args.figure:
        from .plotting import plot_bench

        plot_bench(rows, args.figure, title=args.problem)
    return 0


COMMANDS = {"supports": _run_supports, "gen": _run_gen, "bench": _run_bench}


def run(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    handler = _run_solve
    if argv and argv[0] in COMMANDS:
        handler, argv = COMMANDS[argv[0]], argv[1:]
    try:
        return handler(argv)
    except SystemExit as e:
        # argparse exits on --help and usage errors
        return e.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
