"""
Command-line interface.

    sboxopt analyze  INPUT [INPUT ...] [--format text|json|csv]
    sboxopt compare  INPUT [INPUT ...] [--format text|json|csv]
    sboxopt optimize --algorithm hill|bandit|compose [--seed S] [--runs R] ...
    sboxopt corpus   list | export ID [-o FILE]

INPUT is a path to an ``.sbx`` file or a corpus id.  Exit status: 0 on
success, 1 on usage errors, 2 on unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .bandit import BanditConfig, bandit_optimize
from .corpus import corpus_get, corpus_ids, corpus_list
from .hill import HillClimbConfig, hill_climb, random_sbox
from .report import ComparisonTable, analyze, format_decimal, render_report
from .sbox import MAX_N, MIN_N, InvalidSBoxError, SBox, read_sbox, serialize_sbox, write_sbox

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_input(arg: str) -> tuple[str, SBox]:
    """Resolve an INPUT argument to ``(label, sbox)``."""
    if os.path.exists(arg):
        try:
            return os.path.basename(arg), read_sbox(arg)
        except (InvalidSBoxError, OSError, UnicodeDecodeError) as exc:
            raise InputError(f"{arg}: {exc}") from None
    if arg in corpus_ids():
        return arg, corpus_get(arg).sbox
    raise InputError(f"{arg}: no such file or corpus id")


def _cmd_analyze(args) -> int:
    loaded = [load_input(x) for x in args.inputs]
    reports = [analyze(s, label, args.magnitude, args.sac_matrix) for label, s in loaded]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        sys.stdout.write(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n")
    elif args.format == "csv":
        text = render_report(reports[0], "csv")
        for r in reports[1:]:
            text += render_report(r, "csv").split("\n", 1)[1]
        sys.stdout.write(text)
    else:
        sys.stdout.write("\n".join(render_report(r) for r in reports))
    return EXIT_OK


def _cmd_compare(args) -> int:
    table = ComparisonTable.from_sboxes(load_input(x) for x in args.inputs)
    sys.stdout.write(table.render(args.format))
    return EXIT_OK


def _one_run(job: dict) -> dict:
    """Run one seeded pipeline; returns a json-ready record plus the final S-box."""
    seed, algorithm = job["seed"], job["algorithm"]
    start = job["start"] if job["start"] is not None else random_sbox(job["n"], seed)
    stages = []
    current = start
    if algorithm in ("hill", "compose"):
        trace = hill_climb(current, HillClimbConfig(
            magnitude=job["magnitude"], freeze=job["freeze"], max_stall=job["max_stall"],
            seed=seed, max_iterations=job["max_iterations"]))
        stages.append(trace)
        current = trace.final_sbox
    if algorithm in ("bandit", "compose"):
        stall = job["bandit_max_stall"] if algorithm == "compose" else job["max_stall"]
        trace = bandit_optimize(current, BanditConfig(
            magnitude=job["magnitude"], seed=seed, max_stall=stall, freeze=job["freeze"],
            max_iterations=job["max_iterations"]))
        stages.append(trace)
        current = trace.final_sbox
    final = stages[-1].final_metrics
    record = {
        "seed": seed,
        "start_acnv": str(analyze(start).acnv),
        "stages": [t.summary(with_history=job["trace"]) for t in stages],
        "final_acnv": str(final.acnv),
        "final_sbox": serialize_sbox(current).strip(),
    }
    return record


def _cmd_optimize(args) -> int:
    start = None
    n = args.n
    label = "random"
    if args.input is not None:
        label, start = load_input(args.input)
        n = start.n
    if not MIN_N <= n <= MAX_N:
        raise UsageError(f"--n must be in [{MIN_N}, {MAX_N}]")
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    if not 0 <= args.freeze < (1 << n) - 1:
        raise UsageError(f"--freeze must be in [0, {(1 << n) - 2}] for n={n}")
    if args.freeze and start is None:
        raise UsageError("--freeze needs --input (a random start has nothing to preserve)")
    for name in ("max_stall", "bandit_max_stall"):
        v = getattr(args, name)
        if v is not None and v < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
    if not 0 <= args.seed < 2 ** 64 or args.seed + args.runs > 2 ** 64:
        raise UsageError("--seed (plus --runs) must fit in 64 bits")

    jobs = [dict(seed=args.seed + r, algorithm=args.algorithm, start=start, n=n,
                 magnitude=args.magnitude, freeze=args.freeze, max_stall=args.max_stall,
                 bandit_max_stall=args.bandit_max_stall, max_iterations=args.max_iterations,
                 trace=args.trace) for r in range(args.runs)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            runs = list(pool.map(_one_run, jobs))
    else:
        runs = [_one_run(j) for j in jobs]

    best_index = max(range(len(runs)), key=lambda r: (Fraction(runs[r]["final_acnv"]), -r))
    best = runs[best_index]
    best_sbox = SBox(int(t, 16) for t in best["final_sbox"].split())
    summary = {
        "version": __version__,
        "algorithm": args.algorithm,
        "input": label,
        "n": n,
        "magnitude": args.magnitude,
        "freeze": args.freeze,
        "seeds": [r["seed"] for r in runs],
        "best_run": best_index,
        "best_acnv": best["final_acnv"],
        "best_metrics": analyze(best_sbox, f"{args.algorithm} seed {best['seed']}",
                                args.magnitude).to_dict(),
        "runs": runs,
    }
    text = json.dumps(summary, indent=2) + "\n"
    if args.output:
        layout = "grid16" if n == 8 else "flat"
        header = (f"{args.algorithm} from {label}, seed {best['seed']}, magnitude {args.magnitude}, "
                  f"ACNV {format_decimal(Fraction(best['final_acnv']))}")
        write_sbox(args.output, best_sbox, layout, header)
    summary_path = args.summary or (os.path.splitext(args.output)[0] + ".json" if args.output else None)
    if summary_path:
        with open(summary_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if summary_path or args.output:
        sys.stderr.write(render_report(analyze(best_sbox, summary["best_metrics"]["source"])))
    return EXIT_OK


def _cmd_corpus(args) -> int:
    if args.action == "list":
        width = max(len(k) for k in corpus_ids())
        for k, prov in corpus_list():
            sys.stdout.write(f"{k:<{width}}  {prov}\n")
        return EXIT_OK
    if args.id is None:
        raise UsageError("corpus export needs an id")
    try:
        entry = corpus_get(args.id)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    layout = args.layout or ("grid16" if entry.sbox.n == 8 else "flat")
    text = serialize_sbox(entry.sbox, layout, f"{entry.id}: {entry.provenance}")
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sboxopt", description="Analyze and optimize bijective S-boxes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="report NL, coordinate NLs, ACNV and SAC")
    a.add_argument("inputs", nargs="+", metavar="INPUT")
    a.add_argument("--format", choices=("text", "json", "csv"), default="text")
    a.add_argument("--magnitude", type=int, default=None,
                   help="also report the fitness E(S) for this magnitude")
    a.add_argument("--sac-matrix", action="store_true", help="include the full SAC matrix")

    c = sub.add_parser("compare", help="table of min/max coordinate NL and ACNV, sorted by ACNV")
    c.add_argument("inputs", nargs="+", metavar="INPUT")
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")

    o = sub.add_parser("optimize", help="run hill climbing, the bandit optimizer, or both")
    o.add_argument("--algorithm", choices=("hill", "bandit", "compose"), default="hill")
    o.add_argument("--input", default=None, help="start S-box (file or corpus id); default random")
    o.add_argument("--n", type=int, default=8, help="dimension of a random start (default 8)")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--runs", type=int, default=1, help="runs with seeds seed, seed+1, ...")
    o.add_argument("--magnitude", type=int, default=10)
    o.add_argument("--freeze", type=int, default=0, help="keep the first K DLUT entries fixed")
    o.add_argument("--max-stall", type=int, default=None,
                   help="consecutive rejections before stopping (hill stage for compose)")
    o.add_argument("--bandit-max-stall", type=int, default=None,
                   help="stall bound of the bandit stage in compose")
    o.add_argument("--max-iterations", type=int, default=None, help="hard cap per stage")
    o.add_argument("--output", default=None, help="write the best S-box here (.sbx)")
    o.add_argument("--summary", default=None, help="json summary path (default: OUTPUT with .json)")
    o.add_argument("--trace", action="store_true", help="include fitness histories in the summary")
    o.add_argument("--jobs", type=int, default=1, help="worker processes for --runs > 1")

    k = sub.add_parser("corpus", help="list or export embedded S-boxes")
    k.add_argument("action", choices=("list", "export"))
    k.add_argument("id", nargs="?")
    k.add_argument("-o", "--output", default=None)
    k.add_argument("--layout", choices=("flat", "grid16"), default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "magnitude", None) is not None and args.magnitude < 1:
            raise UsageError("--magnitude must be >= 1")
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "optimize":
            return _cmd_optimize(args)
        return _cmd_corpus(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"sboxopt: error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        sys.stderr.write(f"sboxopt: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
