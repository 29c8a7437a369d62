"""Command-line entry point: ``flowspan <command> ...``.

Exit codes: 0 success, 1 bound violation found by ``search``,
2 invalid input or usage, 3 solver resource limit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .analyze import (
    classify_ld,
    exhaustive_space,
    ld_bound,
    random_space,
    ratio_report,
    search,
)
from .core import InvalidInput, ResourceLimit, Schedule
from .exact import optimal_makespan
from .gantt import render_gantt
from .generate import tight_family
from .io import emit_instance, parse_instance_file
from .ld import ld_schedule
from .transforms import box_reduce, preserves_ranks, reduce

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator} ({float(q):.6f})"


def _schedule_lines(sched: Schedule) -> list[str]:
    p = sched.instance.times
    lines = []
    for i, row in enumerate(sched.grid):
        jobs = " ".join(f"J{j + 1}={p[j]}" for j in reversed(row))
        lines.append(f"  M{i + 1}: {jobs}  load={sched.loads[i]}")
    return lines


def cmd_ld(args):
    inst = parse_instance_file(args.file)
    sched, t_ld, profiles = ld_schedule(inst)
    print(f"LD schedule (m={inst.m}, k={inst.k}), machines run rank k first:")
    print("\n".join(_schedule_lines(sched)))
    print(f"t_LD={t_ld}  flowtime={sched.flowtime}")
    for prof in profiles:
        print(f"  profile after rank {prof.rank}: {list(prof.values)}")


def cmd_opt(args):
    inst = parse_instance_file(args.file)
    res = optimal_makespan(inst)
    print(f"t*={res.t_star}  rectangular={'yes' if res.rectangular else 'no'}  nodes={res.nodes_explored}")
    print("canonical optimal schedule:")
    print("\n".join(_schedule_lines(res.schedule)))


def cmd_ratio(args):
    rep = ratio_report(parse_instance_file(args.file))
    print(rep.summary())
    if not rep.degenerate:
        print(f"ratio={_frac(rep.ratio)}  bound={_frac(rep.bound)}")


def cmd_bound(args):
    if args.m < 1:
        raise InvalidInput(f"--m must be positive, got {args.m}")
    print(_frac(ld_bound(args.m)))


def cmd_family(args):
    sys.stdout.write(emit_instance(tight_family(args.m), args.output_format))


def cmd_reduce(args):
    inst = parse_instance_file(args.file)
    if args.command == "reduce":
        out = reduce(inst, args.rank)
        if not preserves_ranks(inst, args.rank):
            print("note: rank partition changed; output was re-sorted", file=sys.stderr)
    else:
        out = box_reduce(inst, args.rank)
    sys.stdout.write(emit_instance(out, args.output_format))


def cmd_classify(args):
    c = classify_ld(parse_instance_file(args.file))

    def idx(i):
        return "-" if i is None else f"M{i + 1}"

    print(f"machines at makespan: {c.max_load_machines}")
    print(f"unique makespan machine i': {idx(c.i_prime)}")
    print(f"IR1 shape (lambda_k on every makespan machine): {c.has_lambda_k_on_max_machines}")
    print(f"I2 shape (i' holds lambda_r for r >= 2): {c.i_prime_carries_all_lambdas}")
    print(f"i' rank-1 job equals mu_1: {c.i_prime_rank1_is_mu1}")
    print(f"i'' (load after rank k-1 >= that of i'): {idx(c.i_double_prime)}")


def cmd_search(args):
    if args.random:
        space = random_space(args.m, args.k, args.pmax, args.trials, args.seed)
    else:
        space = exhaustive_space(args.m, args.k, args.pmax)
    outcome = search(space, jobs=args.jobs)
    print(outcome.summary())
    for inst in outcome.violations:
        print(f"VIOLATION m={inst.m} times={list(inst.times)}")
    if args.show_tight:
        for inst in outcome.tight:
            print(f"tight m={inst.m} times={list(inst.times)}")
    for inst, msg in outcome.failures:
        print(f"failed m={inst.m} times={list(inst.times)}: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if outcome.violations else EXIT_OK


def cmd_gantt(args):
    inst = parse_instance_file(args.file)
    sched = optimal_makespan(inst).schedule if args.optimal else ld_schedule(inst).schedule
    text = render_gantt(sched, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowspan",
        description="LD heuristic, exact solver and bound checks for makespan over flowtime-optimal schedules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in [
        ("ld", cmd_ld, "LD schedule, t_LD and profiles"),
        ("opt", cmd_opt, "optimal makespan and canonical witness"),
        ("ratio", cmd_ratio, "t_LD / t* against (5m-2)/(4m-1)"),
        ("classify", cmd_classify, "IR1 / I2 shape predicates of the LD schedule"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("bound", help="print (5m-2)/(4m-1)")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("family", help="emit the tight instance for m machines")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", dest="output_format", action="store_const", const="json", default="text")
    p.set_defaults(func=cmd_family)

    for name in ("reduce", "box-reduce"):
        p = sub.add_parser(name, help=f"emit {name.upper()}(instance, rank)")
        p.add_argument("file")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--json", dest="output_format", action="store_const", const="json", default="text")
        p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("search", help="check the bound over many instances")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every sorted instance (default)")
    mode.add_argument("--random", action="store_true", help="uniform random instances")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--show-tight", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gantt", help="render a schedule")
    p.add_argument("file")
    p.add_argument("--optimal", action="store_true", help="chart the canonical optimum instead of LD")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gantt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
