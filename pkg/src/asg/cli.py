"""Command-line harness: bounds, curves, designs, protocol runs, games,
exact strategy counts, problem reductions, and the verification suite.

Every command is deterministic: the same invocation produces the same
bytes.  Ratios are rationals (P/Q or an integer); float notation is
rejected so results never depend on binary rounding of the arguments.
Usage and domain errors exit with status 2; a failed verification run
(verify or suite) exits with status 1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from asg.adversary import (
    exact_strategy_count,
    max_no_advice_game,
    min_game_against,
    strategy_count_bounds,
    weight_class,
)
from asg.algorithms import aoc_generic, covering_max, covering_min, trivial_max, trivial_min
from asg.bounds import bound_report
from asg.core import (
    MINUS_INF,
    PLUS_INF,
    Variant,
    all_bitstrings,
    asg_opt,
    ceil_log2,
    competitive_ok,
    run_asg,
    score_to_json,
)
from asg.designs import design_for, exact_cover_number, greedy_cover
from asg.problems import CONSTRUCTIONS, PROBLEMS
from asg.reductions import REDUCTION_VARIANT, REDUCTIONS, ReductionError, lift_to_asg
from asg.suite import (
    BATTERY_ORDER,
    ExperimentConfig,
    emit_curve,
    render_curve,
    run_suite,
    standard_max_behaviors,
)

__all__ = ["main"]

PROTOCOLS = {
    "trivial-min": ("min", trivial_min),
    "trivial-max": ("max", trivial_max),
    "covering-min": ("min", covering_min),
    "covering-max": ("max", covering_max),
}


def rational(text: str) -> Fraction:
    """P/Q or an integer; floating-point notation is refused outright."""
    if "." in text or "e" in text or "E" in text:
        raise argparse.ArgumentTypeError(f"{text!r} looks like a float; give P/Q or an integer")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational")


def bitstring(text: str) -> str:
    if any(ch not in "01" for ch in text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a 0/1 string")
    return text


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as handle:
            handle.write(text)


def _emit_json(payload, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


def _run_report(name: str, c: Fraction, variant: Variant, pair, x: str) -> dict:
    res = run_asg(variant, pair, x)
    return {
        "protocol": name,
        "c": str(c),
        "history": variant.history,
        "x": x,
        "y": res.y,
        "score": score_to_json(res.score),
        "opt": score_to_json(asg_opt(variant.objective, x)),
        "bits": res.bits,
        "budget": pair.budget(len(x)),
    }


def cmd_bounds(args) -> int:
    _emit_json(bound_report(args.n, args.c).to_json(), args.out)
    return 0


def cmd_curve(args) -> int:
    points = emit_curve(args.c_min, args.c_max, args.steps, args.n)
    _emit(render_curve(points, args.format), args.out)
    return 0


def cmd_design(args) -> int:
    if args.method == "exact":
        design = exact_cover_number(args.v, args.k, args.t)
    elif args.method == "greedy":
        design = greedy_cover(args.v, args.k, args.t)
    else:
        design = design_for(args.v, args.k, args.t)
    _emit_json(design.to_json(), args.out)
    return 0


def cmd_simulate(args) -> int:
    objective, factory = PROTOCOLS[args.protocol]
    variant = Variant((objective, args.history))
    pair = factory(args.c)
    _emit_json(_run_report(args.protocol, args.c, variant, pair, args.x), args.out)
    return 0


def cmd_verify(args) -> int:
    """Exhaustively re-check one protocol up to a length; exit 1 on failure."""
    objective, factory = PROTOCOLS[args.protocol]
    variant = Variant((objective, "unknown"))
    pair = factory(args.c)
    target = args.c if args.protocol.startswith("covering") else Fraction(math.ceil(args.c))
    infeasible = PLUS_INF if objective == "min" else MINUS_INF
    checked = 0
    witness = None
    for n in range(args.n_max + 1):
        for x in all_bitstrings(n):
            res = run_asg(variant, pair, x)
            checked += 1
            if (
                res.score == infeasible
                or not competitive_ok(objective, res.score, asg_opt(objective, x), target, 0)
                or res.bits > pair.budget(n)
            ):
                witness = _run_report(args.protocol, args.c, variant, pair, x)
                break
        if witness:
            break
    _emit_json(
        {
            "protocol": args.protocol,
            "c": str(args.c),
            "target": str(target),
            "n_max": args.n_max,
            "checked": checked,
            "passed": witness is None,
            "witness": witness,
        },
        args.out,
    )
    return 0 if witness is None else 1


def cmd_adversary(args) -> int:
    if args.game == "min":
        if args.strings is not None:
            with open(args.strings) as handle:
                alive = json.load(handle)
            if not isinstance(alive, list):
                raise ValueError("the strings file must hold a JSON list of 0/1 strings")
        else:
            if args.n is None or args.weight is None:
                raise ValueError("--game min needs --strings or both --n and --weight")
            alive = weight_class(args.n, args.weight)
            if args.m is not None:
                alive = alive[: args.m]
        _emit_json(min_game_against(alive).to_json(), args.out)
        return 0
    if args.n is None or args.m is None:
        raise ValueError("--game max needs --n and --m")
    outcome = max_no_advice_game(standard_max_behaviors(args.m), args.n)
    _emit_json(outcome.to_json(), args.out)
    return 0


def cmd_brute(args) -> int:
    cover = exact_strategy_count(args.n, args.c, args.variant, limit=args.limit)
    lo, hi = strategy_count_bounds(args.n, args.c, args.variant)
    payload = cover.to_json()
    payload.update(
        {
            "n": args.n,
            "c": str(args.c),
            "objective": args.variant,
            "lower_bits": ceil_log2(lo),
            "upper_bits": ceil_log2(hi),
        }
    )
    _emit_json(payload, args.out)
    return 0


def cmd_reduce(args) -> int:
    instance = CONSTRUCTIONS[args.to](args.x)
    _emit_json(instance.to_json(), args.out)
    return 0


def cmd_lift(args) -> int:
    problem = PROBLEMS[args.to]
    pair = aoc_generic(problem, args.c)
    lifted = lift_to_asg(pair, args.to)
    variant = REDUCTION_VARIANT[args.to]
    report = _run_report(f"lift-{args.to}", args.c, variant, lifted, args.x)
    _emit_json(report, args.out)
    return 0


def cmd_suite(args) -> int:
    config = ExperimentConfig(
        seed=args.seed,
        n_max=args.n_max,
        grid_max=args.grid_max,
        ratios=tuple(args.c) if args.c else None,
        output_format=args.format,
    )
    report = run_suite(config, only=args.only or None)
    _emit(report.render(), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asg", description="advice complexity of string guessing: tools and checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("bounds", help="advice bound and envelopes for one (n, c)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=rational, required=True)
    add_out(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("curve", help="sample the per-request advice curve")
    p.add_argument("--c-min", type=rational, required=True)
    p.add_argument("--c-max", type=rational, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--n", type=int, default=10**6)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_out(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("design", help="covering design for (v, k, t)")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("auto", "exact", "greedy"), default="auto")
    add_out(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("simulate", help="run one protocol on one input")
    p.add_argument("--protocol", choices=sorted(PROTOCOLS), required=True)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--x", type=bitstring, required=True)
    p.add_argument("--history", choices=("known", "unknown"), default="unknown")
    add_out(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="exhaustively re-check one protocol")
    p.add_argument("--protocol", choices=sorted(PROTOCOLS), required=True)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--n-max", type=int, default=8)
    add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("adversary", help="play a lower-bound game")
    p.add_argument("--game", choices=("min", "max"), required=True)
    p.add_argument("--strings", metavar="FILE", help="JSON list of alive strings (min game)")
    p.add_argument("--n", type=int)
    p.add_argument("--weight", type=int, help="alive weight class (min game)")
    p.add_argument("--m", type=int, help="alive set size (min) / strategies to defeat (max)")
    add_out(p)
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("brute", help="exact minimum strategy count for tiny n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--variant", choices=("min", "max"), default="min")
    p.add_argument("--limit", type=int)
    add_out(p)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("reduce", help="build a problem instance from a guessing input")
    p.add_argument("--from", dest="x", type=bitstring, required=True, metavar="BITS")
    p.add_argument("--to", choices=sorted(REDUCTIONS), required=True)
    add_out(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("lift", help="run a lifted problem protocol on a guessing input")
    p.add_argument("--from", dest="x", type=bitstring, required=True, metavar="BITS")
    p.add_argument("--to", choices=sorted(REDUCTIONS), required=True)
    p.add_argument("--c", type=rational, required=True)
    add_out(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("suite", help="run the verification batteries")
    p.add_argument("--only", nargs="+", choices=BATTERY_ORDER, metavar="BATTERY")
    p.add_argument("--n-max", type=int)
    p.add_argument("--grid-max", type=int)
    p.add_argument("--c", nargs="+", type=rational, metavar="P/Q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    add_out(p)
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError, OSError, ReductionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
