"""Command-line front end.

Exit codes: 0 = YES/ACCEPT, 1 = NO/REJECT, 2 = usage or input error,
3 = resource budget exceeded. The machine-readable verdict (`yes` or `no`)
goes to stdout; diagnostics go to stderr. Budgets come from
--budget-states/--budget-secs, falling back to REKONFIG_BUDGET_STATES and
REKONFIG_BUDGET_SECS, then to the library defaults.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io_formats
from .bounds import shortest_length_bound
from .errors import (
    FormatSemanticsError,
    FormatSyntaxError,
    PreconditionError,
    RekonfigError,
    ResourceBudgetError,
    SizeMismatchError,
)
from .exact import Budget, solve_exact
from .graph import FeasibilityKind, RuleKind, verify_sequence
from .oracles import SatMode, ncl_reachable, pmr_reachable, sat_decide
from .reductions import (
    add_isolated_pads,
    e3sat_to_inte3sat,
    grid_draw,
    inte3sat_to_isr,
    ncl_to_isr,
    planarize,
    pmr_to_isr,
)
from .xp import xp_vcr_solve

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget(args) -> Budget:
    states = args.budget_states
    secs = args.budget_secs
    if states is None:
        states = int(os.environ.get("REKONFIG_BUDGET_STATES", Budget.max_states))
    if secs is None:
        secs = float(os.environ.get("REKONFIG_BUDGET_SECS", Budget.max_seconds))
    return Budget(max_states=states, max_seconds=secs)


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _verdict(yes: bool) -> int:
    print("yes" if yes else "no")
    return EXIT_YES if yes else EXIT_NO


def _cmd_solve(args) -> int:
    inst = io_formats.parse_instance(_read(args.instance))
    want_cert = args.certificate is not None
    result = solve_exact(inst, want_shortest=args.shortest or want_cert, budget=_budget(args))
    if result.reachable and want_cert:
        _emit(io_formats.serialize_certificate(result.shortest), args.certificate)
    if result.reachable and args.shortest:
        print(f"shortest {result.shortest.length}", file=sys.stderr)
    return _verdict(result.reachable)


def _cmd_xp_vcr(args) -> int:
    inst = io_formats.parse_instance(_read(args.instance))
    if inst.kind is not FeasibilityKind.VERTEX_COVER:
        raise PreconditionError("xp-vcr needs a vertex-cover instance")
    if inst.rule.kind is not RuleKind.KTJ:
        raise PreconditionError("xp-vcr needs the ktj rule")
    mu = len(inst.start) - inst.rule.k
    if args.mu is not None and args.mu != mu:
        raise PreconditionError(
            f"--mu {args.mu} contradicts the instance (|s| - k = {mu})"
        )
    yes = xp_vcr_solve(inst.graph, inst.start, inst.target, mu, budget=_budget(args))
    return _verdict(yes)


def _cmd_verify(args) -> int:
    inst = io_formats.parse_instance(_read(args.instance))
    seq = io_formats.parse_certificate(_read(args.certificate), inst.graph.vertex_count)
    verdict = verify_sequence(inst, seq)
    if not verdict.accepted:
        print(f"reject at step {verdict.index}: {verdict.reason}", file=sys.stderr)
    return _verdict(verdict.accepted)


def _cmd_reduce(args) -> int:
    if args.compiler == "sat2int":
        phi = io_formats.parse_cnf(_read(args.input))
        _emit(io_formats.serialize_cnf(e3sat_to_inte3sat(phi)), args.output)
    elif args.compiler == "int2isr":
        phi = io_formats.parse_cnf(_read(args.input))
        inst, _ = inte3sat_to_isr(phi, mu=args.mu)
        _emit(io_formats.serialize_instance(inst), args.output)
    elif args.compiler == "planarize":
        phi = io_formats.parse_cnf(_read(args.input))
        inst, ann = inte3sat_to_isr(phi, mu=1)
        drawing = grid_draw(inst, ann)
        planar, ann = planarize(inst, drawing, ann, budget=_budget(args))
        planar, ann = add_isolated_pads(planar, ann, args.mu - 1)
        _emit(io_formats.serialize_instance(planar), args.output)
    elif args.compiler == "ncl2isr":
        machine, cs, ct = io_formats.parse_ncl(_read(args.input))
        inst, _ = ncl_to_isr(machine, cs, ct, args.k, RuleKind(args.rule))
        _emit(io_formats.serialize_instance(inst), args.output)
    elif args.compiler == "pmr2isr":
        g, ms, mt = io_formats.parse_pmr(_read(args.input))
        inst = pmr_to_isr(g, ms, mt, RuleKind(args.rule))
        _emit(io_formats.serialize_instance(inst), args.output)
    else:  # pragma: no cover - argparse restricts choices
        raise PreconditionError(f"unknown compiler {args.compiler}")
    return EXIT_YES


def _cmd_oracle(args) -> int:
    if args.problem == "sat":
        phi = io_formats.parse_cnf(_read(args.input))
        witness = sat_decide(phi, SatMode(args.mode))
        if witness is not None:
            model = " ".join(
                str(i + 1 if val else -(i + 1)) for i, val in enumerate(witness.values)
            )
            print(f"model {model}", file=sys.stderr)
        return _verdict(witness is not None)
    if args.problem == "ncl":
        machine, cs, ct = io_formats.parse_ncl(_read(args.input))
        return _verdict(ncl_reachable(machine, cs, ct))
    if args.problem == "pmr":
        g, ms, mt = io_formats.parse_pmr(_read(args.input))
        return _verdict(pmr_reachable(g, ms, mt))
    raise PreconditionError(f"unknown oracle {args.problem}")  # pragma: no cover


def _cmd_bound(args) -> int:
    b = shortest_length_bound(args.n, args.size, args.mu)
    print(f"max_length {b.max_length}")
    print(f"binomial_bound {b.binomial_bound}")
    print(f"loose_bound {b.loose_bound}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rekonfig",
        description="independent-set / vertex-cover reconfiguration toolkit",
    )
    parser.add_argument("--budget-states", type=int, default=None)
    parser.add_argument("--budget-secs", type=float, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact BFS decision")
    p.add_argument("instance")
    p.add_argument("--shortest", action="store_true")
    p.add_argument("--certificate", metavar="PATH")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("xp-vcr", help="XP algorithm for VCR under k-TJ")
    p.add_argument("instance")
    p.add_argument("--mu", type=int, default=None)
    p.set_defaults(func=_cmd_xp_vcr)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("instance")
    p.add_argument("--certificate", metavar="PATH", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="run an instance compiler")
    p.add_argument(
        "compiler", choices=["sat2int", "int2isr", "planarize", "ncl2isr", "pmr2isr"]
    )
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--mu", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--rule", choices=["ktj", "kts"], default="ktj")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force source-problem decision")
    p.add_argument("problem", choices=["sat", "ncl", "pmr"])
    p.add_argument("input")
    p.add_argument("--mode", choices=["any", "mixed"], default="any")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bound", help="shortest-sequence length bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ResourceBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatSyntaxError, FormatSemanticsError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, SizeMismatchError, RekonfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
