"""Command line frontend: verify, solve, family, and lemmas subcommands.

Exit codes: 0 success (or pattern forced), 2 non-periodic witnesses
found, 3 lemma oracle violation, 64 usage error, 65 invalid parameter
words.  JSON output is the stable machine interface; text output is for
humans and may change.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .equations import (
    EquationInstance,
    Exponents,
    SolutionReport,
    enumerate_solutions,
    forcing_verdict,
    theorem_applies,
)
from .families import CommutingParametersError, family_i1k1, family_j2, validate_family_grid
from .oracles import run_lemma_suite
from .words import check_letters

EX_OK = 0
EX_WITNESS = 2
EX_LEMMA = 3
EX_USAGE = 64
EX_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _default_shards() -> int:
    env = os.environ.get("WORDEQ_SHARDS", "")
    if env.isdigit() and int(env) >= 1:
        return int(env)
    return os.cpu_count() or 1


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--i", type=int, required=True, help="left exponent")
    p.add_argument("--j", type=int, required=True, help="middle exponent")
    p.add_argument("--k", type=int, required=True, help="right exponent")
    p.add_argument("--alphabet", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--max-len", type=int, required=True,
                   help="bound on the length of the common value x^i y^j x^k")
    p.add_argument("--shards", type=int, default=None,
                   help="parallel shards (default: WORDEQ_SHARDS or processor count)")


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wordeq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_verify = sub.add_parser("verify",
                              help="check that a^i b^j a^k forces periodicity up to the bound")
    _add_search_flags(p_verify)
    _add_format_flag(p_verify)
    p_verify.set_defaults(subparser=p_verify)

    p_solve = sub.add_parser("solve",
                             help="enumerate and classify all solutions up to the bound")
    _add_search_flags(p_solve)
    _add_format_flag(p_solve)
    p_solve.add_argument("--distinct-only", action=argparse.BooleanOptionalAction, default=True,
                         help="skip the trivial solutions (x, y) == (u, v)")
    p_solve.set_defaults(subparser=p_solve)

    p_family = sub.add_parser("family",
                              help="build a boundary family instance, or validate a grid of them")
    p_family.add_argument("--family", choices=("j2", "i1k1", "grid"), required=True)
    p_family.add_argument("--alpha", default=None, help="first parameter word")
    p_family.add_argument("--beta", default=None, help="second parameter word (family j2)")
    p_family.add_argument("--gamma", default=None, help="second parameter word (family i1k1)")
    p_family.add_argument("--param-k", type=int, default=1, help="k for family j2, or grid maximum")
    p_family.add_argument("--param-j", type=int, default=3, help="j for family i1k1, or grid maximum")
    p_family.add_argument("--alphabet", type=int, default=2)
    p_family.add_argument("--max-len", type=int, default=2,
                          help="grid mode: maximum parameter word length")
    _add_format_flag(p_family)
    p_family.set_defaults(subparser=p_family)

    p_lemmas = sub.add_parser("lemmas",
                              help="run the bounded oracles for the classical lemmas")
    p_lemmas.add_argument("--max-len", type=int, default=6,
                          help="size knob for the oracle ranges (default 6)")
    _add_format_flag(p_lemmas)
    p_lemmas.set_defaults(subparser=p_lemmas)

    return parser


def _validate_search(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Exponents:
    exps = Exponents(args.i, args.j, args.k)
    if min(exps) < 0:
        parser.error("exponents must be non-negative")
    if exps.j == 0 or exps.i + exps.k == 0:
        parser.error("need j >= 1 and i + k >= 1")
    if not 2 <= args.alphabet <= 26:
        parser.error("--alphabet must be between 2 and 26")
    if args.max_len < exps.i + exps.j + exps.k:
        parser.error(f"--max-len must be at least i + j + k = {exps.i + exps.j + exps.k}")
    if args.shards is None:
        args.shards = _default_shards()
    if args.shards < 1:
        parser.error("--shards must be >= 1")
    return exps


def _print_witnesses(insts: Sequence[EquationInstance]) -> None:
    for inst in insts:
        print(f"witness: x={inst.x!r} y={inst.y!r} u={inst.u!r} v={inst.v!r}")


def _report_text(report: SolutionReport) -> None:
    i, j, k = report.exps
    print(f"pattern a^{i} b^{j} a^{k}, alphabet {report.alphabet_size}, bound {report.bound}")
    print(f"total solutions: {report.total_solutions}")
    if report.periodic_only:
        print("non-periodic solutions: none")
    else:
        print(f"non-periodic orbits: {len(report.nonperiodic)}")
        _print_witnesses(report.nonperiodic)


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    exps = _validate_search(parser, args)
    if not theorem_applies(exps):
        print(
            f"note: exponents ({exps.i},{exps.j},{exps.k}) are outside the proven "
            "forcing range (j >= 3, i + k >= 3, i k != 0); running anyway",
            file=sys.stderr,
        )
    verdict = forcing_verdict(exps, args.alphabet, args.max_len, shards=args.shards)
    if args.format == "json":
        print(verdict.to_json(), end="")
    else:
        _report_text(verdict.report)
        print(f"forced up to bound: {'yes' if verdict.forced_up_to_bound else 'no'}")
    return EX_OK if verdict.forced_up_to_bound else EX_WITNESS


def cmd_solve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    exps = _validate_search(parser, args)
    report = enumerate_solutions(
        exps, args.alphabet, args.max_len,
        distinct_only=args.distinct_only, shards=args.shards,
    )
    if args.format == "json":
        print(report.to_json(), end="")
    else:
        _report_text(report)
    return EX_OK if report.periodic_only else EX_WITNESS


def _family_json(family: str, params: dict, inst: EquationInstance) -> str:
    obj = inst.to_json_obj()
    obj["family"] = family
    obj["params"] = params
    return json.dumps(obj, indent=2) + "\n"


def cmd_family(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if not 2 <= args.alphabet <= 26:
        parser.error("--alphabet must be between 2 and 26")

    if args.family == "grid":
        if args.max_len < 1 or args.param_k < 1 or args.param_j < 1:
            parser.error("grid bounds must be >= 1")
        summary = validate_family_grid(args.max_len, args.param_k, args.param_j, args.alphabet)
        if args.format == "json":
            obj = {
                "pairs": summary.pairs,
                "j2_instances": summary.j2_instances,
                "i1k1_instances": summary.i1k1_instances,
                "total": summary.total,
                "all_valid": True,
            }
            print(json.dumps(obj, indent=2))
        else:
            print(f"parameter pairs: {summary.pairs}")
            print(f"instances checked: {summary.total} "
                  f"({summary.j2_instances} with j=2, {summary.i1k1_instances} with i=k=1)")
            print("all valid and non-periodic")
        return EX_OK

    if args.alpha is None:
        parser.error("--alpha is required")
    second_name = "--beta" if args.family == "j2" else "--gamma"
    second = args.beta if args.family == "j2" else args.gamma
    if second is None:
        parser.error(f"{second_name} is required for family {args.family}")
    try:
        check_letters(args.alpha, args.alphabet)
        check_letters(second, args.alphabet)
    except ValueError as err:
        parser.error(str(err))

    try:
        if args.family == "j2":
            if args.param_k < 1:
                parser.error("--param-k must be >= 1")
            inst = family_j2(args.alpha, second, args.param_k)
            params = {"alpha": args.alpha, "beta": second, "k": args.param_k}
        else:
            if args.param_j < 3 or args.param_j % 2 == 0:
                parser.error("--param-j must be odd and >= 3")
            inst = family_i1k1(args.alpha, second, args.param_j)
            params = {"alpha": args.alpha, "gamma": second, "j": args.param_j}
    except CommutingParametersError as err:
        print(f"wordeq family: {err}", file=sys.stderr)
        return EX_DATA

    if args.format == "json":
        print(_family_json(args.family, params, inst), end="")
    else:
        i, j, k = inst.exps
        print(f"family {args.family}: solution of x^{i} y^{j} x^{k} = u^{i} v^{j} u^{k}")
        print(f"x = {inst.x}")
        print(f"y = {inst.y}")
        print(f"u = {inst.u}")
        print(f"v = {inst.v}")
        print(f"common value ({len(inst.lhs())} letters): {inst.lhs()}")
    return EX_OK


def cmd_lemmas(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.max_len < 1:
        parser.error("--max-len must be >= 1")
    results = run_lemma_suite(args.max_len)
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in results], indent=2))
    else:
        for r in results:
            if r.passed:
                print(f"PASS {r.name} ({r.cases} cases)")
            else:
                print(f"FAIL {r.name}: {r.failures[0]}")
    if all(r.passed for r in results):
        return EX_OK
    failed = next(r for r in results if not r.passed)
    print(f"wordeq lemmas: {failed.name} violated: {failed.failures[0]}", file=sys.stderr)
    return EX_LEMMA


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "solve": cmd_solve,
        "family": cmd_family,
        "lemmas": cmd_lemmas,
    }
    return handlers[args.command](args.subparser, args)


if __name__ == "__main__":
    sys.exit(main())
