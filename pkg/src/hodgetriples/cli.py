"""Command-line front end.

Subcommands: compute (one moduli space), critical (wall enumeration),
flips (wall-crossing differences), verify (the consistency battery).
Exit codes: 0 success, 1 domain/precondition errors, 2 internal
consistency failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import ConsistencyError, HodgeError
from .polyring import BiLaurent
from .rank2_bundles import m2_even_polystable, m2_even_stable, m2_odd
from .triples_low_rank import (critical_values_12, critical_values_21,
                               hodge_12, hodge_21, sigma_interval)
from .triples22 import (critical_values_22, cumulative_22, flip_difference,
                        large_sigma_22, small_sigma_22)
from .types import PLUS_EPS, HodgeResult, SigmaValue, TripleType
from .verify import run_suite, summary_table

_SPACES = ("m2-odd", "m2-even-stable", "m2-even-polystable",
           "t21", "t12", "t22-small", "t22-large", "t22-at")


def _parse_sigma(text: str, t: TripleType) -> SigmaValue:
    if text == "sm+":
        return SigmaValue(sigma_interval(t)[0], PLUS_EPS)
    if text == "sM+":
        lo, hi = sigma_interval(t)
        bound = hi if hi is not None else 2 * t.slope_gap
        return SigmaValue(bound, PLUS_EPS)
    return SigmaValue.parse(text)


def _render(poly: BiLaurent, fmt: str, univariate: bool = False) -> str:
    if fmt == "json":
        return poly.to_json()
    if fmt == "latex":
        return poly.to_latex()
    if univariate:
        return poly.univariate_text()
    return poly.to_text()


def _emit_result(result: HodgeResult, args) -> None:
    if args.poincare:
        print(_render(result.poincare(), args.format, univariate=True))
    else:
        print(_render(result.poly, args.format))


def _cmd_compute(args) -> int:
    space = args.space
    if space.startswith("m2-"):
        if args.d is None:
            raise HodgeError("--d is required for bundle moduli")
        if space == "m2-odd":
            if args.d % 2 == 0:
                raise HodgeError("m2-odd requires an odd degree")
            result = m2_odd(args.g)
        else:
            if args.d % 2:
                raise HodgeError(f"{space} requires an even degree")
            result = (m2_even_stable(args.g) if space == "m2-even-stable"
                      else m2_even_polystable(args.g))
        _emit_result(result, args)
        return 0
    if args.d1 is None or args.d2 is None:
        raise HodgeError("--d1 and --d2 are required for triple moduli")
    ranks = {"t21": (2, 1), "t12": (1, 2)}.get(space, (2, 2))
    t = TripleType(args.g, ranks[0], ranks[1], args.d1, args.d2)
    if space in ("t21", "t12"):
        if args.sigma is None:
            raise HodgeError("--sigma is required for t21/t12")
        sigma = _parse_sigma(args.sigma, t)
        result = hodge_21(t, sigma) if space == "t21" else hodge_12(t, sigma)
    elif space == "t22-small":
        result = small_sigma_22(t)
    elif space == "t22-large":
        result = large_sigma_22(t)
    else:  # t22-at
        if args.sigma is None:
            raise HodgeError("--sigma is required for t22-at")
        result = cumulative_22(t, _parse_sigma(args.sigma, t))
    _emit_result(result, args)
    return 0


def _cmd_critical(args) -> int:
    try:
        n1, n2 = (int(x) for x in args.rank.split(","))
    except ValueError:
        raise HodgeError(f"cannot parse --rank {args.rank!r}; expected N1,N2")
    t = TripleType(args.g, n1, n2, args.d1, args.d2)
    if (n1, n2) == (2, 1):
        for value in critical_values_21(t):
            print(value)
    elif (n1, n2) == (1, 2):
        for value in critical_values_12(t):
            print(value)
    elif (n1, n2) == (2, 2):
        for wall in critical_values_22(t):
            level = "" if wall.level is None else f" {wall.kind}={wall.level}"
            print(f"n={wall.n} sigma_c={wall.sigma_c} kind={wall.kind}{level}")
    else:
        raise HodgeError(f"unsupported rank ({n1},{n2})")
    return 0


def _cmd_flips(args) -> int:
    t = TripleType(args.g, 2, 2, args.d1, args.d2)
    walls = critical_values_22(t)
    if args.wall is not None:
        walls = [w for w in walls if w.n == args.wall]
        if not walls:
            raise HodgeError(f"no wall with index {args.wall}")
    for wall in walls:
        diff = flip_difference(t, wall)
        print(f"n={wall.n} sigma_c={wall.sigma_c} kind={wall.kind}: "
              f"{diff.to_text()}")
    return 0


def _parse_g_range(text: str):
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise HodgeError(f"cannot parse --g-range {text!r}; expected A..B")
    if not 2 <= lo <= hi:
        raise HodgeError("genus range must satisfy 2 <= A <= B")
    return range(lo, hi + 1)


def _cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite, _parse_g_range(args.g_range), args.span)
    except KeyError as exc:
        raise HodgeError(exc.args[0])
    for report in reports:
        print(json.dumps(report.to_json_obj()))
    print(summary_table(reports), file=sys.stderr)
    return 0 if all(r.status == "pass" for r in reports) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgetriples",
        description="Exact Hodge polynomials of moduli of rank-2 bundles "
                    "and holomorphic triples on a curve")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one moduli space")
    p_compute.add_argument("--space", required=True, choices=_SPACES)
    p_compute.add_argument("--g", type=int, required=True)
    p_compute.add_argument("--d", type=int)
    p_compute.add_argument("--d1", type=int)
    p_compute.add_argument("--d2", type=int)
    p_compute.add_argument("--sigma",
                           help="rational, optional trailing +/-, or sm+/sM+")
    p_compute.add_argument("--poincare", action="store_true")
    p_compute.add_argument("--format", default="text",
                           choices=("text", "json", "latex"))
    p_compute.set_defaults(func=_cmd_compute)

    p_critical = sub.add_parser("critical", help="enumerate critical values")
    p_critical.add_argument("--rank", required=True, help="N1,N2")
    p_critical.add_argument("--g", type=int, required=True)
    p_critical.add_argument("--d1", type=int, required=True)
    p_critical.add_argument("--d2", type=int, required=True)
    p_critical.set_defaults(func=_cmd_critical)

    p_flips = sub.add_parser("flips", help="rank-(2,2) wall crossings")
    p_flips.add_argument("--g", type=int, required=True)
    p_flips.add_argument("--d1", type=int, required=True)
    p_flips.add_argument("--d2", type=int, required=True)
    p_flips.add_argument("--wall", type=int)
    p_flips.set_defaults(func=_cmd_flips)

    p_verify = sub.add_parser("verify", help="run the consistency battery")
    p_verify.add_argument("--suite", default="all",
                          help="all, fast, or a single check id")
    p_verify.add_argument("--g-range", default="2..3", help="A..B")
    p_verify.add_argument("--span", type=int, default=4,
                          help="bound on the d1,d2 sweep per genus")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except HodgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
