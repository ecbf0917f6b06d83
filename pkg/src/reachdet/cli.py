"""Command-line front end.

Exit codes: 0 found / verified, 1 not found within depth, 2 input error,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from fractions import Fraction
from typing import Optional

from . import __version__
from .certificate import (
    build_system,
    certify,
    collapse,
    cramer_indicator,
    lemma21_assignment,
    witness,
)
from .checks import run_checks
from .determinant import (
    build_augmented,
    build_mu,
    build_omega,
    omega_value,
    partial_product,
)
from .exact import RationalSyntaxError, bit_size, det_elimination, format_rational, parse_rational
from .recurrence import RecurrenceSpec, eval_terms, oracle_reach, random_spec
from .specfile import SpecError, dump_spec, load_spec

EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 4
DEFAULT_DEPTH = 64


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-r -1/2" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _q(x: Optional[Fraction]):
    return None if x is None else format_rational(x)


def _qs(xs):
    return [_q(x) for x in xs]


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise InputError(f"{name} must be >= 1, got {value}")
    return value


def _target(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except RationalSyntaxError as exc:
        raise InputError(f"-r: {exc}") from None


def _spec(path: Optional[str]) -> RecurrenceSpec:
    if path is None:
        raise InputError("--spec PATH is required")
    try:
        return load_spec(path)
    except SpecError as exc:
        raise InputError(f"{path}: {exc}") from None


def _header(command: str, spec: Optional[RecurrenceSpec], N: Optional[int], r: Optional[Fraction]):
    out = {"tool": "reachdet", "version": __version__, "command": command}
    if spec is not None:
        out["spec"] = dump_spec(spec)
    if N is not None:
        out["N"] = N
    if r is not None:
        out["r"] = _q(r)
    return out


# --------------------------------------------------------------------------
# Commands: each returns (report, exit code)


def cmd_eval(args):
    spec = _spec(args.spec)
    N = _positive("N", args.N)
    rep = _header("eval", spec, N, None)
    rep["terms"] = _qs(eval_terms(spec, N).terms)
    return rep, EXIT_OK


def _cramer_first(spec: RecurrenceSpec, r: Fraction, N: int) -> Optional[int]:
    system = build_system(spec, N, r)
    for t in range(1, N + 1):
        if cramer_indicator(system, t) == 0:
            return t
    return None


def cmd_reach(args):
    spec = _spec(args.spec)
    N = _positive("N", args.N)
    r = _target(args.r)
    rep = _header("reach", spec, N, r)
    rep["method"] = args.method
    methods = ["oracle", "product", "cramer"] if args.method == "all" else [args.method]
    found_at: dict[str, Optional[int]] = {}
    product = None
    for m in methods:
        if m == "oracle":
            found_at[m] = oracle_reach(spec, r, N)
        elif m == "product":
            product = partial_product(spec, r, N, args.window)
            found_at[m] = product.first_zero_index
        else:
            found_at[m] = _cramer_first(spec, r, N)
    agree = len(set(found_at.values())) == 1
    index = found_at[methods[0]]
    rep["found"] = index is not None
    rep["index"] = index
    rep["methods"] = found_at
    rep["agree"] = agree
    if product is not None:
        rep["product"] = _q(product.value)
        rep["product_bit_size"] = product.bit_size
        rep["caveat_flag"] = product.caveat_flag
        rep["integer_exempt"] = product.integer_exempt
        rep["caveat_window"] = _qs(product.caveat_window)
    if not agree:
        return rep, EXIT_INTERNAL
    return rep, EXIT_OK if index is not None else EXIT_NOT_FOUND


def cmd_omega(args):
    spec = _spec(args.spec)
    if args.i is None:
        raise InputError("-i is required")
    i = _positive("i", args.i)
    r = _target(args.r)
    rep = _header("omega", spec, None, r)
    rep["i"] = i
    code = EXIT_OK
    value = omega_value(spec, i)
    M = build_augmented(spec, i, r) if args.augmented else build_omega(spec, i)
    det = det_elimination(M)
    rep["omega"] = _q(value)
    if args.augmented:
        rep["omega_minus_r"] = _q(value - r)
        rep["augmented_det"] = _q(det)
        ok = det == value - r
    else:
        rep["omega_det"] = _q(det)
        ok = det == value
    if args.matrix:
        rep["matrix"] = M.dump()
    if args.mu is not None:
        depth = _positive("--mu", args.mu)
        mu = build_mu(spec, r, depth)
        mu_det = det_elimination(mu)
        rep["mu"] = {"N": depth, "size": mu.nrows, "det": _q(mu_det)}
        ok = ok and mu_det == partial_product(spec, r, depth).value
    rep["consistent"] = ok
    if not ok:
        code = EXIT_INTERNAL
    return rep, code


def _collapse_json(c):
    return {
        "const": _q(c.const_term),
        "cross": [[_q(x) for x in row] for row in c.cross],
        "linear": _qs(c.linear),
    }


def cmd_certify(args):
    spec = _spec(args.spec)
    N = _positive("N", args.N)
    r = _target(args.r)
    if args.t is not None and not 1 <= args.t <= N:
        raise InputError(f"-t must lie in 1..{N}, got {args.t}")
    report = certify(spec, N, r)
    rep = _header("certify", spec, N, r)
    rep["sum_can_equal_one"] = report.sum_can_equal_one
    rep["reach_indices"] = report.reach_indices
    rep["oracle_indices"] = report.oracle_hits
    rep["consistent"] = report.consistent
    rep["entries"] = [
        {
            "t": e.t,
            "cramer_value": _q(e.cramer_value),
            "reaches": e.reaches,
            "witness": None if e.witness is None else _qs(e.witness),
            "lemma22_rank": e.lemma22_rank,
            "forced_trivial": e.forced_trivial,
        }
        for e in report.entries
    ]
    if args.t is not None:
        system = build_system(spec, N, r)
        D = lemma21_assignment(system, args.t)
        rep["assignment"] = {
            "t": args.t,
            "witness": _qs(witness(system, args.t)),
            "collapse": _collapse_json(collapse(system, D)),
        }
    if not report.consistent:
        return rep, EXIT_INTERNAL
    return rep, EXIT_OK if report.sum_can_equal_one else EXIT_NOT_FOUND


def cmd_verify(args):
    N = _positive("N", args.N)
    targets: list[RecurrenceSpec] = []
    if args.spec is not None:
        targets.append(_spec(args.spec))
    if args.random_specs is not None:
        rng = random.Random(args.seed)
        for _ in range(args.random_specs):
            targets.append(random_spec(rng))
    if not targets:
        raise InputError("verify needs --spec PATH or --random-specs K")
    r = _target(args.r)
    rep = _header("verify", targets[0] if args.spec is not None else None, N, r)
    results = []
    for k, spec in enumerate(targets):
        checks = run_checks(spec, N, r, seed=args.seed + k)
        entry = {"passed": all(checks.values()), "checks": checks}
        if args.spec is None or k > 0:
            entry["spec"] = dump_spec(spec)
        results.append(entry)
    rep["results"] = results
    rep["passed"] = all(e["passed"] for e in results)
    return rep, EXIT_OK if rep["passed"] else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reachdet", description="Bounded reachability for linear recurrences.")
    parser.add_argument("--version", action="version", version=f"reachdet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, depth=True, target=True):
        p.add_argument("--spec", metavar="PATH")
        if depth:
            p.add_argument("-N", type=int, default=DEFAULT_DEPTH)
        if target:
            p.add_argument("-r", default="0", metavar="RAT")

    p = sub.add_parser("eval", help="list E_1..E_N")
    common(p, target=False)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reach", help="bounded reachability of r")
    common(p)
    p.add_argument("--method", choices=["oracle", "product", "cramer", "all"], default="all")
    p.add_argument("--window", type=int, default=None)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("omega", help="the determinant Ω_i and its matrices")
    common(p, depth=False)
    p.add_argument("-i", type=int)
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--augmented", action="store_true")
    p.add_argument("--mu", type=int, metavar="N")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("certify", help="Cramer / witness / rank certificates")
    common(p)
    p.add_argument("-t", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="run the identity suite")
    common(p)
    p.add_argument("--random-specs", type=int, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if getattr(args, "window", None) is not None and args.window < 1:
            raise InputError(f"--window must be >= 1, got {args.window}")
        if getattr(args, "window", None) is not None and args.window > args.N:
            raise InputError(f"--window must not exceed N={args.N}")
        report, code = args.func(args)
    except InputError as exc:
        print(f"reachdet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    if code == EXIT_INTERNAL:
        print("reachdet: internal consistency failure", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
