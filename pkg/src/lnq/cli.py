"""Command-line driver.

    lnq enumerate --n 3 --q 2 --cache l3_2.json
    lnq verify    --n 3 --q 2 --phi 3/2 --suite all --report out.json
    lnq decompose --n 4 --q 2 --phi 1
    lnq splits    --n 2 --q 3 --phi 1

Exit codes: 0 when every selected check passes, 1 when any check fails,
2 for usage or configuration errors (bad phi, q not a prime power, vertex
cap exceeded, unreadable cache).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .geometry import DEFAULT_MAX_VERTICES, VertexCapExceeded
from .operators import OperatorSet
from .qscalar import Params, prime_power
from .report import SUITES, build_report, dump_cache, dumps_report, obtain_poset, parse_rational, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_rational(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"phi must be a rational literal like 3/2, got {text!r}")
    if value <= 0:
        raise UsageError(f"phi must be positive, got {text}")
    return value


def _validate_nq(n: int, q: int) -> None:
    if n < 1:
        raise UsageError(f"--n must be >= 1, got {n}")
    try:
        prime_power(q)
    except ValueError as exc:
        raise UsageError(str(exc))


def format_poly(coeffs) -> str:
    """Coefficient list (constant term first) as text, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lnq", description="Exact verification on the projective geometry L_N(q).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_phi=True):
        p.add_argument("--n", type=int, required=True, help="dimension N of the ambient space")
        p.add_argument("--q", type=int, required=True, help="field order, a prime power")
        if with_phi:
            p.add_argument("--phi", default="1", help="positive rational weight, e.g. 1 or 3/2 (default 1)")
            p.add_argument("--report", help="write the JSON report to this path")
        p.add_argument("--cache", help="poset cache file (read if present, written otherwise)")
        p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES, help="vertex cap")

    p_enum = sub.add_parser("enumerate", help="enumerate L_N(q) and write the poset cache")
    common(p_enum, with_phi=False)
    p_verify = sub.add_parser("verify", help="run a verification suite")
    common(p_verify)
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_dec = sub.add_parser("decompose", help="decompose the standard module and verify each module")
    common(p_dec)
    p_split = sub.add_parser("splits", help="build and verify the four split decompositions")
    common(p_split)
    return parser


def cmd_enumerate(args, out) -> int:
    _validate_nq(args.n, args.q)
    poset = obtain_poset(args.n, args.q, None, args.max_vertices)
    text = dump_cache(poset)
    if args.cache:
        Path(args.cache).write_text(text, encoding="utf-8")
    counts = [len(b) for b in poset.dim_blocks]
    modulus = format_poly(poset.field.modulus)
    print(f"L_{args.n}({args.q}): {len(poset)} vertices, per dimension {counts}", file=out)
    print(f"GF({args.q}) modulus: {modulus}", file=out)
    if args.cache:
        print(f"cache written to {args.cache}", file=out)
    return EXIT_OK


def _run(args, suite: str, out) -> int:
    _validate_nq(args.n, args.q)
    phi = _positive_rational(args.phi)
    params = Params(args.n, args.q, phi)
    poset = obtain_poset(args.n, args.q, args.cache, args.max_vertices)
    run = run_suite(OperatorSet(poset, params), suite)
    report = build_report(run)
    if args.report:
        Path(args.report).write_text(dumps_report(report), encoding="utf-8")
    _print_summary(report, out)
    return EXIT_OK if run.passed else EXIT_FAIL


def _print_summary(report: dict, out) -> None:
    p = report["params"]
    print(f"L_{p['n']}({p['q']}), phi = {p['phi']}, suite {report['suite']}", file=out)
    for c in report["checks"]:
        line = f"  {c['status'].upper():4}  {c['id']:<28} {c['assertions']:>6} assertions"
        print(line, file=out)
        if c["witness"]:
            print(f"        witness: {c['witness']}", file=out)
    for e in report["decomposition"]["endpoints"]:
        lp = e["leonard"]
        print(
            f"  endpoint r={e['r']}: {e['mult']} module(s), d={e['d']}, "
            f"h={lp['h']}, s={lp['s']}, theta0={lp['theta0']}, theta*0={lp['theta_star0']}",
            file=out,
        )
    for v, dims in report["splits"].items():
        print(f"  {v} split dims {dims}", file=out)
    s = report["summary"]
    print(f"{s['pass']} passed, {s['fail']} failed", file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        suite = {"verify": getattr(args, "suite", "all"), "decompose": "modules", "splits": "splits"}[args.command]
        return _run(args, suite, out)
    except (UsageError, VertexCapExceeded, OSError, ValueError) as exc:
        print(f"lnq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
