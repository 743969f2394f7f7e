"""Command line interface: exact K-type tables and their cross-checks.

Subcommands: ktypes, harmonic, verify, weyl, ranges, verma, ehw.  All
output is deterministic for a fixed invocation and seed.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 certification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from .blattner import KTypeTable, ktype_table, unique_scalar_match_check
from .harmonic import CertificationError, so_invariance_check, sol_ktype_table
from .repdata import (
    ehw_first_reduction_point,
    ehw_last_unitary_point,
    ehw_unitarizable,
    inf_char,
    is_regular_type_d,
    knapp_stein_residue_degree,
    orbit_equal,
    range_verdict,
    verma_hom_condition,
    verma_inf_char,
)
from .weyl import (
    enumerate_coset_reps,
    inversion_set,
    length,
    one_line_window,
)

__all__ = ["main"]

WEYL_ENUMERATION_BOUND = 8
DEFAULT_MAX_L = 6
VERIFY_GRID_BOUND = 4
VERIFY_VERMA_DEGREES = 5
VERIFY_EQUIVARIANCE_TRIALS = 15


def _fmt_q(x: Q) -> str:
    return str(x)


def _fmt_weight(w) -> str:
    return "(" + ", ".join(_fmt_q(Q(c)) for c in w) + ")"


def _json_q(x: Q):
    return int(x) if x.denominator == 1 else str(x)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table_text(table: KTypeTable, semantics: str) -> str:
    lines = [
        f"K-type table  m={table.m}  lambda={table.lam}  ({semantics})",
        f"window: mu0 <= {table.max_mu0}, mu1 <= {table.max_mu1}",
        "mu0  mu  mult",
    ]
    for pi, mult in table.sorted_entries():
        lines.append(f"{pi.mu0}  {_fmt_weight(pi.mu)}  {mult}")
    lines.append(f"entries: {len(table.entries)}")
    return "\n".join(lines) + "\n"


def _render_table(table: KTypeTable, fmt: str, semantics: str) -> str:
    if fmt == "json":
        return table.to_json()
    if fmt == "csv":
        return table.to_csv()
    return _table_text(table, semantics)


def _threads_cap(parser: argparse.ArgumentParser) -> int:
    """Validate the LIEBALL_THREADS cap; computation runs on one worker."""
    raw = os.environ.get("LIEBALL_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        parser.error(f"LIEBALL_THREADS must be a positive integer, got {raw!r}")
    if cap < 1:
        parser.error(f"LIEBALL_THREADS must be a positive integer, got {raw!r}")
    return min(cap, 1)


def _check_m(parser: argparse.ArgumentParser, m: int, bound: Optional[int] = None) -> None:
    if m < 2:
        parser.error("--m must be at least 2")
    if bound is not None and m > bound:
        parser.error(f"--m exceeds the enumeration bound {bound}")


def cmd_ktypes(args, parser) -> int:
    _check_m(parser, args.m, WEYL_ENUMERATION_BOUND)
    lam = args.lam if args.lam is not None else args.m - 1
    if lam != int(lam):
        parser.error("--lambda must be an integer for ktypes")
    lam = int(lam)
    table = ktype_table(args.m, lam, max_mu0=lam + args.max_l, max_mu1=args.max_l)
    semantics = (
        "multiplicity"
        if range_verdict(args.m, lam).weakly_fair
        else "Euler characteristic"
    )
    _emit(_render_table(table, args.format, semantics), args.out)
    return 0


def cmd_harmonic(args, parser) -> int:
    _check_m(parser, args.m, None)
    table = sol_ktype_table(args.m, args.max_l)
    if args.format in ("json", "csv"):
        _emit(_render_table(table, args.format, "multiplicity"), args.out)
        return 0
    from .harmonic import harmonic_dimension
    from .repdata import weyl_dim_so2m

    lines = [
        f"harmonic kernel K-types  m={args.m}  lambda={args.m - 1}",
        "mu0  mu  mult  kernel_dim  weyl_dim",
    ]
    for pi, mult in table.sorted_entries():
        l = pi.mu0 - (args.m - 1)
        kd = harmonic_dimension(2 * args.m, l)
        wd = weyl_dim_so2m(args.m, pi.mu)
        lines.append(f"{pi.mu0}  {_fmt_weight(pi.mu)}  {mult}  {kd}  {wd}")
    lines.append(f"certified rows: {len(table.entries)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _verify_checks(m: int, max_l: int, seed: int) -> Tuple[List[dict], bool]:
    checks: List[dict] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    lam = m - 1
    algebraic = ktype_table(m, lam, max_mu0=lam + max_l, max_mu1=max_l)
    analytic = sol_ktype_table(m, max_l)
    if algebraic.same_entries(analytic):
        record(
            "ktype tables",
            True,
            f"Euler-sum and harmonic-kernel tables agree on {len(algebraic.entries)} entries",
        )
    else:
        keys = sorted(
            set(algebraic.entries) | set(analytic.entries),
            key=lambda pi: (pi.mu0, pi.mu),
        )
        diff = next(
            pi
            for pi in keys
            if algebraic.entries.get(pi, 0) != analytic.entries.get(pi, 0)
        )
        record(
            "ktype tables",
            False,
            f"first difference at (mu0={diff.mu0}; mu={_fmt_weight(diff.mu)}): "
            f"euler-sum={algebraic.entries.get(diff, 0)} "
            f"harmonic-kernel={analytic.entries.get(diff, 0)}",
        )

    ok = unique_scalar_match_check(m, VERIFY_GRID_BOUND)
    record(
        "unique scalar match",
        ok,
        f"exhaustive over the dominant grid with bound {VERIFY_GRID_BOUND}",
    )

    verdict = range_verdict(m, lam)
    witness_ok = bool(verdict.good_witnesses)
    detail = f"lambda={lam} weakly_fair={verdict.weakly_fair} good={verdict.good}"
    if witness_ok:
        root, pairing = verdict.good_witnesses[0]
        detail += f"; good witness <shift, {_fmt_weight(root)}> = {_fmt_q(pairing)}"
    record(
        "positivity ranges",
        verdict.weakly_fair and not verdict.good and witness_ok,
        detail,
    )

    chi = inf_char(m, lam)
    record(
        "infinitesimal character",
        not is_regular_type_d(chi),
        f"{_fmt_weight(chi)} is singular",
    )

    verma_ok = True
    for l in range(VERIFY_VERMA_DEGREES + 1):
        if verma_hom_condition(m, m - l, m + l) != l:
            verma_ok = False
        if verma_hom_condition(m, m - l, m + l + 1) is not None:
            verma_ok = False
        if not orbit_equal(verma_inf_char(m, m - l), verma_inf_char(m, m + l)):
            verma_ok = False
    record(
        "verma homomorphisms",
        verma_ok,
        f"degrees 0..{VERIFY_VERMA_DEGREES} accepted with orbit-equal parameters",
    )

    ok = so_invariance_check(2 * m, VERIFY_EQUIVARIANCE_TRIALS, seed=seed)
    record(
        "laplacian equivariance",
        ok,
        f"n={2 * m}, {VERIFY_EQUIVARIANCE_TRIALS} trials, seed={seed}",
    )

    return checks, all(c["pass"] for c in checks)


def cmd_verify(args, parser) -> int:
    _check_m(parser, args.m, WEYL_ENUMERATION_BOUND)
    checks, ok = _verify_checks(args.m, args.max_l, args.seed)
    if args.format == "json":
        payload = {
            "m": args.m,
            "lambda": args.m - 1,
            "max_l": args.max_l,
            "seed": args.seed,
            "checks": checks,
            "pass": ok,
        }
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        lines = ["check,pass,detail"]
        for c in checks:
            detail = c["detail"].replace('"', '""')
            lines.append(f"{c['name']},{str(c['pass']).lower()},\"{detail}\"")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"verification report  m={args.m}  lambda={args.m - 1}  "
            f"max_l={args.max_l}  seed={args.seed}"
        ]
        for c in checks:
            flag = "PASS" if c["pass"] else "FAIL"
            lines.append(f"[{flag}] {c['name']}: {c['detail']}")
        passed = sum(1 for c in checks if c["pass"])
        lines.append(f"result: {'PASS' if ok else 'FAIL'} ({passed}/{len(checks)})")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_weyl(args, parser) -> int:
    _check_m(parser, args.m, WEYL_ENUMERATION_BOUND)
    reps = enumerate_coset_reps(args.m)
    rows = []
    for idx, w in enumerate(reps):
        inv = inversion_set(w)
        rows.append(
            {
                "index": idx,
                "length": length(w),
                "window": list(one_line_window(w)),
                "inversions": [[int(c) for c in alpha] for alpha in inv],
            }
        )
    if args.format == "json":
        _emit(_json_dumps({"m": args.m, "count": len(reps), "elements": rows}), args.out)
    elif args.format == "csv":
        lines = ["index,length,window,inversions"]
        for r in rows:
            window = " ".join(str(x) for x in r["window"])
            invs = ";".join(" ".join(str(c) for c in a) for a in r["inversions"])
            lines.append(f"{r['index']},{r['length']},{window},{invs}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"coset representatives  m={args.m}  count={len(reps)}"]
        lines.append("index  length  window  inversions")
        for r in rows:
            window = "(" + ", ".join(str(x) for x in r["window"]) + ")"
            invs = (
                " ".join("(" + ",".join(str(c) for c in a) + ")" for a in r["inversions"])
                or "-"
            )
            lines.append(f"{r['index']}  {r['length']}  {window}  {invs}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_ranges(args, parser) -> int:
    _check_m(parser, args.m, None)
    lam = args.lam if args.lam is not None else args.m - 1
    if lam != int(lam):
        parser.error("--lambda must be an integer for ranges")
    lam = int(lam)
    verdict = range_verdict(args.m, lam)
    chi = inf_char(args.m, lam)
    regular = is_regular_type_d(chi)
    if args.format == "json":
        payload = {
            "m": args.m,
            "lambda": lam,
            "weakly_fair": verdict.weakly_fair,
            "good": verdict.good,
            "weakly_fair_witnesses": [
                {"root": [int(c) for c in root], "pairing": _json_q(p)}
                for root, p in verdict.weakly_fair_witnesses
            ],
            "good_witnesses": [
                {"root": [int(c) for c in root], "pairing": _json_q(p)}
                for root, p in verdict.good_witnesses
            ],
            "inf_char": [_json_q(Q(c)) for c in chi],
            "inf_char_regular": regular,
        }
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        lines = ["field,value"]
        lines.append(f"m,{args.m}")
        lines.append(f"lambda,{lam}")
        lines.append(f"weakly_fair,{str(verdict.weakly_fair).lower()}")
        lines.append(f"good,{str(verdict.good).lower()}")
        lines.append(f"weakly_fair_violations,{len(verdict.weakly_fair_witnesses)}")
        lines.append(f"good_violations,{len(verdict.good_witnesses)}")
        lines.append(f"inf_char_regular,{str(regular).lower()}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"range verdict  m={args.m}  lambda={lam}"]
        lines.append(f"weakly_fair: {str(verdict.weakly_fair).lower()}")
        for root, p in verdict.weakly_fair_witnesses:
            lines.append(f"  violated: <shift, {_fmt_weight(root)}> = {_fmt_q(p)}")
        lines.append(f"good: {str(verdict.good).lower()}")
        for root, p in verdict.good_witnesses:
            lines.append(f"  violated: <shift, {_fmt_weight(root)}> = {_fmt_q(p)}")
        lines.append(
            f"infinitesimal character: {_fmt_weight(chi)} "
            f"({'regular' if regular else 'singular'})"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verma(args, parser) -> int:
    _check_m(parser, args.m, None)
    if (args.lam is None) != (args.nu is None):
        parser.error("verma needs both --lambda and --nu, or neither")
    if args.lam is not None:
        l = verma_hom_condition(args.m, args.lam, args.nu)
        consistent = (
            orbit_equal(verma_inf_char(args.m, args.lam), verma_inf_char(args.m, args.nu))
            if l is not None
            else None
        )
        if args.format == "json":
            payload = {
                "m": args.m,
                "lambda": _json_q(Q(args.lam)),
                "nu": _json_q(Q(args.nu)),
                "degree": l,
                "orbit_equal": consistent,
            }
            _emit(_json_dumps(payload), args.out)
        elif args.format == "csv":
            lines = ["lambda,nu,degree,orbit_equal"]
            degree = "" if l is None else str(l)
            orbit = "" if consistent is None else str(consistent).lower()
            lines.append(f"{args.lam},{args.nu},{degree},{orbit}")
            _emit("\n".join(lines) + "\n", args.out)
        else:
            if l is None:
                text = f"no homomorphism for (lambda, nu) = ({args.lam}, {args.nu})\n"
            else:
                text = (
                    f"homomorphism of degree {l} for (lambda, nu) = "
                    f"({args.lam}, {args.nu}); orbit_equal={str(consistent).lower()}\n"
                )
            _emit(text, args.out)
        return 0
    rows = []
    for l in range(args.max_l + 1):
        lam, nu = args.m - l, args.m + l
        rows.append(
            {
                "l": l,
                "lambda": lam,
                "nu": nu,
                "degree": verma_hom_condition(args.m, lam, nu),
                "orbit_equal": orbit_equal(
                    verma_inf_char(args.m, lam), verma_inf_char(args.m, nu)
                ),
            }
        )
    if args.format == "json":
        _emit(_json_dumps({"m": args.m, "pairs": rows}), args.out)
    elif args.format == "csv":
        lines = ["l,lambda,nu,degree,orbit_equal"]
        for r in rows:
            lines.append(
                f"{r['l']},{r['lambda']},{r['nu']},{r['degree']},{str(r['orbit_equal']).lower()}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"scalar Verma homomorphisms  m={args.m}"]
        lines.append("l  lambda  nu  degree  orbit_equal")
        for r in rows:
            lines.append(
                f"{r['l']}  {r['lambda']}  {r['nu']}  {r['degree']}  "
                f"{str(r['orbit_equal']).lower()}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_ehw(args, parser) -> int:
    if args.n < 4:
        parser.error("--n must be at least 4")
    a = ehw_first_reduction_point(args.n)
    b = ehw_last_unitary_point(args.n)
    unit = ehw_unitarizable(args.n, args.z)
    ks_degree = None
    if args.lam is not None:
        if args.n % 2 != 0:
            parser.error("--lambda requires even --n for the residue degree")
        ks_degree = knapp_stein_residue_degree(args.n, args.lam)
    if args.format == "json":
        payload = {
            "n": args.n,
            "z": _json_q(Q(args.z)),
            "unitarizable": unit,
            "first_reduction_point": _json_q(a),
            "last_unitary_point": _json_q(b),
        }
        if args.lam is not None:
            payload["lambda"] = _json_q(Q(args.lam))
            payload["residue_degree"] = ks_degree
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        header = "n,z,unitarizable,first_reduction_point,last_unitary_point"
        row = f"{args.n},{args.z},{str(unit).lower()},{a},{b}"
        if args.lam is not None:
            header += ",lambda,residue_degree"
            row += f",{args.lam},{'' if ks_degree is None else ks_degree}"
        _emit(header + "\n" + row + "\n", args.out)
    else:
        lines = [f"scalar lowest-weight unitarizability  n={args.n}  z={args.z}"]
        lines.append(f"first reduction point: {_fmt_q(a)}")
        lines.append(f"last unitary point: {_fmt_q(b)}")
        lines.append(f"unitarizable: {str(unit).lower()}")
        if args.lam is not None:
            if ks_degree is None:
                lines.append(f"no residual operator at lambda={args.lam}")
            else:
                lines.append(
                    f"residual operator at lambda={args.lam}: Laplacian power {ks_degree}"
                )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _add_common(sub: argparse.ArgumentParser, *, with_m=True, with_lambda=False,
                with_max_l=False, max_l_default=DEFAULT_MAX_L, with_seed=False) -> None:
    if with_m:
        sub.add_argument("--m", type=int, required=True, help="rank parameter m >= 2")
    if with_lambda:
        sub.add_argument(
            "--lambda", dest="lam", type=Q, default=None,
            help="scalar parameter (default m-1)",
        )
    if with_max_l:
        sub.add_argument(
            "--max-l", dest="max_l", type=int, default=max_l_default,
            help=f"largest symmetric-power degree (default {max_l_default})",
        )
    if with_seed:
        sub.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    sub.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieball",
        description="Exact K-type tables for the conformal group of the Lie ball",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ktypes", help="K-type table from the Euler sum")
    _add_common(p, with_lambda=True, with_max_l=True)
    p.set_defaults(func=cmd_ktypes)

    p = subs.add_parser("harmonic", help="K-type table from the Laplacian kernel")
    _add_common(p, with_max_l=True)
    p.set_defaults(func=cmd_harmonic)

    p = subs.add_parser("verify", help="cross-check the two K-type tables")
    _add_common(p, with_max_l=True, with_seed=True)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("weyl", help="list the minimal coset representatives")
    _add_common(p)
    p.set_defaults(func=cmd_weyl)

    p = subs.add_parser("ranges", help="weakly fair and good range verdicts")
    _add_common(p, with_lambda=True)
    p.set_defaults(func=cmd_ranges)

    p = subs.add_parser("verma", help="scalar generalized Verma homomorphisms")
    _add_common(p, with_lambda=True, with_max_l=True, max_l_default=5)
    p.add_argument("--nu", type=Q, default=None, help="second scalar parameter")
    p.set_defaults(func=cmd_verma)

    p = subs.add_parser("ehw", help="scalar lowest-weight unitarizability window")
    p.add_argument("--n", type=int, required=True, help="rank parameter n >= 4")
    p.add_argument("--z", type=Q, required=True, help="lowest-weight parameter")
    p.add_argument(
        "--lambda", dest="lam", type=Q, default=None,
        help="also report the residual operator degree at this parameter",
    )
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    p.add_argument("--out", default=None, help="write output to this path")
    p.set_defaults(func=cmd_ehw)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _threads_cap(parser)
    try:
        return args.func(args, parser)
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
