#!/usr/bin/env python3
"""Emit the K-type tables for a range of ranks as JSON or CSV files.

Writes one file per rank into the output directory, computed from the
alternating coset sum, plus a companion file from the Laplacian kernel
so the two can be diffed byte for byte.
"""

import argparse
import pathlib

from lieball.blattner import ktype_table
from lieball.harmonic import sol_ktype_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-m", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--max-l", type=int, default=6)
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--out-dir", default="tables")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = args.format
    for m in range(args.min_m, args.max_m + 1):
        lam = m - 1
        algebraic = ktype_table(m, lam, max_mu0=lam + args.max_l, max_mu1=args.max_l)
        analytic = sol_ktype_table(m, args.max_l)
        for tag, table in (("euler", algebraic), ("kernel", analytic)):
            path = out_dir / f"ktypes_m{m}_{tag}.{ext}"
            text = table.to_json() if ext == "json" else table.to_csv()
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path} ({len(table.entries)} entries)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
