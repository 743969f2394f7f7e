#!/usr/bin/env python3
"""Run the full cross-check for several ranks and summarize the outcome.

Exits 0 only if every rank passes all checks; a failed check exits 1 and
a certification failure inside the kernel computation exits 3.
"""

import argparse
import sys

from lieball.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-m", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--max-l", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    worst = 0
    for m in range(args.min_m, args.max_m + 1):
        code = cli_main(
            [
                "verify",
                "--m",
                str(m),
                "--max-l",
                str(args.max_l),
                "--seed",
                str(args.seed),
            ]
        )
        print(f"m={m}: exit {code}")
        worst = max(worst, code)
    print("overall:", "PASS" if worst == 0 else f"FAIL (exit {worst})")
    return worst


if __name__ == "__main__":
    sys.exit(main())
