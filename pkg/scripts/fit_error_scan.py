#!/usr/bin/env python3
"""Error surface of the fitted Coulomb-plus-linear eigenvalue formula.

Scans a grid in the Coulomb strength a and the quantum numbers, compares
the fit against Numerov shooting, writes one CSV row per point and prints
the worst relative error overall and on the n = 0 subset.

Usage: python scripts/fit_error_scan.py [--a 0.5,1,2,3,4,5] [--n 0,1,2,5,10]
                                        [--l 0,1,2,5,10] [--output PATH]
"""

import argparse
import csv
import sys

from cornellspec import cornell_eigenvalue, solve_shooting


def parse_list(text, cast):
    return [cast(part) for part in text.split(",") if part.strip()]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", default="0.5,1,2,3,4,5")
    parser.add_argument("--n", default="0,1,2,5,10")
    parser.add_argument("--l", default="0,1,2,5,10")
    parser.add_argument("--output", default=None)
    args = parser.parse_args()

    a_values = parse_list(args.a, float)
    n_values = parse_list(args.n, int)
    l_values = parse_list(args.l, int)

    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["a", "n", "l", "shooting", "fit", "abs_error", "rel_error"])

    worst = (0.0, None)
    worst_n0 = (0.0, None)
    for a in a_values:
        for n in n_values:
            for l in l_values:
                shot = solve_shooting(a, n, l).lam
                fit = cornell_eigenvalue(a, n, l)
                abs_err = abs(fit - shot)
                rel = abs_err / abs(shot) if abs(shot) > 0 else float("inf")
                writer.writerow([a, n, l, f"{shot:.8f}", f"{fit:.8f}",
                                 f"{abs_err:.2e}", f"{rel:.2e}"])
                if abs(shot) >= 0.2:
                    if rel > worst[0]:
                        worst = (rel, (a, n, l))
                    if n == 0 and rel > worst_n0[0]:
                        worst_n0 = (rel, (a, n, l))
    if args.output:
        out.close()
    print(f"worst relative error          : {worst[0]:.4f} at {worst[1]}",
          file=sys.stderr)
    print(f"worst n = 0 relative error    : {worst_n0[0]:.5f} at {worst_n0[1]}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
