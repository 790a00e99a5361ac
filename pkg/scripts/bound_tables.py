#!/usr/bin/env python3
"""Reproduce the LP bound tables for all families.

Each table has one row per size parameter and one column per distance.
Values are certified by exact rational bisection; entries marked exact are
certified by exact feasibility/infeasibility at the integer itself.

Usage:
    python scripts/bound_tables.py [--out-dir DIR] [--tol P/Q] [--fast]
"""

import argparse
import pathlib
import subprocess
import sys

TABLES = [
    # (name, family args, n range, d range, extra flags)
    ("su2", ["--family", "su2"], (4, 12), (2, 4), ["--self-dual"]),
    ("clifford_odd", ["--family", "clifford-odd"], (3, 8), (2, 4), []),
    ("clifford_even", ["--family", "clifford-even"], (3, 6), (2, 4),
     ["--self-dual"]),
    ("qhamming2", ["--family", "qhamming", "--q", "2"], (2, 7), (2, 4), []),
    ("su3_sym", ["--family", "su-sym", "--q", "3"], (2, 6), (2, 4), []),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="tables")
    ap.add_argument("--tol", default="1/2000")
    ap.add_argument("--fast", action="store_true",
                    help="shrink the parameter ranges for a quick smoke run")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, fam, (n0, n1), (d0, d1), extra in TABLES:
        if args.fast:
            n1 = min(n1, n0 + 2)
        out = out_dir / f"{name}.csv"
        cmd = [sys.executable, "-m", "qdelsarte.cli", "table", *fam,
               "--n-from", str(n0), "--n-to", str(n1),
               "--d-from", str(d0), "--d-to", str(d1),
               "--tol", args.tol, "--format", "csv", "--out", str(out), *extra]
        print("->", out)
        subprocess.run(cmd, check=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
