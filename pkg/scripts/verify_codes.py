#!/usr/bin/env python3
"""Construct every explicit code family and verify it against the LP bounds.

Covers the Clifford Hamming stabilizer codes (s = 3, 4), the chirality
half-space codes, and the su(2) density-1/4 and density-1/3 codes.
"""

import argparse
from fractions import Fraction

from qdelsarte.clifford import (
    StabilizerCode,
    build_code,
    clifford_hamming,
    detection_report,
)
from qdelsarte.families import CliffordOdd, Su2, profile
from qdelsarte.lp import feasible, lp_bound, volume_bound
from qdelsarte.su2 import code_quarter, code_third, min_distance


def check(label: str, ok: bool) -> bool:
    print(f"  [{'ok' if ok else 'FAIL'}] {label}")
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s-max", type=int, default=4,
                    help="largest Clifford Hamming size parameter")
    ap.add_argument("--su2-max", type=int, default=16,
                    help="largest su(2) representation length")
    args = ap.parse_args()
    ok = True

    for s in range(3, args.s_max + 1):
        stab = clifford_hamming(s)
        code = build_code(stab)
        n = stab.n
        print(f"Clifford Hamming code, s={s} (n={n}, dim {code.dimension}):")
        for reading in ("even", "odd"):
            rep = detection_report(code, reading, cross_check=(n <= 7))
            ok &= check(f"{reading} reading distance {rep.min_distance}",
                        rep.min_distance == 3)
        want = 2 ** (2 ** s - s - 2)
        ok &= check(f"dimension {code.dimension} = LP value",
                    code.dimension == want
                    and feasible(CliffordOdd(n), 3, Fraction(want)).feasible
                    and not feasible(CliffordOdd(n), 3,
                                     Fraction(want) + Fraction(1, 1000)).feasible)
        if s == 3:
            ok &= check("meets the volume bound",
                        volume_bound(CliffordOdd(n), 3) == code.dimension)

    print("Chirality half-space codes (impure, distance 2):")
    for n in (2, 3, 4, 5):
        code = build_code(StabilizerCode(n, ((1 << 2 * n) - 1,), (1,)))
        rep = detection_report(code, "odd")
        ok &= check(f"n={n}: dim {code.dimension} = 2^(n-1), d=2, impure",
                    code.dimension == 2 ** (n - 1)
                    and rep.min_distance == 2 and not rep.is_pure)

    print("su(2) density-1/3 codes:")
    for n in range(4, args.su2_max + 1):
        vecs = code_third(n)
        d = min_distance(n, vecs)
        ok &= check(f"n={n}: dim {len(vecs)}, d={d}", d == 2)

    print("su(2) density-1/4 codes:")
    for n in range(7, args.su2_max + 1):
        vecs = code_quarter(n)
        d = min_distance(n, vecs)
        ok &= check(f"n={n}: dim {len(vecs)}, d={d}", d == 2)

    print("su(2) n=6 optimality:")
    res = lp_bound(Su2(6), 2, tol=Fraction(1, 2000))
    ok &= check(f"lp_bound(Su2(6), 2) = {res.lower} (exact={res.exact})",
                res.exact and res.lower == len(code_third(6)))

    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
