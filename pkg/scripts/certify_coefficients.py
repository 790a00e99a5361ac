#!/usr/bin/env python3
"""Certify the closed-form W_t(j) coefficients against the brute-force oracle.

Runs verify_wtj (eigenvalue brute force on explicit operator bases) and
verify_lambda (the antiunitary realizing the self-dual signature) on the
largest instances the oracle admits per family.
"""

import argparse
import time

from qdelsarte.families import (
    CliffordEven,
    CliffordOdd,
    QHamming,
    Semispinorial,
    Spinorial,
    Su2,
    SunExt,
    SuqSym,
)
from qdelsarte.oracle import verify_lambda, verify_wtj
from qdelsarte.wtj import lambda_signature

GRID = (
    [QHamming(2, n) for n in range(1, 4)]
    + [QHamming(3, n) for n in range(1, 3)]
    + [Su2(n) for n in range(1, 7)]
    + [SuqSym(3, n) for n in range(1, 4)]
    + [SunExt(n, w) for n in range(2, 7) for w in range(1, n)]
    + [CliffordOdd(n) for n in range(1, 5)]
    + [CliffordEven(n) for n in range(1, 5)]
    + [Spinorial(n) for n in range(1, 5)]
    + [Semispinorial(n) for n in range(2, 6)]
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.parse_args()
    ok = True
    for spec in GRID:
        t0 = time.time()
        wrep = verify_wtj(spec)
        line = f"{spec!s:28} wtj={'ok' if wrep.matches else 'FAIL'}"
        ok &= wrep.matches
        if lambda_signature(spec) is not None:
            try:
                lrep = verify_lambda(spec)
                line += f" lambda={'ok' if lrep.matches else 'FAIL'}"
                ok &= lrep.matches
            except NotImplementedError:
                line += " lambda=not-checked"
        print(f"{line}   ({time.time() - t0:.1f}s)")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
