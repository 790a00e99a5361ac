"""Exact phase-1 simplex over Fraction.

Decides feasibility of {A x (=|>=) b, x >= 0} by minimizing the sum of
artificial variables with Bland's anti-cycling pivot rule.  All arithmetic
is rational, so the verdict is exact; a feasible system also yields a
witness point that callers can re-check by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

EQ = "eq"
GE = "ge"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    sense: str  # EQ or GE
    rhs: Fraction


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None


def check_feasible(constraints: list[Constraint], nvars: int) -> FeasibilityResult:
    rows: list[list[Fraction]] = []
    senses: list[str] = []
    rhss: list[Fraction] = []
    for c in constraints:
        if len(c.coeffs) != nvars:
            raise ValueError("constraint width mismatch")
        coeffs, sense, rhs = list(c.coeffs), c.sense, Fraction(c.rhs)
        if rhs < 0:
            # normalize to b >= 0; a flipped >= becomes <=, encoded as
            # negated >= with slack sign handled below via surplus column
            coeffs = [-x for x in coeffs]
            rhs = -rhs
            if sense == GE:
                sense = "le"
        rows.append(coeffs)
        senses.append(sense)
        rhss.append(rhs)

    m = len(rows)
    # columns: structural vars, then one slack/surplus per inequality,
    # then artificials for eq and >= rows
    slack_col: dict[int, int] = {}
    ncols = nvars
    for i, s in enumerate(senses):
        if s in (GE, "le"):
            slack_col[i] = ncols
            ncols += 1
    art_col: dict[int, int] = {}
    for i, s in enumerate(senses):
        if s in (EQ, GE):
            art_col[i] = ncols
            ncols += 1

    T = [[Fraction(0)] * (ncols + 1) for _ in range(m)]
    basis = [0] * m
    for i in range(m):
        for j in range(nvars):
            T[i][j] = Fraction(rows[i][j])
        T[i][ncols] = rhss[i]
        if senses[i] == GE:
            T[i][slack_col[i]] = Fraction(-1)
        elif senses[i] == "le":
            T[i][slack_col[i]] = Fraction(1)
        if i in art_col:
            T[i][art_col[i]] = Fraction(1)
            basis[i] = art_col[i]
        else:
            basis[i] = slack_col[i]

    # objective row: minimize the artificial total
    obj = [Fraction(0)] * (ncols + 1)
    artificials = set(art_col.values())
    for i in art_col:
        for j in range(ncols + 1):
            obj[j] += T[i][j]

    while True:
        enter = -1
        basic = set(basis)
        for j in range(ncols):  # Bland: lowest eligible index
            if j in artificials or j in basic:
                continue
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            break  # unbounded in phase 1 cannot happen, but stay safe
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, T[leave])]
        basis[leave] = enter

    if obj[ncols] != 0:
        return FeasibilityResult(False, None)

    # drive any lingering zero-valued artificials out of the basis
    for i in range(m):
        if basis[i] in artificials:
            for j in range(ncols):
                if j not in artificials and T[i][j]:
                    piv = T[i][j]
                    T[i] = [x / piv for x in T[i]]
                    for k in range(m):
                        if k != i and T[k][j]:
                            f = T[k][j]
                            T[k] = [x - f * y for x, y in zip(T[k], T[i])]
                    basis[i] = j
                    break

    x = [Fraction(0)] * nvars
    for i in range(m):
        if basis[i] < nvars:
            x[basis[i]] = T[i][ncols]
    return FeasibilityResult(True, tuple(x))


def verify_witness(constraints: list[Constraint], witness: tuple[Fraction, ...]) -> bool:
    if any(x < 0 for x in witness):
        return False
    for c in constraints:
        val = sum(a * x for a, x in zip(c.coeffs, witness))
        if c.sense == EQ and val != c.rhs:
            return False
        if c.sense == GE and val < c.rhs:
            return False
    return True
