"""Clifford operators, stabilizer-style Clifford codes, and their verification.

Operators Gamma_x on n qubits are indexed by binary labels x over 2n or 2n+1
letters.  Each Gamma_x is a phased product of Weyl-Brauer generators taken in
interleaved letter order (1, n+1, 2, n+2, ..., n, 2n, 2n+1); the phase
(-i)^{tau(x)} with tau(x) = wt(x)(wt(x)-1)/2 makes every Gamma_x Hermitian,
involutive, and gives Gamma_{1...1} (all 2n letters) equal to the last
generator sigma_z^{tensor n}.

Labels are stored as Python ints: bit k set means letter k+1 participates.
Two operators commute iff q(x, y) = wt(x)wt(y) + x.y vanishes mod 2, so a
q-isotropic set of labels generates a stabilizer group whose simultaneous
eigenspaces are quantum codes.  Detection, distance, purity, nondegeneracy,
and distance distributions are all decided by exact F_2 and group-algebra
arithmetic; for small n the symbolic verdicts are cross-checked against the
matrix condition P Gamma_x P = eps P.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import Sparse, sp_add, sp_kron, sp_mul, sp_scale, sp_rank
from .scalars import GR_ONE, GR_ZERO, GaussianRational, gr_i_power

MATRIX_CEILING = 10  # qubit count above which only the symbolic path runs

_SIGMA_X: Sparse = {(0, 1): GR_ONE, (1, 0): GR_ONE}
_SIGMA_Y: Sparse = {(0, 1): GaussianRational(0, -1), (1, 0): GaussianRational(0, 1)}
_SIGMA_Z: Sparse = {(0, 0): GR_ONE, (1, 1): -GR_ONE}
_ID2: Sparse = {(0, 0): GR_ONE, (1, 1): GR_ONE}


def weyl_brauer(n: int, k: int) -> Sparse:
    """k-th anticommuting generator on n qubits, 1 <= k <= 2n+1."""
    if not 1 <= k <= 2 * n + 1:
        raise IndexError(f"k={k} outside 1..{2 * n + 1}")
    if k == 2 * n + 1:
        factors = [_SIGMA_Z] * n
    else:
        pos = (k - 1) % n
        mid = _SIGMA_X if k <= n else _SIGMA_Y
        factors = [_SIGMA_Z] * pos + [mid] + [_ID2] * (n - pos - 1)
    out = factors[0]
    for f in factors[1:]:
        out = sp_kron(out, f, 2, 2)
    return out


def wt(x: int) -> int:
    return x.bit_count()


def tau(x: int) -> int:
    w = wt(x)
    return w * (w - 1) // 2


def _interleave_key(bit: int, n: int) -> int:
    # product order of letters: 1, n+1, 2, n+2, ..., n, 2n, 2n+1
    if bit < n:
        return 2 * bit
    if bit < 2 * n:
        return 2 * (bit - n) + 1
    return 2 * n


def _letters(x: int) -> list[int]:
    return [b for b in range(x.bit_length()) if (x >> b) & 1]


def gamma(n: int, x: int) -> Sparse:
    """Matrix of Gamma_x; entries are GaussianRational units."""
    letters = sorted(_letters(x), key=lambda b: _interleave_key(b, n))
    out: Sparse = {(i, i): GR_ONE for i in range(2 ** n)}
    for b in letters:
        out = sp_mul(out, weyl_brauer(n, b + 1))
    return sp_scale(out, gr_i_power(-tau(x) % 4))


def gamma_mul(n: int, x: int, y: int) -> tuple[int, int]:
    """Gamma_x Gamma_y = i^phase Gamma_{x xor y}; returns (phase mod 4, x xor y)."""
    z = x ^ y
    inv = 0
    ykeys = sorted(_interleave_key(b, n) for b in _letters(y))
    for a in _letters(x):
        inv += bisect_left(ykeys, _interleave_key(a, n))
    phase = (tau(z) - tau(x) - tau(y) + 2 * inv) % 4
    return phase, z


def q_form(x: int, y: int) -> int:
    return (wt(x) * wt(y) + wt(x & y)) % 2


def is_q_isotropic(labels: list[int]) -> bool:
    return all(q_form(a, b) == 0 for a, b in combinations(labels, 2)) \
        and all(q_form(a, a) == 0 for a in labels)


def label_from_str(s: str) -> int:
    if set(s) - {"0", "1"}:
        raise ValueError(f"bad label string {s!r}")
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def label_to_str(x: int, length: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(length))


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    generators: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.generators):
            raise ValueError("signs and generators must have equal length")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        lim = 1 << (2 * self.n)
        if any(not 0 < g < lim for g in self.generators):
            raise ValueError(f"generators must be nonzero {2 * self.n}-bit labels")
        if _f2_rank(list(self.generators)) != len(self.generators):
            raise ValueError("generators not linearly independent over F_2")
        if not is_q_isotropic(list(self.generators)):
            raise ValueError("generators not q-isotropic")

    @property
    def dimension(self) -> int:
        return 2 ** (self.n - len(self.generators))


def _f2_rank(vecs: list[int]) -> int:
    basis: list[int] = []
    for v in vecs:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def span_coefficients(stab: StabilizerCode) -> dict[int, int]:
    """Signed expansion of the projector: P = 2^{-s} sum_z c_z Gamma_z."""
    coeffs = {0: 1}
    for g, sign in zip(stab.generators, stab.signs):
        nxt = dict(coeffs)
        for z, c in coeffs.items():
            phase, zg = gamma_mul(stab.n, z, g)
            # products of commuting Hermitian involutions stay Hermitian
            assert phase in (0, 2), (z, g, phase)
            nxt[zg] = c * sign * (1 if phase == 0 else -1)
        coeffs = nxt
    return coeffs


def projector(stab: StabilizerCode) -> Sparse:
    if stab.n > MATRIX_CEILING:
        raise ValueError(f"matrix path limited to n <= {MATRIX_CEILING}; "
                         "use the symbolic operations instead")
    s = len(stab.generators)
    scale = GaussianRational(Fraction(1, 2 ** s), 0)
    out: Sparse = {}
    for z, c in span_coefficients(stab).items():
        out = sp_add(out, sp_scale(gamma(stab.n, z), scale * c))
    return out


def build_code(stab: StabilizerCode) -> "CliffordCode":
    return CliffordCode(stab)


@dataclass(frozen=True)
class CliffordCode:
    stab: StabilizerCode

    @property
    def n(self) -> int:
        return self.stab.n

    @property
    def dimension(self) -> int:
        return self.stab.dimension

    def projector(self) -> Sparse:
        return projector(self.stab)


def clifford_hamming(s: int) -> StabilizerCode:
    """Distance-3 code on n = 2^s - 1 qubits from the binary Hamming matrix."""
    if s < 3:
        raise ValueError(f"need s >= 3, got s={s}")
    n = 2 ** s - 1
    rows = []
    for i in range(s):  # row i reads bit i of the column index, MSB first
        x = sum(1 << (j - 1) for j in range(1, n + 1) if (j >> (s - 1 - i)) & 1)
        rows.append(x | (x << n))
    rows.append((1 << n) - 1)
    return StabilizerCode(n, tuple(rows), (1,) * (s + 1))


READINGS = ("even", "odd", "spinorial")


def reading_diameter(n: int, reading: str) -> int:
    if reading == "even":
        return 2 * n
    if reading in ("odd", "spinorial"):
        return n
    raise ValueError(f"unknown reading {reading!r}")


def block_weights(n: int, reading: str, t: int) -> tuple[int, ...]:
    """Label weights over F_2^{2n} that make up the distance-t error block."""
    if reading == "even":
        return (t,)
    if reading == "odd":
        # weight-t words of the odd algebra reduce to weight t and 2n+1-t
        a, b = t, 2 * n + 1 - t
    elif reading == "spinorial":
        a, b = 2 * t, 2 * n + 1 - 2 * t
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return tuple(sorted({w for w in (a, b) if 0 <= w <= 2 * n}))


def _labels_of_weight(length: int, w: int):
    for bits in combinations(range(length), w):
        yield sum(1 << b for b in bits)


def _block_size(length: int, n: int, reading: str, t: int) -> int:
    from math import comb
    return sum(comb(length, w) for w in block_weights(n, reading, t))


@dataclass(frozen=True)
class DetectionReport:
    reading: str
    dimension: int
    min_distance: int
    slope_values: dict[str, Fraction]
    is_pure: bool
    is_nondegenerate: bool


def detection_report(code: CliffordCode | StabilizerCode, reading: str,
                     cross_check: bool | None = None) -> DetectionReport:
    stab = code.stab if isinstance(code, CliffordCode) else code
    n, length = stab.n, 2 * stab.n
    if stab.dimension == 0:
        raise ValueError("dimension-0 code")
    r = reading_diameter(n, reading)
    coeffs = span_coefficients(stab)
    span = set(coeffs)
    gens = stab.generators

    def detected(x: int) -> bool:
        return x in span or any(q_form(x, g) for g in gens)

    if stab.dimension == 1:
        d = r + 1
    else:
        d = 1
        while d <= r:
            ok = all(detected(x)
                     for w in block_weights(n, reading, d)
                     for x in _labels_of_weight(length, w))
            if not ok:
                break
            d += 1

    # labels grouped by reading-distance, up to d-1 (the detected range)
    def block_of(x: int) -> int | None:
        w = wt(x)
        for t in range(r + 1):
            if w in block_weights(n, reading, t):
                return t
        return None

    slope_values = {label_to_str(0, length): Fraction(1)}
    pure = True
    for z, c in coeffs.items():
        if z == 0:
            continue
        t = block_of(z)
        if t is not None and t <= d - 1:
            slope_values[label_to_str(z, length)] = Fraction(c)
            pure = False

    half = (d - 1) // 2
    nondeg = _nondegenerate(stab, coeffs, n, reading, half)

    if cross_check is None:
        cross_check = n <= 7
    if cross_check and n <= MATRIX_CEILING:
        _matrix_cross_check(stab, coeffs, reading, d)

    return DetectionReport(reading, stab.dimension, d, slope_values, pure, nondeg)


def _nondegenerate(stab: StabilizerCode, coeffs: dict[int, int],
                   n: int, reading: str, half: int) -> bool:
    """Rank test of the slope form eps(Gamma_a Gamma_b) on errors up to half."""
    length = 2 * n
    labels: list[int] = []
    for t in range(half + 1):
        for w in block_weights(n, reading, t):
            labels.extend(_labels_of_weight(length, w))
    idx = {x: i for i, x in enumerate(labels)}
    rows: list[dict[int, GaussianRational]] = []
    for a in labels:
        row: dict[int, GaussianRational] = {}
        for b in labels:
            phase, z = gamma_mul(n, a, b)
            c = coeffs.get(z)
            if c is not None:
                v = gr_i_power(phase) * c
                if v:
                    row[idx[b]] = v
        rows.append(row)
    return sp_rank(rows) == len(labels)


def _matrix_cross_check(stab: StabilizerCode, coeffs: dict[int, int],
                        reading: str, d: int) -> None:
    """Re-derive detection verdicts from P Gamma_x P against the F_2 rule."""
    n, length = stab.n, 2 * stab.n
    r = reading_diameter(n, reading)
    P = projector(stab)
    span = set(coeffs)
    gens = stab.generators
    rng = random.Random(20_240_601)
    for t in range(1, min(d + 1, r + 1)):
        labels = [x for w in block_weights(n, reading, t)
                  for x in _labels_of_weight(length, w)]
        if len(labels) > 256:
            labels = rng.sample(labels, 256)
        for x in labels:
            pgp = sp_mul(sp_mul(P, gamma(n, x)), P)
            if x in span:
                want = sp_scale(P, GaussianRational(Fraction(coeffs[x]), 0))
                sym = True
            elif any(q_form(x, g) for g in gens):
                want = {}
                sym = True
            else:
                sym = False
            if sym:
                assert pgp == want, (x, t)
            else:
                # undetected means PXP is not a scalar multiple of P
                key = next(iter(P))
                ratio = pgp.get(key, GR_ZERO) / P[key]
                assert pgp != sp_scale(P, ratio), (x, t)


def distance_distribution(code: CliffordCode | StabilizerCode, reading: str,
                          op_budget: int = 5_000_000
                          ) -> tuple[list[Fraction], list[Fraction]]:
    """Exact (A, B) via the group algebra; no matrices needed at any n."""
    stab = code.stab if isinstance(code, CliffordCode) else code
    n, length = stab.n, 2 * stab.n
    r = reading_diameter(n, reading)
    coeffs = span_coefficients(stab)
    span = set(coeffs)
    s = len(stab.generators)
    K = stab.dimension
    total = sum(_block_size(length, n, reading, t) for t in range(r + 1))
    if total * len(span) > op_budget:
        raise ValueError("distribution scan exceeds the operation budget; "
                         "raise op_budget explicitly to force it")
    A: list[Fraction] = []
    B: list[Fraction] = []
    for t in range(r + 1):
        hits = 0
        sig = 0
        for w in block_weights(n, reading, t):
            for x in _labels_of_weight(length, w):
                if x in span:
                    hits += 1
                sig += sum(-1 if q_form(x, z) else 1 for z in span)
        A.append(Fraction(K * hits))
        B.append(Fraction(sig, 2 ** s))
    return A, B
