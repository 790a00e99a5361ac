"""Clifford operators, stabilizer codes, detection reports, distributions."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdelsarte.families import CliffordEven, CliffordOdd, profile
from qdelsarte.linalg import (
    sp_clean,
    sp_conj_transpose,
    sp_identity,
    sp_mul,
    sp_scale,
    sp_sub,
)
from qdelsarte.scalars import GR_ONE, GaussianRational, gr_i_power
from qdelsarte.clifford import (
    READINGS,
    StabilizerCode,
    block_weights,
    build_code,
    clifford_hamming,
    detection_report,
    distance_distribution,
    gamma,
    gamma_mul,
    is_q_isotropic,
    label_from_str,
    label_to_str,
    q_form,
    reading_diameter,
    span_coefficients,
    tau,
    weyl_brauer,
    wt,
)
from qdelsarte.wtj import wtj_matrix

F = Fraction


def dense_eq(a, b):
    return sp_clean(sp_sub(a, b)) == {}


class TestGammaOperators:
    @pytest.mark.parametrize("n", [1, 2])
    def test_exhaustive_properties(self, n):
        m = 2 * n + 1
        eye = sp_identity(2 ** n)
        for x in range(1, 2 ** m):
            g = gamma(n, x)
            assert dense_eq(sp_conj_transpose(g), g)  # Hermitian
            assert dense_eq(sp_mul(g, g), eye)  # involutive
        # single letters are the generators themselves
        for k in range(1, m + 1):
            assert dense_eq(gamma(n, 1 << (k - 1)), weyl_brauer(n, k))
        # chirality: the product of all 2n letters equals the last generator
        assert dense_eq(gamma(n, (1 << (2 * n)) - 1), weyl_brauer(n, m))

    @pytest.mark.parametrize("n", [1, 2])
    def test_multiplication_rule_exhaustive(self, n):
        m = 2 * n + 1
        for x in range(2 ** m):
            for y in range(2 ** m):
                phase, z = gamma_mul(n, x, y)
                assert z == x ^ y
                lhs = sp_mul(gamma(n, x), gamma(n, y))
                rhs = sp_scale(gamma(n, z), gr_i_power(phase))
                assert dense_eq(lhs, rhs)

    @given(st.integers(3, 4), st.data())
    @settings(max_examples=40, deadline=None)
    def test_multiplication_rule_randomized(self, n, data):
        m = 2 * n + 1
        x = data.draw(st.integers(0, 2 ** m - 1))
        y = data.draw(st.integers(0, 2 ** m - 1))
        phase, z = gamma_mul(n, x, y)
        lhs = sp_mul(gamma(n, x), gamma(n, y))
        rhs = sp_scale(gamma(n, z), gr_i_power(phase))
        assert dense_eq(lhs, rhs)

    @given(st.integers(1, 4), st.data())
    @settings(max_examples=60, deadline=None)
    def test_commutation_sign(self, n, data):
        m = 2 * n + 1
        x = data.draw(st.integers(0, 2 ** m - 1))
        y = data.draw(st.integers(0, 2 ** m - 1))
        pxy, z1 = gamma_mul(n, x, y)
        pyx, z2 = gamma_mul(n, y, x)
        assert z1 == z2
        sign = (pxy - pyx) % 4
        assert sign in (0, 2)
        assert (sign // 2) == q_form(x, y)

    def test_q_form_symmetric_bilinear_over_f2(self):
        for x, y in itertools.product(range(16), repeat=2):
            assert q_form(x, y) == q_form(y, x)
            for z in range(16):
                assert q_form(x ^ y, z) == (q_form(x, z) + q_form(y, z)) % 2

    def test_tau(self):
        assert [tau(x) for x in (0b0, 0b1, 0b11, 0b111, 0b1111)] == [0, 0, 1, 3, 6]


def test_label_round_trip():
    assert label_from_str("1010011") == 0b1100101
    assert label_to_str(0b1100101, 7) == "1010011"
    for x in range(64):
        assert label_from_str(label_to_str(x, 6)) == x


def test_block_weights_and_diameters():
    n = 4
    assert reading_diameter(n, "even") == 2 * n
    assert reading_diameter(n, "odd") == n
    assert reading_diameter(n, "spinorial") == n
    assert block_weights(n, "even", 2) == (2,)
    assert block_weights(n, "odd", 2) == (2, 7)
    assert block_weights(n, "spinorial", 2) == (4, 5)
    # block label counts agree with the metric profiles; labels x and its
    # complement name the same operator, so nonzero blocks are double-counted
    import math
    for t in range(n + 1):
        count = sum(math.comb(2 * n + 1, w) for w in block_weights(n, "odd", t))
        assert count == profile(CliffordOdd(n)).dim_V[t] * (2 if t else 1)
    for t in range(2 * n + 1):
        ws = block_weights(n, "even", t)
        assert ws == (t,)


class TestStabilizerCode:
    def test_rejects_non_isotropic(self):
        # sigma_x sigma_y on one letter pair anticommutes
        with pytest.raises((ValueError, AssertionError)):
            StabilizerCode(2, (0b00011, 0b00001), (1, 1))

    def test_rejects_dependent_generators(self):
        g = clifford_hamming(3)
        bad = g.generators + (g.generators[0] ^ g.generators[1],)
        with pytest.raises((ValueError, AssertionError)):
            StabilizerCode(g.n, bad, (1,) * len(bad))

    def test_span_coefficients_signs(self):
        stab = clifford_hamming(3)
        span = span_coefficients(stab)
        assert len(span) == 2 ** len(stab.generators)
        assert span[0] == 1
        assert all(c in (1, -1) for c in span.values())

    def test_dimension(self):
        stab = clifford_hamming(3)
        assert build_code(stab).dimension == 2 ** (7 - 3) // 2 * 1  # 2^{n-s-?}
        assert build_code(stab).dimension == 8


class TestCliffordHamming:
    def test_generator_matrix_s3(self):
        stab = clifford_hamming(3)
        assert stab.n == 7
        rows = {label_to_str(g, 2 * stab.n) for g in stab.generators}
        assert rows == {
            "00011110001111",
            "01100110110011",
            "10101011010101",
            "11111110000000",
        }

    def test_isotropic_any_s(self):
        for s in (3, 4, 5):
            stab = clifford_hamming(s)
            assert stab.n == 2 ** s - 1
            assert is_q_isotropic(list(stab.generators))

    def test_code_parameters_s3(self):
        code = build_code(clifford_hamming(3))
        for reading in ("even", "odd"):
            rep = detection_report(code, reading)
            assert rep.dimension == 8
            assert rep.min_distance == 3
            assert rep.is_pure
            assert rep.is_nondegenerate

    def test_code_parameters_s4_symbolic(self):
        code = build_code(clifford_hamming(4))
        for reading in ("even", "odd"):
            rep = detection_report(code, reading, cross_check=False)
            assert rep.dimension == 1024
            assert rep.min_distance == 3


class TestHalfSpaceCode:
    """The chirality half-space: an impure distance-2 code of dimension 2^{n-1}."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_half_space(self, n):
        stab = StabilizerCode(n, ((1 << 2 * n) - 1,), (1,))
        code = build_code(stab)
        assert code.dimension == 2 ** (n - 1)
        rep = detection_report(code, "odd")
        assert rep.min_distance == 2
        assert not rep.is_pure  # the distance-1 chirality letter acts as +1


class TestDistributions:
    def test_full_space_distribution(self):
        # the trivial code P = I has A_t = B_t * K with B_t = dim V_t
        n = 3
        stab = StabilizerCode(n, (), ())
        code = build_code(stab)
        a, b = distance_distribution(code, "odd")
        prof = profile(CliffordOdd(n))
        assert tuple(b) == tuple(F(v) for v in prof.dim_V)
        assert a[0] == prof.dim_H

    @pytest.mark.parametrize("reading,family", [
        ("odd", CliffordOdd(7)), ("even", CliffordEven(7))])
    def test_hamming_code_transform_identities(self, reading, family):
        code = build_code(clifford_hamming(3))
        a, b = distance_distribution(code, reading)
        w = wtj_matrix(family)
        r = profile(family).diameter_r
        k = a[0]
        # B = W . A and A = W . B (W is an involution)
        for t in range(r + 1):
            assert sum(w[t][j] * a[j] for j in range(r + 1)) == b[t]
            assert sum(w[t][j] * b[j] for j in range(r + 1)) == a[t]
        # A_t <= K B_t, with the first strict inequality at t = d
        d = detection_report(code, reading, cross_check=False).min_distance
        for t in range(r + 1):
            assert a[t] <= k * b[t]
        strict = [t for t in range(r + 1) if a[t] < k * b[t]]
        assert min(strict) == d

    def test_odd_hamming_values(self):
        code = build_code(clifford_hamming(3))
        a, _ = distance_distribution(code, "odd")
        assert tuple(a) == (8, 0, 0, 0, 0, 0, 0, 120)
