"""Square detection and Jacobi symbol against independent references."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucassquares import (
    SQUAREFREE_COEFFS,
    SquareClass,
    is_square,
    isqrt,
    jacobi,
    square_class,
    square_witness,
)

from _oracles import naive_isqrt, naive_jacobi, naive_square_witness


class TestIsqrt:
    def test_known_values(self):
        assert isqrt(0) == 0
        assert isqrt(1) == 1
        assert isqrt(2) == 1
        assert isqrt(13680) == 116
        assert isqrt(10**30) == 10**15

    def test_rejects_negative_and_non_integers(self):
        with pytest.raises(ValueError):
            isqrt(-1)
        with pytest.raises(ValueError):
            isqrt(2.0)

    def test_random_against_binary_search(self):
        rng = random.Random(20260816)
        for _ in range(10**4):
            bits = rng.randrange(1, 512)
            n = rng.getrandbits(bits)
            r = isqrt(n)
            assert r == naive_isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)

    def test_square_boundaries(self):
        for x in list(range(200)) + [10**9, 10**18, 10**50]:
            sq = x * x
            assert isqrt(sq) == x
            if x > 0:
                assert isqrt(sq - 1) == x - 1
                assert isqrt(sq + 1) == x

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=0, max_value=10**60))
    def test_floor_property(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


class TestSquareWitness:
    def test_known_values(self):
        assert square_witness(3640, 10) is None
        assert square_witness(71351280, 7280) == 99
        assert square_witness(144, 1) == 12
        assert square_witness(19602, 2) == 99
        assert square_witness(0, 3) == 0
        assert square_witness(-4, 1) is None

    def test_rejects_bad_w(self):
        with pytest.raises(ValueError):
            square_witness(10, 0)
        with pytest.raises(ValueError):
            square_witness(10, -2)

    def test_is_square_spot(self):
        assert is_square(0) and is_square(1) and is_square(9801)
        assert not is_square(2) and not is_square(-9) and not is_square(9802)

    def test_roundtrip_all_coefficients(self):
        for w in SQUAREFREE_COEFFS:
            for x in range(0, 2000):
                assert square_witness(w * x * x, w) == x

    def test_scan_matches_naive(self):
        for w in (1, 5):
            for n in range(0, 10**5):
                assert square_witness(n, w) == naive_square_witness(n, w)

    def test_composite_w_allowed(self):
        # Two-term searches pass products like w * U_m, which are not
        # square-free; the witness test must still be exact.
        assert square_witness(7280 * 81, 7280) == 9
        assert square_witness(7280 * 80, 7280) is None


class TestSquareClass:
    def test_smallest_coefficient_wins(self):
        assert square_class(4) == SquareClass(1, 2)
        assert square_class(18) == SquareClass(2, 3)
        assert square_class(45) == SquareClass(5, 3)
        assert square_class(0) == SquareClass(1, 0)
        assert square_class(19602) == SquareClass(2, 99)

    def test_unclassifiable(self):
        assert square_class(-1) is None
        assert square_class(7) is None
        assert square_class(95) is None

    def test_value_roundtrip(self):
        for n in range(0, 5000):
            sc = square_class(n)
            if sc is not None:
                assert sc.value == n

    def test_validation(self):
        with pytest.raises(ValueError):
            SquareClass(4, 3)
        with pytest.raises(ValueError):
            SquareClass(2, -1)


class TestJacobi:
    def test_known_values(self):
        assert jacobi(2, 5) == -1
        assert jacobi(1, 9) == 1
        assert jacobi(5, 9) == 1
        assert jacobi(0, 9) == 0
        assert jacobi(3, 9) == 0
        assert jacobi(7, 1) == 1

    def test_rejects_bad_modulus(self):
        for n in (0, -3, 4):
            with pytest.raises(ValueError):
                jacobi(2, n)

    def test_against_legendre_factorization(self):
        for n in range(3, 442, 2):
            for a in range(0, n):
                assert jacobi(a, n) == naive_jacobi(a, n)

    def test_multiplicative_in_numerator(self):
        rng = random.Random(7)
        for _ in range(2000):
            n = 2 * rng.randrange(1, 500) + 1
            a, b = rng.randrange(0, 10**6), rng.randrange(0, 10**6)
            assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)

    def test_periodic_in_numerator(self):
        rng = random.Random(8)
        for _ in range(2000):
            n = 2 * rng.randrange(1, 500) + 1
            a = rng.randrange(-10**6, 10**6)
            assert jacobi(a, n) == jacobi(a + n, n)
