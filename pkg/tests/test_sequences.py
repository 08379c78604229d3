"""Sequence evaluation against independent recurrence walks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucassquares import (
    INDEX_LIMIT,
    IndexedPair,
    ModularPair,
    SequenceParams,
    pair_at,
    pair_mod,
    seq_range,
    u,
    u_mod,
    v,
    v_mod,
)

from _oracles import mat_pow_u, naive_u, naive_u_seq, naive_v, naive_v_seq


FIB = SequenceParams(1, 1)
P5 = SequenceParams(5, 1)


def valid_params() -> list[SequenceParams]:
    out = []
    for p in range(1, 51):
        out.append(SequenceParams(p, 1))
        if p >= 3:
            out.append(SequenceParams(p, -1))
    return out


class TestValidation:
    def test_rejects_nonpositive_p(self):
        with pytest.raises(ValueError):
            SequenceParams(0, 1)
        with pytest.raises(ValueError):
            SequenceParams(-3, 1)

    def test_rejects_q_outside_units(self):
        for q in (0, 2, -2, 5):
            with pytest.raises(ValueError):
                SequenceParams(3, q)

    def test_rejects_nonpositive_discriminant(self):
        with pytest.raises(ValueError):
            SequenceParams(1, -1)
        with pytest.raises(ValueError):
            SequenceParams(2, -1)

    def test_rejects_non_integers(self):
        with pytest.raises(ValueError):
            SequenceParams(1.0, 1)
        with pytest.raises(ValueError):
            SequenceParams(1, 1.0)

    def test_smallest_q_minus_one_case_is_p3(self):
        assert SequenceParams(3, -1).discriminant == 5

    def test_discriminant(self):
        assert FIB.discriminant == 5
        assert SequenceParams(4, -1).discriminant == 12
        assert P5.discriminant == 29

    def test_index_cap(self):
        with pytest.raises(ValueError):
            u(FIB, INDEX_LIMIT)
        with pytest.raises(ValueError):
            u(FIB, -INDEX_LIMIT)
        assert u_mod(FIB, INDEX_LIMIT - 1, 97) == pow_free_check()


def pow_free_check() -> int:
    """Independent value of F_{2**63 - 1} mod 97 via the Pisano period."""
    seq = [0, 1]
    while True:
        seq.append((seq[-1] + seq[-2]) % 97)
        if seq[-2] == 0 and seq[-1] == 1 and len(seq) > 2:
            break
    period = len(seq) - 2
    return seq[(INDEX_LIMIT - 1) % period]


class TestKnownValues:
    def test_fibonacci_lucas_at_12(self):
        assert u(FIB, 12) == 144
        assert v(FIB, 12) == 322

    def test_pair_at_p5(self):
        assert pair_at(P5, 12) == IndexedPair(12, 71351280, 384238402)

    def test_u_series_p5(self):
        want = [0, 1, 5, 26, 135, 701, 3640, 18901, 98145, 509626,
                2646275, 13741001, 71351280]
        assert [u(P5, n) for n in range(13)] == want

    def test_negative_index(self):
        assert u(SequenceParams(3, 1), -4) == -33
        assert v(SequenceParams(3, 1), -4) == 119
        assert u(FIB, -1) == 1
        assert u(FIB, -2) == -1
        assert v(FIB, -3) == -4

    def test_modular_examples(self):
        assert u_mod(FIB, 12, 10) == 4
        assert u_mod(P5, 4, 25) == 10
        assert v_mod(P5, 3, 25) == 15
        assert pair_mod(P5, 4, 25) == ModularPair(4, 25, 10, 2)


class TestAgainstOracles:
    @pytest.mark.parametrize("params", valid_params(), ids=str)
    def test_signed_grid(self, params):
        for n in range(-64, 65):
            assert u(params, n) == naive_u(params.P, params.Q, n)
            assert v(params, n) == naive_v(params.P, params.Q, n)

    def test_matrix_power_identity(self):
        for params in (FIB, P5, SequenceParams(4, -1), SequenceParams(9, -1)):
            for n in range(0, 201, 7):
                assert u(params, n) == mat_pow_u(params.P, params.Q, n)

    def test_seq_range_matches_naive(self):
        for params in (FIB, P5, SequenceParams(3, -1)):
            useq = naive_u_seq(params.P, params.Q, 40)
            vseq = naive_v_seq(params.P, params.Q, 40)
            pairs = list(seq_range(params, 0, 39))
            assert [p.n for p in pairs] == list(range(40))
            assert [p.u for p in pairs] == useq
            assert [p.v for p in pairs] == vseq

    def test_seq_range_negative_span(self):
        pairs = list(seq_range(FIB, -6, 6))
        for pair in pairs:
            assert pair.u == naive_u(1, 1, pair.n)
            assert pair.v == naive_v(1, 1, pair.n)

    def test_seq_range_rejects_empty(self):
        with pytest.raises(ValueError):
            list(seq_range(FIB, 5, 4))

    @settings(max_examples=200, deadline=None)
    @given(p=st.integers(1, 30), q=st.sampled_from((1, -1)),
           n=st.integers(-300, 300))
    def test_doubling_matches_walk(self, p, q, n):
        if q == -1 and p <= 2:
            return
        params = SequenceParams(p, q)
        assert u(params, n) == naive_u(p, q, n)
        assert v(params, n) == naive_v(p, q, n)


class TestModular:
    MODULI = (2, 3, 5, 7, 10, 25, 10**9 + 7)

    def test_consistent_with_exact(self):
        for params in (FIB, SequenceParams(2, 1), P5, SequenceParams(4, -1)):
            for n in range(0, 301):
                exact_u, exact_v = u(params, n), v(params, n)
                for modulus in self.MODULI:
                    assert u_mod(params, n, modulus) == exact_u % modulus
                    assert v_mod(params, n, modulus) == exact_v % modulus

    def test_large_index(self):
        modulus = 10**9 + 7
        want_u, want_v = 0, 2
        a, b = 0, 1
        for _ in range(10**6):
            a, b = b, (b + a) % modulus
        want_u = a
        want_v = (2 * b - a) % modulus
        assert u_mod(FIB, 10**6, modulus) == want_u
        assert v_mod(FIB, 10**6, modulus) == want_v

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            u_mod(FIB, -1, 7)
        with pytest.raises(ValueError):
            u_mod(FIB, 3, 1)
        with pytest.raises(ValueError):
            v_mod(FIB, 3, 0)
        with pytest.raises(ValueError):
            v_mod(FIB, 3, -5)

    def test_modular_pair_validates_ranges(self):
        with pytest.raises(ValueError):
            ModularPair(1, 10, 10, 0)
        with pytest.raises(ValueError):
            ModularPair(1, 10, 0, -1)


class TestImmutability:
    def test_frozen_dataclasses(self):
        pair = pair_at(FIB, 3)
        with pytest.raises(AttributeError):
            pair.u = 5
        with pytest.raises(AttributeError):
            FIB.P = 2
