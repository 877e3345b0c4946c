from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from zetacodes import (HomogeneousEnumerator, MassMismatch, NonIntegralResult,
                       RangeError, UniPoly, coefficient_identity_check,
                       macwilliams_transform, mds_count, mds_enumerator)
from zetacodes.mds import enumerator_series_coeff


def test_mds_count_base_cases():
    # weight-d words: C(n,d)(q-1); full-support count of the parity code
    assert mds_count(4, 2, 5, 2) == math.comb(4, 2) * 4
    assert mds_count(4, 3, 5, 3) == 16
    assert mds_count(4, 3, 5, 4) == 8
    # d = 1 gives the full space: all weight-s words
    for s in range(1, 5):
        assert mds_count(4, 1, 3, s) == math.comb(4, s) * 2 ** s


def test_mds_count_range_errors():
    with pytest.raises(RangeError):
        mds_count(4, 0, 5, 2)
    with pytest.raises(RangeError):
        mds_count(4, 2, 5, 1)
    with pytest.raises(RangeError):
        mds_count(4, 2, 1, 2)


def test_mds_enumerator_masses():
    # mass must be q^(n+1-d), the size of an MDS code
    for (n, d, q) in [(4, 2, 5), (5, 3, 5), (4, 3, 3), (7, 3, 2), (6, 2, 4)]:
        w = mds_enumerator(n, d, q)
        assert w.mass() == q ** (n + 1 - d), (n, d, q)


def test_mds_enumerator_matches_genus_zero_codes(built_corpus):
    for name in ("rs423_5", "rs533_5", "tetra_3", "even4", "even19",
                 "rep2_6", "rep3_6", "sumzero5_4", "rep8_5", "sumzero7_6"):
        _, code, _ = built_corpus[name]
        n, d, q = code.length, code.min_distance(), code.group.order
        assert code.genus().integer_genus == 0, name
        expect = mds_enumerator(n, d, q)
        assert expect.counts() == code.weight_distribution, name


def test_mds_duality_pairing():
    # q^(n+1-d) M_{n,n+2-d}(x,y) = M_{n,d}(x+(q-1)y, x-y)
    from zetacodes import substitute_pair
    for (n, d, q) in [(4, 3, 5), (5, 3, 4), (6, 4, 3), (7, 5, 2), (5, 2, 6)]:
        lhs = mds_enumerator(n, n + 2 - d, q).scale(q ** (n + 1 - d))
        rhs = substitute_pair(mds_enumerator(n, d, q), q)
        assert lhs == rhs, (n, d, q)


def test_mds_shortening_recursion():
    # (n-s) M^(s)_{n,d} = n M^(s)_{n-1,d}
    for (n, d, q) in [(6, 2, 3), (7, 3, 2), (5, 2, 6)]:
        for s in range(d, n):
            assert (n - s) * mds_count(n, d, q, s) == n * mds_count(n - 1, d, q, s)


def test_macwilliams_transform_on_codes(built_corpus):
    for name in ("hamming7", "tetra_3", "pair4_22", "rep2_6", "five23"):
        _, code, dual = built_corpus[name]
        w = HomogeneousEnumerator.from_counts(code.weight_distribution)
        t = macwilliams_transform(w, code.group.order, code.size)
        assert t.counts() == dual.weight_distribution, name


def test_macwilliams_transform_errors():
    w = HomogeneousEnumerator.from_counts([1, 0, 0, 1])
    with pytest.raises(MassMismatch):
        macwilliams_transform(w, 2, 4)
    bad = HomogeneousEnumerator.from_counts([1, 2, 0, 1])
    with pytest.raises(NonIntegralResult):
        macwilliams_transform(bad, 2, 4)


def test_coefficient_identity():
    for (n, d, q) in [(4, 2, 2), (5, 3, 3), (7, 3, 2), (4, 2, 5), (6, 3, 4),
                      (5, 2, 6), (4, 4, 3), (3, 1, 2)]:
        assert coefficient_identity_check(n, d, q), (n, d, q)


@settings(max_examples=25)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_series_coeff_linearity(q, data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    m = data.draw(st.integers(min_value=0, max_value=n))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
    p = UniPoly(coeffs)
    direct = enumerator_series_coeff(p, n, q, m)
    split = enumerator_series_coeff(UniPoly(coeffs[:1]), n, q, m)
    for i, c in enumerate(coeffs[1:], start=1):
        term = enumerator_series_coeff(UniPoly.t_power(i).scale(c), n, q, m)
        split = split + term
    assert direct == split
