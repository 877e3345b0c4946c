from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zetacodes import (EmptyModuli, EnumerationBoundExceeded, ModulusBelowTwo,
                       ShapeMismatch, enumerate_words, make_group,
                       pairing_exponent, word_weight)
from zetacodes.groups import MAX_ENUM_ENV, default_max_enum


def test_constructor_validation():
    with pytest.raises(EmptyModuli):
        make_group(())
    with pytest.raises(ModulusBelowTwo):
        make_group((2, 1))
    with pytest.raises(ModulusBelowTwo):
        make_group((0,))


def test_order_and_exponent():
    g = make_group((2, 3, 4))
    assert g.order == 24
    assert g.exponent == 12
    assert make_group((2, 2)).exponent == 2


def test_indexing_roundtrip():
    g = make_group((2, 3))
    seen = set()
    for idx in range(g.order):
        res = g.residues_of(idx)
        assert g.index_of(res) == idx
        seen.add(res)
    assert len(seen) == 6
    # first factor is most significant
    assert g.index_of((1, 0)) == 3
    with pytest.raises(ShapeMismatch):
        g.index_of((1,))
    with pytest.raises(ShapeMismatch):
        g.index_of((2, 0))


def test_element_arithmetic():
    g = make_group((4,))
    a = g.element((3,))
    b = g.element((2,))
    assert (a + b).residues == (1,)
    assert (-a).residues == (1,)
    assert (a + (-a)).is_zero()


def test_add_and_neg_tables_match_elements():
    g = make_group((2, 3))
    add, neg = g.add_table, g.neg_table
    for x in range(g.order):
        ex = g.element(g.residues_of(x))
        assert g.index_of((-ex).residues) == neg[x]
        for y in range(g.order):
            ey = g.element(g.residues_of(y))
            assert g.index_of((ex + ey).residues) == add[x, y]


def test_pairing_table_symmetric_and_bilinear():
    g = make_group((2, 4))
    t = g.pair_table
    assert np.array_equal(t, t.T)
    add = g.add_table
    m = g.exponent
    for x in range(g.order):
        for y in range(g.order):
            for z in range(g.order):
                assert t[add[x, y], z] == (t[x, z] + t[y, z]) % m


@given(st.sampled_from([(2,), (3,), (4,), (2, 2), (6,), (2, 3)]),
       st.data())
def test_pairing_exponent_bilinear(moduli, data):
    g = make_group(moduli)
    pick = st.integers(min_value=0, max_value=g.order - 1)
    a = g.element(g.residues_of(data.draw(pick)))
    b = g.element(g.residues_of(data.draw(pick)))
    chi = g.character(g.residues_of(data.draw(pick)))
    lhs = pairing_exponent(a + b, chi, g)
    rhs = pairing_exponent(a, chi, g) + pairing_exponent(b, chi, g)
    assert lhs == rhs


def test_nondegenerate_pairing():
    # only the zero element pairs trivially with every character
    for moduli in [(2,), (4,), (2, 2), (6,), (2, 3)]:
        g = make_group(moduli)
        for a in g.elements():
            trivial_all = all(
                pairing_exponent(a, chi, g).is_one() for chi in g.characters())
            assert trivial_all == a.is_zero()


def test_word_weight():
    g = make_group((3,))
    w = (g.element((0,)), g.element((2,)), g.element((0,)))
    assert word_weight(w) == 1
    chi = (g.trivial_character, g.character((1,)))
    assert word_weight(chi) == 1


def test_enumerate_words_counts_and_order():
    g = make_group((2,))
    words = list(enumerate_words(g, 3))
    assert len(words) == 8
    assert [tuple(e.residues[0] for e in w) for w in words[:3]] == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0)]


def test_enumerate_words_bound():
    g = make_group((2,))
    with pytest.raises(EnumerationBoundExceeded):
        list(enumerate_words(g, 10, max_enum=100))


def test_default_max_enum_env(monkeypatch):
    monkeypatch.delenv(MAX_ENUM_ENV, raising=False)
    assert default_max_enum() == 10 ** 7
    monkeypatch.setenv(MAX_ENUM_ENV, "12345")
    assert default_max_enum() == 12345
    monkeypatch.setenv(MAX_ENUM_ENV, "zero")
    with pytest.raises(EnumerationBoundExceeded):
        default_max_enum()
