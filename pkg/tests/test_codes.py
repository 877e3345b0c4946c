from __future__ import annotations

import numpy as np
import pytest

from corpus import BY_NAME, ORACLE_DUAL_WEIGHTS, ORACLE_WEIGHTS, build
from zetacodes import (AdditiveCode, EnumerationBoundExceeded, IndexOutOfRange,
                       LengthTooShort, NotMDS, ShapeMismatch, ZeroCode,
                       duality_commutation_check, make_group,
                       mds_support_count_check, pairing_exponent)


def test_closure_size_and_membership(built_corpus):
    _, code, _ = built_corpus["hamming7"]
    assert code.size == 16
    assert code.contains([1, 0, 0, 0, 0, 1, 1])
    assert code.contains([0] * 7)
    assert not code.contains([1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ShapeMismatch):
        code.contains([1, 0])


def test_words_sorted_and_immutable(built_corpus):
    _, code, _ = built_corpus["tetra_3"]
    keys = code.words.astype(np.int64) @ (3 ** np.arange(3, -1, -1))
    assert np.all(np.diff(keys) > 0)
    with pytest.raises(ValueError):
        code.words[0, 0] = 1


def test_generator_shape_validation():
    g = make_group((2,))
    with pytest.raises(ShapeMismatch):
        AdditiveCode.from_generators(g, 3, [[1, 1]])
    with pytest.raises(ShapeMismatch):
        AdditiveCode.from_generators(g, 0, [])
    g22 = make_group((2, 2))
    with pytest.raises(ShapeMismatch):
        AdditiveCode.from_generators(g22, 2, [[1, 0]])  # scalars need rank 1


def test_enumeration_bound():
    g = make_group((2,))
    with pytest.raises(EnumerationBoundExceeded):
        AdditiveCode.from_generators(g, 12, np.eye(12, dtype=int).tolist(),
                                     max_enum=1000)
    code = AdditiveCode.from_generators(g, 12, [[1] * 12])
    with pytest.raises(EnumerationBoundExceeded):
        code.dual(max_enum=1000)


def test_weight_distributions_match_oracles(built_corpus):
    for name, expected in ORACLE_WEIGHTS.items():
        _, code, _ = built_corpus[name]
        assert code.weight_distribution == expected, name
    for name, expected in ORACLE_DUAL_WEIGHTS.items():
        _, _, dual = built_corpus[name]
        assert dual.weight_distribution == expected, name


def test_dual_size_product(built_corpus):
    for name, (f, code, dual) in built_corpus.items():
        q = code.group.order
        assert code.size * dual.size == q ** code.length, name


def test_dual_words_annihilate(built_corpus):
    for name in ("hamming7", "tetra_3", "rep2_6", "pair4_22"):
        _, code, dual = built_corpus[name]
        g = code.group
        for w in code.words[:20]:
            for c in dual.words[:20]:
                total = sum(int(g.pair_table[int(a), int(b)])
                            for a, b in zip(w, c))
                assert total % g.exponent == 0


def test_dual_of_dual_is_identity(built_corpus):
    for name in ("hamming7", "five23", "tetra_3", "rep2_6", "sumzero6_22",
                 "nonint4_4"):
        _, code, dual = built_corpus[name]
        back = dual.dual()
        assert back.side == code.side
        assert np.array_equal(back.words, code.words), name


def test_small_dual_against_character_enumeration():
    # independent oracle: filter all characters word by word
    from zetacodes import enumerate_words
    g = make_group((6,))
    code = AdditiveCode.from_generators(g, 2, [[2, 2]])
    expect = []
    for word in enumerate_words(g, 2):
        ok = True
        for cw in code.words:
            e = None
            for a, chi in zip(cw, word):
                pe = pairing_exponent(g.element(g.residues_of(int(a))),
                                      g.character(chi.residues), g)
                e = pe if e is None else e + pe
            if not e.is_one():
                ok = False
                break
        if ok:
            expect.append(tuple(int(c.residues[0]) for c in word))
    got = [tuple(int(v) for v in row) for row in code.dual().words]
    assert got == sorted(expect)


def test_genus_values(built_corpus):
    cases = {"hamming7": 1, "simplex7": 1, "ext_hamming8": 1, "selfdual6": 2,
             "rm14": 4, "five23": 1, "pair11_3": 1, "tetra_3": 0,
             "rs423_5": 0, "rs533_5": 0, "rep2_6": 0, "even19": 0}
    for name, g in cases.items():
        _, code, _ = built_corpus[name]
        gd = code.genus()
        assert gd.integer_genus == g, name
        assert gd.q_pow_g == gd.alphabet_size ** g


def test_fractional_genus(built_corpus):
    _, code, _ = built_corpus["nonint4_4"]
    gd = code.genus()
    assert gd.integer_genus is None
    assert gd.q_pow_g == 8  # 4^(3/2)


def test_zero_code_genus():
    g = make_group((2,))
    zero = AdditiveCode.from_generators(g, 3, [])
    assert zero.size == 1
    with pytest.raises(ZeroCode):
        zero.genus()


def test_puncture_shorten_basics(built_corpus):
    _, code, _ = built_corpus["hamming7"]
    p = code.puncture(1)
    assert p.length == 6 and p.size == 16  # d = 3 > 1, no collapse
    s = code.shorten(1)
    assert s.length == 6 and s.size == 8
    with pytest.raises(IndexOutOfRange):
        code.puncture(0)
    with pytest.raises(IndexOutOfRange):
        code.shorten(8)
    g = make_group((2,))
    short = AdditiveCode.from_generators(g, 1, [[1]])
    with pytest.raises(LengthTooShort):
        short.puncture(1)


def test_puncture_collapses_repeated_column():
    g = make_group((2,))
    code = AdditiveCode.from_generators(g, 2, [[1, 1]])
    p = code.puncture(2)
    assert p.size == 2
    s = code.shorten(2)
    assert s.size == 1


def test_duality_commutation_everywhere(built_corpus):
    for name, (f, code, dual) in built_corpus.items():
        if code.length < 2:
            continue
        for i in range(1, code.length + 1):
            left, right = duality_commutation_check(code, i, dual=dual)
            assert left and right, (name, i)


def test_mds_support_counts(built_corpus):
    for name in ("rs423_5", "rs533_5", "tetra_3", "even4", "rep2_6",
                 "sumzero5_4", "rep7"):
        _, code, _ = built_corpus[name]
        assert mds_support_count_check(code), name
    _, hamming, _ = built_corpus["hamming7"]
    with pytest.raises(NotMDS):
        mds_support_count_check(hamming)


def test_generating_subset_reproduces_code(built_corpus):
    for name in ("hamming7", "sumzero6_22", "rep2_6"):
        _, code, _ = built_corpus[name]
        gens = code.dual().generator_matrix()
        rebuilt = AdditiveCode.from_generators(
            code.group, code.length,
            [[code.group.residues_of(int(s)) for s in row] for row in gens])
        assert np.array_equal(rebuilt.words, code.dual().words)
