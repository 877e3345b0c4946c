from __future__ import annotations

import random
from fractions import Fraction

import pytest

from corpus import HARNESS_NAMES
from zetacodes import (CodeContext, ContextMismatch, NonIntegerGenus,
                       OrderTooShort, TruncatedSeries, UniPoly,
                       equivalence_harness, mutate_distribution, prrc_check,
                       residue_at_one, rrc_check, series_of_rational,
                       zeta_polynomial)

HAMMING_P = UniPoly((Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)))


def _tamper(series: TruncatedSeries, m: int) -> TruncatedSeries:
    vals = list(series.coeffs)
    vals[m] += 1
    return TruncatedSeries(vals)


def test_residue_at_one():
    assert residue_at_one(HAMMING_P, 2) == 1
    assert residue_at_one(UniPoly((1,)), 5) == Fraction(1, 4)


def test_rrc_holds_for_hamming():
    series = series_of_rational(HAMMING_P, 2, 12)
    verdict = rrc_check(series, 2, 1, Fraction(1))
    assert verdict.holds and verdict.first_failure is None
    assert verdict.checked_to == 12


def test_rrc_localizes_failure():
    series = series_of_rational(HAMMING_P, 2, 12)
    verdict = rrc_check(_tamper(series, 7), 2, 1, Fraction(1))
    assert not verdict.holds
    assert verdict.first_failure == ("rrc", 7)


def test_rrc_order_too_short():
    series = series_of_rational(HAMMING_P, 2, 1)
    with pytest.raises(OrderTooShort):
        rrc_check(series, 2, 2, Fraction(1))


def _series_pair(built_corpus, name, extra=5):
    _, code, dual = built_corpus[name]
    ctx = CodeContext.from_codes(code, dual)
    z = zeta_polynomial(code.weight_distribution, ctx)
    zd = zeta_polynomial(dual.weight_distribution, ctx.dual())
    g, gp = ctx.integer_genus, ctx.integer_genus_perp
    q = ctx.alphabet_size
    order = g + gp + extra
    return (series_of_rational(z.poly, q, order),
            series_of_rational(zd.poly, q, order),
            q, g, gp,
            residue_at_one(z.poly, q), residue_at_one(zd.poly, q))


def test_prrc_holds_on_pairs(built_corpus):
    for name in ("hamming7", "simplex7", "selfdual6", "rm14", "pair11_3",
                 "sumzero6_22", "rep2_6", "rs423_5", "even19"):
        s, sp, q, g, gp, r, rp = _series_pair(built_corpus, name)
        verdict = prrc_check(s, sp, q, g, gp, r, rp)
        assert verdict.holds, (name, verdict.first_failure)
        # and with the roles of the two sides swapped
        assert prrc_check(sp, s, q, gp, g, rp, r).holds, name


def test_prrc_failure_families(built_corpus):
    s, sp, q, g, gp, r, rp = _series_pair(built_corpus, "selfdual6")
    bad_lower = prrc_check(_tamper(s, g + 2), sp, q, g, gp, r, rp)
    assert not bad_lower.holds and bad_lower.first_failure == ("lower", g + 2)
    # index g*-1 of the dual series only enters the middle comparison
    bad_middle = prrc_check(s, _tamper(sp, gp - 1), q, g, gp, r, rp)
    assert not bad_middle.holds and bad_middle.first_failure == ("middle", g - 1)
    bad_upper = prrc_check(s, _tamper(sp, gp + 3), q, g, gp, r, rp)
    assert not bad_upper.holds and bad_upper.first_failure == ("upper", gp + 3)


def test_prrc_mixed_genus_rejected(built_corpus):
    s, sp, q, g, gp, r, rp = _series_pair(built_corpus, "hamming7")
    with pytest.raises(ContextMismatch):
        prrc_check(s, sp, q, 0, gp, r, rp)


def test_prrc_order_too_short(built_corpus):
    _, code, dual = built_corpus["rm14"]
    ctx = CodeContext.from_codes(code, dual)
    z = zeta_polynomial(code.weight_distribution, ctx)
    zd = zeta_polynomial(dual.weight_distribution, ctx.dual())
    g, gp, q = ctx.integer_genus, ctx.integer_genus_perp, ctx.alphabet_size
    short = series_of_rational(z.poly, q, g + gp - 1)
    with pytest.raises(OrderTooShort):
        prrc_check(short, series_of_rational(zd.poly, q, g + gp), q, g, gp,
                   residue_at_one(z.poly, q), residue_at_one(zd.poly, q))


def test_mutate_distribution_properties():
    counts = (1, 0, 0, 7, 7, 0, 0, 1)
    for seed in range(40):
        rng = random.Random(seed)
        out, s1, s2, delta = mutate_distribution(counts, rng)
        assert sum(out) == sum(counts)
        assert out != counts
        assert out[0] == 1
        assert 1 <= s1 <= 7 and 1 <= s2 <= 7 and s1 != s2
        assert 1 <= delta <= counts[s1]
        assert out[s1] == counts[s1] - delta and out[s2] == counts[s2] + delta
    # same seed, same outcome
    a = mutate_distribution(counts, random.Random(3))
    b = mutate_distribution(counts, random.Random(3))
    assert a == b


def test_harness_genuine_pairs(built_corpus):
    for name in ("hamming7", "five23", "pair4_22", "sumzero7_6", "rs533_5"):
        fixture, code, dual = built_corpus[name]
        report = equivalence_harness(code, dual=dual)
        assert report.all_hold, name
        assert report.prrc_verdict.holds
        assert report.context.length == fixture.length
        assert report.mutants == []


def test_harness_rejects_fractional_genus(built_corpus):
    _, code, dual = built_corpus["nonint4_4"]
    with pytest.raises(NonIntegerGenus):
        equivalence_harness(code, dual=dual)


def test_harness_mutants_all_rejected(built_corpus):
    for name in ("hamming7", "rs423_5", "selfdual6", "rep2_6"):
        _, code, dual = built_corpus[name]
        report = equivalence_harness(code, mutations=25, seed=11, dual=dual)
        assert len(report.mutants) == 25
        for out in report.mutants:
            assert out.all_false, (name, out)
        assert [m.index for m in report.mutants] == list(range(25))


def test_harness_covers_all_fixtures(built_corpus):
    for name in HARNESS_NAMES:
        _, code, dual = built_corpus[name]
        assert equivalence_harness(code, dual=dual).all_hold, name
