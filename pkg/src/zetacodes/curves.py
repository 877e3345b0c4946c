"""Plane curves of genus <= 1 over small prime fields: point counts by
brute force, the zeta numerator, and its Riemann-Roch condition.

Extension fields F_{p^k} for k in {2, 3} are built from a fixed table of
irreducible polynomials (p in {2, 3, 5, 7}); elements are encoded as
integers sum(digit_i * p^i) so field arithmetic is pure table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import (HasseBoundViolation, NotPrime, ParseError,
                     UnsupportedExtension)
from .exactalg import UniPoly, series_of_rational
from .riemann_roch import PrrcVerdict, residue_at_one, rrc_check

# Monic irreducibles over F_p, ascending coefficients (constant term first).
_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
}

_MAX_POW = 3


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@lru_cache(maxsize=None)
def field_tables(p: int, k: int):
    """(Q, add, mul, pow) lookup tables for F_{p^k} in the integer encoding.

    pow has columns for exponents 0.._MAX_POW, with e^0 = 1 for every e
    (absent monomial factors contribute a plain 1).
    """
    if k == 1:
        q = p
        add = np.mod(np.add.outer(np.arange(q), np.arange(q)), p).astype(np.int64)
        mul = np.mod(np.multiply.outer(np.arange(q), np.arange(q)), p).astype(np.int64)
    else:
        irr = _IRREDUCIBLE[(p, k)]
        q = p ** k
        idx = np.arange(q, dtype=np.int64)
        digits = (idx[:, None] // p ** np.arange(k, dtype=np.int64)[None, :]) % p
        enc = p ** np.arange(k, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ enc
        # x^j mod irr for j = 0..2k-2
        rep = np.array([(-c) % p for c in irr[:k]], dtype=np.int64)
        xpow = np.zeros((2 * k - 1, k), dtype=np.int64)
        cur = np.zeros(k, dtype=np.int64)
        cur[0] = 1
        xpow[0] = cur
        for j in range(1, 2 * k - 1):
            lead = cur[k - 1]
            cur = np.concatenate(([0], cur[:-1]))
            if lead:
                cur = (cur + lead * rep) % p
            xpow[j] = cur
        conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for u in range(k):
            for v in range(k):
                conv[:, :, u + v] += np.multiply.outer(digits[:, u], digits[:, v])
        mul = (conv.reshape(q * q, 2 * k - 1) @ xpow % p) @ enc
        mul = mul.reshape(q, q)
    powt = np.empty((q, _MAX_POW + 1), dtype=np.int64)
    powt[:, 0] = 1
    powt[:, 1] = np.arange(q)
    for e in range(2, _MAX_POW + 1):
        powt[:, e] = mul[powt[:, e - 1], np.arange(q)]
    return q, add, mul, powt


class PlaneCurve:
    """A homogeneous form F(x, y, z) over F_p with an asserted genus.

    Degree 1 and 2 go with genus 0, degree 3 with genus 1; any other
    combination is rejected up front.  Whether a cubic actually is smooth
    is not decided here; a singular one fails the Weil consistency checks
    when its zeta function is assembled.
    """

    def __init__(self, p: int, monomials: Sequence[Sequence[int]], genus: int):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        terms = {}
        degree = None
        for mono in monomials:
            if len(mono) != 4:
                raise ParseError(f"monomial {mono!r} is not (i, j, k, coeff)")
            i, j, k, c = (int(v) for v in mono)
            if min(i, j, k) < 0:
                raise ParseError(f"negative exponent in {mono!r}")
            if degree is None:
                degree = i + j + k
            elif i + j + k != degree:
                raise ParseError(
                    f"monomial {mono!r} breaks homogeneity of degree {degree}")
            terms[(i, j, k)] = (terms.get((i, j, k), 0) + c) % p
        cleaned = tuple(sorted((e, c) for e, c in terms.items() if c))
        if not cleaned:
            raise ParseError("the form vanishes identically mod p")
        assert degree is not None
        if degree > _MAX_POW:
            raise ParseError(f"degree {degree} > 3 is out of scope")
        expected = 0 if degree <= 2 else 1
        if genus != expected:
            raise ParseError(
                f"degree {degree} goes with genus {expected}, not {genus}")
        self.monomials: Tuple[Tuple[Tuple[int, int, int], int], ...] = cleaned
        self.degree = degree
        self.genus = genus

    def __repr__(self) -> str:
        return f"PlaneCurve(p={self.p}, degree={self.degree}, genus={self.genus})"


def count_points(curve: PlaneCurve, ext: int) -> int:
    """Number of projective points over F_{p^ext}, ext in {1, 2, 3}."""
    p = curve.p
    if ext not in (1, 2, 3):
        raise UnsupportedExtension(f"extension degree {ext} not supported")
    if ext > 1 and (p, ext) not in _IRREDUCIBLE:
        raise UnsupportedExtension(f"no F_{p}^{ext} model in the field table")
    q, add, mul, powt = field_tables(p, ext)

    def zeros(xs, ys, zs) -> int:
        acc = np.zeros(xs.shape, dtype=np.int64)
        for (i, j, k), c in curve.monomials:
            term = mul[powt[xs, i], powt[ys, j]]
            term = mul[term, powt[zs, k]]
            if c != 1:
                term = mul[c, term]
            acc = add[acc, term]
        return int(np.count_nonzero(acc == 0))

    ys, zs = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    total = zeros(np.ones((q, q), dtype=np.int64), ys, zs)
    zs = np.arange(q)
    total += zeros(np.zeros(q, dtype=np.int64), np.ones(q, dtype=np.int64), zs)
    total += zeros(np.zeros(1, dtype=np.int64),
                   np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64))
    return total


@dataclass(frozen=True)
class CurveZeta:
    """Numerator P_X of the curve's zeta function, plus the counts behind it."""

    q: int
    genus: int
    n1: int
    n2: Optional[int]
    p_x: UniPoly
    class_number: int


def zeta_from_counts(curve: PlaneCurve) -> CurveZeta:
    """P_X from point counts, with the Weil consistency checks enforced.

    Genus 0 demands N_1 = q + 1.  Genus 1 demands |a| <= 2 sqrt(q) for
    a = N_1 - q - 1 AND the degree-2 count to match q^2 + 1 - (a^2 - 2q);
    the second check rejects singular cubics whose N_1 alone looks fine.
    """
    q = curve.p
    n1 = count_points(curve, 1)
    if curve.genus == 0:
        if n1 != q + 1:
            raise HasseBoundViolation(
                f"genus 0 over F_{q} needs N1 = {q + 1}, counted {n1}")
        return CurveZeta(q, 0, n1, None, UniPoly.one(), 1)
    a = n1 - q - 1
    if a * a > 4 * q:
        raise HasseBoundViolation(f"|N1 - q - 1| = {abs(a)} exceeds 2 sqrt({q})")
    n2 = count_points(curve, 2)
    if n2 != q * q + 1 - (a * a - 2 * q):
        raise HasseBoundViolation(
            f"N2 = {n2} inconsistent with a Weil root pair for N1 = {n1}")
    p_x = UniPoly((1, a, q))
    h = int(p_x.eval(1))
    assert h == n1
    return CurveZeta(q, 1, n1, n2, p_x, h)


def curve_rrc_check(cz: CurveZeta, order: int) -> PrrcVerdict:
    """Riemann-Roch condition on A_m = [t^m] P_X / ((1-t)(1-qt))."""
    series = series_of_rational(cz.p_x, cz.q, order)
    res1 = residue_at_one(cz.p_x, cz.q)
    assert res1 == Fraction(cz.class_number, cz.q - 1)
    return rrc_check(series, cz.q, cz.genus, res1)
