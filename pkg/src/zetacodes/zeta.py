"""Zeta polynomials of codes, their reduced form, and the identities
connecting them to weight distributions.

Everything is driven by a CodeContext: the exact-size data (n, d, d_perp,
q, |C|) from which both genera are derived.  q^g is kept as a Fraction so
codes whose size is not a power of q still get a zeta polynomial and the
indexed functional equation; the reduced polynomial and everything past it
require integer genus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from .codes import AdditiveCode, _int_log
from .errors import (ContextMismatch, DegreeTooHigh, IndexOutOfRange,
                     InconsistentDistribution, MinimumDistanceTooSmall,
                     NonIntegerGenus, RangeError, ShapeMismatch)
from .exactalg import (HomogeneousEnumerator, UniPoly, binomial,
                       binomial_or_zero, divide_exact)
from .mds import enumerator_series_coeff, mds_count, mds_enumerator


@dataclass(frozen=True)
class CodeContext:
    """Exact parameters (n, d, d_perp, q, |C|) of a code/dual pair."""

    length: int
    min_distance: int
    dual_min_distance: int
    alphabet_size: int
    size: int

    def __post_init__(self):
        n, q = self.length, self.alphabet_size
        if q < 2 or n < 1:
            raise RangeError(f"bad parameters n={n}, q={q}")
        if not (1 <= self.min_distance <= n and 1 <= self.dual_min_distance <= n):
            raise RangeError("minimum distances must lie in 1..n")
        if self.min_distance < 2 or self.dual_min_distance < 2:
            raise MinimumDistanceTooSmall(
                f"d={self.min_distance}, d_perp={self.dual_min_distance}; "
                "both sides need d >= 2")
        if self.size < 2 or q ** n % self.size != 0:
            raise InconsistentDistribution(
                f"size {self.size} is not a nontrivial divisor of q^n")
        if self.g_plus_gperp < 0:
            raise InconsistentDistribution(
                f"n + 2 - d - d_perp = {self.g_plus_gperp} < 0")
        if self.q_pow_g < 1 or self.q_pow_gperp < 1:
            raise InconsistentDistribution("a genus came out negative")

    @property
    def g_plus_gperp(self) -> int:
        return self.length + 2 - self.min_distance - self.dual_min_distance

    @property
    def q_pow_g(self) -> Fraction:
        n, d = self.length, self.min_distance
        return Fraction(self.alphabet_size ** (n + 1 - d), self.size)

    @property
    def q_pow_gperp(self) -> Fraction:
        return Fraction(self.size, self.alphabet_size ** (self.dual_min_distance - 1))

    def _int_log_q(self, value: Fraction) -> Optional[int]:
        if value.denominator != 1:
            return None
        return _int_log(value.numerator, self.alphabet_size)

    @property
    def integer_genus(self) -> Optional[int]:
        return self._int_log_q(self.q_pow_g)

    @property
    def integer_genus_perp(self) -> Optional[int]:
        return self._int_log_q(self.q_pow_gperp)

    @property
    def integer_k(self) -> Optional[int]:
        """k with |C| = q^k, when there is one."""
        return self._int_log_q(Fraction(self.size))

    def dual(self) -> "CodeContext":
        q, n = self.alphabet_size, self.length
        return CodeContext(n, self.dual_min_distance, self.min_distance,
                           q, q ** n // self.size)

    @classmethod
    def from_codes(cls, code: AdditiveCode, dual: AdditiveCode) -> "CodeContext":
        return cls(code.length, code.min_distance(), dual.min_distance(),
                   code.group.order, code.size)


def _matching(ctx: CodeContext, code: AdditiveCode) -> None:
    if (code.length != ctx.length or code.size != ctx.size
            or code.group.order != ctx.alphabet_size
            or code.min_distance() != ctx.min_distance):
        raise ContextMismatch(f"{code!r} does not match {ctx!r}")


@dataclass(frozen=True)
class ZetaPolynomial:
    poly: UniPoly
    context: CodeContext

    def a(self, i: int) -> Fraction:
        """Coefficient of t^i, 0 outside the carried range."""
        return self.poly[i]


def zeta_polynomial(counts, context: CodeContext) -> ZetaPolynomial:
    """The unique P with W - x^n = sum_i a_i (M_{n,d+i} - x^n), checked.

    Solved forward against the triangular system in the weights s = d..n;
    any violated consequence of the definition (support below d, total
    mass, vanishing of a_i past g + g_perp, P(1) = 1, P(1/q) = |C|/q^(n+1-d))
    raises InconsistentDistribution.
    """
    n, d, q = context.length, context.min_distance, context.alphabet_size
    counts = [int(c) for c in counts]
    if len(counts) != n + 1:
        raise ShapeMismatch(f"need {n + 1} weight counts, got {len(counts)}")
    if counts[0] != 1:
        raise InconsistentDistribution(f"W_0 = {counts[0]}, expected 1")
    if any(c < 0 for c in counts):
        raise InconsistentDistribution("negative weight count")
    if sum(counts) != context.size:
        raise InconsistentDistribution(
            f"total count {sum(counts)} != code size {context.size}")
    if any(counts[s] for s in range(1, d)) or counts[d] == 0:
        raise InconsistentDistribution(
            f"weight data is inconsistent with minimum distance {d}")
    a: List[Fraction] = []
    for j in range(n - d + 1):
        s = d + j
        acc = Fraction(counts[s])
        for i in range(j):
            if a[i]:
                acc -= a[i] * mds_count(n, d + i, q, s)
        a.append(acc / (binomial(n, s) * (q - 1)))
    gg = context.g_plus_gperp
    if any(a[i] for i in range(gg + 1, len(a))):
        raise InconsistentDistribution(
            f"zeta coefficients do not vanish past degree {gg}")
    p = UniPoly(a[:gg + 1])
    if p.eval(1) != 1:
        raise InconsistentDistribution(f"P(1) = {p.eval(1)}, expected 1")
    if p.eval(Fraction(1, q)) != 1 / context.q_pow_g:
        raise InconsistentDistribution(
            f"P(1/q) = {p.eval(Fraction(1, q))}, expected {1 / context.q_pow_g}")
    return ZetaPolynomial(p, context)


def zeta_coeff_identity_check(z: ZetaPolynomial, counts) -> bool:
    """(W - x^n)/(q-1) equals the t^(n-d) series coefficient of
    P(t) (xt + y(1-t))^n / ((1-t)(1-qt))."""
    ctx = z.context
    n, q = ctx.length, ctx.alphabet_size
    w = HomogeneousEnumerator.from_counts([int(c) for c in counts])
    lhs = (w - HomogeneousEnumerator.x_power(n)).scale(Fraction(1, q - 1))
    rhs = enumerator_series_coeff(z.poly, n, q, n - ctx.min_distance)
    return lhs == rhs


def denominator_bound_check(z: ZetaPolynomial) -> bool:
    """(q-1)^(g+gp+1) * prod_j C(n, d+j) clears every denominator of P."""
    ctx = z.context
    n, d, q = ctx.length, ctx.min_distance, ctx.alphabet_size
    gg = ctx.g_plus_gperp
    delta = (q - 1) ** (gg + 1)
    for j in range(gg + 1):
        delta *= binomial(n, d + j)
    return all((delta * z.a(i)).denominator == 1 for i in range(gg + 1))


@dataclass(frozen=True)
class DuursmaReduced:
    """D with P = t^g + (1-t)(1-qt) D; defined only at integer genus."""

    poly: UniPoly
    context: CodeContext

    @property
    def genus(self) -> int:
        g = self.context.integer_genus
        assert g is not None
        return g

    @property
    def genus_perp(self) -> int:
        gp = self.context.integer_genus_perp
        assert gp is not None
        return gp

    def c(self, i: int) -> Fraction:
        top = self.genus + self.genus_perp - 2
        if not 0 <= i <= top:
            raise IndexOutOfRange(f"reduced coefficient {i} outside 0..{top}")
        return self.poly[i]


def duursma_reduced(z: ZetaPolynomial) -> DuursmaReduced:
    """(P - t^g) / ((1-t)(1-qt)), exact."""
    ctx = z.context
    g, gp = ctx.integer_genus, ctx.integer_genus_perp
    if g is None or gp is None:
        raise NonIntegerGenus(
            f"q^g = {ctx.q_pow_g}, q^g_perp = {ctx.q_pow_gperp}")
    q = ctx.alphabet_size
    numer = z.poly - UniPoly.t_power(g)
    d = divide_exact(numer, UniPoly((1, -(q + 1), q)))
    assert d.is_zero() or d.degree <= g + gp - 2
    return DuursmaReduced(d, ctx)


def _pair_mismatch(a: CodeContext, b: CodeContext) -> bool:
    """True when b cannot be the dual context of a (same n and q assumed)."""
    n, q = a.length, a.alphabet_size
    return (a.dual_min_distance != b.min_distance
            or b.dual_min_distance != a.min_distance
            or a.size * b.size != q ** n)


def _require_same_space(a: CodeContext, b: CodeContext) -> None:
    if a.length != b.length or a.alphabet_size != b.alphabet_size:
        raise ContextMismatch(
            f"cannot compare n={a.length}, q={a.alphabet_size} with "
            f"n={b.length}, q={b.alphabet_size}")


def functional_eq_P(z: ZetaPolynomial, z_dual: ZetaPolynomial) -> bool:
    """|C| a_perp(j - d_perp) = q^(j-1) a(n+2-d-j) for d_perp <= j <= n+2-d.

    Works at fractional genus.  Different (n, q) raise ContextMismatch;
    parameters that merely fail to be dual to each other return False.
    """
    ctx, ctxd = z.context, z_dual.context
    _require_same_space(ctx, ctxd)
    if _pair_mismatch(ctx, ctxd):
        return False
    n, d, q = ctx.length, ctx.min_distance, ctx.alphabet_size
    dp = ctx.dual_min_distance
    for j in range(dp, n + 2 - d + 1):
        if ctx.size * z_dual.a(j - dp) != q ** (j - 1) * z.a(n + 2 - d - j):
            return False
    return True


def functional_eq_D(dd: DuursmaReduced, dd_dual: DuursmaReduced) -> bool:
    """c_perp(i) = q^(i - g_perp + 1) c(g + g_perp - 2 - i) coefficientwise."""
    _require_same_space(dd.context, dd_dual.context)
    if _pair_mismatch(dd.context, dd_dual.context):
        return False
    g, gp = dd.genus, dd.genus_perp
    q = dd.context.alphabet_size
    for i in range(g + gp - 1):
        if dd_dual.c(i) != Fraction(q) ** (i - gp + 1) * dd.c(g + gp - 2 - i):
            return False
    return True


def enumerator_from_duursma(dd: DuursmaReduced) -> HomogeneousEnumerator:
    """W = M_{n,n+1-k} + sum_i C(n,d+i) (q-1) c_i (x-y)^(n-d-i) y^(d+i)."""
    ctx = dd.context
    n, d, q = ctx.length, ctx.min_distance, ctx.alphabet_size
    g, gp = dd.genus, dd.genus_perp
    k = n + 1 - d - g
    out = list(mds_enumerator(n, n + 1 - k, q).coeffs)
    for i in range(g + gp - 1):
        b = binomial(n, d + i) * (q - 1) * dd.c(i)
        if b == 0:
            continue
        for u in range(n - d - i + 1):
            out[d + i + u] += b * binomial(n - d - i, u) * (-1) ** u
    return HomogeneousEnumerator(n, out)


def duursma_coeffs_direct(counts, context: CodeContext) -> List[Fraction]:
    """c_i straight from the weights:

        (q-1) C(n, d+i) c_i
            = sum_{s=0}^{d+i} (W_s - M_s) C(n-s, n-d-i),   M = M_{n,n+1-k}.
    """
    k = context.integer_k
    if k is None:
        raise NonIntegerGenus(f"|C| = {context.size} is not a power of q")
    n, d, q = context.length, context.min_distance, context.alphabet_size
    counts = [int(c) for c in counts]
    if len(counts) != n + 1:
        raise ShapeMismatch(f"need {n + 1} weight counts, got {len(counts)}")
    mref = mds_enumerator(n, n + 1 - k, q)
    gg = context.g_plus_gperp
    out = []
    for i in range(gg - 1):
        total = Fraction(0)
        for s in range(d + i + 1):
            diff = counts[s] - mref.coefficient(s)
            if diff:
                total += diff * binomial_or_zero(n - s, n - d - i)
        out.append(total / ((q - 1) * binomial(n, d + i)))
    return out


def reconstruct_from_lower(phi: UniPoly, phi_perp: UniPoly, c_mid: Fraction,
                           context: CodeContext) -> Tuple[DuursmaReduced, DuursmaReduced]:
    """Assemble D and D_perp from the two lower halves and the shared middle:

        D = phi + c_mid t^(g-1) + q^(g_perp - 1) t^(g + g_perp - 2) phi_perp(1/(qt))

    and symmetrically for D_perp.  Needs g, g_perp >= 1; the halves must
    satisfy deg phi <= g-2 and deg phi_perp <= g_perp - 2.
    """
    g, gp = context.integer_genus, context.integer_genus_perp
    if g is None or gp is None:
        raise NonIntegerGenus(
            f"q^g = {context.q_pow_g}, q^g_perp = {context.q_pow_gperp}")
    if g < 1 or gp < 1:
        raise RangeError(f"reconstruction needs g, g_perp >= 1, got {g}, {gp}")
    if phi.degree > g - 2:
        raise DegreeTooHigh(f"deg phi = {phi.degree} > g - 2 = {g - 2}")
    if phi_perp.degree > gp - 2:
        raise DegreeTooHigh(
            f"deg phi_perp = {phi_perp.degree} > g_perp - 2 = {gp - 2}")
    q = context.alphabet_size

    def assemble(low: UniPoly, high: UniPoly, ga: int, gb: int) -> UniPoly:
        coeffs = [Fraction(0)] * (ga + gb - 1)
        for i in range(ga - 1):
            coeffs[i] = low[i]
        coeffs[ga - 1] = Fraction(c_mid)
        for i in range(ga, ga + gb - 1):
            coeffs[i] = Fraction(q) ** (i - ga + 1) * high[ga + gb - 2 - i]
        return UniPoly(coeffs)

    dd = DuursmaReduced(assemble(phi, phi_perp, g, gp), context)
    dd_perp = DuursmaReduced(assemble(phi_perp, phi, gp, g), context.dual())
    return dd, dd_perp


def average_support_identity(code: AdditiveCode, dd: DuursmaReduced, i: int) -> bool:
    """(q-1) c_i equals the average over (d+i)-subsets of coordinates of the
    number of nonzero codewords supported inside the subset, 0 <= i <= g-1."""
    ctx = dd.context
    _matching(ctx, code)
    g = dd.genus
    if not 0 <= i <= g - 1:
        raise IndexOutOfRange(f"averaging index {i} outside 0..{g - 1}")
    n, d, q = ctx.length, ctx.min_distance, ctx.alphabet_size
    w = d + i
    nonzero = code.words != 0
    total = 0
    for combo in itertools.combinations(range(n), w):
        comp = np.ones(n, dtype=bool)
        comp[list(combo)] = False
        inside = int(np.count_nonzero(~nonzero[:, comp].any(axis=1)))
        total += inside - 1  # drop the zero word
    return Fraction(total, binomial(n, w)) == (q - 1) * dd.c(i)


def probability_identities(code: AdditiveCode, code_perp: AdditiveCode,
                           dd: DuursmaReduced, i: int) -> Dict[str, object]:
    """The two probabilistic readings of c_i at index i.

    Lower range (i <= g-1) uses the code's own weights; upper range uses
    the dual's, scaled by q^(i-g+1).  "class" aggregates by weight, "word"
    sums the per-word support-containment probabilities.
    """
    ctx = dd.context
    _matching(ctx, code)
    _matching(ctx.dual(), code_perp)
    g, gp = dd.genus, dd.genus_perp
    if not 0 <= i <= g + gp - 2:
        raise IndexOutOfRange(f"index {i} outside 0..{g + gp - 2}")
    n, d, q = ctx.length, ctx.min_distance, ctx.alphabet_size
    c_i = dd.c(i)

    def class_sum(counts, lo: int, w: int) -> Fraction:
        acc = Fraction(0)
        for s in range(lo, w + 1):
            if counts[s]:
                p_s = Fraction(counts[s], binomial(n, s) * (q - 1) ** s)
                acc += p_s * binomial(w, s) * (q - 1) ** (s - 1)
        return acc

    def word_sum(counts, w: int) -> Fraction:
        acc = 0
        for s in range(1, w + 1):
            acc += counts[s] * binomial_or_zero(n - s, w - s)
        return Fraction(acc, binomial(n, w) * (q - 1))

    if i <= g - 1:
        counts = code.weight_distribution
        w = d + i
        return {"side": "lower",
                "class_identity": class_sum(counts, d, w) == c_i,
                "word_identity": word_sum(counts, w) == c_i}
    factor = Fraction(q) ** (i - g + 1)
    counts = code_perp.weight_distribution
    w = n - d - i
    dp = ctx.dual_min_distance
    return {"side": "upper",
            "class_identity": factor * class_sum(counts, dp, w) == c_i,
            "word_identity": factor * word_sum(counts, w) == c_i}


@dataclass(frozen=True)
class TvnCoefficients:
    """B_0..B_n with W(x, y) - x^n = sum_j B_j (x-y)^(n-j) y^j."""

    coeffs: Tuple[Fraction, ...]
    context: CodeContext

    def b(self, j: int) -> Fraction:
        if not 0 <= j <= self.context.length:
            raise IndexOutOfRange(f"index {j} outside 0..{self.context.length}")
        return self.coeffs[j]


def tvn_coefficients(counts, context: CodeContext) -> TvnCoefficients:
    """Solve for the B_j; B_{d+i} = C(n, d+i) (q-1) c_i on 0 <= i <= g-1."""
    if context.integer_k is None:
        raise NonIntegerGenus(f"|C| = {context.size} is not a power of q")
    n = context.length
    counts = [int(c) for c in counts]
    if len(counts) != n + 1:
        raise ShapeMismatch(f"need {n + 1} weight counts, got {len(counts)}")
    b: List[Fraction] = []
    for s in range(n + 1):
        acc = Fraction(counts[s] - (1 if s == 0 else 0))
        for j in range(s):
            if b[j]:
                acc -= b[j] * binomial(n - j, s - j) * (-1) ** (s - j)
        b.append(acc)
    return TvnCoefficients(tuple(b), context)
