"""Riemann-Roch style conditions on the series A_m = [t^m] P(t)/((1-t)(1-qt)),
and the harness tying them to the MacWilliams identity.

RRC is the single-series condition (curves, self-paired data); PRRC is the
polarized two-series version for a code/dual pair.  Negative series indices
read as 0, which makes the genus-0 cases come out of the same formulas.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .codes import AdditiveCode
from .errors import (ContextMismatch, InconsistentDistribution,
                     MinimumDistanceTooSmall, NonIntegerGenus,
                     NonzeroRemainder, OrderTooShort)
from .exactalg import (HomogeneousEnumerator, TruncatedSeries, UniPoly,
                       series_of_rational, substitute_pair)
from .zeta import (CodeContext, DuursmaReduced, ZetaPolynomial,
                   duursma_reduced, functional_eq_D, functional_eq_P,
                   zeta_polynomial)

EXTRA_ORDER = 5


@dataclass(frozen=True)
class PrrcVerdict:
    holds: bool
    first_failure: Optional[Tuple[str, int]]
    checked_to: int


def residue_at_one(p: UniPoly, q: int) -> Fraction:
    """Residue datum of P(t)/((1-t)(1-qt)) at t=1, namely P(1)/(q-1)."""
    return p.eval(1) / (q - 1)


def rrc_check(series: TruncatedSeries, q: int, genus: int,
              res1: Fraction) -> PrrcVerdict:
    """A_m = q^(m-g+1) A_{2g-2-m} + (q^(m-g+1) - 1) res1 for all m >= g.

    Checking up to order >= 2g exhausts the condition because both sides
    satisfy the same two-term recurrence beyond the polynomial part.
    """
    if series.order < genus:
        raise OrderTooShort(f"series order {series.order} < genus {genus}")
    for m in range(genus, series.order + 1):
        scale = q ** (m - genus + 1)
        if series.at(m) != scale * series.at(2 * genus - 2 - m) + (scale - 1) * res1:
            return PrrcVerdict(False, ("rrc", m), series.order)
    return PrrcVerdict(True, None, series.order)


def prrc_check(series: TruncatedSeries, series_perp: TruncatedSeries, q: int,
               genus: int, genus_perp: int, res1: Fraction,
               res1_perp: Fraction) -> PrrcVerdict:
    """The polarized condition on a pair of series.

    lower:  A_m = q^(m-g+1) A*_{g+g*-2-m} + (q^(m-g+1) - 1) res1,  m >= g
    middle: A_{g-1} = A*_{g*-1}
    upper:  same as lower with the two series and genera swapped.

    At g = g* = 0 the middle family is vacuous and the other two reduce to
    the unpolarized condition on each series; one genus being 0 while the
    other is not has no consistent reading and raises ContextMismatch.
    """
    if (genus == 0) != (genus_perp == 0):
        raise ContextMismatch(
            f"mixed genera g={genus}, g_perp={genus_perp}: the polarized "
            "families do not line up")
    need = genus + genus_perp
    if series.order < need or series_perp.order < need:
        raise OrderTooShort(
            f"orders ({series.order}, {series_perp.order}) < g + g_perp = {need}")
    checked = min(series.order, series_perp.order)
    for m in range(genus, series.order + 1):
        scale = q ** (m - genus + 1)
        rhs = scale * series_perp.at(need - 2 - m) + (scale - 1) * res1
        if series.at(m) != rhs:
            return PrrcVerdict(False, ("lower", m), checked)
    if series.at(genus - 1) != series_perp.at(genus_perp - 1):
        return PrrcVerdict(False, ("middle", genus - 1), checked)
    for m in range(genus_perp, series_perp.order + 1):
        scale = q ** (m - genus_perp + 1)
        rhs = scale * series.at(need - 2 - m) + (scale - 1) * res1_perp
        if series_perp.at(m) != rhs:
            return PrrcVerdict(False, ("upper", m), checked)
    return PrrcVerdict(True, None, checked)


@dataclass(frozen=True)
class MutantOutcome:
    """Verdicts for one mass-preserving corruption of the dual weights."""

    index: int
    moved_from: int
    moved_to: int
    delta: int
    macwilliams: bool
    functional_p: bool
    functional_d: bool
    prrc: bool

    @property
    def all_false(self) -> bool:
        return not (self.macwilliams or self.functional_p
                    or self.functional_d or self.prrc)


@dataclass
class EquivalenceReport:
    context: CodeContext
    context_dual: CodeContext
    zeta: ZetaPolynomial
    zeta_dual: ZetaPolynomial
    duursma: DuursmaReduced
    duursma_dual: DuursmaReduced
    prrc_verdict: PrrcVerdict
    macwilliams: bool
    functional_p: bool
    functional_d: bool
    prrc: bool
    mutants: List[MutantOutcome] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return self.macwilliams and self.functional_p and self.functional_d and self.prrc


def mutate_distribution(counts: Tuple[int, ...],
                        rng: random.Random) -> Tuple[Tuple[int, ...], int, int, int]:
    """Move a random positive amount between two nonzero-weight classes.

    Preserves the total mass and W_0; the result always differs from the
    input.  Returns (new_counts, from_weight, to_weight, amount)."""
    n = len(counts) - 1
    donors = [s for s in range(1, n + 1) if counts[s] > 0]
    assert donors, "cannot mutate the distribution of the zero code"
    s1 = rng.choice(donors)
    s2 = rng.choice([s for s in range(1, n + 1) if s != s1])
    delta = rng.randint(1, counts[s1])
    out = list(counts)
    out[s1] -= delta
    out[s2] += delta
    return tuple(out), s1, s2, delta


def _dist_min_distance(counts) -> int:
    for s in range(1, len(counts)):
        if counts[s]:
            return s
    raise InconsistentDistribution("no nonzero weights present")


def equivalence_harness(code: AdditiveCode, mutations: int = 0, seed: int = 0,
                        dual: Optional[AdditiveCode] = None) -> EquivalenceReport:
    """Check MacWilliams and the three zeta-side conditions on a code, then
    on mutated dual weight data.

    For the genuine pair all four verdicts must agree (and hold); this is
    asserted.  Each mutation corrupts the dual distribution while keeping
    its mass, and gets the same four verdicts, evaluated independently:
    weight data that breaks a precondition of a condition simply fails it.
    """
    if dual is None:
        dual = code.dual()
    ctx = CodeContext.from_codes(code, dual)
    g, gp = ctx.integer_genus, ctx.integer_genus_perp
    if g is None or gp is None:
        raise NonIntegerGenus(
            f"harness needs integer genus, got q^g = {ctx.q_pow_g}")
    n, q = ctx.length, ctx.alphabet_size
    counts = code.weight_distribution
    transformed = substitute_pair(HomogeneousEnumerator.from_counts(counts), q)
    z = zeta_polynomial(counts, ctx)
    dd = duursma_reduced(z)
    res1 = residue_at_one(z.poly, q)

    def dual_side(dual_counts) -> Tuple[bool, bool, bool, bool,
                                        Optional[ZetaPolynomial],
                                        Optional[DuursmaReduced],
                                        Optional[PrrcVerdict]]:
        mw = (transformed
              == HomogeneousEnumerator.from_counts(dual_counts).scale(ctx.size))
        try:
            d2 = _dist_min_distance(dual_counts)
            ctx2 = CodeContext(n, d2, ctx.min_distance, q, sum(dual_counts))
            z2 = zeta_polynomial(dual_counts, ctx2)
        except (InconsistentDistribution, MinimumDistanceTooSmall):
            return mw, False, False, False, None, None, None
        fp = functional_eq_P(z, z2)
        try:
            dd2 = duursma_reduced(z2)
            fd = functional_eq_D(dd, dd2)
        except (NonIntegerGenus, NonzeroRemainder):
            dd2, fd = None, False
        try:
            g2 = ctx2.integer_genus
            if g2 is None:
                raise NonIntegerGenus(str(ctx2.q_pow_g))
            order = max(g + gp, g + g2) + EXTRA_ORDER
            verdict = prrc_check(
                series_of_rational(z.poly, q, order),
                series_of_rational(z2.poly, q, order),
                q, g, g2, res1, residue_at_one(z2.poly, q))
            pr = verdict.holds
        except (NonIntegerGenus, ContextMismatch):
            verdict, pr = None, False
        return mw, fp, fd, pr, z2, dd2, verdict

    mw, fp, fd, pr, z2, dd2, verdict = dual_side(dual.weight_distribution)
    assert mw == fp == fd == pr, "the four verdicts must agree on a genuine pair"
    assert mw, "a genuine code/dual pair must satisfy all four conditions"
    assert z2 is not None and dd2 is not None and verdict is not None

    report = EquivalenceReport(
        context=ctx, context_dual=z2.context, zeta=z, zeta_dual=z2,
        duursma=dd, duursma_dual=dd2, prrc_verdict=verdict,
        macwilliams=mw, functional_p=fp, functional_d=fd, prrc=pr)

    rng = random.Random(seed)
    for idx in range(mutations):
        mutated, s_from, s_to, delta = mutate_distribution(
            dual.weight_distribution, rng)
        m_mw, m_fp, m_fd, m_pr, *_ = dual_side(mutated)
        report.mutants.append(MutantOutcome(
            index=idx, moved_from=s_from, moved_to=s_to, delta=delta,
            macwilliams=m_mw, functional_p=m_fp, functional_d=m_fd, prrc=m_pr))
    return report
