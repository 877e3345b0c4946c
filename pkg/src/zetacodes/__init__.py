"""Exact zeta-function calculus for additive codes over finite abelian groups.

Duals, weight enumerators, MacWilliams transforms, zeta and reduced
polynomials, and the (polarized) Riemann-Roch conditions they satisfy,
all in exact rational arithmetic.
"""

from ._kernels import BACKEND
from .codes import (AdditiveCode, GenusData, duality_commutation_check,
                    mds_support_count_check)
from .curves import (PlaneCurve, CurveZeta, count_points, curve_rrc_check,
                     zeta_from_counts)
from .errors import *  # noqa: F401,F403
from .exactalg import (HomogeneousEnumerator, Rational, TruncatedSeries,
                       UniPoly, as_pair, binomial, divide_exact, eval_poly,
                       series_of_rational, substitute_pair)
from .groups import (FiniteAbelianGroup, GroupElement, Character,
                     PairingExponent, default_max_enum, enumerate_words,
                     make_group, pairing_exponent, word_weight)
from .mds import (coefficient_identity_check, enumerator_series_coeff,
                  macwilliams_transform, mds_count, mds_enumerator)
from .riemann_roch import (EquivalenceReport, MutantOutcome, PrrcVerdict,
                           equivalence_harness, mutate_distribution,
                           prrc_check, residue_at_one, rrc_check)
from .zeta import (CodeContext, DuursmaReduced, TvnCoefficients,
                   ZetaPolynomial, average_support_identity,
                   denominator_bound_check, duursma_coeffs_direct,
                   duursma_reduced, enumerator_from_duursma, functional_eq_D,
                   functional_eq_P, probability_identities,
                   reconstruct_from_lower, tvn_coefficients,
                   zeta_coeff_identity_check, zeta_polynomial)

__version__ = "0.1.0"
