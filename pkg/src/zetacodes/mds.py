"""Reference weight enumerators of MDS codes and the MacWilliams transform.

M_{n,d} denotes the weight enumerator any MDS code with parameters (n, d)
over an alphabet of size q must have; it exists for every 1 <= d <= n once
fractional "sizes" are allowed, which is what makes it usable as a basis
for the zeta polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

from .errors import MassMismatch, NonIntegralResult, RangeError
from .exactalg import (HomogeneousEnumerator, UniPoly, binomial_or_zero,
                       geometric_sum, substitute_pair)


def _check_params(n: int, d: int, q: int) -> None:
    if q < 2:
        raise RangeError(f"alphabet size {q} < 2")
    if not 1 <= d <= n:
        raise RangeError(f"need 1 <= d <= n, got d={d}, n={n}")


def mds_count(n: int, d: int, q: int, s: int) -> int:
    """Number of weight-s words in an MDS code with parameters (n, d) over
    an alphabet of size q:

        C(n, s) (q-1) sum_{i=0}^{s-d} (-1)^i C(s-1, i) q^(s-d-i)
    """
    _check_params(n, d, q)
    if not d <= s <= n:
        raise RangeError(f"need d <= s <= n, got s={s}")
    acc = 0
    for i in range(s - d + 1):
        acc += (-1) ** i * math.comb(s - 1, i) * q ** (s - d - i)
    return math.comb(n, s) * (q - 1) * acc


def mds_enumerator(n: int, d: int, q: int) -> HomogeneousEnumerator:
    """M_{n,d}(x, y): coefficient 1 at s=0, 0 below d, mds_count from d up."""
    _check_params(n, d, q)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for s in range(d, n + 1):
        coeffs[s] = mds_count(n, d, q, s)
    return HomogeneousEnumerator(n, coeffs)


def macwilliams_transform(w: HomogeneousEnumerator, q: int,
                          code_size: int) -> HomogeneousEnumerator:
    """W(x + (q-1)y, x - y) / |C|, which is the dual's enumerator.

    The mass of w must equal code_size, and the result must come out as
    nonnegative integers or the input was not a weight distribution.
    """
    if w.mass() != code_size:
        raise MassMismatch(f"enumerator mass {w.mass()} != code size {code_size}")
    out = substitute_pair(w, q).scale(Fraction(1, code_size))
    for s, c in enumerate(out.coeffs):
        if c.denominator != 1 or c < 0:
            raise NonIntegralResult(
                f"dual coefficient at weight {s} came out {c}")
    return out


def enumerator_series_coeff(p: UniPoly, n: int, q: int,
                            order_index: int) -> HomogeneousEnumerator:
    """Coefficient of t^order_index in P(t) (xt + y(1-t))^n / ((1-t)(1-qt)).

    The result is homogeneous of degree n in (x, y).  Expanding the three
    factors separately: coefficient m of (xt + y(1-t))^n is
    sum_j C(n, j) x^j y^(n-j) (-1)^(m-j) C(n-j, m-j), and coefficient m of
    1/((1-t)(1-qt)) is 1 + q + ... + q^m.
    """
    if q < 2:
        raise RangeError(f"alphabet size {q} < 2")
    if not 0 <= order_index <= n:
        raise RangeError(f"order index {order_index} outside 0..{n}")
    base: List[List[int]] = []
    for m in range(order_index + 1):
        row = [0] * (n + 1)
        for j in range(min(m, n) + 1):
            # x^j y^(n-j) sits at weight s = n - j
            row[n - j] = math.comb(n, j) * (-1) ** (m - j) * binomial_or_zero(n - j, m - j)
        base.append(row)
    out = [Fraction(0)] * (n + 1)
    for i in range(min(p.degree, order_index) + 1):
        pi = p[i]
        if pi == 0:
            continue
        rest = order_index - i
        for u in range(rest + 1):
            geo = geometric_sum(q, rest - u + 1)
            if geo == 0:
                continue
            row = base[u]
            for s in range(n + 1):
                if row[s]:
                    out[s] += pi * row[s] * geo
    return HomogeneousEnumerator(n, out)


def coefficient_identity_check(n: int, d: int, q: int) -> bool:
    """(M_{n,d} - x^n)/(q-1) equals the t^(n-d) series coefficient for P = 1."""
    _check_params(n, d, q)
    lhs = (mds_enumerator(n, d, q)
           - HomogeneousEnumerator.x_power(n)).scale(Fraction(1, q - 1))
    rhs = enumerator_series_coeff(UniPoly.one(), n, q, n - d)
    return lhs == rhs
