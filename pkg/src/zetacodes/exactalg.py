"""Exact rational arithmetic: dense univariate polynomials, homogeneous
bivariate enumerators, and truncated power series.

Rational is an alias of fractions.Fraction, which already guarantees the
canonical form (positive denominator, gcd 1).  Everything here is a pure
value; nothing mutates after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .errors import IndexOutOfRange, NonzeroRemainder, RangeError

Rational = Fraction

Scalar = Union[int, Fraction]


def as_pair(x: Scalar) -> Tuple[int, int]:
    """Lowest-terms (numerator, denominator) with positive denominator."""
    f = Fraction(x)
    return (f.numerator, f.denominator)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise RangeError(f"binomial({n}, {k}) undefined")
    return math.comb(n, k)


def binomial_or_zero(n: int, k: int) -> int:
    """binomial(n, k), extended by 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def geometric_sum(q: int, length: int) -> int:
    """1 + q + ... + q^(length-1), i.e. (q^length - 1)/(q - 1), exactly."""
    if length <= 0:
        return 0
    return (q ** length - 1) // (q - 1)


class UniPoly:
    """Dense polynomial in one variable t over Fraction, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def t_power(k: int) -> "UniPoly":
        if k < 0:
            raise RangeError(f"t^{k} is not a polynomial")
        return UniPoly((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(m)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, factor: Scalar) -> "UniPoly":
        return UniPoly([c * Fraction(factor) for c in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def eval(self, at: Scalar) -> Fraction:
        at = Fraction(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    __call__ = eval

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return "UniPoly(" + " + ".join(parts) + ")"


def eval_poly(p: UniPoly, at: Scalar) -> Fraction:
    return p.eval(at)


def divide_exact(p: UniPoly, divisor: UniPoly) -> UniPoly:
    """Quotient q with p = q * divisor exactly; NonzeroRemainder otherwise."""
    if divisor.is_zero():
        raise NonzeroRemainder("division by the zero polynomial")
    if p.is_zero():
        return UniPoly()
    rem = list(p.coeffs)
    dlead = divisor.coeffs[-1]
    ddeg = divisor.degree
    qdeg = len(rem) - 1 - ddeg
    if qdeg < 0:
        raise NonzeroRemainder(f"{p!r} is not divisible by {divisor!r}")
    quot = [Fraction(0)] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        c = rem[i + ddeg] / dlead
        quot[i] = c
        if c:
            for j, dc in enumerate(divisor.coeffs):
                rem[i + j] -= c * dc
    if any(rem):
        raise NonzeroRemainder(f"{p!r} is not divisible by {divisor!r}")
    return UniPoly(quot)


class HomogeneousEnumerator:
    """Degree-n homogeneous polynomial in (x, y): coefficient s multiplies x^(n-s) y^s."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence[Scalar]):
        if degree < 0:
            raise RangeError(f"degree {degree} < 0")
        if len(coeffs) != degree + 1:
            raise RangeError(
                f"need {degree + 1} coefficients for degree {degree}, got {len(coeffs)}")
        self.degree = degree
        self.coeffs: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "HomogeneousEnumerator":
        return cls(len(counts) - 1, counts)

    @classmethod
    def x_power(cls, degree: int) -> "HomogeneousEnumerator":
        """The enumerator x^n of the zero code."""
        return cls(degree, (1,) + (0,) * degree)

    def coefficient(self, s: int) -> Fraction:
        if not 0 <= s <= self.degree:
            raise IndexOutOfRange(f"coefficient index {s} outside 0..{self.degree}")
        return self.coeffs[s]

    def mass(self) -> Fraction:
        """Value at x = y = 1."""
        return sum(self.coeffs, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def counts(self) -> Tuple[int, ...]:
        assert self.is_integral()
        return tuple(int(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomogeneousEnumerator)
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "HomogeneousEnumerator") -> "HomogeneousEnumerator":
        if self.degree != other.degree:
            raise RangeError("cannot add enumerators of different degrees")
        return HomogeneousEnumerator(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "HomogeneousEnumerator") -> "HomogeneousEnumerator":
        if self.degree != other.degree:
            raise RangeError("cannot subtract enumerators of different degrees")
        return HomogeneousEnumerator(
            self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, factor: Scalar) -> "HomogeneousEnumerator":
        f = Fraction(factor)
        return HomogeneousEnumerator(self.degree, [c * f for c in self.coeffs])

    def __repr__(self) -> str:
        parts = []
        n = self.degree
        for s, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xs = f"x^{n - s}" if n - s > 1 else ("x" if n - s == 1 else "")
            ys = f"y^{s}" if s > 1 else ("y" if s == 1 else "")
            mono = (xs + ys) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return "HomogeneousEnumerator(" + (" + ".join(parts) or "0") + ")"


def substitute_pair(w: HomogeneousEnumerator, q: int) -> HomogeneousEnumerator:
    """W(x + (q-1)y, x - y), expanded exactly and re-collected in x^(n-s) y^s.

    Applying it twice multiplies the enumerator by q^n.
    """
    if q < 2:
        raise RangeError(f"q must be >= 2, got {q}")
    n = w.degree
    out = [Fraction(0)] * (n + 1)
    for s, ws in enumerate(w.coeffs):
        if ws == 0:
            continue
        # (x + (q-1)y)^(n-s) (x - y)^s
        for a in range(n - s + 1):
            ca = math.comb(n - s, a) * (q - 1) ** a
            for b in range(s + 1):
                out[a + b] += ws * ca * math.comb(s, b) * (-1) ** b
    return HomogeneousEnumerator(n, out)


class TruncatedSeries:
    """Coefficients A_0..A_order of a power series; negative indices read as 0."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar]):
        if len(coeffs) == 0:
            raise RangeError("a series needs at least the constant coefficient")
        self.coeffs: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        self.order = len(self.coeffs) - 1

    def at(self, m: int) -> Fraction:
        if m < 0:
            return Fraction(0)
        if m > self.order:
            raise IndexOutOfRange(f"series truncated at order {self.order}, asked for {m}")
        return self.coeffs[m]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


def series_of_rational(p: UniPoly, q: int, order: int) -> TruncatedSeries:
    """Expansion of P(t) / ((1-t)(1-qt)) to the given order.

    A_m = sum_{j <= m} P_j (q^(m-j+1) - 1)/(q - 1); beyond deg P - 1 the
    coefficients obey A_{m+2} - (q+1) A_{m+1} + q A_m = 0.
    """
    if order < 0:
        raise RangeError(f"series order {order} < 0")
    out = []
    for m in range(order + 1):
        acc = Fraction(0)
        for j in range(min(m, p.degree) + 1):
            acc += p[j] * geometric_sum(q, m - j + 1)
        out.append(acc)
    return TruncatedSeries(out)
