"""Finite abelian groups, their characters, and the exact duality pairing.

A group is a product Z_{m_1} x ... x Z_{m_r} of cyclic factors.  Characters
are identified with group elements componentwise (self-duality of finite
abelian groups), and a character value is stored as the exponent e of
exp(2*pi*i*e/M) where M is the group exponent.  No complex numbers anywhere:
"the character value is 1" is exactly "the exponent is 0 mod M".
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .errors import (
    EmptyModuli,
    EnumerationBoundExceeded,
    ModulusBelowTwo,
    ShapeMismatch,
)

DEFAULT_MAX_ENUM = 10 ** 7
MAX_ENUM_ENV = "ZETACODES_MAX_ENUM"


def default_max_enum() -> int:
    """Enumeration bound: the env override if set, else 10^7."""
    raw = os.environ.get(MAX_ENUM_ENV)
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        bound = int(raw)
    except ValueError:
        raise EnumerationBoundExceeded(
            f"{MAX_ENUM_ENV} must be an integer, got {raw!r}") from None
    if bound < 1:
        raise EnumerationBoundExceeded(f"{MAX_ENUM_ENV} must be >= 1, got {bound}")
    return bound


class FiniteAbelianGroup:
    """Z_{m_1} x ... x Z_{m_r}, factors kept in the order given."""

    def __init__(self, moduli: Sequence[int]):
        if len(moduli) == 0:
            raise EmptyModuli("a group needs at least one cyclic factor")
        for m in moduli:
            if m < 2:
                raise ModulusBelowTwo(f"modulus {m} < 2")
        self.moduli: Tuple[int, ...] = tuple(int(m) for m in moduli)
        self.order = math.prod(self.moduli)
        self.exponent = math.lcm(*self.moduli)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteAbelianGroup) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        inner = " x ".join(f"Z_{m}" for m in self.moduli)
        return f"FiniteAbelianGroup({inner})"

    # symbols: every element/character is indexed 0..order-1 by the mixed-radix
    # value of its residue vector, first factor most significant; symbol 0 is
    # the zero element (and the trivial character)

    def index_of(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.moduli):
            raise ShapeMismatch(
                f"residue vector of length {len(residues)} for {len(self.moduli)} factors")
        idx = 0
        for r, m in zip(residues, self.moduli):
            if not 0 <= r < m:
                raise ShapeMismatch(f"residue {r} out of range for modulus {m}")
            idx = idx * m + r
        return idx

    def residues_of(self, index: int) -> Tuple[int, ...]:
        out: List[int] = []
        for m in reversed(self.moduli):
            out.append(index % m)
            index //= m
        return tuple(reversed(out))

    def element(self, residues: Sequence[int]) -> "GroupElement":
        return GroupElement(self, self.residues_of(self.index_of(residues)))

    def character(self, residues: Sequence[int]) -> "Character":
        return Character(self, self.residues_of(self.index_of(residues)))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.moduli))

    @property
    def trivial_character(self) -> "Character":
        return Character(self, (0,) * len(self.moduli))

    def elements(self) -> Iterator["GroupElement"]:
        for i in range(self.order):
            yield GroupElement(self, self.residues_of(i))

    def characters(self) -> Iterator["Character"]:
        for i in range(self.order):
            yield Character(self, self.residues_of(i))

    # tables consumed by the kernels

    @cached_property
    def add_table(self) -> np.ndarray:
        """(order, order) table of symbol indices: add_table[a, b] = a + b."""
        q = self.order
        table = np.empty((q, q), dtype=np.int16)
        res = [self.residues_of(i) for i in range(q)]
        for a in range(q):
            for b in range(q):
                summed = tuple((x + y) % m for x, y, m in zip(res[a], res[b], self.moduli))
                table[a, b] = self.index_of(summed)
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        q = self.order
        table = np.empty(q, dtype=np.int16)
        for a in range(q):
            negd = tuple((-x) % m for x, m in zip(self.residues_of(a), self.moduli))
            table[a] = self.index_of(negd)
        return table

    @cached_property
    def pair_table(self) -> np.ndarray:
        """pair_table[a, c]: exponent of the character c evaluated at element a."""
        q, M = self.order, self.exponent
        table = np.empty((q, q), dtype=np.int64)
        res = [self.residues_of(i) for i in range(q)]
        for a in range(q):
            for c in range(q):
                e = 0
                for x, y, m in zip(res[a], res[c], self.moduli):
                    e += x * y * (M // m)
                table[a, c] = e % M
        return table


def make_group(moduli: Sequence[int]) -> FiniteAbelianGroup:
    """Construct Z_{m_1} x ... x Z_{m_r}; every modulus must be >= 2."""
    return FiniteAbelianGroup(moduli)


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    residues: Tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.group != other.group:
            raise ShapeMismatch("elements of different groups")
        summed = tuple((a + b) % m
                       for a, b, m in zip(self.residues, other.residues, self.group.moduli))
        return GroupElement(self.group, summed)

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group,
                            tuple((-a) % m for a, m in zip(self.residues, self.group.moduli)))

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.residues)


@dataclass(frozen=True)
class Character:
    """A character of the group, written by its residue vector under G^ = G."""

    group: FiniteAbelianGroup
    residues: Tuple[int, ...]

    def __mul__(self, other: "Character") -> "Character":
        # pointwise product of characters is residue addition
        if self.group != other.group:
            raise ShapeMismatch("characters of different groups")
        summed = tuple((a + b) % m
                       for a, b, m in zip(self.residues, other.residues, self.group.moduli))
        return Character(self.group, summed)

    def is_trivial(self) -> bool:
        return all(r == 0 for r in self.residues)


@dataclass(frozen=True)
class PairingExponent:
    """chi(g) = exp(2*pi*i * value / modulus); value 0 means chi(g) = 1."""

    value: int
    modulus: int

    def is_one(self) -> bool:
        return self.value == 0

    def __add__(self, other: "PairingExponent") -> "PairingExponent":
        if self.modulus != other.modulus:
            raise ShapeMismatch("pairing exponents over different moduli")
        return PairingExponent((self.value + other.value) % self.modulus, self.modulus)


def pairing_exponent(g: GroupElement, chi: Character,
                     group: FiniteAbelianGroup) -> PairingExponent:
    """Exponent e with chi(g) = exp(2*pi*i*e/M), M the group exponent.

    e = sum_j g_j * chi_j * (M / m_j) mod M.  Bilinear in both arguments.
    """
    if g.group != group or chi.group != group:
        raise ShapeMismatch("element/character not over the given group")
    M = group.exponent
    e = 0
    for x, y, m in zip(g.residues, chi.residues, group.moduli):
        e += x * y * (M // m)
    return PairingExponent(e % M, M)


def word_weight(word: Sequence[GroupElement] | Sequence[Character]) -> int:
    """Hamming weight: number of nonzero (or nontrivial) components."""
    assert len(word) > 0
    weight = 0
    for sym in word:
        if isinstance(sym, Character):
            weight += 0 if sym.is_trivial() else 1
        else:
            weight += 0 if sym.is_zero() else 1
    return weight


def enumerate_words(group: FiniteAbelianGroup, n: int,
                    max_enum: int | None = None) -> Iterator[Tuple[GroupElement, ...]]:
    """All |G|^n words of length n, lexicographic in the residue vectors."""
    if n < 1:
        raise ShapeMismatch(f"word length must be >= 1, got {n}")
    bound = default_max_enum() if max_enum is None else max_enum
    total = group.order ** n
    if total > bound:
        raise EnumerationBoundExceeded(
            f"|G|^n = {total} exceeds the enumeration bound {bound}")
    syms = [GroupElement(group, group.residues_of(i)) for i in range(group.order)]
    idx = [0] * n
    while True:
        yield tuple(syms[i] for i in idx)
        pos = n - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < group.order:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return
