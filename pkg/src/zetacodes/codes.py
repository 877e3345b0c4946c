"""Additive codes over a finite abelian alphabet and their duals.

A code is a subgroup of G^n, stored exhaustively as a sorted (N, n) int16
array of symbol indices.  Duals live over the character group, which is
identified with G through the residue representation; the `side` marker
tracks which of the two a given code inhabits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .errors import IndexOutOfRange, LengthTooShort, NotMDS, ShapeMismatch, ZeroCode
from .groups import FiniteAbelianGroup, default_max_enum

GROUP_SIDE = "group"
CHARACTER_SIDE = "character"

_SIDE_FLIP = {GROUP_SIDE: CHARACTER_SIDE, CHARACTER_SIDE: GROUP_SIDE}


@dataclass(frozen=True)
class GenusData:
    """Exact genus of a code: q^g as a fraction, plus g itself when integral."""

    length: int
    min_distance: int
    size: int
    alphabet_size: int
    q_pow_g: Fraction
    integer_genus: Optional[int]


def _int_log(value: int, base: int) -> Optional[int]:
    """e with base^e == value, or None."""
    if value < 1:
        return None
    e = 0
    while value % base == 0:
        value //= base
        e += 1
    return e if value == 1 else None


def _symbol(group: FiniteAbelianGroup, entry) -> int:
    """Symbol index of one word entry: an int residue (rank-1 groups) or a residue tuple."""
    if isinstance(entry, (int, np.integer)):
        if len(group.moduli) != 1:
            raise ShapeMismatch(
                f"scalar entry {entry!r} for a group with {len(group.moduli)} factors")
        return group.index_of((int(entry),))
    return group.index_of(tuple(int(v) for v in entry))


class AdditiveCode:
    """A subgroup of G^n (or of the character group's n-th power)."""

    def __init__(self, group: FiniteAbelianGroup, length: int, words: np.ndarray,
                 side: str = GROUP_SIDE, gen_matrix: Optional[np.ndarray] = None):
        assert side in _SIDE_FLIP
        assert words.ndim == 2 and words.shape[1] == length
        self.group = group
        self.length = length
        self.side = side
        self.words = words
        self.words.setflags(write=False)
        self._gen_matrix = gen_matrix

    @classmethod
    def from_generators(cls, group: FiniteAbelianGroup, length: int,
                        generators: Sequence[Sequence], side: str = GROUP_SIDE,
                        max_enum: Optional[int] = None) -> "AdditiveCode":
        """Closure of the given generator words.

        Each generator is a length-n sequence whose entries are residue
        tuples (or bare residues when the group has a single factor).
        """
        if length < 1:
            raise ShapeMismatch(f"length {length} < 1")
        rows = []
        for g in generators:
            if len(g) != length:
                raise ShapeMismatch(f"generator {g!r} does not have length {length}")
            rows.append([_symbol(group, entry) for entry in g])
        gens = np.array(rows, dtype=np.int64).reshape(len(rows), length)
        bound = default_max_enum() if max_enum is None else max_enum
        words = _kernels.closure_words(gens, group.add_table, group.order, length, bound)
        return cls(group, length, words, side=side, gen_matrix=gens)

    # -- basic views ---------------------------------------------------

    @property
    def size(self) -> int:
        return self.words.shape[0]

    @cached_property
    def _keys(self) -> np.ndarray:
        return self.words.astype(np.int64) @ self._key_powers

    @property
    def _key_powers(self) -> np.ndarray:
        q = self.group.order
        return q ** np.arange(self.length - 1, -1, -1, dtype=np.int64)

    def contains(self, word: Sequence) -> bool:
        syms = np.array([_symbol(self.group, e) for e in word], dtype=np.int64)
        if syms.size != self.length:
            raise ShapeMismatch(f"word length {syms.size}, code length {self.length}")
        key = int(syms @ self._key_powers)
        pos = int(np.searchsorted(self._keys, key))
        return pos < self.size and int(self._keys[pos]) == key

    def __eq__(self, other) -> bool:
        return (isinstance(other, AdditiveCode)
                and self.group == other.group and self.side == other.side
                and self.length == other.length
                and np.array_equal(self.words, other.words))

    def __repr__(self) -> str:
        return (f"AdditiveCode(moduli={self.group.moduli}, n={self.length}, "
                f"size={self.size}, side={self.side!r})")

    # -- weights and genus ----------------------------------------------

    @cached_property
    def weight_distribution(self) -> Tuple[int, ...]:
        """(W_0, ..., W_n): counts of words by Hamming weight."""
        hist = _kernels.weight_hist(self.words, self.length)
        return tuple(int(v) for v in hist)

    def min_distance(self) -> int:
        """Smallest nonzero weight present; 0 for the zero code."""
        w = self.weight_distribution
        for s in range(1, self.length + 1):
            if w[s]:
                return s
        return 0

    def genus(self) -> GenusData:
        """q^g = q^(n+1-d) / |C|, with the integer exponent when there is one."""
        if self.size == 1:
            raise ZeroCode("the zero code has no minimum distance")
        q = self.group.order
        n, d = self.length, self.min_distance()
        q_pow_g = Fraction(q ** (n + 1 - d), self.size)
        assert q_pow_g >= 1
        g = None
        if q_pow_g.denominator == 1:
            g = _int_log(q_pow_g.numerator, q)
        return GenusData(n, d, self.size, q, q_pow_g, g)

    # -- duality ---------------------------------------------------------

    def generator_matrix(self) -> np.ndarray:
        """Some (m, n) int64 matrix of symbol words generating the code."""
        if self._gen_matrix is None:
            self._gen_matrix = self._generating_subset()
        return self._gen_matrix

    def _generating_subset(self) -> np.ndarray:
        q, n = self.group.order, self.length
        add = self.group.add_table
        gens: list = []
        cur = np.zeros(1, dtype=np.int64)
        pw = self._key_powers
        while cur.size < self.size:
            missing = self._keys[~np.isin(self._keys, cur)]
            first = int(missing[0])
            gens.append((first // pw) % q)
            words = _kernels.closure_words(
                np.array(gens, dtype=np.int64), add, q, n, self.size)
            cur = words.astype(np.int64) @ pw
        return np.array(gens, dtype=np.int64).reshape(len(gens), n)

    def dual(self, max_enum: Optional[int] = None) -> "AdditiveCode":
        """All words on the opposite side pairing trivially with every codeword.

        |C| * |dual| = q^n always holds; the check is an assert because it
        is an internal invariant, not an input condition.
        """
        bound = default_max_enum() if max_enum is None else max_enum
        q, n = self.group.order, self.length
        gens = self.generator_matrix()
        contribs = self.group.pair_table[gens]
        words = _kernels.dual_words(contribs, n, q, self.group.exponent, bound)
        out = AdditiveCode(self.group, n, words, side=_SIDE_FLIP[self.side])
        assert self.size * out.size == q ** n
        return out

    # -- coordinate surgery ----------------------------------------------

    def _check_coordinate(self, i: int) -> int:
        if self.length < 2:
            raise LengthTooShort(f"cannot drop a coordinate at length {self.length}")
        if not 1 <= i <= self.length:
            raise IndexOutOfRange(f"coordinate {i} outside 1..{self.length}")
        return i - 1

    def puncture(self, i: int) -> "AdditiveCode":
        """Delete coordinate i (1-based) from every word."""
        col = self._check_coordinate(i)
        proj = np.delete(self.words, col, axis=1)
        q = self.group.order
        pw = q ** np.arange(self.length - 2, -1, -1, dtype=np.int64)
        keys = np.unique(proj.astype(np.int64) @ pw)
        words = ((keys[:, None] // pw[None, :]) % q).astype(np.int16)
        gens = None
        if self._gen_matrix is not None:
            gens = np.delete(self._gen_matrix, col, axis=1)
        return AdditiveCode(self.group, self.length - 1, words,
                            side=self.side, gen_matrix=gens)

    def shorten(self, i: int) -> "AdditiveCode":
        """Keep words with 0 at coordinate i (1-based), then delete it."""
        col = self._check_coordinate(i)
        keep = self.words[self.words[:, col] == 0]
        proj = np.delete(keep, col, axis=1)
        # dropping a column that is 0 on every kept row preserves key order
        return AdditiveCode(self.group, self.length - 1, proj, side=self.side)


def duality_commutation_check(code: AdditiveCode, i: int,
                              dual: Optional[AdditiveCode] = None) -> Tuple[bool, bool]:
    """Whether shortening/puncturing commute with the dual at coordinate i.

    Returns (shorten_of_dual == dual_of_puncture,
             puncture_of_dual == dual_of_shorten).
    """
    if dual is None:
        dual = code.dual()
    left = dual.shorten(i) == code.puncture(i).dual()
    right = dual.puncture(i) == code.shorten(i).dual()
    return left, right


def mds_support_count_check(code: AdditiveCode) -> bool:
    """For a genus-0 code, every d-subset of coordinates supports exactly
    q-1 words of weight d.  Raises NotMDS when the genus is not 0."""
    gd = code.genus()
    if gd.integer_genus != 0:
        raise NotMDS(f"genus is {gd.q_pow_g} in powers of q, not q^0")
    n, d = code.length, code.min_distance()
    assert n < 63
    rows = code.words[np.count_nonzero(code.words, axis=1) == d]
    masks = (rows != 0) @ (np.int64(1) << np.arange(n, dtype=np.int64))
    vals, counts = np.unique(masks, return_counts=True)
    q = code.group.order
    return vals.size == math.comb(n, d) and bool(np.all(counts == q - 1))
