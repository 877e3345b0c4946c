"""Pure numpy implementations of the hot word-level kernels.

Words live as (N, n) int16 arrays of symbol indices, rows sorted by the
mixed-radix key sum(word[i] * q^(n-1-i)).  All three kernels keep that
invariant so callers can binary-search and compare arrays directly.
"""

from __future__ import annotations

import numpy as np

from ..errors import EnumerationBoundExceeded

BACKEND = "python"


def _powers(q: int, n: int) -> np.ndarray:
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def _decode(keys: np.ndarray, q: int, n: int) -> np.ndarray:
    pw = _powers(q, n)
    return ((keys[:, None] // pw[None, :]) % q).astype(np.int16)


def closure_words(gens: np.ndarray, add_table: np.ndarray, q: int, n: int,
                  bound: int) -> np.ndarray:
    """Additive closure of the generator words, as a sorted (N, n) array.

    Extends the running set one cyclic subgroup at a time: for each
    generator g the set becomes S + <g>, deduplicated through int64 keys.
    """
    gens = np.asarray(gens, dtype=np.int64)
    pw = _powers(q, n)
    words = np.zeros((1, n), dtype=np.int16)
    for g in gens:
        if not np.any(g):
            continue
        g16 = g.astype(np.int16)
        multiples = [g16]
        cur = add_table[g16, g16]
        while np.any(cur):
            multiples.append(cur)
            cur = add_table[cur, g16]
        blocks = [words]
        blocks.extend(add_table[words, m[None, :]] for m in multiples)
        keys = np.unique(np.concatenate(blocks).astype(np.int64) @ pw)
        if keys.size > bound:
            raise EnumerationBoundExceeded(
                f"closure exceeded the enumeration bound {bound}")
        words = _decode(keys, q, n)
    return words


def dual_words(contribs: np.ndarray, n: int, q: int, modulus: int,
               bound: int) -> np.ndarray:
    """Words annihilating every generator, as a sorted (N, n) array.

    contribs[g, i, s] is the pairing exponent contributed at coordinate i
    by symbol s against generator g; a word survives when each generator's
    total is 0 mod modulus.  The first generator is screened over the full
    q^n keyspace by an outer-sum cascade, later ones only over survivors.
    """
    contribs = np.asarray(contribs, dtype=np.int64)
    total = q ** n
    if total > bound:
        raise EnumerationBoundExceeded(
            f"dual enumeration needs {total} candidates, bound is {bound}")
    if contribs.shape[0] == 0:
        return _decode(np.arange(total, dtype=np.int64), q, n)
    acc = contribs[0, n - 1].copy()
    for i in range(n - 2, -1, -1):
        acc = (contribs[0, i][:, None] + acc[None, :]).reshape(-1)
    keys = np.nonzero(acc % modulus == 0)[0].astype(np.int64)
    pw = _powers(q, n)
    for gi in range(1, contribs.shape[0]):
        digits = (keys[:, None] // pw[None, :]) % q
        acc = np.zeros(keys.size, dtype=np.int64)
        for i in range(n):
            acc += contribs[gi, i][digits[:, i]]
        keys = keys[acc % modulus == 0]
    return _decode(keys, q, n)


def weight_hist(words: np.ndarray, n: int) -> np.ndarray:
    """Counts by Hamming weight, length n+1 int64."""
    w = np.count_nonzero(words, axis=1)
    return np.bincount(w, minlength=n + 1).astype(np.int64)
