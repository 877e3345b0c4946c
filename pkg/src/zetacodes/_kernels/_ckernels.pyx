# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Cython implementations of the hot word-level kernels.

Same contracts as the pure backend: sorted (N, n) int16 word arrays keyed
by sum(word[i] * q^(n-1-i)).  Closure runs a breadth-first search over a
dense seen-bitmap when the keyspace fits, and the dual runs an odometer
sweep that updates the pairing exponents incrementally per digit change.
"""

import numpy as np

from ..errors import EnumerationBoundExceeded

BACKEND = "cython"

# Above this keyspace the closure bitmap would get silly; hand off to the
# sparse numpy strategy instead.
_DENSE_CAP = 20_000_000


def closure_words(gens, add_table, int q, int n, bound):
    total_py = int(q) ** int(n)
    if total_py > _DENSE_CAP:
        from . import _py
        return _py.closure_words(gens, add_table, q, n, bound)

    cdef long long total = total_py
    cdef long long cap = min(total_py, int(bound) + 1)
    gens_arr = np.ascontiguousarray(np.asarray(gens, dtype=np.int64))
    cdef const long long[:, ::1] gv = gens_arr
    cdef const short[:, ::1] add = np.ascontiguousarray(add_table, dtype=np.int16)
    cdef unsigned char[::1] seen = np.zeros(total, dtype=np.uint8)
    queue_arr = np.empty(cap, dtype=np.int64)
    cdef long long[::1] queue = queue_arr
    pw_arr = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    cdef long long[::1] pw = pw_arr
    cdef long long head = 0, tail = 1, key, key2, limit = int(bound)
    cdef int i, gi, m = gens_arr.shape[0]
    cdef long long[::1] wdig = np.zeros(n, dtype=np.int64)

    seen[0] = 1
    queue[0] = 0
    while head < tail:
        key = queue[head]
        head += 1
        for i in range(n):
            wdig[i] = (key // pw[i]) % q
        for gi in range(m):
            key2 = 0
            for i in range(n):
                key2 += add[wdig[i], gv[gi, i]] * pw[i]
            if not seen[key2]:
                if tail >= limit:
                    raise EnumerationBoundExceeded(
                        f"closure exceeded the enumeration bound {bound}")
                seen[key2] = 1
                queue[tail] = key2
                tail += 1
    keys = np.sort(queue_arr[:tail])
    return ((keys[:, None] // pw_arr[None, :]) % q).astype(np.int16)


def dual_words(contribs, int n, int q, long long modulus, bound):
    total_py = int(q) ** int(n)
    if total_py > bound:
        raise EnumerationBoundExceeded(
            f"dual enumeration needs {total_py} candidates, bound is {bound}")

    cdef long long total = total_py
    contribs_arr = np.ascontiguousarray(np.asarray(contribs, dtype=np.int64))
    cdef int m = contribs_arr.shape[0]
    pw_arr = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    if m == 0:
        keys_all = np.arange(total, dtype=np.int64)
        return ((keys_all[:, None] // pw_arr[None, :]) % q).astype(np.int16)

    cdef const long long[:, :, ::1] cv = contribs_arr
    out_arr = np.empty(total, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long[::1] sums = np.zeros(m, dtype=np.int64)
    cdef long long[::1] digits = np.zeros(n, dtype=np.int64)
    cdef long long w, cnt = 0
    cdef int i, gi, ok
    cdef long long old, new

    for w in range(total):
        ok = 1
        for gi in range(m):
            if sums[gi] % modulus != 0:
                ok = 0
                break
        if ok:
            out[cnt] = w
            cnt += 1
        i = n - 1
        while i >= 0:
            old = digits[i]
            new = old + 1
            if new == q:
                digits[i] = 0
                for gi in range(m):
                    sums[gi] += cv[gi, i, 0] - cv[gi, i, old]
                i -= 1
            else:
                digits[i] = new
                for gi in range(m):
                    sums[gi] += cv[gi, i, new] - cv[gi, i, old]
                break
    keys = out_arr[:cnt]
    return ((keys[:, None] // pw_arr[None, :]) % q).astype(np.int16)


def weight_hist(words, int n):
    cdef const short[:, ::1] wv = np.ascontiguousarray(words, dtype=np.int16)
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    cdef Py_ssize_t r, rows = wv.shape[0]
    cdef int i, w
    for r in range(rows):
        w = 0
        for i in range(n):
            if wv[r, i] != 0:
                w += 1
        hist[w] += 1
    return hist_arr
