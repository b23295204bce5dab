"""JIT-compiled enumeration kernels: the hot path.

A kernel walks one contiguous lexicographic-rank range of S_n and
accumulates the joint frequency table of (stat1, stat2), where stat1 is
maj or inv and stat2 is imaj.  Counting in a flat int64 table instead of
yielding words is what makes a full sweep of S_12 feasible on one core.

The inversion count is maintained incrementally across the next-word
step: advancing past a descending suffix of length m changes inv by
exactly 1 - m(m-1)/2 (the suffix reversal drops its C(m,2) internal
inversions, the pivot swap adds one), so the O(n^2) recount happens only
once per range.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def joint_table_range(n, start, stop, use_inv):
    """Joint (stat1, imaj) counts over ranks [start, stop) of S_n.

    Returns an int64 table of shape (n(n-1)/2 + 1,) * 2 indexed by raw
    statistic values.  stat1 is inv when use_inv, else maj.
    """
    smax = n * (n - 1) // 2
    out = np.zeros((smax + 1, smax + 1), np.int64)
    if stop <= start:
        return out

    fact = np.ones(n + 1, np.int64)
    for i in range(2, n + 1):
        fact[i] = fact[i - 1] * i

    # Factoradic decode of the start rank.
    w = np.empty(n, np.int64)
    avail = np.empty(n, np.int64)
    for i in range(n):
        avail[i] = i + 1
    r = start
    size = n
    for idx in range(n):
        f = fact[n - 1 - idx]
        c = r // f
        r -= c * f
        w[idx] = avail[c]
        for t in range(c, size - 1):
            avail[t] = avail[t + 1]
        size -= 1

    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[w[i] - 1] = i

    invc = 0
    for s in range(n - 1):
        for t in range(s + 1, n):
            if w[s] > w[t]:
                invc += 1

    remaining = stop - start
    while True:
        majv = 0
        for t in range(n - 1):
            if w[t] > w[t + 1]:
                majv += t + 1
        imajv = 0
        for v in range(1, n):
            if pos[v] < pos[v - 1]:
                imajv += v
        if use_inv:
            out[invc, imajv] += 1
        else:
            out[majv, imajv] += 1
        remaining -= 1
        if remaining == 0:
            break

        # Next word in lex order; stop <= n! guarantees a successor here.
        i = n - 2
        while w[i] > w[i + 1]:
            i -= 1
        j = n - 1
        while w[j] < w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        lo = i + 1
        hi = n - 1
        while lo < hi:
            tmp = w[lo]
            w[lo] = w[hi]
            w[hi] = tmp
            lo += 1
            hi -= 1
        m = n - 1 - i
        invc += 1 - m * (m - 1) // 2
        for t in range(i, n):
            pos[w[t] - 1] = t
    return out
