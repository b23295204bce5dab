"""Vectorized pure-numpy build of the enumeration kernels.

Same contract as the JIT build: joint (stat1, imaj) tables over a
lexicographic-rank range.  Ranks are decoded in batches; each batch is a
(B, n) array of words whose statistics are computed column-wise.  Slower
than the compiled path by roughly an order of magnitude, but it has no
compiler dependency; selected via MAJPERM_BACKEND=numpy or automatically
when numba is absent.
"""

from __future__ import annotations

import math

import numpy as np

_BATCH = 1 << 15


def _unrank_batch(n: int, ranks: np.ndarray) -> np.ndarray:
    """Decode lexicographic ranks to words; returns (B, n) values 1..n."""
    B = ranks.shape[0]
    codes = np.empty((B, n), np.int64)
    rem = ranks.copy()
    for idx in range(n):
        f = math.factorial(n - 1 - idx)
        codes[:, idx] = rem // f
        rem %= f
    avail = np.broadcast_to(np.arange(1, n + 1, dtype=np.int64), (B, n)).copy()
    words = np.empty((B, n), np.int64)
    for idx in range(n):
        c = codes[:, idx]
        words[:, idx] = np.take_along_axis(avail, c[:, None], 1)[:, 0]
        if idx == n - 1:
            break
        # Drop the chosen entry: gather the survivors, skipping column c.
        keep = np.arange(n - idx - 1, dtype=np.int64)[None, :]
        gather = keep + (keep >= c[:, None])
        avail = np.take_along_axis(avail, gather, 1)
    return words


def _maj_batch(words: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    weights = np.arange(1, n, dtype=np.int64)
    return ((words[:, :-1] > words[:, 1:]) * weights).sum(axis=1)


def _inv_batch(words: np.ndarray) -> np.ndarray:
    B, n = words.shape
    total = np.zeros(B, np.int64)
    for s in range(n - 1):
        total += (words[:, s, None] > words[:, s + 1:]).sum(axis=1)
    return total


def _imaj_batch(words: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    # argsort of distinct values 1..n: column v holds the position of v+1.
    pos = np.argsort(words, axis=1)
    weights = np.arange(1, n, dtype=np.int64)
    return ((pos[:, 1:] < pos[:, :-1]) * weights).sum(axis=1)


def joint_table_range(n, start, stop, use_inv):
    """Joint (stat1, imaj) counts over ranks [start, stop) of S_n."""
    smax = n * (n - 1) // 2
    out = np.zeros((smax + 1, smax + 1), np.int64)
    width = smax + 1
    flat = out.ravel()
    for lo in range(start, stop, _BATCH):
        hi = min(lo + _BATCH, stop)
        words = _unrank_batch(n, np.arange(lo, hi, dtype=np.int64))
        s1 = _inv_batch(words) if use_inv else _maj_batch(words)
        s2 = _imaj_batch(words)
        flat += np.bincount(s1 * width + s2, minlength=width * width)
    return out
