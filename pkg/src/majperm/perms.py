"""Permutation words and the classical statistics maj, inv, imaj.

A permutation of [n] = {1, ..., n} is stored as a plain tuple of 1-based
values in one-line notation, e.g. ``(6, 3, 7, 1, 4, 5, 2)`` for the word
6371452.  Positions are 1-based throughout to match the usual
combinatorial conventions; residues are 0-based.

The empty tuple is the unique permutation of the empty set.  Statistics
accept it (and return 0); enumeration requires n >= 1.
"""

from __future__ import annotations

import math
from itertools import permutations as _lex_permutations
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

# Hard ceiling for exhaustive enumeration.  14! ranks still fit easily in
# int64; anything beyond is out of desk range for a full sweep.
MAX_ENUM_N = 14

# Default ceiling applied by the CLI, overridable up to MAX_ENUM_N.
DEFAULT_ENUM_LIMIT = 12


class SizeLimitError(ValueError):
    """Requested n exceeds the configured enumeration limit."""


def check_enum_size(n: int, limit: int = MAX_ENUM_N) -> None:
    """Reject enumeration requests outside [1, min(limit, MAX_ENUM_N)]."""
    if n < 1:
        raise ValueError(f"enumeration requires n >= 1, got {n}")
    effective = min(limit, MAX_ENUM_N)
    if n > effective:
        raise SizeLimitError(f"n={n} exceeds the enumeration limit {effective}")


def as_perm(word: Iterable[int]) -> Perm:
    """Validate a one-line word and return it as a tuple.

    >>> as_perm([2, 3, 1])
    (2, 3, 1)
    """
    w = tuple(int(a) for a in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of [{len(w)}]: {w!r}")
    return w


def maj(word: Sequence[int]) -> int:
    """Major index: the sum of the 1-based descent positions."""
    return sum(p for p in range(1, len(word)) if word[p - 1] > word[p])


def inv(word: Sequence[int]) -> int:
    """Inversion count: pairs of positions s < t with word[s] > word[t]."""
    n = len(word)
    total = 0
    for s in range(n - 1):
        ws = word[s]
        for t in range(s + 1, n):
            if ws > word[t]:
                total += 1
    return total


def inverse(word: Sequence[int]) -> Perm:
    """Group inverse: the word q with q[word[p]] = p (1-based).

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    w = as_perm(word)
    q = [0] * len(w)
    for p0, v in enumerate(w):
        q[v - 1] = p0 + 1
    return tuple(q)


def imaj(word: Sequence[int]) -> int:
    """Inverse major index: maj of the inverse word.

    Computed directly as the sum of all values v such that v + 1 appears
    to the left of v, which is the same thing.
    """
    n = len(word)
    pos = [0] * (n + 1)
    for p0, v in enumerate(word):
        pos[v] = p0
    return sum(v for v in range(1, n) if pos[v + 1] < pos[v])


def iter_sn(n: int, limit: int = MAX_ENUM_N) -> Iterator[Perm]:
    """All of S_n in lexicographic order.  S_0 holds the empty word."""
    if n == 0:
        return iter([()])
    check_enum_size(n, limit)
    return iter(_lex_permutations(range(1, n + 1)))


def unrank(n: int, r: int) -> Perm:
    """The permutation of [n] with lexicographic rank r (0-based).

    >>> unrank(3, 0), unrank(3, 5)
    ((1, 2, 3), (3, 2, 1))
    """
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    avail = list(range(1, n + 1))
    out = []
    for idx in range(n):
        c, r = divmod(r, math.factorial(n - 1 - idx))
        out.append(avail.pop(c))
    return tuple(out)


def rank(word: Sequence[int]) -> int:
    """Lexicographic rank, the inverse of unrank."""
    w = as_perm(word)
    n = len(w)
    avail = list(range(1, n + 1))
    r = 0
    for idx, v in enumerate(w):
        c = avail.index(v)
        r += c * math.factorial(n - 1 - idx)
        avail.pop(c)
    return r


def _advance(w: list[int]) -> bool:
    # In-place step to the lexicographic successor; False at the last word.
    n = len(w)
    i = n - 2
    while i >= 0 and w[i] > w[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while w[j] < w[i]:
        j -= 1
    w[i], w[j] = w[j], w[i]
    w[i + 1:] = w[:i:-1]
    return True


def iter_rank_range(n: int, start: int, stop: int,
                    limit: int = MAX_ENUM_N) -> Iterator[Perm]:
    """Permutations with lexicographic rank in [start, stop).

    Disjoint contiguous ranges partition the stream, so independent
    workers can each walk their own range and merge counts afterwards.
    """
    check_enum_size(n, limit)
    if not 0 <= start <= stop <= math.factorial(n):
        raise ValueError(f"bad rank range [{start}, {stop}) for n={n}")
    if start == stop:
        return
    w = list(unrank(n, start))
    for _ in range(stop - start - 1):
        yield tuple(w)
        _advance(w)
    yield tuple(w)


def rank_ranges(n: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, n!) into `parts` near-equal contiguous rank ranges."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    total = math.factorial(n)
    step, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for p in range(parts):
        hi = lo + step + (1 if p < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


def format_perm(word: Sequence[int]) -> str:
    """Render a word: digits run together for n <= 9, else comma-separated.

    >>> format_perm((6, 3, 7, 1, 4, 5, 2))
    '6371452'
    """
    if len(word) <= 9:
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def parse_perm(text: str) -> Perm:
    """Inverse of format_perm; the empty string parses to the empty word."""
    s = text.strip()
    if not s:
        return ()
    if "," in s:
        return as_perm(int(t) for t in s.split(","))
    if not s.isdigit():
        raise ValueError(f"cannot parse permutation from {text!r}")
    return as_perm(int(ch) for ch in s)
