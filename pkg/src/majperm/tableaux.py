"""Standard Young tableaux: the independent route to the class matrices.

A standard tableau of shape lambda |- n fills the cells with 1..n,
increasing along rows and down columns.  Pairing tableaux of equal shape
reproduces the joint (maj, imaj) distribution of S_n, because the
row-insertion correspondence sends a word to a tableau pair (P, Q) of one
shape with imaj and maj landing on P and Q respectively.  That gives a
second, enumeration-free computation of every count matrix, used to
cross-check the kernels.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from .matrices import ResidueMatrix, StatPair
from .perms import SizeLimitError

# Tableau counts grow like sqrt(n!); 12 keeps the full sweep near 10^5.
MAX_SYT_N = 12

Shape = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def partitions(n: int) -> list[Shape]:
    """All partitions of n as weakly decreasing tuples, n >= 0."""
    if n < 0:
        raise ValueError("partitions of negative n")
    out: list[Shape] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rem, cap), 0, -1):
            acc.append(part)
            rec(rem - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _check_shape(shape) -> Shape:
    lam = tuple(int(a) for a in shape)
    if any(a < 1 for a in lam) or any(lam[i] < lam[i + 1]
                                      for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition shape: {shape!r}")
    return lam


def conjugate(shape) -> Shape:
    lam = _check_shape(shape)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > c) for c in range(lam[0]))


def hook_count(shape) -> int:
    """Number of standard tableaux of the shape, by the hook product."""
    lam = _check_shape(shape)
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            prod *= (row_len - c) + (conj[c] - r) - 1
    q, rem = divmod(math.factorial(n), prod)
    if rem:
        raise ArithmeticError(f"hook product {prod} does not divide {n}!")
    return q


def syt_enumerate(shape) -> Iterator[Tableau]:
    """All standard tableaux of the shape, as tuples of row tuples.

    Generation removes the largest entry from an outer corner and
    recurses, so each tableau is produced exactly once.
    """
    lam = list(_check_shape(shape))
    grid = [[0] * row_len for row_len in lam]
    full = tuple(lam)

    def rec(v: int) -> Iterator[Tableau]:
        if v == 0:
            yield tuple(tuple(row) for row in grid)
            return
        last = len(lam) - 1
        for r in range(len(lam)):
            if lam[r] and (r == last or lam[r] > lam[r + 1]):
                lam[r] -= 1
                grid[r][lam[r]] = v
                yield from rec(v - 1)
                lam[r] += 1

    if not full:
        yield ()
        return
    yield from rec(sum(full))


def maj_tableau(tableau) -> int:
    """Sum of the entries v whose successor v + 1 sits in a lower row."""
    row_of: dict[int, int] = {}
    for r, row in enumerate(tableau):
        for v in row:
            row_of[v] = r
    return sum(v for v in row_of if v + 1 in row_of
               and row_of[v + 1] > row_of[v])


@lru_cache(maxsize=None)
def maj_distribution(shape: Shape) -> tuple[int, ...]:
    """Counts of tableaux of the shape by raw maj value.

    Index m of the result counts tableaux with maj = m; the total is
    checked against the hook formula.
    """
    lam = _check_shape(shape)
    n = sum(lam)
    dist = [0] * (n * (n - 1) // 2 + 1)
    for t in syt_enumerate(lam):
        dist[maj_tableau(t)] += 1
    if sum(dist) != hook_count(lam):
        raise ArithmeticError(
            f"enumerated {sum(dist)} tableaux of {lam}, hook formula "
            f"says {hook_count(lam)}")
    return tuple(dist)


def _fold_vec(dist, modulus: int) -> list[int]:
    vec = [0] * modulus
    for m, c in enumerate(dist):
        vec[m % modulus] += c
    return vec


def f_multiplicity(shape, modulus: int, i: int) -> int:
    """How many standard tableaux of the shape have maj = i (mod modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    return _fold_vec(maj_distribution(_check_shape(shape)), modulus)[i % modulus]


def joint_matrix_syt(n: int, k: int, l: int,
                     limit: int = MAX_SYT_N) -> ResidueMatrix:
    """The k x l class matrix of S_n computed from tableau pairs.

    Entry (i, j) sums, over shapes of n, the product of the shape's
    tableau counts in maj class i (mod k) and class j (mod l).  The
    constructor's n! total check is exactly the square-sum identity for
    tableau counts, so a broken enumeration cannot pass silently.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if n > min(limit, MAX_SYT_N):
        raise SizeLimitError(f"n={n} exceeds the tableau sweep limit "
                             f"{min(limit, MAX_SYT_N)}")
    if k < 1 or l < 1:
        raise ValueError("moduli must be >= 1")
    rows = [[0] * l for _ in range(k)]
    for shape in partitions(n):
        dist = maj_distribution(shape)
        by_k = _fold_vec(dist, k)
        by_l = _fold_vec(dist, l)
        for i in range(k):
            if by_k[i]:
                for j in range(l):
                    rows[i][j] += by_k[i] * by_l[j]
    return ResidueMatrix(n, k, l, StatPair.MAJ_IMAJ,
                         tuple(tuple(r) for r in rows))
