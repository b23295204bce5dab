"""Exact congruence-class count matrices over S_n.

The central object is the k x l matrix whose (i, j) entry counts the
permutations of [n] with stat1 = i (mod k) and imaj = j (mod l), where
stat1 is maj or inv according to the statistic pair tag.  Entries are
exact Python integers.

Counting goes through a cached full joint table of raw statistic values,
so every (k, l) reduction of the same S_n costs one enumeration total.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations as _lex_permutations

import numpy as np

from . import backend
from .perms import (MAX_ENUM_N, Perm, SizeLimitError, check_enum_size,
                    imaj, inv, maj)


class StatPair(str, Enum):
    """Which pair of statistics a matrix counts: (maj, imaj) or (inv, imaj)."""

    MAJ_IMAJ = "maj-imaj"
    INV_IMAJ = "inv-imaj"


def parse_statpair(text: str) -> StatPair:
    for sp in StatPair:
        if sp.value == text:
            return sp
    raise ValueError(f"unknown statistic pair {text!r}")


@dataclass(frozen=True)
class ResidueMatrix:
    """A k x l congruence-class count matrix for S_n.

    rows[i][j] counts permutations with stat1 = i (mod k) and
    imaj = j (mod l).  Closed-form constructions also produce this type;
    they carry the MAJ_IMAJ tag since both pairs give the same counts.
    """

    n: int
    k: int
    l: int
    statpair: StatPair
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError("moduli must be >= 1")
        if len(self.rows) != self.k or any(len(r) != self.l for r in self.rows):
            raise ValueError("matrix shape does not match the moduli")
        if any(e < 0 for r in self.rows for e in r):
            raise ValueError("negative entry")
        total = sum(e for r in self.rows for e in r)
        if total != math.factorial(self.n):
            raise ValueError(
                f"entries sum to {total}, expected {self.n}! = "
                f"{math.factorial(self.n)}")

    def entry(self, i: int, j: int) -> int:
        """Entry at residues (i mod k, j mod l); any integers accepted."""
        return self.rows[i % self.k][j % self.l]

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "statpair": self.statpair.value,
            "rows": [[str(e) for e in row] for row in self.rows],
        }
        return json.dumps(obj, separators=(",", ":"))

    def to_csv(self) -> str:
        lines = ["i," + ",".join(f"j={j}" for j in range(self.l))]
        for i, row in enumerate(self.rows):
            lines.append(f"{i}," + ",".join(str(e) for e in row))
        return "\n".join(lines) + "\n"


def matrix_from_json(text: str) -> ResidueMatrix:
    obj = json.loads(text)
    rows = tuple(tuple(int(e) for e in row) for row in obj["rows"])
    return ResidueMatrix(int(obj["n"]), int(obj["k"]), int(obj["l"]),
                         parse_statpair(obj["statpair"]), rows)


# ---------------------------------------------------------------------------
# Full joint tables, cached per (n, statpair).

_TABLE_CACHE: dict[tuple[int, StatPair], np.ndarray] = {}


def joint_table(n: int, statpair: StatPair = StatPair.MAJ_IMAJ,
                limit: int = MAX_ENUM_N) -> np.ndarray:
    """Full (stat1, imaj) joint table for S_n, computed once and cached.

    Single-threaded here; the CLI layer can fill the same cache with a
    worker pool via its compute_table helper.
    """
    check_enum_size(n, limit)
    key = (n, statpair)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = backend.joint_table_range(
            n, 0, math.factorial(n), statpair is StatPair.INV_IMAJ, limit)
        _TABLE_CACHE[key] = table
    return table


def cached_table(n: int, statpair: StatPair) -> np.ndarray | None:
    """The cached full table for (n, statpair), if one exists."""
    return _TABLE_CACHE.get((n, statpair))


def set_cached_table(n: int, statpair: StatPair, table: np.ndarray) -> None:
    """Install a precomputed full table (used by the parallel helper)."""
    smax = n * (n - 1) // 2
    if table.shape != (smax + 1, smax + 1):
        raise ValueError("table shape does not match n")
    if int(table.sum()) != math.factorial(n):
        raise ValueError("table does not sum to n!")
    _TABLE_CACHE[(n, statpair)] = table


def clear_cache() -> None:
    _TABLE_CACHE.clear()


def fold_table(table: np.ndarray, k: int, l: int) -> tuple[tuple[int, ...], ...]:
    """Reduce a raw joint table mod (k, l); entries become Python ints."""
    rows = [[0] * l for _ in range(k)]
    for a in range(table.shape[0]):
        target = rows[a % k]
        line = table[a]
        for b in range(table.shape[1]):
            v = line[b]
            if v:
                target[b % l] += int(v)
    return tuple(tuple(r) for r in rows)


def count_matrix(n: int, k: int, l: int,
                 statpair: StatPair = StatPair.MAJ_IMAJ,
                 limit: int = MAX_ENUM_N) -> ResidueMatrix:
    """The k x l congruence-class count matrix of S_n, by enumeration."""
    if k < 1 or l < 1:
        raise ValueError("moduli must be >= 1")
    rows = fold_table(joint_table(n, statpair, limit), k, l)
    return ResidueMatrix(n, k, l, statpair, rows)


def marginal_row(m: ResidueMatrix) -> tuple[int, ...]:
    """Row sums: the k-vector counting stat1 = i (mod k) alone."""
    return tuple(sum(row) for row in m.rows)


def marginal_col(m: ResidueMatrix) -> tuple[int, ...]:
    """Column sums: the l-vector counting imaj = j (mod l) alone."""
    return tuple(sum(row[j] for row in m.rows) for j in range(m.l))


def is_symmetric_under_swap(n: int, k: int, l: int,
                            statpair: StatPair = StatPair.MAJ_IMAJ,
                            limit: int = MAX_ENUM_N) -> bool:
    """Whether the (k, l) matrix is the transpose of the (l, k) matrix.

    True for every n: inversion exchanges maj with imaj, and the
    inv-imaj counts match the maj-imaj counts pairwise.
    """
    a = count_matrix(n, k, l, statpair, limit)
    b = count_matrix(n, l, k, statpair, limit)
    return all(a.rows[i][j] == b.rows[j][i]
               for i in range(k) for j in range(l))


transpose_check = is_symmetric_under_swap


@dataclass(frozen=True)
class BlockDecomposition:
    """Two views of a matrix cut by a common divisor d of both moduli.

    contiguous[r][s] is the d x d subgrid starting at row r*d, column s*d.
    regrouped[a][b] collects the entries whose residues are (a, b) mod d,
    a (k/d) x (l/d) grid per cell.  No constancy of cells is asserted;
    this is a raw regrouping for inspection and for theorem checks.
    """

    d: int
    contiguous: tuple
    regrouped: tuple


def block_decompose(m: ResidueMatrix, d: int) -> BlockDecomposition:
    if d < 1 or m.k % d or m.l % d:
        raise ValueError(f"d={d} must divide both moduli ({m.k}, {m.l})")
    kq, lq = m.k // d, m.l // d
    contiguous = tuple(
        tuple(
            tuple(tuple(m.rows[r * d + a][s * d + b] for b in range(d))
                  for a in range(d))
            for s in range(lq))
        for r in range(kq))
    regrouped = tuple(
        tuple(
            tuple(tuple(m.rows[a + r * d][b + s * d] for s in range(lq))
                  for r in range(kq))
            for b in range(d))
        for a in range(d))
    return BlockDecomposition(d, contiguous, regrouped)


@lru_cache(maxsize=4)
def class_sets(n: int, k: int, l: int,
               statpair: StatPair = StatPair.INV_IMAJ,
               ) -> dict[tuple[int, int], frozenset[Perm]]:
    """The actual permutation sets behind each matrix entry.

    Desk-scale only (n <= 9); used by the set-level theorem checks,
    which compare unions of explicit shuffle sets against these classes.
    n = 0 gives the single empty word in class (0, 0).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > 9:
        raise SizeLimitError(
            f"class sets are materialized only for n <= 9, got n={n}")
    out: dict[tuple[int, int], set[Perm]] = {}
    if n == 0:
        return {(0, 0): frozenset({()})}
    stat1 = inv if statpair is StatPair.INV_IMAJ else maj
    for w in _lex_permutations(range(1, n + 1)):
        key = (stat1(w) % k, imaj(w) % l)
        out.setdefault(key, set()).add(w)
    return {key: frozenset(v) for key, v in out.items()}
