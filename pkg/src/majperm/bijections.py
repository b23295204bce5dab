"""Explicit bijections that shift congruence classes.

Splitting a word at a value threshold l separates it into the subword of
values <= l (a permutation pi of [l]), the subword of larger values (sigma
after subtracting l), and the 1-based index set I where the small values
sit.  The maps here rearrange only the index set or the small subword and
therefore move (stat1, imaj) residues in a controlled way:

    cycle_map       I -> I + 1 (mod n):   inv + l (mod n),  imaj fixed (mod l)
    nested_cycle    pi -> cycle_map(pi):  inv + d (mod kd), imaj fixed (mod d)
    prefix_max_orbit                      inv - i per step, everything via
                                          reinsertion of a prefix maximum

All positions and values are 1-based; residues 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Perm, as_perm


@dataclass(frozen=True)
class SplitWord:
    """A word cut at a value threshold.

    pi is the order pattern of the values <= threshold (their own values,
    a permutation of [threshold]); sigma is the pattern of the larger
    values after downshifting; positions is the sorted 1-based index set
    occupied by the small values.
    """

    threshold: int
    pi: Perm
    sigma: Perm
    positions: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.pi) + len(self.sigma)


def split(word, threshold: int) -> SplitWord:
    """Cut a permutation of [n] at a value threshold in [0, n]."""
    w = as_perm(word)
    if not 0 <= threshold <= len(w):
        raise ValueError(f"threshold {threshold} out of range 0..{len(w)}")
    pi = tuple(v for v in w if v <= threshold)
    sigma = tuple(v - threshold for v in w if v > threshold)
    positions = tuple(p for p, v in enumerate(w, start=1) if v <= threshold)
    return SplitWord(threshold, pi, sigma, positions)


def assemble(pi, sigma, positions, n: int | None = None) -> Perm:
    """Rebuild a word from a split: pi at the given 1-based positions,
    sigma upshifted by len(pi) at the remaining positions, in order."""
    pi = as_perm(pi)
    sigma = as_perm(sigma)
    l = len(pi)
    if n is None:
        n = l + len(sigma)
    if l + len(sigma) != n:
        raise ValueError("subword lengths do not add up to n")
    pos = sorted(positions)
    if len(pos) != l or pos != sorted(set(pos)) or \
            (pos and not (1 <= pos[0] and pos[-1] <= n)):
        raise ValueError(f"bad index set {positions!r} for l={l}, n={n}")
    word = [0] * n
    for v, p in zip(pi, pos):
        word[p - 1] = v
    it = iter(sigma)
    for q in range(n):
        if word[q] == 0:
            word[q] = next(it) + l
    return tuple(word)


def cycle_map(word, l: int) -> Perm:
    """Shift the index set of the values <= l cyclically by +1.

    Representatives stay in [n]: position n wraps to 1.  Bijective on
    S_n for each l < n; shifts inv by +l (mod n) and fixes imaj (mod l).

    >>> cycle_map((2, 1), 1)
    (1, 2)
    """
    w = as_perm(word)
    n = len(w)
    if not 1 <= l < n:
        raise ValueError(f"cycle_map needs 1 <= l < n, got l={l}, n={n}")
    sp = split(w, l)
    moved = sorted(p % n + 1 for p in sp.positions)
    return assemble(sp.pi, sp.sigma, moved, n)


def cycle_map_inverse(word, l: int) -> Perm:
    """Inverse of cycle_map: index set shifted by -1, position 1 wraps to n."""
    w = as_perm(word)
    n = len(w)
    if not 1 <= l < n:
        raise ValueError(f"cycle_map needs 1 <= l < n, got l={l}, n={n}")
    sp = split(w, l)
    moved = sorted((p - 2) % n + 1 for p in sp.positions)
    return assemble(sp.pi, sp.sigma, moved, n)


def nested_cycle_map(word, d: int, k: int) -> Perm:
    """Apply cycle_map with threshold d inside the bottom-kd subword.

    The word is split at kd; the small subword (a permutation of [kd])
    goes through cycle_map(_, d) and is reassembled at the same index
    set.  Bijective on S_n; shifts inv by +d (mod kd) and fixes imaj
    (mod d).  Requires k >= 2 and kd <= n so the inner map is defined.
    """
    w = as_perm(word)
    n = len(w)
    if d < 1 or k < 2 or k * d > n:
        raise ValueError(
            f"nested_cycle_map needs d >= 1, k >= 2, kd <= n; "
            f"got d={d}, k={k}, n={n}")
    sp = split(w, k * d)
    return assemble(cycle_map(sp.pi, d), sp.sigma, sp.positions, n)


def prefix_max_orbit(word, k: int) -> list[Perm]:
    """The k reinsertions of the largest value among the first k entries.

    Removing that maximum m and reinserting it before each of the first
    k slots gives words tau_0, ..., tau_{k-1}; tau_i has inv(tau_0) - i
    inversions, so the orbit covers every inv residue mod k exactly once.
    Every member keeps m among its first k entries and drops back to the
    same remaining word, so each member yields the same orbit list and
    the orbits partition S_n.
    """
    w = as_perm(word)
    n = len(w)
    if not 1 <= k <= n:
        raise ValueError(f"prefix_max_orbit needs 1 <= k <= n, got k={k}")
    m = max(w[:k])
    rest = tuple(v for v in w if v != m)
    return [rest[:i] + (m,) + rest[i:] for i in range(k)]


# Conventional short names for the same maps (f_l cycles the index set of
# the bottom-l values; g nests it below a threshold kd).
f_l = cycle_map
f_l_inverse = cycle_map_inverse
g_map = nested_cycle_map
