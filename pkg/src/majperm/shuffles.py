"""Shuffle sets, their weights, and the between-subword statistics.

A shuffle of two words with disjoint values is any interleaving that
keeps both relative orders.  The variants used here:

    shuffle(pi, sigma)          plain interleavings, values already disjoint
    shuffle_plus(pi, sigma)     sigma's values upshifted by len(pi) first
    shuffle_at(M, N, I)         the small values pinned to the index set I
    shuffle_gamma(pi, sigma, g) consecutive small-value gaps pinned to g

Weights measure how far an index set or gap composition displaces the
small values from the front:

    wt_index(I, l)  = sum(I) - (1 + 2 + ... + l)
    wt_gamma(g, l)  = sum over t of (g_t - 1) * (l - t)

wt_index equals the number of inversions between the two sides, and
wt_gamma is wt_index of the anchor-1 member; sliding the anchor changes
wt_index by multiples of l, which is why gap-pinned shuffle sets sit in a
single residue class mod l.

Sets are materialized eagerly as sorted lists; fine at desk scale, and
the set-level theorem checks (verify_split_classes, verify_gap_classes)
need the elements anyway.
"""

from __future__ import annotations

import time
from itertools import combinations, product

from .bijections import assemble
from .matrices import StatPair, class_sets
from .perms import Perm, as_perm
from .reports import FAIL, PASS, VerificationReport


def shuffle(pi, sigma) -> list[Perm]:
    """All interleavings of two words with disjoint values, sorted."""
    pi = tuple(int(a) for a in pi)
    sigma = tuple(int(a) for a in sigma)
    if set(pi) & set(sigma):
        raise ValueError("shuffle requires disjoint values")
    n = len(pi) + len(sigma)
    out = []
    for idx in combinations(range(n), len(pi)):
        word = [0] * n
        for v, p in zip(pi, idx):
            word[p] = v
        it = iter(sigma)
        for q in range(n):
            if word[q] == 0:
                word[q] = next(it)
        out.append(tuple(word))
    return sorted(out)


def shuffle_plus(pi, sigma) -> list[Perm]:
    """Interleavings of pi with sigma upshifted by len(pi).

    Both arguments are permutations of their own [l] and [m]; every
    member is a permutation of [l + m] whose bottom values spell pi and
    whose top values spell the upshifted sigma.
    """
    pi = as_perm(pi)
    sigma = as_perm(sigma)
    return shuffle(pi, tuple(v + len(pi) for v in sigma))


def shuffle_at(M, N, positions) -> list[Perm]:
    """Upshifted shuffles of every pair from M x N with the small values
    pinned to the 1-based index set `positions`; sorted, len = |M||N|."""
    I = tuple(sorted(positions))
    out = []
    for pi in M:
        for sigma in N:
            out.append(assemble(pi, sigma, I))
    if len(set(out)) != len(out):
        raise ValueError("index-set shuffle produced a repeated word")
    return sorted(out)


def wt_index(positions, l: int) -> int:
    """Displacement weight of an index set: sum(I) minus its minimum
    possible value 1 + 2 + ... + l.

    >>> wt_index((2, 5), 2)
    4
    """
    I = tuple(sorted(positions))
    if len(I) != l:
        raise ValueError(f"index set has {len(I)} entries, expected {l}")
    if len(set(I)) != l or (I and I[0] < 1):
        raise ValueError(f"bad index set {positions!r}")
    return sum(I) - l * (l + 1) // 2


def wt_gamma(gamma, l: int) -> int:
    """Displacement weight of a gap composition.

    gamma lists the l - 1 gaps between consecutive pinned positions
    (gap 1 = adjacent).  Equals wt_index of the anchor-1 placement.

    >>> wt_gamma((3,), 2)
    2
    """
    g = tuple(int(a) for a in gamma)
    if len(g) != l - 1:
        raise ValueError(f"need {l - 1} gaps for l={l}, got {len(g)}")
    if any(a < 1 for a in g):
        raise ValueError("gaps must be >= 1")
    return sum((a - 1) * (l - t) for t, a in enumerate(g, start=1))


def shuffle_gamma(pi, sigma, gamma) -> list[Perm]:
    """Upshifted shuffles whose small-value positions have the given
    consecutive gaps, over all anchors; sorted.

    With span = 1 + sum(gamma), the anchor ranges over 1 .. n - span + 1,
    so the set has l + m - sum(gamma) members.  A span exceeding n is an
    error: no placement exists.
    """
    pi = as_perm(pi)
    sigma = as_perm(sigma)
    l, m = len(pi), len(sigma)
    n = l + m
    g = tuple(int(a) for a in gamma)
    if len(g) != l - 1 or any(a < 1 for a in g):
        raise ValueError(f"bad gap composition {gamma!r} for l={l}")
    span = 1 + sum(g)
    if span > n:
        raise ValueError(f"gap span {span} exceeds n={n}")
    out = []
    for anchor in range(1, n - span + 2):
        I = [anchor]
        for a in g:
            I.append(I[-1] + a)
        out.append(assemble(pi, sigma, I, n))
    return sorted(out)


def inv_between(word, l: int) -> int:
    """Inversions between the two sides of the value threshold l: pairs
    with a larger-than-l value left of a smaller-or-equal one.

    Equals wt_index of the small side's position set.
    """
    w = as_perm(word)
    if not 0 <= l <= len(w):
        raise ValueError(f"threshold {l} out of range")
    seen_upper = 0
    total = 0
    for a in w:
        if a > l:
            seen_upper += 1
        else:
            total += seen_upper
    return total


def imaj_window(word) -> int:
    """Sum of values v with v + 1 also in the word and positioned left
    of v.  On a permutation of [n] this is imaj; on a subword it is the
    subword's share of the full word's imaj.
    """
    pos = {int(a): p for p, a in enumerate(word)}
    if len(pos) != len(word):
        raise ValueError("repeated value")
    return sum(v for v in pos if v + 1 in pos and pos[v + 1] < pos[v])


def imaj_between(word, l: int) -> int:
    """The crossing share of imaj at threshold l: the contribution of
    consecutive-value pairs (v, v + 1) with v <= l < v + 1.

    Only v = l can cross, so the value is l if l + 1 sits left of l,
    else 0.  Computed from the definition by scanning all crossing
    pairs, not from that shortcut.

    >>> imaj_between((4, 1, 5, 3, 2), 2)
    2
    """
    w = as_perm(word)
    n = len(w)
    if not 0 <= l <= n:
        raise ValueError(f"threshold {l} out of range")
    pos = [0] * (n + 2)
    for p, v in enumerate(w):
        pos[v] = p
    total = 0
    for v in range(1, n):
        if (v <= l) != (v + 1 <= l) and pos[v + 1] < pos[v]:
            total += v
    return total


# ---------------------------------------------------------------------------
# Set-level decomposition checks.  Both compare an explicitly built union
# of shuffle sets against the actual congruence class, element for
# element, reporting the first duplicate or mismatch as a witness.

def _set_report(theorem_id: str, params: dict, built: dict,
                target: frozenset, dup: str | None,
                t0: float) -> VerificationReport:
    if dup is not None:
        return VerificationReport(theorem_id, params, FAIL,
                                  f"duplicate word {dup}",
                                  time.perf_counter() - t0)
    built_set = set(built)
    if built_set != target:
        extra = sorted(built_set - target)
        missing = sorted(target - built_set)
        parts = []
        if extra:
            parts.append(f"extra {extra[0]} from {built[extra[0]]}")
        if missing:
            parts.append(f"missing {missing[0]}")
        return VerificationReport(theorem_id, params, FAIL,
                                  "; ".join(parts),
                                  time.perf_counter() - t0)
    return VerificationReport(theorem_id, params, PASS, None,
                              time.perf_counter() - t0)


def verify_split_classes(n: int, k: int, l: int, i: int, j: int,
                         statpair: StatPair = StatPair.INV_IMAJ,
                         ) -> VerificationReport:
    """Check that the (i, j) class of the k x l matrix of S_n is the
    disjoint union, over index sets I and class pairs of the two factor
    groups, of index-pinned shuffles with the residues adding up.

    The split is at value threshold l (the column modulus); the factor
    classes use the same (k, l) moduli.  One report per (i, j).
    """
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "l": l, "i": i, "j": j}
    i, j = i % k, j % l
    target = class_sets(n, k, l, statpair).get((i, j), frozenset())
    left_classes = class_sets(l, k, l, statpair)
    right_classes = class_sets(n - l, k, l, statpair)
    built: dict[Perm, str] = {}
    dup = None
    for I in combinations(range(1, n + 1), l):
        w_I = wt_index(I, l) % k
        for (i1, j1), left in left_classes.items():
            i2 = (i - i1 - w_I) % k
            j2 = (j - j1) % l
            right = right_classes.get((i2, j2))
            if not right:
                continue
            for word in shuffle_at(left, right, I):
                if word in built and dup is None:
                    dup = str(word)
                built[word] = f"I={I} classes=({i1},{j1})x({i2},{j2})"
    return _set_report("lem-grind", params, built, target, dup, t0)


def _gap_compositions(l: int, n: int):
    # All l-1 tuples of gaps >= 1 whose span 1 + sum fits inside n.
    if l < 1:
        raise ValueError("need l >= 1")
    if l == 1:
        yield ()
        return
    for g in product(range(1, n + 1), repeat=l - 1):
        if 1 + sum(g) <= n:
            yield g


def verify_gap_classes(n: int, l: int, i: int, j: int,
                       statpair: StatPair = StatPair.INV_IMAJ,
                       ) -> VerificationReport:
    """Check that the (i, j) class of the l x l matrix of S_n is the
    disjoint union, over gap compositions and factor class pairs, of
    gap-pinned shuffles with residues adding up (both statistics mod l).

    One report per (i, j).
    """
    t0 = time.perf_counter()
    params = {"n": n, "l": l, "i": i, "j": j}
    i, j = i % l, j % l
    target = class_sets(n, l, l, statpair).get((i, j), frozenset())
    left_classes = class_sets(l, l, l, statpair)
    right_classes = class_sets(n - l, l, l, statpair)
    built: dict[Perm, str] = {}
    dup = None
    for gamma in _gap_compositions(l, n):
        w_g = wt_gamma(gamma, l) % l
        for (i1, j1), left in left_classes.items():
            i2 = (i - i1 - w_g) % l
            j2 = (j - j1) % l
            right = right_classes.get((i2, j2))
            if not right:
                continue
            for pi in left:
                for sigma in right:
                    for word in shuffle_gamma(pi, sigma, gamma):
                        if word in built and dup is None:
                            dup = str(word)
                        built[word] = (f"gamma={gamma} "
                                       f"classes=({i1},{j1})x({i2},{j2})")
    return _set_report("lem-ind", params, built, target, dup, t0)


# Short aliases matching the lemma ids used by the verification registry.
verify_grind = verify_split_classes
verify_ind = verify_gap_classes
