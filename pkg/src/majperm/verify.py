"""Theorem checks against independent computations.

Every registered check compares a claimed identity (closed form, block
shape, recursion, bijection shift, or set decomposition) against brute
enumeration at desk scale, producing one VerificationReport per
parameter tuple.  Parameter tuples where a hypothesis fails (say a
non-coprime modulus pair) are reported as skipped, never passed.

Default sweep ranges live in verify_defaults.json next to this module;
callers override them per run.  Pinning a parameter (n, k, l, d, p, r,
i, j) restricts the sweep to that value, and a pinned tuple violating
its hypothesis yields an explicit skip.
"""

from __future__ import annotations

import json
import math
import time
from functools import lru_cache
from importlib import resources
from itertools import combinations

from . import bijections, formulas, shuffles, tableaux
from .matrices import (ResidueMatrix, StatPair, class_sets, count_matrix,
                       marginal_row)
from .perms import MAX_ENUM_N, imaj, inv, iter_sn, maj
from .reports import FAIL, PASS, SKIP, VerificationReport

gcd = math.gcd


@lru_cache(maxsize=1)
def _defaults() -> dict:
    text = resources.files(__package__).joinpath(
        "verify_defaults.json").read_text()
    return json.loads(text)


def default_ranges(theorem_id: str) -> dict:
    try:
        return dict(_defaults()[theorem_id])
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}") from None


def _span(rg: dict, key: str, max_key: str, lo: int):
    """Either the pinned value of `key` or the default sweep lo..max."""
    if rg.get(key) is not None:
        return [rg[key]]
    return range(lo, rg[max_key] + 1)


def _pass(tid, params, t0):
    return VerificationReport(tid, params, PASS, None,
                              time.perf_counter() - t0)


def _fail(tid, params, witness, t0):
    return VerificationReport(tid, params, FAIL, witness,
                              time.perf_counter() - t0)


def _skip(tid, params, reason):
    return VerificationReport(tid, params, SKIP, reason, 0.0)


def _first_diff(rows_a, rows_b):
    for i, (ra, rb) in enumerate(zip(rows_a, rows_b)):
        for j, (a, b) in enumerate(zip(ra, rb)):
            if a != b:
                return f"entry ({i},{j}): {a} != {b}"
    return None


def _uniform_witness(m: ResidueMatrix, expected: int):
    for i, row in enumerate(m.rows):
        for j, e in enumerate(row):
            if e != expected:
                return f"entry ({i},{j}) is {e}, expected {expected}"
    return None


# ---------------------------------------------------------------------------
# Individual checks.  Each takes (ranges, limit) and yields reports.

def _check_thm_main(rg, limit):
    """Coprime k, l <= n give the uniform matrix n!/(kl)."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("n", "k", "l"))
    for n in _span(rg, "n", "n_max", 1):
        for k in [rg["k"]] if rg.get("k") is not None else range(1, n + 1):
            for l in [rg["l"]] if rg.get("l") is not None \
                    else range(1, n + 1):
                params = {"n": n, "k": k, "l": l}
                if not (1 <= k <= n and 1 <= l <= n and gcd(k, l) == 1):
                    if pinned:
                        out.append(_skip("thm-main", params,
                                         "hypothesis: coprime k, l <= n"))
                    continue
                t0 = time.perf_counter()
                m = count_matrix(n, k, l, StatPair.MAJ_IMAJ, limit)
                expected, rem = divmod(math.factorial(n), k * l)
                w = (f"n! not divisible by kl" if rem else
                     _uniform_witness(m, expected))
                out.append(_fail("thm-main", params, w, t0) if w
                           else _pass("thm-main", params, t0))
    return out


def _check_prop_2_1(rg, limit):
    """Single modulus k <= n: uniform marginals n!/k for both statistics,
    and the prefix-maximum orbits partition S_n hitting every inv residue."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("n", "k"))
    for n in _span(rg, "n", "n_max", 1):
        for k in [rg["k"]] if rg.get("k") is not None else range(1, n + 1):
            params = {"n": n, "k": k}
            if not 1 <= k <= n:
                if pinned:
                    out.append(_skip("prop-2.1", params, "hypothesis: k <= n"))
                continue
            t0 = time.perf_counter()
            expected = math.factorial(n) // k
            w = None
            for sp in (StatPair.MAJ_IMAJ, StatPair.INV_IMAJ):
                marg = marginal_row(count_matrix(n, k, 1, sp, limit))
                if any(e != expected for e in marg):
                    w = f"{sp.value} marginal {marg} is not uniform {expected}"
                    break
            if w is None:
                w = _orbit_partition_witness(n, k)
            out.append(_fail("prop-2.1", params, w, t0) if w
                       else _pass("prop-2.1", params, t0))
    return out


def _orbit_partition_witness(n, k):
    groups: dict[tuple, set] = {}
    for w in iter_sn(n):
        orbit = tuple(bijections.prefix_max_orbit(w, k))
        groups.setdefault(orbit, set()).add(w)
    total = 0
    for orbit, members in groups.items():
        if set(orbit) != members:
            return (f"orbit of {orbit[0]} is not closed: some member "
                    f"maps elsewhere")
        if len(set(orbit)) != k:
            return f"orbit of {orbit[0]} has {len(set(orbit))} members"
        residues = {inv(x) % k for x in orbit}
        if residues != set(range(k)):
            return (f"orbit of {orbit[0]} covers inv residues "
                    f"{sorted(residues)} mod {k}")
        total += k
    if total != math.factorial(n):
        return f"orbits cover {total} words of {math.factorial(n)}"
    return None


def _check_grbase(rg, limit):
    """Modulus pair (n, l) with l < n coprime to n: uniform n!/(nl)."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("n", "l"))
    for n in _span(rg, "n", "n_max", 1):
        for l in [rg["l"]] if rg.get("l") is not None else range(1, n):
            params = {"n": n, "l": l}
            if not (1 <= l < n and gcd(l, n) == 1):
                if pinned:
                    out.append(_skip("lem-grbase", params,
                                     "hypothesis: l < n coprime to n"))
                continue
            t0 = time.perf_counter()
            m = count_matrix(n, n, l, StatPair.MAJ_IMAJ, limit)
            w = _uniform_witness(m, math.factorial(n) // (n * l))
            out.append(_fail("lem-grbase", params, w, t0) if w
                       else _pass("lem-grbase", params, t0))
    return out


def _residue_span(rg, key, modulus):
    if rg.get(key) is not None:
        return [rg[key] % modulus]
    return range(modulus)


def _check_grind(rg, limit):
    out = []
    for case in rg["cases"]:
        n, k, l = case
        if rg.get("n") is not None and rg["n"] != n:
            continue
        if rg.get("k") is not None and rg["k"] != k:
            continue
        if rg.get("l") is not None and rg["l"] != l:
            continue
        if n > 9:
            out.append(_skip("lem-grind", {"n": n, "k": k, "l": l},
                             "set-level check capped at n <= 9"))
            continue
        for i in _residue_span(rg, "i", k):
            for j in _residue_span(rg, "j", l):
                out.append(shuffles.verify_split_classes(n, k, l, i, j))
    return out


def _check_ind(rg, limit):
    out = []
    for case in rg["cases"]:
        n, l = case
        if rg.get("n") is not None and rg["n"] != n:
            continue
        if rg.get("l") is not None and rg["l"] != l:
            continue
        if n > 9:
            out.append(_skip("lem-ind", {"n": n, "l": l},
                             "set-level check capped at n <= 9"))
            continue
        for i in _residue_span(rg, "i", l):
            for j in _residue_span(rg, "j", l):
                out.append(shuffles.verify_gap_classes(n, l, i, j))
    return out


def _check_cor_n_plus_1(rg, limit):
    """The n x n matrix of S_{n+1} is the S_n one plus (n-1)! everywhere."""
    out = []
    for n in _span(rg, "n", "n_max", 1):
        params = {"n": n}
        t0 = time.perf_counter()
        got = count_matrix(n + 1, n, n, StatPair.MAJ_IMAJ, limit)
        w = _first_diff(got.rows, formulas.n_plus_1_matrix(n).rows)
        out.append(_fail("cor-n+1", params, w, t0) if w
                   else _pass("cor-n+1", params, t0))
    return out


def _check_dthm(rg, limit):
    """Coprime k, l with d max(k, l) <= n: the (kd, ld) matrix is the
    (d, d) matrix folded down, divided by kl."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("n", "k", "l", "d"))
    for n in _span(rg, "n", "n_max", 1):
        for d in _span(rg, "d", "d_max", 1):
            for k in [rg["k"]] if rg.get("k") is not None \
                    else range(1, n + 1):
                for l in [rg["l"]] if rg.get("l") is not None \
                        else range(1, n + 1):
                    params = {"n": n, "k": k, "l": l, "d": d}
                    if not (d >= 1 and gcd(k, l) == 1
                            and d * max(k, l) <= n):
                        if pinned:
                            out.append(_skip(
                                "thm-dthm", params,
                                "hypothesis: coprime k, l and "
                                "d max(k, l) <= n"))
                        continue
                    t0 = time.perf_counter()
                    big = count_matrix(n, k * d, l * d,
                                       StatPair.MAJ_IMAJ, limit)
                    base = count_matrix(n, d, d, StatPair.MAJ_IMAJ, limit)
                    w = None
                    for i in range(k * d):
                        for j in range(l * d):
                            if big.rows[i][j] * k * l != \
                                    base.rows[i % d][j % d]:
                                w = (f"entry ({i},{j}) * {k * l} = "
                                     f"{big.rows[i][j] * k * l} != "
                                     f"{base.rows[i % d][j % d]}")
                                break
                        if w:
                            break
                    out.append(_fail("thm-dthm", params, w, t0) if w
                               else _pass("thm-dthm", params, t0))
    return out


def _check_mnkeq(rg, limit):
    """Any k with kd <= n: the (kd, d) matrix is the (d, d) one over k."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("n", "k", "d"))
    for n in _span(rg, "n", "n_max", 1):
        for d in _span(rg, "d", "d_max", 1):
            for k in [rg["k"]] if rg.get("k") is not None \
                    else range(1, n // d + 1):
                params = {"n": n, "k": k, "d": d}
                if not (k >= 1 and d >= 1 and k * d <= n):
                    if pinned:
                        out.append(_skip("eq-mnkeq", params,
                                         "hypothesis: kd <= n"))
                    continue
                t0 = time.perf_counter()
                big = count_matrix(n, k * d, d, StatPair.MAJ_IMAJ, limit)
                base = count_matrix(n, d, d, StatPair.MAJ_IMAJ, limit)
                w = None
                for i in range(k * d):
                    for j in range(d):
                        if big.rows[i][j] * k != base.rows[i % d][j]:
                            w = (f"entry ({i},{j}) * {k} = "
                                 f"{big.rows[i][j] * k} != "
                                 f"{base.rows[i % d][j]}")
                            break
                    if w:
                        break
                out.append(_fail("eq-mnkeq", params, w, t0) if w
                           else _pass("eq-mnkeq", params, t0))
    return out


def _check_grbaseeq(rg, limit):
    """At n = kd with coprime l < k: the (kd, ld) matrix of S_{kd} is the
    (d, d) one over kl."""
    out = []
    pinned = any(rg.get(x) is not None for x in ("k", "l", "d"))
    for d in _span(rg, "d", "d_max", 1):
        for k in _span(rg, "k", "k_max", 1):
            for l in [rg["l"]] if rg.get("l") is not None else range(1, k):
                n = k * d
                params = {"k": k, "l": l, "d": d, "n": n}
                if not (1 <= l < k and gcd(k, l) == 1):
                    if pinned:
                        out.append(_skip("eq-grbaseeq", params,
                                         "hypothesis: l < k coprime"))
                    continue
                if n > min(limit, MAX_ENUM_N):
                    out.append(_skip("eq-grbaseeq", params,
                                     f"n = kd = {n} over the limit"))
                    continue
                t0 = time.perf_counter()
                big = count_matrix(n, k * d, l * d, StatPair.MAJ_IMAJ, limit)
                base = count_matrix(n, d, d, StatPair.MAJ_IMAJ, limit)
                w = None
                for i in range(k * d):
                    for j in range(l * d):
                        if big.rows[i][j] * k * l != base.rows[i % d][j % d]:
                            w = (f"entry ({i},{j}) * {k * l} = "
                                 f"{big.rows[i][j] * k * l} != "
                                 f"{base.rows[i % d][j % d]}")
                            break
                    if w:
                        break
                out.append(_fail("eq-grbaseeq", params, w, t0) if w
                           else _pass("eq-grbaseeq", params, t0))
    return out


def _check_thm_base(rg, limit):
    """The divisor-sum closed form reproduces the enumerated n x n matrix."""
    out = []
    for n in _span(rg, "n", "n_max", 1):
        params = {"n": n}
        t0 = time.perf_counter()
        got = count_matrix(n, n, n, StatPair.MAJ_IMAJ, limit)
        w = _first_diff(got.rows, formulas.mnnn_matrix(n).rows)
        out.append(_fail("thm-base", params, w, t0) if w
                   else _pass("thm-base", params, t0))
    return out


def _check_cor_gcd(rg, limit):
    """Entries of the n x n matrices of S_n and S_{n+1} depend only on
    (gcd(i, n), gcd(j, n)); likewise for the closed form."""
    out = []
    for n in _span(rg, "n", "n_max", 1):
        params = {"n": n}
        t0 = time.perf_counter()
        w = None
        for label, m in (("S_n", count_matrix(n, n, n,
                                              StatPair.MAJ_IMAJ, limit)),
                         ("S_n+1", count_matrix(n + 1, n, n,
                                                StatPair.MAJ_IMAJ, limit))):
            for i in range(n):
                for j in range(n):
                    ci = formulas.gcd_canonical(i, n)
                    cj = formulas.gcd_canonical(j, n)
                    if m.rows[i][j] != m.rows[ci][cj]:
                        w = (f"{label}: entry ({i},{j}) = {m.rows[i][j]} "
                             f"differs from canonical ({ci},{cj}) = "
                             f"{m.rows[ci][cj]}")
                        break
                if w:
                    break
            if w:
                break
        if w is None:
            for i in range(n):
                for j in range(n):
                    ci = formulas.gcd_canonical(i, n)
                    cj = formulas.gcd_canonical(j, n)
                    if formulas.mnnn(n, i, j) != formulas.mnnn(n, ci, cj):
                        w = f"closed form not gcd-invariant at ({i},{j})"
                        break
                if w:
                    break
        out.append(_fail("cor-gcd", params, w, t0) if w
                   else _pass("cor-gcd", params, t0))
    return out


def _check_prop_prime(rg, limit):
    """The three-value block matrix for S_p and its S_{p+1} companion."""
    out = []
    for p in [rg["p"]] if rg.get("p") is not None else rg["primes"]:
        if not formulas.is_prime(p):
            out.append(_skip("prop-prime", {"p": p}, "p must be prime"))
            continue
        for plus, group_n in ((False, p), (True, p + 1)):
            params = {"p": p, "group": f"S_{group_n}"}
            t0 = time.perf_counter()
            claim = (formulas.prime_matrix_plus1(p) if plus
                     else formulas.prime_matrix(p))
            got = count_matrix(group_n, p, p, StatPair.MAJ_IMAJ, limit)
            w = _first_diff(got.rows, claim.rows)
            out.append(_fail("prop-prime", params, w, t0) if w
                       else _pass("prop-prime", params, t0))
    return out


def _check_thm_prime(rg, limit):
    """Corner/edge/inner block shape of the p x p matrices of S_{np}
    and S_{np+1}."""
    out = []
    np_max = rg["np_max"]
    for p in [rg["p"]] if rg.get("p") is not None else rg["primes"]:
        if not formulas.is_prime(p):
            out.append(_skip("thm-prime", {"p": p}, "p must be prime"))
            continue
        n_values = [rg["n"]] if rg.get("n") is not None \
            else range(1, np_max // p + 1)
        for n in n_values:
            for plus in (False, True):
                N = n * p + (1 if plus else 0)
                params = {"p": p, "n": n, "group": f"S_{N}"}
                if N > np_max or N > min(limit, MAX_ENUM_N):
                    if rg.get("n") is not None:
                        out.append(_skip("thm-prime", params,
                                         f"group size {N} over the limit"))
                    continue
                t0 = time.perf_counter()
                try:
                    spec = formulas.extract_block_sequences(p, n, plus, limit)
                except formulas.BlockStructureError as exc:
                    out.append(_fail("thm-prime", params, str(exc), t0))
                    continue
                if min(spec.q, spec.r, spec.s) < 0:
                    out.append(_fail("thm-prime", params,
                                     f"negative block value {spec}", t0))
                else:
                    out.append(_pass("thm-prime", params, t0))
    return out


def _check_prop_prime_power(rg, limit):
    """The truncated divisor sum gives the (p^i, p^j) entries of the
    p^r x p^r matrix of S_{p^r}."""
    out = []
    cases = [[rg["p"], rg["r"]]] \
        if rg.get("p") is not None and rg.get("r") is not None \
        else rg["cases"]
    for p, r in cases:
        params = {"p": p, "r": r}
        if not formulas.is_prime(p) or r < 1:
            out.append(_skip("prop-prime-power", params,
                             "hypothesis: prime p, r >= 1"))
            continue
        N = p ** r
        if N > min(limit, MAX_ENUM_N):
            out.append(_skip("prop-prime-power", params,
                             f"group size {N} over the limit"))
            continue
        t0 = time.perf_counter()
        got = count_matrix(N, N, N, StatPair.MAJ_IMAJ, limit)
        w = None
        for i in range(r + 1):
            for j in range(i, r + 1):
                claim = formulas.prime_power_entry(p, r, i, j)
                actual = got.rows[p ** i % N][p ** j % N]
                if claim != actual:
                    w = (f"entry at (p^{i}, p^{j}) is {actual}, "
                         f"closed form says {claim}")
                    break
            if w:
                break
        out.append(_fail("prop-prime-power", params, w, t0) if w
                   else _pass("prop-prime-power", params, t0))
    return out


def _check_thm_prime_power(rg, limit):
    """For N = n p^r and N + 1: the p^r x p^r matrix is determined by its
    (p^i, p^j) entries, and for fixed i the entries with j > i agree."""
    out = []
    cases = [[rg["p"], rg["r"], rg["n"]]] \
        if all(rg.get(x) is not None for x in ("p", "r", "n")) \
        else rg["cases"]
    for p, r, n in cases:
        K = p ** r
        for plus in (False, True):
            N = n * K + (1 if plus else 0)
            params = {"p": p, "r": r, "n": n, "group": f"S_{N}"}
            if not formulas.is_prime(p) or r < 1 or n < 1:
                out.append(_skip("thm-prime-power", params,
                                 "hypothesis: prime p, r >= 1, n >= 1"))
                continue
            if N > min(limit, MAX_ENUM_N):
                out.append(_skip("thm-prime-power", params,
                                 f"group size {N} over the limit"))
                continue
            t0 = time.perf_counter()
            m = count_matrix(N, K, K, StatPair.MAJ_IMAJ, limit)
            w = None
            for i in range(K):
                for j in range(K):
                    ci = formulas.gcd_canonical(i, K)
                    cj = formulas.gcd_canonical(j, K)
                    if m.rows[i][j] != m.rows[ci][cj]:
                        w = (f"entry ({i},{j}) differs from its gcd "
                             f"canonical ({ci},{cj})")
                        break
                if w:
                    break
            if w is None:
                for i in range(r):
                    vals = {m.rows[p ** i % K][p ** j % K]
                            for j in range(i + 1, r + 1)}
                    if len(vals) > 1:
                        w = (f"row exponent {i}: entries for j > {i} "
                             f"take {len(vals)} values")
                        break
            out.append(_fail("thm-prime-power", params, w, t0) if w
                       else _pass("thm-prime-power", params, t0))
    return out


def _check_p2(rg, limit):
    """The five claims about the 2 x 2 family: the gap-parity set
    decomposition, the two-step recursion against enumeration, the
    normalized matrices' integrality and recursion, the diagonal
    symmetry, and the even/odd ratio."""
    out = []
    items = [rg["item"]] if rg.get("item") is not None else [1, 2, 3, 4, 5]
    n_values = [rg["n"]] if rg.get("n") is not None \
        else range(2, rg["n_max"] + 1)
    sets_max = rg["n_max_sets"]

    if 1 in items:
        ns = [rg["n"]] if rg.get("n") is not None \
            else range(2, sets_max + 1)
        for n in ns:
            params = {"item": 1, "n": n}
            if n > 9:
                out.append(_skip("thm-p2-items-1-5", params,
                                 "set-level check capped at n <= 9"))
                continue
            t0 = time.perf_counter()
            w = _p2_sets_witness(n)
            out.append(_fail("thm-p2-items-1-5", params, w, t0) if w
                       else _pass("thm-p2-items-1-5", params, t0))

    for n in n_values:
        if n < 2:
            continue
        if 2 in items:
            params = {"item": 2, "n": n}
            t0 = time.perf_counter()
            got = count_matrix(n, 2, 2, StatPair.INV_IMAJ, limit)
            w = _first_diff(formulas.b_matrix(n).rows, got.rows)
            out.append(_fail("thm-p2-items-1-5", params, w, t0) if w
                       else _pass("thm-p2-items-1-5", params, t0))
        if 3 in items:
            params = {"item": 3, "n": n}
            t0 = time.perf_counter()
            w = _p2_normalized_witness(n)
            out.append(_fail("thm-p2-items-1-5", params, w, t0) if w
                       else _pass("thm-p2-items-1-5", params, t0))
        if 4 in items:
            params = {"item": 4, "n": n}
            t0 = time.perf_counter()
            b = formulas.b_matrix(n).rows
            w = None
            for i in range(2):
                for j in range(2):
                    if b[i][j] != b[(i + 1) % 2][(j + 1) % 2]:
                        w = f"b_{n}({i},{j}) != b_{n}({i + 1},{j + 1})"
            out.append(_fail("thm-p2-items-1-5", params, w, t0) if w
                       else _pass("thm-p2-items-1-5", params, t0))
        if 5 in items and n % 2 == 0 and n >= 4:
            params = {"item": 5, "n": n}
            t0 = time.perf_counter()
            even = formulas.b_matrix(n).rows
            odd = formulas.b_matrix(n - 1).rows
            w = None
            for i in range(2):
                for j in range(2):
                    if even[i][j] != n * odd[i][j]:
                        w = (f"b_{n}({i},{j}) = {even[i][j]} != "
                             f"{n} * b_{n - 1}({i},{j})")
            out.append(_fail("thm-p2-items-1-5", params, w, t0) if w
                       else _pass("thm-p2-items-1-5", params, t0))
    return out


def _p2_sets_witness(n):
    """Item 1: each 2 x 2 class of S_n is the disjoint union of the four
    gap-parity shuffle families built from S_{n-2} classes."""
    big = class_sets(n, 2, 2, StatPair.INV_IMAJ)
    small = class_sets(n - 2, 2, 2, StatPair.INV_IMAJ)
    odd_gaps = [g for g in range(1, n) if g % 2 == 1]
    even_gaps = [g for g in range(1, n) if g % 2 == 0]
    for i in range(2):
        for j in range(2):
            target = big.get((i, j), frozenset())
            built: dict = {}
            dup = None
            terms = (((1, 2), odd_gaps, (i, j)),
                     ((1, 2), even_gaps, ((i + 1) % 2, j)),
                     ((2, 1), even_gaps, (i, (j + 1) % 2)),
                     ((2, 1), odd_gaps, ((i + 1) % 2, (j + 1) % 2)))
            for pi, gaps, key in terms:
                for sigma in small.get(key, frozenset()):
                    for g in gaps:
                        for word in shuffles.shuffle_gamma(pi, sigma, (g,)):
                            if word in built and dup is None:
                                dup = (f"class ({i},{j}): word {word} from "
                                       f"{built[word]} and gap {g} of "
                                       f"{pi} over {key}")
                            built[word] = f"gap {g} of {pi} over {key}"
            if dup:
                return dup
            if set(built) != target:
                extra = sorted(set(built) - target)
                missing = sorted(target - set(built))
                if extra:
                    return (f"class ({i},{j}): extra word {extra[0]} "
                            f"from {built[extra[0]]}")
                return f"class ({i},{j}): missing word {missing[0]}"
    return None


def _p2_normalized_witness(n):
    try:
        c = formulas.c_matrix(n)
    except ArithmeticError as exc:
        return str(exc)
    if n - 2 < 2:
        return None
    prev = formulas.c_matrix(n - 2)
    h = n // 2
    stay, flip = (h, h - 1) if n % 2 == 0 else (h + 1, h)
    for i in range(2):
        for j in range(2):
            want = stay * prev[i][j] + flip * prev[(i + 1) % 2][j]
            if c[i][j] != want:
                return (f"c_{n}({i},{j}) = {c[i][j]} != "
                        f"{stay} c_{n - 2}({i},{j}) + "
                        f"{flip} c_{n - 2}({i + 1},{j})")
    return None


def _check_f_l_shift(rg, limit):
    """The index-cycling map: a bijection of S_n shifting inv by +l
    (mod n), fixing imaj (mod l), and moving the crossing inversions by
    +l or -(n - l) according to whether position n was occupied."""
    out = []
    for n in _span(rg, "n", "n_max", 2):
        for l in [rg["l"]] if rg.get("l") is not None else range(1, n):
            params = {"n": n, "l": l}
            if not 1 <= l < n:
                out.append(_skip("f_l-shift", params, "hypothesis: l < n"))
                continue
            t0 = time.perf_counter()
            w = None
            for tau in iter_sn(n, limit):
                image = bijections.cycle_map(tau, l)
                back = bijections.cycle_map_inverse(image, l)
                if back != tau:
                    w = f"round trip broke at {tau}: got {back}"
                    break
                if (inv(image) - inv(tau) - l) % n != 0:
                    w = f"inv shift wrong at {tau}"
                    break
                if (imaj(image) - imaj(tau)) % l != 0:
                    w = f"imaj class moved at {tau}"
                    break
                positions = bijections.split(tau, l).positions
                delta = -(n - l) if n in positions else l
                if shuffles.inv_between(image, l) != \
                        shuffles.inv_between(tau, l) + delta:
                    w = f"crossing inversions off at {tau}"
                    break
            out.append(_fail("f_l-shift", params, w, t0) if w
                       else _pass("f_l-shift", params, t0))
    return out


def _check_g_shift(rg, limit):
    """The nested map: bijection of S_n shifting inv by +d (mod kd) and
    fixing imaj (mod d), for k >= 2 and kd <= n."""
    out = []
    for n in _span(rg, "n", "n_max", 2):
        for d in [rg["d"]] if rg.get("d") is not None \
                else range(1, n // 2 + 1):
            for k in [rg["k"]] if rg.get("k") is not None \
                    else range(2, n // d + 1):
                params = {"n": n, "d": d, "k": k}
                if not (d >= 1 and k >= 2 and k * d <= n):
                    out.append(_skip("g-shift", params,
                                     "hypothesis: k >= 2, kd <= n"))
                    continue
                t0 = time.perf_counter()
                kd = k * d
                w = None
                images = set()
                for tau in iter_sn(n, limit):
                    image = bijections.nested_cycle_map(tau, d, k)
                    images.add(image)
                    if (inv(image) - inv(tau) - d) % kd != 0:
                        w = f"inv shift wrong at {tau}"
                        break
                    if (imaj(image) - imaj(tau)) % d != 0:
                        w = f"imaj class moved at {tau}"
                        break
                if w is None and len(images) != math.factorial(n):
                    w = f"only {len(images)} distinct images"
                out.append(_fail("g-shift", params, w, t0) if w
                           else _pass("g-shift", params, t0))
    return out


def _check_syt(rg, limit):
    """Tableau pairs reproduce every enumerated matrix, and their n x n
    matrix matches the divisor-sum closed form beyond enumeration range."""
    out = []
    for n in _span(rg, "n", "n_max", 1):
        params = {"n": n, "against": "enumeration"}
        t0 = time.perf_counter()
        w = None
        ks = [rg["k"]] if rg.get("k") is not None else range(1, n + 1)
        for k in ks:
            for l in [rg["l"]] if rg.get("l") is not None \
                    else range(1, n + 1):
                got = tableaux.joint_matrix_syt(n, k, l)
                ref = count_matrix(n, k, l, StatPair.MAJ_IMAJ, limit)
                diff = _first_diff(got.rows, ref.rows)
                if diff:
                    w = f"(k,l)=({k},{l}): {diff}"
                    break
            if w:
                break
        out.append(_fail("syt-oracle", params, w, t0) if w
                   else _pass("syt-oracle", params, t0))
    if rg.get("k") is None and rg.get("l") is None:
        for n in [rg["n"]] if rg.get("n") is not None \
                else range(1, rg["nn_max"] + 1):
            params = {"n": n, "against": "closed form"}
            t0 = time.perf_counter()
            got = tableaux.joint_matrix_syt(n, n, n)
            w = _first_diff(got.rows, formulas.mnnn_matrix(n).rows)
            out.append(_fail("syt-oracle", params, w, t0) if w
                       else _pass("syt-oracle", params, t0))
    return out


# ---------------------------------------------------------------------------
# Registry and entry points.

_CHECKS = {
    "prop-2.1": _check_prop_2_1,
    "thm-main": _check_thm_main,
    "lem-grbase": _check_grbase,
    "lem-grind": _check_grind,
    "lem-ind": _check_ind,
    "cor-n+1": _check_cor_n_plus_1,
    "thm-dthm": _check_dthm,
    "eq-mnkeq": _check_mnkeq,
    "eq-grbaseeq": _check_grbaseeq,
    "thm-base": _check_thm_base,
    "cor-gcd": _check_cor_gcd,
    "prop-prime": _check_prop_prime,
    "thm-prime": _check_thm_prime,
    "prop-prime-power": _check_prop_prime_power,
    "thm-prime-power": _check_thm_prime_power,
    "thm-p2-items-1-5": _check_p2,
    "f_l-shift": _check_f_l_shift,
    "g-shift": _check_g_shift,
    "syt-oracle": _check_syt,
}


def available() -> list[str]:
    return list(_CHECKS)


def tables_needed(theorem_id: str, overrides: dict | None = None,
                  ) -> list[tuple[int, StatPair]]:
    """Joint tables a check will consume, so a caller with a worker pool
    can warm the cache before running it.  Only the checks that sweep
    large groups declare anything."""
    rg = {**default_ranges(theorem_id), **(overrides or {})}
    if theorem_id == "thm-p2-items-1-5":
        top = rg["n"] if rg.get("n") is not None else rg["n_max"]
        return [(n, StatPair.INV_IMAJ) for n in range(4, top + 1)]
    if theorem_id == "thm-prime":
        np_max = min(rg["np_max"], MAX_ENUM_N)
        primes = [rg["p"]] if rg.get("p") is not None else rg["primes"]
        sizes = {n * p + off
                 for p in primes for off in (0, 1)
                 for n in range(1, np_max // p + 1)}
        return [(N, StatPair.MAJ_IMAJ)
                for N in sorted(sizes) if 2 <= N <= np_max]
    if theorem_id == "syt-oracle":
        top = rg["n"] if rg.get("n") is not None else rg["n_max"]
        return [(n, StatPair.MAJ_IMAJ) for n in range(2, top + 1)]
    return []


def _sort_key(report: VerificationReport):
    return (report.theorem_id,
            sorted((k, str(v)) for k, v in report.params.items()))


def run(theorem_id: str, overrides: dict | None = None,
        limit: int = MAX_ENUM_N) -> list[VerificationReport]:
    """Run one registered check; reports come back canonically sorted."""
    if theorem_id not in _CHECKS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; "
                         f"known: {', '.join(available())}")
    rg = default_ranges(theorem_id)
    for key, value in (overrides or {}).items():
        if value is not None:
            rg[key] = value
    reports = _CHECKS[theorem_id](rg, limit)
    return sorted(reports, key=_sort_key)


def run_all(overrides: dict | None = None,
            limit: int = MAX_ENUM_N) -> list[VerificationReport]:
    out = []
    for tid in available():
        out.extend(run(tid, overrides, limit))
    return out
