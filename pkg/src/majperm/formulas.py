"""Closed-form evaluation of the congruence-class matrices.

Everything here is exact: entries are Python integers, intermediate
ratios are Fractions, and every division carries an integrality
assertion, so a formula bug surfaces as an ArithmeticError instead of a
silently wrong count.  Floating point is deliberately absent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrices import ResidueMatrix, StatPair, count_matrix
from .perms import MAX_ENUM_N

gcd = math.gcd


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division: [(p, exponent), ...]."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def mobius(n: int) -> int:
    """The Mobius function: 0 on non-squarefree n, else (-1)^#primes."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    """Euler's totient: the count of 1 <= a <= n coprime to n."""
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return int(x)


def mnnn(n: int, i: int, j: int) -> int:
    """Entry (i, j) of the n x n class matrix of S_n, in closed form.

    The divisor sum is assembled in exact rationals and must come out a
    nonnegative integer; residues are reduced mod n, and the convention
    gcd(0, d) = d makes residue 0 and representative n interchangeable.
    """
    if n < 1:
        raise ValueError("mnnn needs n >= 1")
    ii, jj = i % n, j % n
    total = Fraction(0)
    for d in divisors(n):
        gi, gj = gcd(ii, d), gcd(jj, d)
        mu = mobius(d // gi) * mobius(d // gj)
        if mu == 0:
            continue
        total += Fraction(
            d ** (n // d) * math.factorial(n // d) * totient(d) ** 2 * mu,
            totient(d // gi) * totient(d // gj))
    val = _exact_int(total / n ** 2, f"mnnn({n},{i},{j})")
    if val < 0:
        raise ArithmeticError(f"mnnn({n},{i},{j}) is negative: {val}")
    return val


def mnnn_matrix(n: int) -> ResidueMatrix:
    rows = tuple(tuple(mnnn(n, i, j) for j in range(n)) for i in range(n))
    return ResidueMatrix(n, n, n, StatPair.MAJ_IMAJ, rows)


def gcd_canonical(i: int, n: int) -> int:
    """The canonical representative of i's class mod n: gcd(i mod n, n),
    reduced back into 0..n-1 (so the divisor n itself maps to 0)."""
    return gcd(i % n, n) % n


def n_plus_1_entry(n: int, i: int, j: int) -> int:
    """Entry (i, j) of the n x n class matrix of S_{n+1}: the S_n entry
    plus (n-1)!, uniformly."""
    return mnnn(n, i, j) + math.factorial(n - 1)


def n_plus_1_matrix(n: int) -> ResidueMatrix:
    rows = tuple(tuple(n_plus_1_entry(n, i, j) for j in range(n))
                 for i in range(n))
    return ResidueMatrix(n + 1, n, n, StatPair.MAJ_IMAJ, rows)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def prime_matrix(p: int) -> ResidueMatrix:
    """The p x p class matrix of S_p for prime p: three entry values.

    (0, 0) gets ((p-1)! + (p-1)^2) / p; the rest of row and column 0 get
    ((p-1)! - (p-1)) / p; entries off row and column 0 get
    ((p-1)! + 1) / p.  Residue 0 comes first in both directions.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = math.factorial(p - 1)
    corner = _exact_div(f + (p - 1) ** 2, p, "corner entry")
    edge = _exact_div(f - (p - 1), p, "edge entry")
    inner = _exact_div(f + 1, p, "inner entry")
    rows = tuple(
        tuple((corner if i == 0 and j == 0 else
               edge if i == 0 or j == 0 else inner)
              for j in range(p))
        for i in range(p))
    return ResidueMatrix(p, p, p, StatPair.MAJ_IMAJ, rows)


def prime_matrix_plus1(p: int) -> ResidueMatrix:
    """The p x p class matrix of S_{p+1}: the S_p matrix plus (p-1)!."""
    base = prime_matrix(p)
    shift = math.factorial(p - 1)
    rows = tuple(tuple(e + shift for e in row) for row in base.rows)
    return ResidueMatrix(p + 1, p, p, StatPair.MAJ_IMAJ, rows)


def prime_power_entry(p: int, r: int, i: int, j: int) -> int:
    """Entry at residues (p^i, p^j) of the p^r x p^r matrix of S_{p^r},
    for exponents 0 <= i <= j <= r (j = r meaning residue 0).

    The divisor sum runs over moduli p^k for k up to min(i + 1, r); the
    k = i + 1 term carries weight 1/(p-1)^2 on the diagonal i = j and
    -1/(p-1) off it, all other terms weight 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1 or not 0 <= i <= j <= r:
        raise ValueError(f"need r >= 1 and 0 <= i <= j <= r, "
                         f"got r={r}, i={i}, j={j}")
    total = Fraction(0)
    for k in range(0, min(i + 1, r) + 1):
        if k <= i:
            weight = Fraction(1)
        elif i == j:
            weight = Fraction(1, (p - 1) ** 2)
        else:
            weight = Fraction(-1, p - 1)
        d = p ** k
        q = p ** (r - k)
        total += weight * (d ** q * math.factorial(q) * totient(d) ** 2)
    val = _exact_int(total / p ** (2 * r),
                     f"prime_power_entry({p},{r},{i},{j})")
    if val < 0:
        raise ArithmeticError(f"negative entry at ({p},{r},{i},{j})")
    return val


def prime_power_matrix(p: int, r: int) -> ResidueMatrix:
    """The full p^r x p^r class matrix of S_{p^r}, reconstructed from the
    exponent entries via gcd classes and symmetry."""
    n = p ** r

    def exponent(a: int) -> int:
        g = gcd(a, n)
        e = 0
        while g % p == 0:
            g //= p
            e += 1
        return e

    @lru_cache(maxsize=None)
    def at(i: int, j: int) -> int:
        return prime_power_entry(p, r, i, j)

    rows = tuple(
        tuple(at(*sorted((exponent(a), exponent(b)))) for b in range(n))
        for a in range(n))
    return ResidueMatrix(n, n, n, StatPair.MAJ_IMAJ, rows)


# ---------------------------------------------------------------------------
# The 2 x 2 family and its recursions.

@lru_cache(maxsize=None)
def _b_rows(n: int, limit: int = MAX_ENUM_N) -> tuple[tuple[int, ...], ...]:
    if n < 2:
        raise ValueError("the 2 x 2 recursion starts at n = 2")
    if n in (2, 3):
        # Seeds come from enumeration, not hand entry.
        return count_matrix(n, 2, 2, StatPair.INV_IMAJ, limit).rows
    prev = _b_rows(n - 2, limit)
    if n % 2 == 0:
        m = n // 2
        stay, flip = 2 * m * m, 2 * m * (m - 1)
    else:
        m = (n - 1) // 2
        stay, flip = 2 * m * (m + 1), 2 * m * m
    return tuple(
        tuple(stay * prev[i][j] + flip * prev[(i + 1) % 2][j]
              for j in range(2))
        for i in range(2))


def b_matrix(n: int) -> ResidueMatrix:
    """The 2 x 2 class matrix of S_n by the two-step recursion.

    Even step:  b_n(i,j) = 2m^2 b_{n-2}(i,j) + 2m(m-1) b_{n-2}(i+1,j),
    with m = n/2; odd step: coefficients 2m(m+1) and 2m^2 with
    m = (n-1)/2.  Seeds b_2, b_3 are enumerated.
    """
    return ResidueMatrix(n, 2, 2, StatPair.INV_IMAJ, _b_rows(n))


b_recursion = b_matrix


def c_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """The normalized 2 x 2 matrix: b_n divided by 2^(h-1) h! where
    h = floor(n / 2); the quotient is asserted integral."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    h = n // 2
    den = 2 ** (h - 1) * math.factorial(h)
    return tuple(
        tuple(_exact_div(e, den, f"c_{n}({i},{j})") for j, e in enumerate(row))
        for i, row in enumerate(_b_rows(n)))


# ---------------------------------------------------------------------------
# Block shape of the p x p matrices of S_N for N = np and np + 1.

class BlockStructureError(ValueError):
    """A matrix expected to have corner/edge/inner block form does not."""


@dataclass(frozen=True)
class BlockSpec:
    """The three values of a p x p matrix in corner/edge/inner form:
    q at (0, 0), r along the rest of row and column 0, s elsewhere."""

    p: int
    n: int
    q: int
    r: int
    s: int

    def group_order(self) -> int:
        return self.q + 2 * (self.p - 1) * self.r + (self.p - 1) ** 2 * self.s


def extract_block_sequences(p: int, n: int, plus_one: bool = False,
                            limit: int = MAX_ENUM_N) -> BlockSpec:
    """Read off (q, r, s) from the enumerated p x p matrix of S_{np}
    (or S_{np+1}), checking the block structure holds exactly.

    Raises BlockStructureError naming the first offending entry if the
    edge or inner entries are not constant; the extracted triple also
    satisfies q + 2(p-1) r + (p-1)^2 s = N!.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("needs n >= 1")
    N = n * p + (1 if plus_one else 0)
    rows = count_matrix(N, p, p, StatPair.MAJ_IMAJ, limit).rows
    q = rows[0][0]
    r = rows[0][1] if p > 1 else q
    s = rows[1][1]
    for a in range(p):
        for b in range(p):
            expected = q if (a, b) == (0, 0) else \
                r if a == 0 or b == 0 else s
            if rows[a][b] != expected:
                raise BlockStructureError(
                    f"entry ({a},{b}) of the {p}x{p} matrix of S_{N} is "
                    f"{rows[a][b]}, expected {expected}")
    spec = BlockSpec(p, N, q, r, s)
    if spec.group_order() != math.factorial(N):
        raise BlockStructureError(
            f"block totals of S_{N} sum to {spec.group_order()}, "
            f"not {N}!")
    return spec
