"""Closed forms against enumeration, plus the number-theory helpers."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majperm.formulas import (BlockStructureError, b_matrix, b_recursion,
                              c_matrix, divisors, extract_block_sequences,
                              factorize, gcd_canonical, is_prime, mnnn,
                              mnnn_matrix, mobius, n_plus_1_matrix,
                              prime_matrix, prime_matrix_plus1,
                              prime_power_entry, prime_power_matrix, totient)
from majperm.matrices import StatPair, count_matrix


def test_factorize():
    assert factorize(1) == []
    assert factorize(2) == [(2, 1)]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59]


def test_mobius_and_totient_small():
    assert mobius(1) == 1 and totient(1) == 1
    assert [mobius(n) for n in range(1, 11)] == \
        [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert [totient(n) for n in range(1, 11)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_mobius_totient_sieve_cross_check():
    # plain sieves, written independently of the trial-division route
    top = 20000
    mob = [1] * (top + 1)
    phi = list(range(top + 1))
    smallest = [0] * (top + 1)
    for p in range(2, top + 1):
        if smallest[p] == 0:
            for q in range(p, top + 1, p):
                if smallest[q] == 0:
                    smallest[q] = p
                phi[q] -= phi[q] // p
                mob[q] = -mob[q]
            for q in range(p * p, top + 1, p * p):
                mob[q] = 0
    for n in (1, 2, 12, 97, 360, 1024, 9699, 19999, top):
        assert mobius(n) == mob[n]
        assert totient(n) == phi[n]


def test_divisor_sum_identity():
    # sum over d | n of phi(d) = n
    for n in range(1, 200):
        assert sum(totient(d) for d in divisors(n)) == n


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_mnnn_hand_values():
    assert mnnn(3, 0, 0) == 2
    assert mnnn(3, 1, 1) == 1
    assert mnnn(3, 0, 1) == 0
    assert mnnn(1, 0, 0) == 1


def test_mnnn_depends_only_on_gcd_classes():
    assert mnnn(6, 1, 5) == mnnn(6, 5, 1) == mnnn(6, 1, 1)
    assert mnnn(6, 2, 4) == mnnn(6, 4, 2)
    assert mnnn(8, 0, 4) == mnnn(8, 8, 4)


def test_gcd_canonical():
    assert gcd_canonical(0, 6) == 0
    assert gcd_canonical(6, 6) == 0
    assert gcd_canonical(4, 6) == 2
    assert gcd_canonical(5, 6) == 1
    assert gcd_canonical(-1, 6) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_mnnn_matrix_matches_enumeration(n):
    assert mnnn_matrix(n) == count_matrix(n, n, n)


def test_mnnn_entries_are_nonnegative_integers():
    for n in (6, 12, 20, 30):
        for i in divisors(n) + [0]:
            for j in divisors(n) + [0]:
                assert mnnn(n, i, j) >= 0


def test_n_plus_1_matrix_frozen():
    m = n_plus_1_matrix(3)
    assert m.rows == ((4, 2, 2), (2, 3, 3), (2, 3, 3))
    assert m.n == 4 and m.k == m.l == 3
    assert all(sum(row) == 8 for row in m.rows)  # (n+1)!/n


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_n_plus_1_matrix_matches_enumeration(n):
    assert n_plus_1_matrix(n) == count_matrix(n + 1, n, n)


def test_prime_matrix_frozen():
    assert prime_matrix(2).rows == ((1, 0), (0, 1))
    assert prime_matrix(3).rows == ((2, 0, 0), (0, 1, 1), (0, 1, 1))
    m5 = prime_matrix(5).rows
    assert m5[0][0] == 8  # ((p-1)! + (p-1)^2) / p
    assert m5[0][1] == 4  # ((p-1)! - (p-1)) / p
    assert m5[1][1] == 5  # ((p-1)! + 1) / p


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_matrix_matches_enumeration(p):
    assert prime_matrix(p) == count_matrix(p, p, p)
    assert prime_matrix_plus1(p) == count_matrix(p + 1, p, p)


def test_prime_matrix_plus1_is_shift_by_factorial():
    for p in (2, 3, 5):
        base = prime_matrix(p).rows
        plus = prime_matrix_plus1(p).rows
        shift = math.factorial(p - 1)
        assert all(plus[i][j] == base[i][j] + shift
                   for i in range(p) for j in range(p))


def test_prime_matrix_rejects_composites():
    with pytest.raises(ValueError):
        prime_matrix(6)


def test_prime_power_entry_base_case():
    # r=1 reduces to the prime matrix; exponent pair (1,1) is the
    # (0, 0) entry of the 2x2 table
    assert prime_power_entry(2, 1, 1, 1) == count_matrix(2, 2, 2).rows[0][0]
    assert prime_power_entry(2, 1, 1, 1) == 1


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2)])
def test_prime_power_entries_match_enumeration(p, r):
    N = p ** r
    m = count_matrix(N, N, N)
    for i in range(r + 1):
        for j in range(i, r + 1):
            want = m.rows[pow(p, i, N) % N][pow(p, j, N) % N]
            assert prime_power_entry(p, r, i, j) == want


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2)])
def test_prime_power_matrix_matches_enumeration(p, r):
    N = p ** r
    assert prime_power_matrix(p, r) == count_matrix(N, N, N)


def test_b_matrix_frozen():
    assert b_recursion is b_matrix
    assert b_matrix(2).rows == ((1, 0), (0, 1))
    assert b_matrix(3).rows == ((2, 1), (1, 2))
    assert b_matrix(4).rows == ((8, 4), (4, 8))
    assert b_matrix(5).rows == ((32, 28), (28, 32))
    assert b_matrix(2).statpair is StatPair.INV_IMAJ


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8, 9])
def test_b_matrix_matches_enumeration(n):
    assert b_matrix(n) == count_matrix(n, 2, 2, StatPair.INV_IMAJ)


def test_b_even_is_doubled_odd():
    for n in (4, 6, 8):
        b = b_matrix(n).rows
        prev = b_matrix(n - 1).rows
        assert all(b[i][j] == n * prev[i][j]
                   for i in range(2) for j in range(2))


def test_b_diagonal_symmetry():
    for n in range(2, 10):
        b = b_matrix(n).rows
        assert b[0][0] == b[1][1] and b[0][1] == b[1][0]


def test_c_matrix_frozen():
    assert c_matrix(4) == ((2, 1), (1, 2))
    assert c_matrix(5) == ((8, 7), (7, 8))


def test_c_matrix_is_exact_quotient():
    for n in range(2, 13):
        h = n // 2
        den = 2 ** (h - 1) * math.factorial(h)
        b = b_matrix(n).rows
        c = c_matrix(n)
        assert all(c[i][j] * den == b[i][j]
                   for i in range(2) for j in range(2))


def test_c_matrix_recursion():
    # even step multiplies by (h, h-1), odd step by (h+1, h)
    for n in (6, 8, 10, 12):
        h = n // 2
        c, prev = c_matrix(n), c_matrix(n - 2)
        assert all(c[i][j] == h * prev[i][j] + (h - 1) * prev[(i + 1) % 2][j]
                   for i in range(2) for j in range(2))
    for n in (7, 9, 11):
        h = (n - 1) // 2
        c, prev = c_matrix(n), c_matrix(n - 2)
        assert all(c[i][j] == (h + 1) * prev[i][j] + h * prev[(i + 1) % 2][j]
                   for i in range(2) for j in range(2))


def test_block_sequences_frozen():
    spec3 = extract_block_sequences(3, 1)
    assert (spec3.q, spec3.r, spec3.s) == (2, 0, 1)
    spec2 = extract_block_sequences(2, 2)
    assert (spec2.q, spec2.r, spec2.s) == (8, 4, 8)
    assert spec2.group_order() == math.factorial(4)


def test_block_sequences_plus_one():
    spec = extract_block_sequences(3, 2, plus_one=True)  # S_7, 3x3 matrix
    assert spec.group_order() == math.factorial(7)


def test_block_sequences_hold_on_s6():
    spec = extract_block_sequences(3, 2)
    assert spec.group_order() == math.factorial(6)


def test_block_structure_error_is_value_error():
    assert issubclass(BlockStructureError, ValueError)


def test_block_sequences_reject_composite_p():
    with pytest.raises(ValueError):
        extract_block_sequences(4, 1)


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=2000),
       st.integers(min_value=1, max_value=2000))
def test_totient_is_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert totient(a * b) == totient(a) * totient(b)


@settings(max_examples=30)
@given(st.integers(min_value=2, max_value=5000))
def test_mobius_divisor_sum_vanishes(n):
    assert sum(mobius(d) for d in divisors(n)) == 0
