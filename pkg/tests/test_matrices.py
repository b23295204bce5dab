"""Folded count matrices, their serialization and the class-set view."""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majperm.matrices import (ResidueMatrix, StatPair, block_decompose,
                              class_sets, count_matrix, joint_table,
                              marginal_col, marginal_row, matrix_from_json,
                              parse_statpair, transpose_check)
from majperm.perms import SizeLimitError, imaj, inv, iter_sn, maj

S3_ROWS = ((2, 0, 0), (0, 1, 1), (0, 1, 1))


def test_s3_full_modulus_matrix():
    m = count_matrix(3, 3, 3)
    assert m.rows == S3_ROWS
    assert m.statpair is StatPair.MAJ_IMAJ


def test_s3_mixed_moduli():
    assert count_matrix(3, 3, 2).rows == ((1, 1), (1, 1), (1, 1))
    assert count_matrix(3, 2, 3).rows == ((1, 1, 1), (1, 1, 1))


def test_s1_oversized_moduli():
    m = count_matrix(1, 5, 7)
    assert m.rows[0][0] == 1
    assert sum(sum(r) for r in m.rows) == 1


def test_s4_parity_matrix_both_statpairs():
    for sp in StatPair:
        assert count_matrix(4, 2, 2, sp).rows == ((8, 4), (4, 8))


def test_count_matrix_brute_force_cross_check():
    # independent fold straight from the definitions
    for n, k, l in [(4, 3, 2), (5, 4, 4), (6, 5, 3)]:
        want = [[0] * l for _ in range(k)]
        for w in iter_sn(n):
            want[maj(w) % k][imaj(w) % l] += 1
        got = count_matrix(n, k, l)
        assert [list(r) for r in got.rows] == want


def test_marginals():
    m = count_matrix(3, 5, 1)
    assert marginal_row(m) == (1, 2, 2, 1, 0)
    m = count_matrix(4, 2, 2)
    assert marginal_row(m) == (12, 12)
    assert marginal_col(m) == (12, 12)
    m = count_matrix(5, 3, 4)
    assert sum(marginal_row(m)) == math.factorial(5)
    assert sum(marginal_col(m)) == math.factorial(5)


def test_transpose_swaps_moduli():
    # maj and imaj trade places under inversion, so swapping (k, l)
    # transposes the matrix
    for n, k, l in [(4, 3, 2), (5, 2, 5), (6, 4, 3)]:
        a = count_matrix(n, k, l).rows
        b = count_matrix(n, l, k).rows
        assert all(a[i][j] == b[j][i]
                   for i in range(k) for j in range(l))


def test_transpose_check():
    assert transpose_check(4, 2, 3)
    assert transpose_check(5, 5, 5)
    assert transpose_check(1, 1, 1)
    for sp in StatPair:
        assert transpose_check(6, 4, 3, sp)


def test_entry_reduces_residues():
    m = count_matrix(4, 3, 3)
    assert m.entry(4, -2) == m.rows[1][1]


def test_residue_matrix_validation():
    with pytest.raises(ValueError):
        ResidueMatrix(3, 2, 2, StatPair.MAJ_IMAJ, ((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        ResidueMatrix(3, 2, 2, StatPair.MAJ_IMAJ, ((-1, 3), (2, 2)))
    with pytest.raises(ValueError):
        ResidueMatrix(3, 2, 2, StatPair.MAJ_IMAJ, ((6,),))
    with pytest.raises(ValueError):
        ResidueMatrix(3, 0, 2, StatPair.MAJ_IMAJ, ())


def test_json_golden():
    m = count_matrix(3, 3, 3)
    assert m.to_json() == (
        '{"n":3,"k":3,"l":3,"statpair":"maj-imaj",'
        '"rows":[["2","0","0"],["0","1","1"],["0","1","1"]]}')


def test_csv_golden():
    m = count_matrix(3, 3, 3)
    assert m.to_csv() == "i,j=0,j=1,j=2\n0,2,0,0\n1,0,1,1\n2,0,1,1\n"


def test_json_roundtrip():
    for sp in StatPair:
        m = count_matrix(5, 4, 3, sp)
        again = matrix_from_json(m.to_json())
        assert again == m


def test_json_entries_are_strings():
    payload = json.loads(count_matrix(4, 2, 2).to_json())
    assert payload["rows"] == [["8", "4"], ["4", "8"]]


def test_parse_statpair():
    assert parse_statpair("maj-imaj") is StatPair.MAJ_IMAJ
    assert parse_statpair("inv-imaj") is StatPair.INV_IMAJ
    assert parse_statpair(StatPair.INV_IMAJ) is StatPair.INV_IMAJ
    with pytest.raises(ValueError):
        parse_statpair("maj-inv")


def test_joint_table_is_cached():
    a = joint_table(5, StatPair.MAJ_IMAJ)
    b = joint_table(5, StatPair.MAJ_IMAJ)
    assert a is b


def test_size_limit():
    with pytest.raises(SizeLimitError):
        count_matrix(13, 2, 2, limit=12)


def test_block_decompose_shapes():
    m = count_matrix(6, 6, 3)
    dec = block_decompose(m, 3)
    assert len(dec.contiguous) == 2 and len(dec.contiguous[0]) == 1
    assert len(dec.regrouped) == 3 and len(dec.regrouped[0]) == 3
    # every entry lands in exactly one cell of each view
    total = sum(sum(r) for r in m.rows)
    spread = sum(e for a in dec.regrouped for b in a for row in b
                 for e in row)
    assert spread == total


def test_block_decompose_regrouped_cells_are_constant():
    # m_6^{6,3} regrouped by d=3: each residue cell is the constant
    # m_6^{3,3}(a,b) / 2
    big = count_matrix(6, 6, 3)
    base = count_matrix(6, 3, 3)
    dec = block_decompose(big, 3)
    for a in range(3):
        for b in range(3):
            cell = {e for row in dec.regrouped[a][b] for e in row}
            assert cell == {base.rows[a][b] // 2}
            assert base.rows[a][b] % 2 == 0


def test_block_decompose_rejects_bad_divisor():
    with pytest.raises(ValueError):
        block_decompose(count_matrix(4, 4, 2), 3)


def test_class_sets_partition():
    sets = class_sets(4, 3, 2)
    words = [w for s in sets.values() for w in s]
    assert len(words) == 24
    assert set(words) == set(iter_sn(4))
    for (i, j), s in sets.items():
        for w in s:
            assert inv(w) % 3 == i and imaj(w) % 2 == j


def test_class_sets_trivial_group():
    assert class_sets(0, 2, 2) == {(0, 0): frozenset({()})}


def test_class_sets_size_cap():
    with pytest.raises(SizeLimitError):
        class_sets(10, 2, 2)


@settings(max_examples=25)
@given(st.integers(min_value=1, max_value=6),
       st.integers(min_value=1, max_value=8),
       st.integers(min_value=1, max_value=8),
       st.sampled_from(list(StatPair)))
def test_matrix_total_is_group_order(n, k, l, sp):
    m = count_matrix(n, k, l, sp)
    assert sum(sum(r) for r in m.rows) == math.factorial(n)
    assert len(m.rows) == k and all(len(r) == l for r in m.rows)
