"""Both kernel builds against a definitional brute force."""

import itertools
import math

import numpy as np
import pytest

from majperm import _kernels_numpy, backend
from majperm.perms import SizeLimitError, imaj, inv, iter_sn, maj

try:
    from majperm import _kernels_numba
    KERNELS = [_kernels_numba, _kernels_numpy]
except ImportError:  # pragma: no cover - numba-less environments
    _kernels_numba = None
    KERNELS = [_kernels_numpy]


def brute_table(n, use_inv):
    smax = n * (n - 1) // 2
    out = [[0] * (smax + 1) for _ in range(smax + 1)]
    for w in iter_sn(n):
        s1 = inv(w) if use_inv else maj(w)
        out[s1][imaj(w)] += 1
    return out


@pytest.mark.parametrize("kern", KERNELS, ids=lambda m: m.__name__)
@pytest.mark.parametrize("use_inv", [False, True])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_full_table_matches_brute_force(kern, use_inv, n):
    got = kern.joint_table_range(n, 0, math.factorial(n), use_inv)
    assert got.tolist() == brute_table(n, use_inv)


@pytest.mark.parametrize("kern", KERNELS, ids=lambda m: m.__name__)
def test_partial_ranges_merge_to_full(kern):
    total = math.factorial(6)
    cuts = [0, 1, 7, 120, 719, total - 1, total]
    acc = None
    for a, b in zip(cuts, cuts[1:]):
        part = kern.joint_table_range(6, a, b, True)
        acc = part if acc is None else acc + part
    full = kern.joint_table_range(6, 0, total, True)
    assert (acc == full).all()


@pytest.mark.parametrize("kern", KERNELS, ids=lambda m: m.__name__)
def test_partial_range_counts_only_its_words(kern):
    words = list(iter_sn(5))[40:77]
    smax = 10
    want = [[0] * (smax + 1) for _ in range(smax + 1)]
    for w in words:
        want[maj(w)][imaj(w)] += 1
    got = kern.joint_table_range(5, 40, 77, False)
    assert got.tolist() == want


@pytest.mark.parametrize("kern", KERNELS, ids=lambda m: m.__name__)
def test_empty_range(kern):
    got = kern.joint_table_range(5, 30, 30, False)
    assert int(got.sum()) == 0


def test_backend_dispatch_validates():
    with pytest.raises(ValueError):
        backend.joint_table_range(4, -1, 10, False)
    with pytest.raises(ValueError):
        backend.joint_table_range(4, 0, 25, False)
    with pytest.raises(ValueError):
        backend.joint_table_range(4, 10, 5, False)
    with pytest.raises(SizeLimitError):
        backend.joint_table_range(13, 0, 1, False, limit=12)


def test_backend_name_is_known():
    assert backend.backend_name() in ("numba", "numpy")


def test_tables_are_int64():
    got = _kernels_numpy.joint_table_range(4, 0, 24, True)
    assert got.dtype == np.int64
