"""Worker-pool computation of joint tables.

The library's kernels are single-range and never spawn workers; this
module, owned by the CLI layer, partitions [0, n!) into contiguous rank
ranges, runs one kernel call per range on a thread pool, and merges by
addition.  The JIT kernels release the GIL, so threads scale on real
cores; and since int64 addition is exact and commutative, the merged
table is identical for every job count, which keeps output byte-stable.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import backend
from .matrices import StatPair, cached_table, joint_table, set_cached_table
from .perms import MAX_ENUM_N, check_enum_size, rank_ranges

# Ranges per worker; small multiple to even out tail imbalance.
_CHUNKS_PER_JOB = 4


def default_jobs() -> int:
    """Worker count from MAJPERM_JOBS, else 1."""
    raw = os.environ.get("MAJPERM_JOBS", "").strip()
    if not raw:
        return 1
    jobs = int(raw)
    if jobs < 1:
        raise ValueError(f"MAJPERM_JOBS must be >= 1, got {jobs}")
    return jobs


def compute_table(n: int, statpair: StatPair = StatPair.MAJ_IMAJ,
                  jobs: int = 1, limit: int = MAX_ENUM_N) -> np.ndarray:
    """Full joint table for S_n, computed with `jobs` workers and
    installed in the shared cache so later matrix folds reuse it."""
    check_enum_size(n, limit)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    existing = cached_table(n, statpair)
    if existing is not None:
        return existing
    if jobs == 1 or math.factorial(n) < 1 << 16:
        return joint_table(n, statpair, limit)
    use_inv = statpair is StatPair.INV_IMAJ
    ranges = rank_ranges(n, jobs * _CHUNKS_PER_JOB)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(
            lambda r: backend.joint_table_range(n, r[0], r[1], use_inv, limit),
            ranges))
    table = parts[0]
    for part in parts[1:]:
        table += part
    set_cached_table(n, statpair, table)
    return table
