"""Joint congruence classes of maj, inv and imaj over symmetric groups.

The package enumerates permutations with compiled kernels (numba, with a
pure-numpy fallback), folds the joint statistic table modulo a pair of
moduli, and cross-checks the resulting matrices against the explicit
bijections, shuffle decompositions, closed-form matrices and the
standard-tableau route.  `majperm.verify` bundles the checks behind
stable ids; the `majperm` console script exposes everything.
"""

from .backend import backend_name
from .bijections import (SplitWord, assemble, cycle_map, cycle_map_inverse,
                         f_l, f_l_inverse, g_map, nested_cycle_map,
                         prefix_max_orbit, split)
from .formulas import (b_matrix, b_recursion, c_matrix, mnnn, mnnn_matrix,
                       n_plus_1_matrix, prime_matrix, prime_matrix_plus1,
                       prime_power_entry, prime_power_matrix)
from .matrices import (BlockDecomposition, ResidueMatrix, StatPair,
                       block_decompose, class_sets, count_matrix,
                       is_symmetric_under_swap, joint_table, marginal_col,
                       marginal_row, parse_statpair, transpose_check)
from .perms import (DEFAULT_ENUM_LIMIT, MAX_ENUM_N, Perm, SizeLimitError,
                    as_perm, format_perm, imaj, inv, inverse, iter_sn, maj,
                    parse_perm, rank, unrank)
from .reports import VerificationReport, reports_to_json
from .shuffles import (imaj_between, imaj_window, inv_between, shuffle,
                       shuffle_at, shuffle_gamma, shuffle_plus, wt_gamma,
                       wt_index)
from .tableaux import (hook_count, joint_matrix_syt, maj_distribution,
                       maj_tableau, syt_enumerate)
from .verify import available, run, run_all

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition", "DEFAULT_ENUM_LIMIT", "MAX_ENUM_N", "Perm",
    "ResidueMatrix", "SizeLimitError", "SplitWord", "StatPair",
    "VerificationReport", "__version__", "as_perm", "assemble",
    "available", "b_matrix", "b_recursion", "backend_name",
    "block_decompose",
    "c_matrix", "class_sets", "count_matrix", "cycle_map",
    "cycle_map_inverse", "f_l", "f_l_inverse", "format_perm", "g_map",
    "hook_count", "imaj", "imaj_between", "imaj_window", "inv",
    "inv_between", "inverse", "is_symmetric_under_swap", "iter_sn",
    "joint_matrix_syt", "joint_table", "maj", "maj_distribution",
    "maj_tableau",
    "marginal_col", "marginal_row", "mnnn", "mnnn_matrix",
    "n_plus_1_matrix", "nested_cycle_map", "parse_perm", "parse_statpair",
    "prefix_max_orbit", "prime_matrix", "prime_matrix_plus1",
    "prime_power_entry", "prime_power_matrix", "rank", "reports_to_json",
    "run", "run_all", "shuffle", "shuffle_at", "shuffle_gamma",
    "shuffle_plus", "split", "syt_enumerate", "transpose_check", "unrank",
    "wt_gamma", "wt_index",
]
