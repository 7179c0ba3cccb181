"""hooklab: fixed points in first-column hook lengths of integer partitions.

Exact q-series constructors, an independent enumeration oracle, and the
invertible combinatorial maps connecting the two, with a CLI front end.
"""

from .partitions import (
    FixedHookReport,
    Partition,
    generate_partitions,
    make_partition,
)
from .series import (
    Series,
    TruncationError,
    gf_all_h_fixed,
    gf_first_column_k_hooks,
    gf_fixed_hooks,
    gf_fixed_hooks_double_sum,
    gf_fixed_hooks_simplified,
    gf_generalized_mex,
    gf_h_fixed_hook_k,
    gf_h_fixed_part_k,
    gf_M_k,
    gf_ones_exact,
    gf_ones_shifted,
    inv_finite_pochhammer,
    inv_pochhammer_tail,
    partition_numbers,
    pentagonal_series,
    q_binomial,
    truncated_pentagonal,
)
from .bijections import (
    BijectionRecord,
    SlideTrace,
    b_bijection,
    b_inverse,
    f_bijection,
    f_inverse,
    insert_part,
    mex_map,
    mex_map_inverse,
)
from .oracle import (
    CountTable,
    count_first_column_k_hooks,
    count_fixed_hooks,
    count_generalized_mex,
    count_h_fixed_by_hook,
    count_h_fixed_by_part,
    count_mex_class,
    count_mex_class_multi,
    count_ones_exact,
    count_ones_shifted,
    count_ones_statistics,
    count_part_multiplicity_class,
    count_parts_eq_mult,
)
from .verify import THEOREM_IDS, VerificationReport, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "BijectionRecord",
    "CountTable",
    "FixedHookReport",
    "Partition",
    "Series",
    "SlideTrace",
    "THEOREM_IDS",
    "TruncationError",
    "VerificationReport",
    "b_bijection",
    "b_inverse",
    "count_first_column_k_hooks",
    "count_fixed_hooks",
    "count_generalized_mex",
    "count_h_fixed_by_hook",
    "count_h_fixed_by_part",
    "count_mex_class",
    "count_mex_class_multi",
    "count_ones_exact",
    "count_ones_shifted",
    "count_ones_statistics",
    "count_part_multiplicity_class",
    "count_parts_eq_mult",
    "f_bijection",
    "f_inverse",
    "generate_partitions",
    "gf_M_k",
    "gf_all_h_fixed",
    "gf_first_column_k_hooks",
    "gf_fixed_hooks",
    "gf_fixed_hooks_double_sum",
    "gf_fixed_hooks_simplified",
    "gf_generalized_mex",
    "gf_h_fixed_hook_k",
    "gf_h_fixed_part_k",
    "gf_ones_exact",
    "gf_ones_shifted",
    "insert_part",
    "inv_finite_pochhammer",
    "inv_pochhammer_tail",
    "make_partition",
    "mex_map",
    "mex_map_inverse",
    "partition_numbers",
    "pentagonal_series",
    "q_binomial",
    "truncated_pentagonal",
    "verify_theorem",
]
