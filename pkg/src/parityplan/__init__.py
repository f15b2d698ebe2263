"""Parity query plans: construct, certify, decode.

A plan asks f parity queries (subsets of {1..n}) whose answers identify
any marked set of at most d items. The constructor guarantees f <= d*m
with m minimal such that n < 2^m; verifiers certify the separating
property by brute force; decoders invert answer vectors by table lookup
or algebraically.
"""

from .construction import (
    DEFAULT_SIZE_CAP,
    QueryPlan,
    build_query_plan,
    dumps_plan,
    extend_to_generating,
    load_plan,
    loads_plan,
    moment_family,
    moment_vector,
    plan_kernel,
    power_sum_witness,
    save_plan,
)
from .decode import (
    answer_queries,
    decode_algebraic,
    decode_brute,
    field_syndromes,
    normalize_marked,
)
from .f2linalg import (
    BitMatrix,
    BitVector,
    complement_basis,
    kernel_basis,
    matvec,
    row_reduce,
    weight,
)
from .gf2m import (
    REDUCTION_POLYS,
    FieldSpec,
    field_spec,
    gf_add,
    gf_inv,
    gf_mul,
    gf_pow,
    is_irreducible,
    nonzero_elements,
)
from .verify import (
    DEFAULT_WORK_CAP,
    BaselineResult,
    BoundsReport,
    TrialStats,
    WorkCapExceeded,
    baseline_search,
    bounds_report,
    entropy_lower_bound,
    min_weight_kernel_violation,
    random_plan,
    separating_witness,
    subset_count,
    verify_odd_power_sums,
    verify_separating,
)

__version__ = "0.1.0"

__all__ = [
    "BaselineResult",
    "BitMatrix",
    "BitVector",
    "BoundsReport",
    "DEFAULT_SIZE_CAP",
    "DEFAULT_WORK_CAP",
    "FieldSpec",
    "QueryPlan",
    "REDUCTION_POLYS",
    "TrialStats",
    "WorkCapExceeded",
    "answer_queries",
    "baseline_search",
    "bounds_report",
    "build_query_plan",
    "complement_basis",
    "decode_algebraic",
    "decode_brute",
    "dumps_plan",
    "entropy_lower_bound",
    "extend_to_generating",
    "field_spec",
    "field_syndromes",
    "gf_add",
    "gf_inv",
    "gf_mul",
    "gf_pow",
    "is_irreducible",
    "kernel_basis",
    "load_plan",
    "loads_plan",
    "matvec",
    "min_weight_kernel_violation",
    "moment_family",
    "moment_vector",
    "nonzero_elements",
    "normalize_marked",
    "plan_kernel",
    "power_sum_witness",
    "random_plan",
    "row_reduce",
    "save_plan",
    "separating_witness",
    "subset_count",
    "verify_odd_power_sums",
    "verify_separating",
    "weight",
]
