"""Critical numbers of finite abelian groups.

Closed-form values, explicit extremal-set constructions, and a brute-force
oracle for the six critical quantities attached to sumsets: the h-fold and
interval thresholds, their generating-restricted variants, and the
subset-sum thresholds over G and over G without zero.
"""

from .errors import (
    BudgetExceeded,
    ConditionViolated,
    ConstructionInvariantViolated,
    CritnumError,
    EmptySetError,
    InvalidDivisor,
    InvalidElement,
    InvalidFactor,
    InvalidH,
    InvalidIndex,
    InvalidOrder,
    InvalidS,
    OutsideTheoremDomain,
    OutsideValidatedDomain,
    QuotientUnavailable,
    SpecMismatch,
    WrongGroupClass,
)
from .formulas import (
    KIND_TAGS,
    CriticalKind,
    critical_number,
    divisor_bound,
    generating_critical_number,
    generating_interval_critical_cyclic,
    generating_interval_critical_s3,
    generating_interval_critical_two_group,
    generating_interval_cyclic_divisors,
    has_qualifying_subgroup,
    interval3_branch_divisor,
    interval3_piecewise_value,
    interval_critical_number,
    max_incomplete_divisors,
    max_incomplete_size,
    max_sumfree_size,
    subset_sum_critical_pair,
    subset_sum_uses_sqrt_branch,
    sumfree_branch_prime,
)
from .groups import (
    GroupType,
    abelian_types,
    cyclic,
    divisors,
    factorize,
    format_group,
    is_prime,
    normalize_type,
    parse_group,
    smallest_prime_factor,
)
from .oracle import (
    DEFAULT_QUERY_BUDGET,
    DEFAULT_SWEEP_BUDGET,
    OracleQuery,
    brute_cr,
    brute_cr_star,
    brute_critical,
    brute_critical_witness,
    brute_critical_zero_anchored,
    brute_max_sumfree,
    brute_quotient_types,
    enumerate_subgroups,
)
from .quotients import (
    QuotientSpec,
    is_generating,
    kernel_subset,
    lift_preimage,
    project,
    project_index,
    project_subset,
    quotient_spec,
    quotient_type_feasible,
    spec_for_quotient_type,
    subgroup_generated,
)
from .sumsets import (
    GroupSubset,
    hfold_sumset,
    interval_sumset,
    is_complete,
    pairwise_sumset,
    subset_sums,
)
from .witnesses import (
    BoundCertificate,
    WitnessCertificate,
    best_interval_bound,
    hfold_witness,
    interval_bound_witness,
    interval_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "BudgetExceeded",
    "ConditionViolated",
    "ConstructionInvariantViolated",
    "CriticalKind",
    "CritnumError",
    "DEFAULT_QUERY_BUDGET",
    "DEFAULT_SWEEP_BUDGET",
    "EmptySetError",
    "GroupSubset",
    "GroupType",
    "InvalidDivisor",
    "InvalidElement",
    "InvalidFactor",
    "InvalidH",
    "InvalidIndex",
    "InvalidOrder",
    "InvalidS",
    "KIND_TAGS",
    "OracleQuery",
    "OutsideTheoremDomain",
    "OutsideValidatedDomain",
    "QuotientSpec",
    "QuotientUnavailable",
    "SpecMismatch",
    "WitnessCertificate",
    "WrongGroupClass",
    "abelian_types",
    "best_interval_bound",
    "brute_cr",
    "brute_cr_star",
    "brute_critical",
    "brute_critical_witness",
    "brute_critical_zero_anchored",
    "brute_max_sumfree",
    "brute_quotient_types",
    "critical_number",
    "cyclic",
    "divisor_bound",
    "divisors",
    "enumerate_subgroups",
    "factorize",
    "format_group",
    "generating_critical_number",
    "generating_interval_critical_cyclic",
    "generating_interval_critical_s3",
    "generating_interval_critical_two_group",
    "generating_interval_cyclic_divisors",
    "has_qualifying_subgroup",
    "hfold_sumset",
    "hfold_witness",
    "interval3_branch_divisor",
    "interval3_piecewise_value",
    "interval_bound_witness",
    "interval_critical_number",
    "interval_sumset",
    "interval_witness",
    "is_complete",
    "is_generating",
    "is_prime",
    "kernel_subset",
    "lift_preimage",
    "max_incomplete_divisors",
    "max_incomplete_size",
    "max_sumfree_size",
    "normalize_type",
    "pairwise_sumset",
    "parse_group",
    "project",
    "project_index",
    "project_subset",
    "quotient_spec",
    "quotient_type_feasible",
    "smallest_prime_factor",
    "spec_for_quotient_type",
    "subgroup_generated",
    "subset_sum_critical_pair",
    "subset_sum_uses_sqrt_branch",
    "subset_sums",
    "sumfree_branch_prime",
]
