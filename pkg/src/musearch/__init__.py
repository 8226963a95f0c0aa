"""Pivotal-unit search in sparse symmetric matrices.

Given a symmetric matrix with a non-negligible number of zeros and a
partition of its units into k groups, find the unit of each group that
participates in the greatest number of k-by-k identity submatrices
(one unit per group, all off-diagonal entries zero).
"""

from .matrix import (
    Grouping,
    SymmetricMatrix,
    Tolerance,
    ZeroPattern,
    build_zero_pattern,
    zeros_toward_other_groups,
)
from .oracle import OracleReport, oracle_count, oracle_maxima
from .search import (
    Candidate,
    CandidateSet,
    GroupOutcome,
    PartnerGroups,
    PivotResult,
    count_identity_submatrices,
    group_partners,
    select_candidates,
    select_maxima,
    verify_identity,
)
from .simulation import (
    ScenarioConfig,
    ScenarioRecord,
    ScenarioReport,
    generate_bernoulli_matrix,
    random_grouping,
    run_scenario_grid,
)

__version__ = "0.1.0"

__all__ = [
    "SymmetricMatrix",
    "ZeroPattern",
    "Grouping",
    "Tolerance",
    "build_zero_pattern",
    "zeros_toward_other_groups",
    "Candidate",
    "CandidateSet",
    "PartnerGroups",
    "GroupOutcome",
    "PivotResult",
    "select_candidates",
    "group_partners",
    "count_identity_submatrices",
    "select_maxima",
    "verify_identity",
    "OracleReport",
    "oracle_count",
    "oracle_maxima",
    "ScenarioConfig",
    "ScenarioRecord",
    "ScenarioReport",
    "generate_bernoulli_matrix",
    "random_grouping",
    "run_scenario_grid",
    "__version__",
]
