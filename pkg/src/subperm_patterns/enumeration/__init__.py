"""Exact coefficient tables, generating-tree and Dyck-path counters, and numeric asymptotics."""

from .models import (
    AsymptoticParams,
    CoefficientTable,
    DyckPath,
    Family,
    GeneratingTreeState,
    RecurrenceMethod,
)
from .series import (
    catalan,
    catalan_asymptotic,
    catalan_list,
    catalan_table,
    caterpillar_count,
    family_polynomial,
    lj_coefficients,
    lj_complement,
    no_size_j_caterpillar,
    pj_coefficients,
    radical_coefficients,
)
from .generating_tree import (
    gamma_u_bounded_count,
    gamma_u_bounded_table,
    increasing_split,
    level_counts,
    m2_count,
    m2_count_by_generating_tree,
    m2_table,
)
from .dyck import (
    blocks,
    dyck_avoiding_count,
    dyck_avoiding_table,
    dyck_children,
    dyck_paths,
    max_ascent,
    motzkin,
    motzkin_table,
)
from .asymptotics import (
    asymptotic_coefficient,
    dominant_root,
    expected_gamma,
    expected_gamma_table,
    ratio_estimate,
    ratio_table,
    rho_approximation,
    root_ratio,
    root_ratio_approximation,
)

__all__ = [
    # Models
    "AsymptoticParams",
    "CoefficientTable",
    "DyckPath",
    "Family",
    "GeneratingTreeState",
    "RecurrenceMethod",

    # Series
    "catalan",
    "catalan_asymptotic",
    "catalan_list",
    "catalan_table",
    "caterpillar_count",
    "family_polynomial",
    "lj_coefficients",
    "lj_complement",
    "no_size_j_caterpillar",
    "pj_coefficients",
    "radical_coefficients",

    # Generating tree
    "gamma_u_bounded_count",
    "gamma_u_bounded_table",
    "increasing_split",
    "level_counts",
    "m2_count",
    "m2_count_by_generating_tree",
    "m2_table",

    # Dyck paths
    "blocks",
    "dyck_avoiding_count",
    "dyck_avoiding_table",
    "dyck_children",
    "dyck_paths",
    "max_ascent",
    "motzkin",
    "motzkin_table",

    # Asymptotics
    "asymptotic_coefficient",
    "dominant_root",
    "expected_gamma",
    "expected_gamma_table",
    "ratio_estimate",
    "ratio_table",
    "rho_approximation",
    "root_ratio",
    "root_ratio_approximation",
]

__version__ = "0.1.0"
