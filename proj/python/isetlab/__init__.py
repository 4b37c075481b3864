"""Exact tools for t-intersecting families and their distinct intersections."""

from ._isetlab import (
    BudgetError,
    audit,
    binom,
    build_A_t,
    build_full_level,
    build_sunflower,
    build_triangle,
    classify,
    count_I_At,
    count_I_sunflower,
    distinct_intersections,
    ekr_bound,
    enumerate_maximal_families,
    epsilon_of,
    eval_threshold_sides,
    extremal_report,
    f_min,
    generator_profile,
    is_t_intersecting,
    sunflower_chain_check,
)

__all__ = [
    "BudgetError",
    "audit",
    "binom",
    "build_A_t",
    "build_full_level",
    "build_sunflower",
    "build_triangle",
    "classify",
    "count_I_At",
    "count_I_sunflower",
    "distinct_intersections",
    "ekr_bound",
    "enumerate_maximal_families",
    "epsilon_of",
    "eval_threshold_sides",
    "extremal_report",
    "f_min",
    "generator_profile",
    "is_t_intersecting",
    "sunflower_chain_check",
]
