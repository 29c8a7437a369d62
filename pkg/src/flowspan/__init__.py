"""LD heuristic and exact solver for minimum makespan among flowtime-optimal schedules."""

from .analyze import (
    LdClassification,
    RatioReport,
    SearchOutcome,
    check_monotonicity,
    classify_ld,
    ld_bound,
    ratio_report,
    search,
)
from .core import (
    Instance,
    InvalidInput,
    Profile,
    RankStats,
    ResourceLimit,
    Schedule,
    evaluate,
    is_rectangular,
    normalize,
    optimal_flowtime,
    rank_stats,
)
from .exact import SolveResult, brute_force_oracle, lower_bound, optimal_makespan
from .generate import enumerate_instances, random_instance, tight_family
from .ld import LDResult, ld_schedule, list_schedule, lpt_schedule, profile_after
from .transforms import box_reduce, reduce

__all__ = [
    "Instance", "InvalidInput", "LDResult", "LdClassification", "Profile", "RankStats",
    "RatioReport", "ResourceLimit", "Schedule", "SearchOutcome", "SolveResult",
    "box_reduce", "brute_force_oracle", "check_monotonicity", "classify_ld",
    "enumerate_instances", "evaluate", "is_rectangular", "ld_bound", "ld_schedule",
    "list_schedule", "lower_bound", "lpt_schedule", "normalize", "optimal_flowtime",
    "optimal_makespan", "profile_after", "random_instance", "rank_stats", "ratio_report",
    "reduce", "search", "tight_family",
]
