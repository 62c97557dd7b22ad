"""Two-community network simulator and analytics toolkit.

Generates graphs made of two intra-linked communities joined by a
configurable set of bridges, measures per-node social distance (distance
to the nearest forward-community node) and cumulative social capital,
and validates the package's closed-form predictions (expected path
counts, the logarithmic distance law, the connectivity threshold)
against exact oracles and Monte Carlo experiments.
"""

from .graph import CommunityGraph, EdgeClass, build, classify_edge, is_connected, read_edge_list, write_edge_list
from .generate import (
    ModelParams,
    ScaleFreeParams,
    gen_bridges_count,
    gen_bridges_prob,
    gen_er_block,
    gen_model,
    gen_model_scale_free,
    gen_scale_free,
)
from .measure import (
    EntryPathStats,
    SocialDistanceReport,
    count_entry_paths,
    cumulative_capital,
    entry_path_distance,
    social_distances,
)
from .theory import (
    TheoryInputs,
    TheoryReport,
    candidate_entry_paths,
    connectivity_threshold,
    expected_entry_paths,
    falling_factorial_ratio,
    social_distance_law,
)
from .experiments import (
    ComparisonResult,
    ConcentrationResult,
    SweepConfig,
    SweepResult,
    run_concentration,
    run_connectivity_transition,
    run_substrate_comparison,
    run_sweep,
)
from .survey import HomophilyDistribution, SurveyRecord, homophily_distribution, load_survey
from .kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = [
    "CommunityGraph",
    "EdgeClass",
    "build",
    "classify_edge",
    "is_connected",
    "read_edge_list",
    "write_edge_list",
    "ModelParams",
    "ScaleFreeParams",
    "gen_bridges_count",
    "gen_bridges_prob",
    "gen_er_block",
    "gen_model",
    "gen_model_scale_free",
    "gen_scale_free",
    "EntryPathStats",
    "SocialDistanceReport",
    "count_entry_paths",
    "cumulative_capital",
    "entry_path_distance",
    "social_distances",
    "TheoryInputs",
    "TheoryReport",
    "candidate_entry_paths",
    "connectivity_threshold",
    "expected_entry_paths",
    "falling_factorial_ratio",
    "social_distance_law",
    "ComparisonResult",
    "ConcentrationResult",
    "SweepConfig",
    "SweepResult",
    "run_concentration",
    "run_connectivity_transition",
    "run_substrate_comparison",
    "run_sweep",
    "HomophilyDistribution",
    "SurveyRecord",
    "homophily_distribution",
    "load_survey",
    "kernel_backend",
]
