"""Exact computation of a generalized decomposition integral on finite spaces."""

from .alpha import AlphaCapacity, Segment, alpha_variation
from .capacity import (
    Capacity,
    GroundSpace,
    PropertyFlags,
    classify,
    evaluate,
    pushforward,
    random_capacity,
    variation,
)
from .curve import ScenarioInterval, SurvivalCurve
from .errors import CapacityTooLargeError, DomainError, GenerationError, GRLError, ScenarioError
from .extended import INF
from .formats import load_capacity, load_scenario, loads_capacity, loads_scenario
from .integral import GRLReport, ScenarioFinite, choquet, grl_integrate, integral, survival_finite
from .intervals import Interval
from .partition import AlphaPartition, TaggedPartition, common_refinement, refinement_envelopes, tagged_sum
from .rl import RLResult, rl_integrate
from .step import StepFunction
from .theorems import THEOREMS, check, generate, run_suite

__all__ = [
    "INF",
    "AlphaCapacity",
    "AlphaPartition",
    "Capacity",
    "CapacityTooLargeError",
    "DomainError",
    "GRLError",
    "GRLReport",
    "GenerationError",
    "GroundSpace",
    "Interval",
    "PropertyFlags",
    "RLResult",
    "ScenarioError",
    "ScenarioFinite",
    "ScenarioInterval",
    "Segment",
    "StepFunction",
    "SurvivalCurve",
    "TaggedPartition",
    "THEOREMS",
    "alpha_variation",
    "check",
    "choquet",
    "classify",
    "common_refinement",
    "evaluate",
    "generate",
    "grl_integrate",
    "integral",
    "load_capacity",
    "load_scenario",
    "loads_capacity",
    "loads_scenario",
    "pushforward",
    "random_capacity",
    "refinement_envelopes",
    "rl_integrate",
    "run_suite",
    "survival_finite",
    "tagged_sum",
    "variation",
]
