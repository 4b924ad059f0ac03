from .cycle import (
    balanced_pieces,
    balanced_td,
    central_pieces,
    central_td,
    classify_cycle,
    decompose_cycle,
    delta_cycle,
    path_td,
    unbalanced_td,
)
from .models import BalanceCounts, CycleClass, CycleKind, CycleResult, DistanceReport, Method, StepCounter, Transform
from .permutation import MergeConfig, decompose, decompose_merged, lower_bound, per_cycle_bound
from .sorting import is_sorting, normalize_sorting
from .verify import VerificationReport, verify_transform

__all__ = [
    "BalanceCounts",
    "CycleClass",
    "CycleKind",
    "CycleResult",
    "DistanceReport",
    "MergeConfig",
    "Method",
    "StepCounter",
    "Transform",
    "VerificationReport",
    "balanced_pieces",
    "balanced_td",
    "central_pieces",
    "central_td",
    "classify_cycle",
    "decompose",
    "decompose_cycle",
    "decompose_merged",
    "delta_cycle",
    "is_sorting",
    "lower_bound",
    "normalize_sorting",
    "path_td",
    "per_cycle_bound",
    "unbalanced_td",
    "verify_transform",
]
