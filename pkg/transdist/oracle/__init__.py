from .search import (
    DistanceTable,
    SearchBudget,
    UniformCostSearch,
    distance_table,
    exact_distance,
    exact_distance_pair,
)
from .weights import BaseWeights, TableWeights, TreeWeights

__all__ = [
    "BaseWeights",
    "DistanceTable",
    "SearchBudget",
    "TableWeights",
    "TreeWeights",
    "UniformCostSearch",
    "distance_table",
    "exact_distance",
    "exact_distance_pair",
]
