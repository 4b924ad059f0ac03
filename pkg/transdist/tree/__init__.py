from .generate import branch_shapes, path_tree, random_cycle, random_path, random_y_tree, y_tree
from .loader import format_tree, load_tree, parse_tree
from .metric import (
    Shape,
    TreeMetric,
    branch_of,
    build_tree,
    displacement,
    displacement_between,
    inefficiency,
    inefficiency_bounds,
    is_efficient,
    on_path,
    phi,
)

__all__ = [
    "Shape",
    "TreeMetric",
    "branch_of",
    "branch_shapes",
    "build_tree",
    "displacement",
    "displacement_between",
    "format_tree",
    "inefficiency",
    "inefficiency_bounds",
    "is_efficient",
    "load_tree",
    "on_path",
    "parse_tree",
    "path_tree",
    "phi",
    "random_cycle",
    "random_path",
    "random_y_tree",
    "y_tree",
]
