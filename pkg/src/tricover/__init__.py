"""Optimal coverings of a triangle of side n + d by homothetic unit triangles."""
from .bounds import (
    ThresholdExceeded,
    k_min,
    select_j_even,
    select_j_odd,
    threshold_even,
    threshold_odd,
)
from .geometry import (
    AffineMap,
    CoveringPlan,
    Method,
    Orientation,
    Placement,
    Point2,
    TargetTriangle,
)
from .methods import (
    bl3_cover,
    consolidated_cover,
    cs1_cover,
    cs1_generalized_cover,
    even_cover,
    even_cover_auto,
    grid_cover,
    naive_cover,
    odd_cover,
    odd_cover_auto,
)
from .verify import sample_check, verify_coverage

__all__ = [
    "AffineMap",
    "CoveringPlan",
    "Method",
    "Orientation",
    "Placement",
    "Point2",
    "TargetTriangle",
    "ThresholdExceeded",
    "bl3_cover",
    "consolidated_cover",
    "cs1_cover",
    "cs1_generalized_cover",
    "even_cover",
    "even_cover_auto",
    "grid_cover",
    "k_min",
    "naive_cover",
    "odd_cover",
    "odd_cover_auto",
    "sample_check",
    "select_j_even",
    "select_j_odd",
    "threshold_even",
    "threshold_odd",
    "verify_coverage",
]
