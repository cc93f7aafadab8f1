"""Ground-truth distance computations (truncated and full BFS)."""

from .oracle import (
    DistanceProfile,
    boiling_point,
    boiling_point_of,
    count_distance3_pairs,
    distance,
    distance_profile,
    wiener_index,
)

__all__ = [
    "DistanceProfile",
    "boiling_point",
    "boiling_point_of",
    "count_distance3_pairs",
    "distance",
    "distance_profile",
    "wiener_index",
]
