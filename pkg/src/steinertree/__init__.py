"""Euclidean Steiner tree toolkit.

Solves the planar Steiner tree problem by discretizing the 120-degree arc
space into candidate points and selecting among them with an attention-based
policy trained by policy gradients, alongside classical baselines and an
exact oracle for small instances.
"""

__version__ = "0.1.0"

from .geometry import Point, Side, SteinerArc, arc_partition, distance, fermat_point, steiner_arc
from .graph import PointSet, Tree, brute_force_mst, mst, tree_length

__all__ = [
    "Point",
    "Side",
    "SteinerArc",
    "arc_partition",
    "distance",
    "fermat_point",
    "steiner_arc",
    "PointSet",
    "Tree",
    "brute_force_mst",
    "mst",
    "tree_length",
]
