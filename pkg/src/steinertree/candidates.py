"""Candidate Steiner points for one growth step.

Three strategies produce the discrete set a policy chooses from: arcs between
k-nearest-neighbor pairs, arcs over the current MST edges, or a fixed lattice
over the bounding box.  Arc-based candidates all lie on the 120-degree locus
of their generating pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Side, arc_partition, steiner_arc
from .graph import PointSet, mst

METHODS = ("knn", "mst", "grid")


@dataclass
class CandidateConfig:
    method: str = "mst"
    k_star: int = 9
    k_prime: int = 3
    grid_resolution: int = 5
    both_sides: bool = True
    min_separation: float = 1e-6

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown candidate method {self.method!r}")
        if self.k_star < 1:
            raise ValueError("k_star must be >= 1")
        if self.k_prime < 1:
            raise ValueError("k_prime must be >= 1")
        if self.grid_resolution < 2:
            raise ValueError("grid_resolution must be >= 2")


@dataclass
class CandidateSet:
    """Candidate coordinates plus, per point, what generated it.

    Provenance is ("pair", u, v) for arc candidates (indices into the point
    set they were generated from) or ("grid", ix, iy) for lattice joints.
    """

    points: np.ndarray
    provenance: list[tuple] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)


def _filter_and_pack(raw_pts, raw_prov, existing: np.ndarray, min_sep: float) -> CandidateSet:
    """Drop candidates that collide with existing points or earlier candidates."""
    kept: list[tuple[float, float]] = []
    prov: list[tuple] = []
    for p, tag in zip(raw_pts, raw_prov):
        pa = np.asarray(p, dtype=np.float64)
        if len(existing) and np.hypot(*(existing - pa).T).min() < min_sep:
            continue
        if kept and np.hypot(*(np.asarray(kept) - pa).T).min() < min_sep:
            continue
        kept.append((float(pa[0]), float(pa[1])))
        prov.append(tag)
    return CandidateSet(np.asarray(kept, dtype=np.float64).reshape(-1, 2), prov)


def _arc_candidates_for_pairs(coords, pairs, cfg: CandidateConfig) -> CandidateSet:
    raw_pts = []
    raw_prov = []
    sides = (Side.LEFT, Side.RIGHT) if cfg.both_sides else (Side.LEFT,)
    for u, v in pairs:
        for side in sides:
            arc = steiner_arc(coords[u], coords[v], side)
            for p in arc_partition(arc, cfg.k_star):
                raw_pts.append(p)
                raw_prov.append(("pair", u, v))
    return _filter_and_pack(raw_pts, raw_prov, coords, cfg.min_separation)


def knn_candidates(points: PointSet, cfg: CandidateConfig) -> CandidateSet:
    """Arc candidates between every point and its k_prime nearest neighbors.

    Equidistant neighbors are ranked by index, and unordered pairs are
    deduplicated, so output is deterministic and bounded by
    2 * k_star * k_prime * n points.
    """
    coords = points.coords
    n = len(coords)
    if n < 2:
        raise ValueError("knn_candidates needs at least two points")
    if cfg.k_prime >= n:
        raise ValueError("k_prime must be smaller than the point count")
    diff = coords[:, None, :] - coords[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    pairs = set()
    for v in range(n):
        order = sorted((dist[v, u], u) for u in range(n) if u != v)
        for _, u in order[: cfg.k_prime]:
            pairs.add((min(u, v), max(u, v)))
    return _arc_candidates_for_pairs(coords, sorted(pairs), cfg)


def mst_candidates(points: PointSet, cfg: CandidateConfig) -> CandidateSet:
    """Arc candidates over the edges of the current minimum spanning tree."""
    if len(points) < 2:
        raise ValueError("mst_candidates needs at least two points")
    tree = mst(points)
    return _arc_candidates_for_pairs(points.coords, tree.edges, cfg)


def grid_candidates(points: PointSet, cfg: CandidateConfig) -> CandidateSet:
    """Interior lattice joints of the bounding box: a g x g grid at fractions
    i/(g+1), i = 1..g, of each axis."""
    coords = points.coords
    if len(coords) < 1:
        raise ValueError("grid_candidates needs at least one point")
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)
    if np.all(hi - lo < 1e-12):
        raise ValueError("grid_candidates: degenerate bounding box")
    g = cfg.grid_resolution
    fracs = np.arange(1, g + 1) / (g + 1)
    xs = lo[0] + (hi[0] - lo[0]) * fracs
    ys = lo[1] + (hi[1] - lo[1]) * fracs
    raw_pts = []
    raw_prov = []
    for iy, y in enumerate(ys):
        for ix, x in enumerate(xs):
            raw_pts.append((x, y))
            raw_prov.append(("grid", ix, iy))
    return _filter_and_pack(raw_pts, raw_prov, coords, cfg.min_separation)


_GENERATORS = {"knn": knn_candidates, "mst": mst_candidates, "grid": grid_candidates}


def generate_candidates(points: PointSet, cfg: CandidateConfig) -> CandidateSet:
    """Dispatch to the configured strategy."""
    return _GENERATORS[cfg.method](points, cfg)
