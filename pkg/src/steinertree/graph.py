"""Point sets and Euclidean minimum spanning trees.

The solver only ever needs full MST recomputation on small dense instances,
so Prim's O(n^2) algorithm on the complete graph is used, with deterministic
tie-breaking so identical inputs always give identical trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

MIN_POINT_SEPARATION = 1e-9


class PointSet:
    """An ordered set of 2-D points; the first ``n_terminals`` are terminals.

    Points appended later (Steiner points) follow the terminals.  No two
    points may lie within 1e-9 of each other.
    """

    __slots__ = ("coords", "n_terminals")

    def __init__(self, coords, n_terminals: int | None = None, validate: bool = True):
        arr = np.asarray(coords, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"PointSet expects an (n, 2) array, got {arr.shape}")
        self.coords = arr
        self.n_terminals = len(arr) if n_terminals is None else int(n_terminals)
        if validate:
            self._validate()

    def _validate(self):
        if not (1 <= self.n_terminals <= len(self.coords)):
            raise ValueError("PointSet needs at least one terminal")
        if not np.isfinite(self.coords).all():
            raise ValueError("PointSet coordinates must be finite")
        if len(self.coords) > 1:
            d2 = _sq_dist_matrix(self.coords)
            np.fill_diagonal(d2, np.inf)
            if d2.min() < MIN_POINT_SEPARATION ** 2:
                raise ValueError("PointSet contains points closer than 1e-9")

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def terminals(self) -> np.ndarray:
        return self.coords[: self.n_terminals]

    @property
    def steiner_points(self) -> np.ndarray:
        return self.coords[self.n_terminals:]

    def with_point(self, point) -> "PointSet":
        """New PointSet with one extra (Steiner) point appended."""
        pt = np.asarray(point, dtype=np.float64).reshape(1, 2)
        return PointSet(np.vstack([self.coords, pt]), self.n_terminals)


@dataclass
class Tree:
    """A spanning tree given as index pairs into some PointSet."""

    edges: list[tuple[int, int]]
    length: float = field(default=0.0)


def _sq_dist_matrix(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def tree_length(t: Tree, ps: PointSet) -> float:
    """Sum of Euclidean edge lengths; raises on out-of-range indices."""
    n = len(ps)
    total = 0.0
    for u, v in t.edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"tree edge ({u}, {v}) references a missing point")
        total += float(np.hypot(*(ps.coords[u] - ps.coords[v])))
    return total


def mst(ps: PointSet) -> Tree:
    """Euclidean minimum spanning tree by Prim's algorithm.

    Ties are broken toward the lowest vertex index (and the earliest parent
    found), which makes the edge set deterministic.
    """
    n = len(ps)
    if n == 0:
        raise ValueError("mst: empty point set")
    if n == 1:
        return Tree([], 0.0)
    dist = np.sqrt(_sq_dist_matrix(ps.coords))
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    key = dist[0].copy()
    key[0] = np.inf
    parent = np.zeros(n, dtype=np.int64)
    edges: list[tuple[int, int]] = []
    total = 0.0
    for _ in range(n - 1):
        j = int(np.argmin(np.where(in_tree, np.inf, key)))
        in_tree[j] = True
        total += float(key[j])
        u, v = int(parent[j]), j
        edges.append((u, v) if u < v else (v, u))
        better = dist[j] < key
        better &= ~in_tree
        key[better] = dist[j][better]
        parent[better] = j
        key[j] = np.inf
    edges.sort()
    return Tree(edges, total)


def _prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for s in seq:
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def brute_force_mst(ps: PointSet) -> Tree:
    """Exhaustive minimum over all spanning trees via Prufer sequences.

    Intended purely as a test oracle; refuses n > 8 where the n^(n-2)
    enumeration blows up.
    """
    n = len(ps)
    if n > 8:
        raise ValueError("brute_force_mst: refusing n > 8")
    if n == 0:
        raise ValueError("brute_force_mst: empty point set")
    if n == 1:
        return Tree([], 0.0)
    if n == 2:
        return Tree([(0, 1)], float(np.hypot(*(ps.coords[0] - ps.coords[1]))))
    dist = np.sqrt(_sq_dist_matrix(ps.coords)).tolist()
    best_len = float("inf")
    best_edges = None
    for seq in product(range(n), repeat=n - 2):
        edges = _prufer_edges(seq, n)
        total = 0.0
        for u, v in edges:
            total += dist[u][v]
        if total < best_len:
            best_len = total
            best_edges = edges
    edges = sorted((u, v) if u < v else (v, u) for u, v in best_edges)
    return Tree(edges, best_len)
