"""Exact adjacency and metric dimension by subset search.

For a landmark set ``W`` given as a bit mask, the truncated-distance vector of
a vertex ``v`` outside ``W`` is determined by ``rows[v] & W``: a set bit is a
1 entry and a clear bit a 2 entry.  Vertices inside ``W`` are told apart by
their unique 0 entry, so ``W`` resolves the graph iff those masks are
pairwise distinct over ``V \\ W``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateLandmark,
    EmptyGraph,
    EmptyLandmarkSet,
    OrderOutOfRange,
)
from .graph import (
    UNREACHABLE,
    Graph,
    diameter,
    distance_matrix,
    induced_subgraph,
    is_connected,
    shortest_path,
    bfs_distances,
    twin_partition,
    vertices_to_mask,
)

ADJACENCY = "adjacency"
METRIC = "metric"


@dataclass(frozen=True)
class DimensionResult:
    value: int
    basis: tuple[int, ...]
    kind: str
    stats: dict = field(default_factory=dict, compare=False)


def truncated_adjacency(g: Graph, v: int, w: int) -> int:
    g.check_vertex(v)
    g.check_vertex(w)
    if v == w:
        return 0
    return 1 if g.has_edge(v, w) else 2


def _check_landmarks(g: Graph, landmarks: Sequence[int]) -> None:
    if len(landmarks) == 0:
        raise EmptyLandmarkSet("landmark set must be non-empty")
    if len(set(landmarks)) != len(landmarks):
        raise DuplicateLandmark(f"repeated landmark in {list(landmarks)}")
    for w in landmarks:
        g.check_vertex(w)


def adjacency_representation(g: Graph, v: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    _check_landmarks(g, landmarks)
    return tuple(truncated_adjacency(g, v, w) for w in landmarks)


def _resolves_mask(rows: tuple[int, ...], full: int, w: int) -> bool:
    seen = set()
    outside = full & ~w
    while outside:
        low = outside & -outside
        key = rows[low.bit_length() - 1] & w
        if key in seen:
            return False
        seen.add(key)
        outside ^= low
    return True


def is_adjacency_resolving(g: Graph, landmarks) -> bool:
    landmarks = list(landmarks)
    _check_landmarks(g, landmarks)
    return _resolves_mask(g.rows, g.vertex_mask, vertices_to_mask(landmarks))


def metric_representation(g: Graph, v: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    _check_landmarks(g, landmarks)
    if not is_connected(g):
        raise DisconnectedGraph("metric representation needs a connected graph")
    dist = bfs_distances(g, v)
    return tuple(dist[w] for w in landmarks)


def _metric_resolves(dist: list[tuple], landmarks: Sequence[int]) -> bool:
    reps = {tuple(row[w] for w in landmarks) for row in dist}
    return len(reps) == len(dist)


def is_metric_resolving(g: Graph, landmarks) -> bool:
    landmarks = list(landmarks)
    _check_landmarks(g, landmarks)
    if not is_connected(g):
        raise DisconnectedGraph("metric resolving sets need a connected graph")
    return _metric_resolves(distance_matrix(g), landmarks)


def lower_bound_population(n: int) -> int:
    """Least positive ``k`` with ``k + 2**k >= n``; no smaller set can resolve ``n`` vertices."""
    k = 1
    while k + (1 << k) < n:
        k += 1
    return k


def lower_bound_twins(g: Graph) -> int:
    """Each twin class keeps at most one vertex outside a resolving set."""
    return sum(len(c) - 1 for c in twin_partition(g))


def upper_bound_diameter(g: Graph) -> int:
    if g.order < 2:
        raise OrderOutOfRange("diameter bound needs order >= 2")
    d = diameter(g)
    if d == UNREACHABLE:
        raise DisconnectedGraph("diameter bound needs a connected graph")
    return g.order - d - 1 + (2 * d + 4) // 5


def path_cycle_dimension_formula(n: int) -> int:
    if n < 4:
        raise OrderOutOfRange("the closed form holds for n >= 4")
    return (2 * n + 2) // 5


def resolving_set_from_diametral_path(g: Graph) -> list[int]:
    """Every vertex off one diametral path, plus an adjacency basis of that path."""
    if g.order < 2:
        raise OrderOutOfRange("needs order >= 2")
    dist = distance_matrix(g)
    if any(UNREACHABLE in row for row in dist):
        raise DisconnectedGraph("needs a connected graph")
    d = max(max(row) for row in dist)
    u, v = next((a, b) for a in range(g.order) for b in range(g.order) if dist[a][b] == d)
    path = shortest_path(g, u, v)
    # a shortest path is induced, so this subgraph is P_{D+1}
    sub = adjacency_dimension(induced_subgraph(g, path))
    on_path = set(path)
    chosen = [x for x in range(g.order) if x not in on_path]
    chosen += [path[i] for i in sub.basis]
    return sorted(chosen)


def _twin_masks(g: Graph) -> list[int]:
    return [vertices_to_mask(c) for c in twin_partition(g) if len(c) > 1]


def adjacency_dimension(g: Graph, mode: str = "pruned") -> DimensionResult:
    """Exact adjacency dimension with the lexicographically least basis.

    ``mode="naive"`` tries every subset by increasing size and compares full
    representation vectors; it shares no shortcuts with the pruned search and
    serves as its oracle.
    """
    n = g.order
    if n == 0:
        raise EmptyGraph("adjacency dimension of the null graph is undefined")
    if mode not in ("pruned", "naive"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "naive":
        return _naive_adjacency(g)
    if n == 1:
        # resolving sets are non-empty, so K_1 has dimension 1
        return DimensionResult(1, (0,), ADJACENCY, {"mode": mode, "sets_tested": 0})

    lo = max(lower_bound_population(n), lower_bound_twins(g), 1)
    hi = n - 1
    bounds = ["population", "twins"]
    if is_connected(g):
        hi = min(hi, upper_bound_diameter(g))
        bounds.append("diameter")
    twin_masks = _twin_masks(g)
    rows, full = g.rows, g.vertex_mask
    tested = 0
    for k in range(lo, hi + 1):
        for combo in combinations(range(n), k):
            w = vertices_to_mask(combo)
            outside = full & ~w
            if any((outside & t) & ((outside & t) - 1) for t in twin_masks):
                continue
            tested += 1
            if _resolves_mask(rows, full, w):
                stats = {"mode": "pruned", "sets_tested": tested, "lower_bound": lo,
                         "upper_bound": hi, "bounds_used": bounds}
                return DimensionResult(k, combo, ADJACENCY, stats)
    raise AssertionError(f"no resolving set within the proven upper bound {hi}")


def _naive_adjacency(g: Graph) -> DimensionResult:
    n = g.order
    tested = 0
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            tested += 1
            reps = {adjacency_representation(g, v, combo) for v in range(n)}
            if len(reps) == n:
                return DimensionResult(k, combo, ADJACENCY, {"mode": "naive", "sets_tested": tested})
    raise AssertionError("the full vertex set always resolves")


def metric_dimension(g: Graph) -> DimensionResult:
    n = g.order
    if n == 0:
        raise EmptyGraph("metric dimension of the null graph is undefined")
    dist = distance_matrix(g)
    if any(UNREACHABLE in row for row in dist):
        raise DisconnectedGraph("metric dimension needs a connected graph")
    if n == 1:
        return DimensionResult(1, (0,), METRIC, {"sets_tested": 0})
    tested = 0
    for k in range(1, n):
        for combo in combinations(range(n), k):
            tested += 1
            if _metric_resolves(dist, combo):
                return DimensionResult(k, combo, METRIC, {"sets_tested": tested})
    raise AssertionError("any n-1 vertices resolve a connected graph")
