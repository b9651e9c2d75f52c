"""Small simple graphs stored as bit-packed adjacency rows.

Vertex ``v`` of a :class:`Graph` has its neighbourhood in ``rows[v]``: bit
``w`` of that integer is set iff ``vw`` is an edge.  Orders are capped at
:data:`MAX_ORDER` so every row fits a 32-bit word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyGraph,
    InvalidEdge,
    OrderOutOfRange,
    VertexOutOfRange,
)

MAX_ORDER = 32

# Distance to a vertex in another component.  min(2, UNREACHABLE) == 2, which
# is exactly the truncated adjacency of a disconnected pair.
UNREACHABLE = math.inf
# Diameter of a disconnected graph.
DISCONNECTED = math.inf


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order must lie in 0..{MAX_ORDER}, got {n}")


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.rows) != self.order:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidEdge(f"row {v} has bits beyond the order")
            if row >> v & 1:
                raise InvalidEdge(f"loop at vertex {v}")
            r = row
            while r:
                w = (r & -r).bit_length() - 1
                if not self.rows[w] >> v & 1:
                    raise InvalidEdge(f"asymmetric adjacency between {v} and {w}")
                r &= r - 1

    def __repr__(self):
        return f"Graph(order={self.order}, edges={list(self.edges())})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.order - 1}")

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.rows[v] >> w & 1)

    def neighbors(self, v: int) -> list[int]:
        return mask_to_vertices(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.order):
            for w in mask_to_vertices(self.rows[v] >> (v + 1) << (v + 1)):
                yield (v, w)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate and reversed pairs collapse."""
    _check_order(n)
    rows = [0] * n
    for v, w in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise InvalidEdge(f"edge ({v}, {w}) has an endpoint outside 0..{n - 1}")
        if v == w:
            raise InvalidEdge(f"loop ({v}, {v}) is not allowed")
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of ``h`` are shifted up by ``g.order``."""
    _check_order(g.order + h.order)
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    _check_order(g.order + h.order)
    shift = g.order
    h_side = h.vertex_mask << shift
    rows = tuple(r | h_side for r in g.rows) + tuple((r << shift) | g.vertex_mask for r in h.rows)
    return Graph(g.order + h.order, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise ValueError("perm must be a permutation of the vertices")
    rows = [0] * g.order
    for v, row in enumerate(g.rows):
        pv = perm[v]
        for w in mask_to_vertices(row):
            rows[pv] |= 1 << perm[w]
    return Graph(g.order, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``; new vertex ``i`` is ``vertices[i]``."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertices")
    edges = [(index[v], index[w]) for v in vertices for w in g.neighbors(v) if w in index and v < w]
    return from_edges(len(vertices), edges)


def bfs_distances(g: Graph, source: int) -> tuple:
    """Shortest-path distances from ``source``; :data:`UNREACHABLE` across components."""
    g.check_vertex(source)
    dist: list = [UNREACHABLE] * g.order
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in mask_to_vertices(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in mask_to_vertices(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return tuple(dist)


def distance_matrix(g: Graph) -> list[tuple]:
    return [bfs_distances(g, v) for v in range(g.order)]


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: Graph):
    """Largest pairwise distance, or :data:`DISCONNECTED`.  ``diameter(K_1) == 0``."""
    if g.order == 0:
        raise EmptyGraph("diameter of the null graph is undefined")
    best = 0
    for v in range(g.order):
        far = max(bfs_distances(g, v))
        if far == UNREACHABLE:
            return DISCONNECTED
        best = max(best, far)
    return best


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """One shortest ``u``-``v`` path, preferring the smallest predecessor at each step."""
    dist = bfs_distances(g, v)
    if dist[u] == UNREACHABLE:
        raise ValueError(f"no path between {u} and {v}")
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(min(w for w in g.neighbors(x) if dist[w] == dist[x] - 1))
    return path


def are_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        return False
    strip = ~((1 << u) | (1 << v))
    return g.rows[u] & strip == g.rows[v] & strip


def twin_partition(g: Graph) -> list[list[int]]:
    """Maximal classes of the twin relation, each sorted, ordered by least member.

    True twins (adjacent, equal closed neighbourhoods) and false twins
    (non-adjacent, equal open neighbourhoods) never share a class of size
    three or more, so grouping each vertex with the first twin-compatible
    class is well defined.
    """
    classes: list[list[int]] = []
    for v in range(g.order):
        for cls in classes:
            if are_twins(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes
