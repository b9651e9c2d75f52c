"""Canonical labelling and exhaustive enumeration of small graphs.

The canonical form of a graph is the graph6 string of the relabelling that
minimises the upper-triangle bit string (graph6 bit order), taken over all
vertex orders that list refined colour classes in a fixed, invariant order.
Because bits are consumed column by column, the string for a partial vertex
order is a prefix of every completion, so the search prunes on prefixes.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterator

from .errors import OrderOutOfRange
from .graph import Graph, are_twins, bfs_distances, mask_to_vertices, relabel
from .graph6 import graph6_decode, graph6_encode

MAX_CANON_ORDER = 10
MAX_ENUM_ORDER = 7
MAX_LABELED_ORDER = 6


def colour_classes(g: Graph) -> list[list[int]]:
    """Stable colour refinement seeded by degree; classes in invariant order."""
    colour = [r.bit_count() for r in g.rows]
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[w] for w in mask_to_vertices(g.rows[v]))))
            for v in range(g.order)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v in range(g.order):
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_order(g: Graph) -> list[int]:
    """Vertex order (position -> old vertex) realising the canonical string."""
    n = g.order
    if n > MAX_CANON_ORDER:
        raise OrderOutOfRange(f"canonical form supports order <= {MAX_CANON_ORDER}")
    cell_at: list[list[int]] = []
    for cls in colour_classes(g):
        cell_at.extend([cls] * len(cls))
    rows = g.rows
    best: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []
    chunks: list[int] = []

    def search(pos: int, used: int, tied: bool) -> None:
        nonlocal best, best_order
        if pos == n:
            if best is None or not tied:
                best = chunks[:]
                best_order = order[:]
            return
        tried: list[int] = []
        for v in cell_at[pos]:
            if used >> v & 1:
                continue
            # swapping two unplaced twins is an automorphism fixing the prefix
            if any(are_twins(g, v, t) for t in tried):
                continue
            tried.append(v)
            chunk = 0
            row = rows[v]
            for u in order:
                chunk = chunk << 1 | (row >> u & 1)
            still_tied = tied
            if best is not None and tied:
                if chunk > best[pos]:
                    continue
                still_tied = chunk == best[pos]
            order.append(v)
            chunks.append(chunk)
            search(pos + 1, used | 1 << v, still_tied)
            order.pop()
            chunks.pop()
            # a strictly smaller prefix replaced `best`; later siblings compare against it
            if best is not None and not tied:
                tied = True

    search(0, 0, True)
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.order
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(g, perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: equal iff the graphs are isomorphic."""
    return graph6_encode(canonical_graph(g)).encode("ascii")


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism invariant: degree sequence and sorted distance multiset."""
    dists = []
    for v in range(g.order):
        dists.extend(bfs_distances(g, v))
    return (tuple(sorted(g.degrees())), tuple(sorted(dists)))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labelled graphs on ``0..n-1``."""
    if not 0 <= n <= MAX_LABELED_ORDER:
        raise OrderOutOfRange(f"labelled enumeration supports order <= {MAX_LABELED_ORDER}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def _extensions(parent6: str) -> set[bytes]:
    parent = graph6_decode(parent6)
    n = parent.order
    out = set()
    for nbrs in range(1 << n):
        rows = [r | ((nbrs >> v & 1) << n) for v, r in enumerate(parent.rows)]
        rows.append(nbrs)
        out.add(canonical_form(Graph(n + 1, tuple(rows))))
    return out


@functools.lru_cache(maxsize=None)
def _classes(n: int, workers: int = 1) -> tuple[str, ...]:
    """Canonical graph6 strings of all order-n graphs, sorted."""
    if n == 1:
        return (graph6_encode(Graph(1, (0,))),)
    parents = _classes(n - 1, workers)
    found: set[bytes] = set()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extensions, parents, chunksize=8):
                found |= part
    else:
        for p in parents:
            found |= _extensions(p)
    return tuple(sorted(f.decode("ascii") for f in found))


def enumerate_graphs(n: int, connected_only: bool = False, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Order-n graphs are produced by attaching a new vertex, with every
    possible neighbourhood, to each order-(n-1) representative, then
    deduplicated by canonical form.  Output is sorted by canonical form.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise OrderOutOfRange(f"enumeration supports order 1..{MAX_ENUM_ORDER}, got {n}")
    from .graph import is_connected

    for text in _classes(n, 1 if n < 7 else workers):
        g = graph6_decode(text)
        if connected_only and not is_connected(g):
            continue
        yield g
