"""Generators for the named graph families and the extremal constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .errors import AdjDimError, InvalidParameters
from .graph import (
    MAX_ORDER,
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
)

KINDS = (
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_bipartite",
    "join_complete_empty",
    "join_complete_complete_plus_one",
    "extremal_diameter",
    "omega_member",
    "example_six",
)

# short names accepted on the command line
ALIASES = {
    "kst": "complete_bipartite",
    "ks-empty": "join_complete_empty",
    "ks-kt-k1": "join_complete_complete_plus_one",
    "extremal": "extremal_diameter",
    "omega": "omega_member",
    "six": "example_six",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``kind:int,int,...``, e.g. ``extremal:8,5`` or ``omega:2,0,17``."""
        kind, sep, rest = text.strip().partition(":")
        kind = ALIASES.get(kind, kind)
        if not sep or kind not in KINDS:
            raise InvalidParameters(f"bad family spec {text!r}")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
        except ValueError:
            raise InvalidParameters(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)


def pair_index(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in column-major order; bit ``b`` of an edge mask selects pair ``b``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _mask_edges(vertices: list[int], mask: int) -> list[tuple[int, int]]:
    pairs = pair_index(len(vertices))
    if mask < 0 or mask >> len(pairs):
        raise InvalidParameters(f"edge mask {mask} wider than {len(pairs)} bits")
    return [(vertices[i], vertices[j]) for b, (i, j) in enumerate(pairs) if mask >> b & 1]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise InvalidParameters("K_{s,t} needs s, t >= 1")
    return join(empty_graph(s), empty_graph(t))


def join_complete_empty(s: int, t: int) -> Graph:
    """K_s joined with the edgeless graph on t vertices."""
    if s < 1 or t < 2:
        raise InvalidParameters("K_s v empty(t) needs s >= 1, t >= 2")
    return join(complete_graph(s), empty_graph(t))


def join_complete_complete_plus_one(s: int, t: int) -> Graph:
    """K_s joined with (K_t plus an isolated vertex)."""
    if s < 1 or t < 1:
        raise InvalidParameters("K_s v (K_t u K_1) needs s, t >= 1")
    return join(complete_graph(s), disjoint_union(complete_graph(t), complete_graph(1)))


def extremal_diameter_graph(n: int, d: int) -> Graph:
    """Path v_0..v_D (vertices 0..D) plus a clique on the remaining n-D-1
    vertices, each joined to v_0, v_1 and v_2."""
    if d < 3 or n < d + 1 or n > MAX_ORDER:
        raise InvalidParameters(f"need D >= 3 and D+1 <= n <= {MAX_ORDER}, got n={n}, D={d}")
    edges = [(i, i + 1) for i in range(d)]
    extra = list(range(d + 1, n))
    edges += [(i, u) for i in range(3) for u in extra]
    edges += list(combinations(extra, 2))
    return from_edges(n, edges)


def omega_profiles(k: int) -> list[tuple[int, ...]]:
    """All {1,2}-vectors of length k in lexicographic order."""
    return list(product((1, 2), repeat=k))


def omega_member(k: int, v_edges: int = 0, u_edges: int = 0) -> Graph:
    """Landmarks v_1..v_k (vertices 0..k-1) and one vertex per {1,2}-profile.

    The profile vertices follow at ``k..k+2^k-1`` in lexicographic profile
    order; landmark ``i`` is adjacent to a profile vertex iff entry ``i`` is 1.
    """
    if k < 1 or k + (1 << k) > MAX_ORDER:
        raise InvalidParameters(f"omega member needs 1 <= k and k + 2^k <= {MAX_ORDER}")
    profiles = omega_profiles(k)
    n = k + len(profiles)
    landmarks = list(range(k))
    profile_vertices = list(range(k, n))
    edges = [(i, k + j) for j, p in enumerate(profiles) for i in range(k) if p[i] == 1]
    edges += _mask_edges(landmarks, v_edges)
    edges += _mask_edges(profile_vertices, u_edges)
    return from_edges(n, edges)


def omega_mask_widths(k: int) -> tuple[int, int]:
    m = 1 << k
    return k * (k - 1) // 2, m * (m - 1) // 2


def iter_omega_members(k: int) -> Iterator[Graph]:
    vw, uw = omega_mask_widths(k)
    for v_edges in range(1 << vw):
        for u_edges in range(1 << uw):
            yield omega_member(k, v_edges, u_edges)


# vertex names for the six-vertex construction
SIX_NAMES = "abcdef"


def example_six_vertex(h_edges: int = 0, k_edges: int = 0) -> Graph:
    """Vertices a..f as 0..5 with fixed edges ac, ad, bd, be.

    ``h_edges`` (1 bit) toggles ab; ``k_edges`` (6 bits) picks edges among
    c, d, e, f in column-major pair order.
    """
    edges = [(0, 2), (0, 3), (1, 3), (1, 4)]
    edges += _mask_edges([0, 1], h_edges)
    edges += _mask_edges([2, 3, 4, 5], k_edges)
    return from_edges(6, edges)


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "complete_bipartite": 2,
    "join_complete_empty": 2,
    "join_complete_complete_plus_one": 2,
    "extremal_diameter": 2,
    "omega_member": (1, 3),
    "example_six": (0, 2),
}


def make_named(spec: FamilySpec) -> Graph:
    arity = _ARITY[spec.kind]
    lo, hi = arity if isinstance(arity, tuple) else (arity, arity)
    if not lo <= len(spec.params) <= hi:
        raise InvalidParameters(f"{spec.kind} takes {lo}..{hi} parameters, got {len(spec.params)}")
    p = spec.params
    try:
        if spec.kind == "path":
            return path_graph(*p)
        if spec.kind == "cycle":
            return cycle_graph(*p)
        if spec.kind in ("complete", "empty"):
            if p[0] < 1:
                raise InvalidParameters(f"{spec.kind} needs n >= 1")
            return complete_graph(p[0]) if spec.kind == "complete" else empty_graph(p[0])
        if spec.kind == "complete_bipartite":
            return complete_bipartite(*p)
        if spec.kind == "join_complete_empty":
            return join_complete_empty(*p)
        if spec.kind == "join_complete_complete_plus_one":
            return join_complete_complete_plus_one(*p)
        if spec.kind == "extremal_diameter":
            return extremal_diameter_graph(*p)
        if spec.kind == "omega_member":
            return omega_member(*p)
        return example_six_vertex(*p)
    except InvalidParameters:
        raise
    except AdjDimError as exc:
        raise InvalidParameters(str(exc)) from exc
