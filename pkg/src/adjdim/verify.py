"""Exhaustive checks of the adjacency-dimension results over small graphs.

Every check walks a finite universe (all isomorphism classes up to some
order, or a constructed family), compares the stated property with what the
solver computes, and collects counterexamples as ``(graph6, expected,
actual)`` triples.  Characterisation lists are plain functions of the order
so tests can perturb them and watch the verdict flip.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .canon import MAX_ENUM_ORDER, canonical_graph6
from .census import records_for_order
from .errors import InvalidParameters, ScopeTooLarge
from .families import (
    complete_bipartite,
    cycle_graph,
    extremal_diameter_graph,
    iter_omega_members,
    join_complete_complete_plus_one,
    join_complete_empty,
    omega_mask_widths,
    path_graph,
)
from .graph import (
    Graph,
    are_twins,
    complement,
    complete_graph,
    diameter,
    empty_graph,
)
from .graph6 import graph6_decode, graph6_encode
from .solver import (
    adjacency_dimension,
    is_adjacency_resolving,
    lower_bound_population,
    path_cycle_dimension_formula,
    resolving_set_from_diametral_path,
    upper_bound_diameter,
)


@dataclass
class VerificationReport:
    theorem_id: str
    scope: str
    counterexamples: list = field(default_factory=list)
    checked: int = 0
    details: dict = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if not self.counterexamples else "fail"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, graph6: str, expected, actual) -> None:
        self.counterexamples.append((graph6, str(expected), str(actual)))

    def finish(self, started: float) -> "VerificationReport":
        self.counterexamples = sorted(set(self.counterexamples))
        self.runtime = time.perf_counter() - started
        return self

    def summary(self) -> dict:
        """Machine-readable form; excludes wall-clock time so reruns compare equal."""
        return {
            "theorem_id": self.theorem_id,
            "scope": self.scope,
            "verdict": self.verdict,
            "checked": self.checked,
            "counterexamples": [list(c) for c in self.counterexamples],
            "details": self.details,
        }

    def to_text(self) -> str:
        lines = [
            f"== {self.theorem_id}: {self.verdict.upper()}",
            f"scope: {self.scope}",
            f"checked: {self.checked}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        for g6, exp, act in self.counterexamples:
            lines.append(f"  {g6}  expected: {exp}  actual: {act}")
        for key, value in sorted(self.details.items()):
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        return "\n".join(lines)


def _check_scope(max_n: int, lo: int = 1) -> None:
    if max_n > MAX_ENUM_ORDER:
        raise ScopeTooLarge(f"max_n {max_n} exceeds the enumeration limit {MAX_ENUM_ORDER}")
    if max_n < lo:
        raise InvalidParameters(f"max_n must be at least {lo}")


def _canon_set(graphs: Iterable[Graph]) -> set[str]:
    return {canonical_graph6(g) for g in graphs}


def _with_complements(graphs: Iterable[Graph]) -> list[Graph]:
    out = []
    for g in graphs:
        out += [g, complement(g)]
    return out


# -- characterisation lists ------------------------------------------------

def dim1_graphs() -> list[Graph]:
    """P_1, P_2, P_3 and the complements of P_2 and P_3."""
    return [path_graph(1), path_graph(2), path_graph(3),
            complement(path_graph(2)), complement(path_graph(3))]


def dimn1_graphs(n: int) -> list[Graph]:
    return [complete_graph(n), empty_graph(n)]


def nminus2_graphs(n: int) -> list[Graph]:
    """Every listed graph of order n for dim2 = n - 2, before complementing."""
    out = [path_graph(4)] if n == 4 else []
    for s in range(1, n):
        out.append(complete_bipartite(s, n - s))
        if n - s >= 2:
            out.append(join_complete_empty(s, n - s))
        if n - s - 1 >= 1:
            out.append(join_complete_complete_plus_one(s, n - s - 1))
    return out


def order5_dim3_graphs() -> list[Graph]:
    """The seven order-5 graphs which, with complements, have dim2 != 2."""
    return [
        complete_graph(5),
        complete_bipartite(1, 4),
        complete_bipartite(2, 3),
        join_complete_empty(3, 2),
        join_complete_empty(2, 3),
        join_complete_complete_plus_one(1, 3),
        join_complete_complete_plus_one(2, 2),
    ]


# -- checks ----------------------------------------------------------------

def verify_dim1_and_dimn1(max_n: int = 7, workers: int = 1,
                          dim1_list: Callable[[], list[Graph]] = dim1_graphs,
                          dimn1_list: Callable[[int], list[Graph]] = dimn1_graphs) -> VerificationReport:
    """dim2 = 1 exactly for the five small graphs; dim2 = n-1 exactly for K_n and its complement."""
    _check_scope(max_n)
    t0 = time.perf_counter()
    rep = VerificationReport("dim1-dimn1", f"all graphs of order 1..{max_n}")
    ones = _canon_set(dim1_list())
    for n in range(1, max_n + 1):
        extremes = _canon_set(dimn1_list(n))
        for r in records_for_order(n, workers):
            rep.checked += 1
            listed = r.graph6 in ones
            if listed != (r.dim2 == 1):
                rep.fail(r.graph6, f"dim2 == 1 is {listed}", f"dim2 = {r.dim2}")
            # K_1 has dim2 = 1 by convention, so the n-1 statement starts at n = 2
            if n >= 2:
                listed = r.graph6 in extremes
                if listed != (r.dim2 == n - 1):
                    rep.fail(r.graph6, f"dim2 == n-1 is {listed}", f"dim2 = {r.dim2}")
    return rep.finish(t0)


def verify_adjacency_results(max_n: int = 7, path_max: int = 12, workers: int = 1) -> VerificationReport:
    """Diameter-2 equality, dim <= dim2, complement invariance, path/cycle formula."""
    _check_scope(max_n)
    t0 = time.perf_counter()
    rep = VerificationReport(
        "adjacency-results",
        f"all graphs of order 1..{max_n}; paths and cycles of order 4..{path_max}",
    )
    counts = {"diameter2": 0, "connected": 0, "complement_pairs": 0, "path_cycle": 0}
    for n in range(1, max_n + 1):
        by_key = {r.graph6: r for r in records_for_order(n, workers)}
        for r in by_key.values():
            rep.checked += 1
            g = graph6_decode(r.graph6)
            co = by_key[canonical_graph6(complement(g))]
            counts["complement_pairs"] += 1
            if co.dim2 != r.dim2:
                rep.fail(r.graph6, f"dim2(complement) = {r.dim2}", f"dim2(complement) = {co.dim2}")
            if r.connected:
                counts["connected"] += 1
                if r.dim > r.dim2:
                    rep.fail(r.graph6, "dim <= dim2", f"dim = {r.dim}, dim2 = {r.dim2}")
                if r.diameter == 2:
                    counts["diameter2"] += 1
                    if r.dim != r.dim2:
                        rep.fail(r.graph6, "dim == dim2 at diameter 2", f"dim = {r.dim}, dim2 = {r.dim2}")
    values = {}
    for n in range(4, path_max + 1):
        want = path_cycle_dimension_formula(n)
        got = []
        for g in (path_graph(n), cycle_graph(n)):
            counts["path_cycle"] += 1
            rep.checked += 1
            val = adjacency_dimension(g).value
            got.append(val)
            if val != want:
                rep.fail(graph6_encode(g), f"dim2 = {want}", f"dim2 = {val}")
        values[str(n)] = got
    rep.details = {"counts": counts, "path_cycle_dim2": values}
    return rep.finish(t0)


def verify_twin_property(max_n: int = 7, workers: int = 1) -> VerificationReport:
    """No resolving set omits both members of a twin pair."""
    _check_scope(max_n)
    t0 = time.perf_counter()
    rep = VerificationReport("twins", f"all twin pairs of all graphs of order 2..{max_n}")
    pairs = 0
    for n in range(2, max_n + 1):
        for r in records_for_order(n, workers):
            g = graph6_decode(r.graph6)
            for u in range(n):
                for v in range(u + 1, n):
                    if not are_twins(g, u, v):
                        continue
                    pairs += 1
                    rest = [x for x in range(n) if x not in (u, v)]
                    # with n = 2 the remainder is empty, which resolves nothing
                    if rest and is_adjacency_resolving(g, rest):
                        rep.fail(r.graph6, f"V minus {{{u},{v}}} not resolving", "resolving")
            rep.checked += 1
    rep.details = {"twin_pairs": pairs}
    return rep.finish(t0)


def verify_diameter_bound(max_n: int = 7, workers: int = 1) -> VerificationReport:
    """dim2 <= n - D - 1 + floor((2D+4)/5), and the path-based set realises it."""
    _check_scope(max_n)
    t0 = time.perf_counter()
    rep = VerificationReport("diameter-bound", f"connected graphs of order 2..{max_n}")
    tight = 0
    for n in range(2, max_n + 1):
        for r in records_for_order(n, workers):
            if not r.connected:
                continue
            rep.checked += 1
            g = graph6_decode(r.graph6)
            bound = upper_bound_diameter(g)
            if r.dim2 > bound:
                rep.fail(r.graph6, f"dim2 <= {bound}", f"dim2 = {r.dim2}")
            tight += r.dim2 == bound
            w = resolving_set_from_diametral_path(g)
            if len(w) > bound or not is_adjacency_resolving(g, w):
                rep.fail(r.graph6, f"path construction resolving with size <= {bound}", f"set {w}")
    rep.details = {"bound_attained": tight}
    return rep.finish(t0)


def verify_extremal_construction(d_list: Iterable[int] = (5, 7), n_max: int = 12) -> VerificationReport:
    """The path-plus-clique graph has diameter D and dim2 = n - D - 1 + floor((2D+4)/5)."""
    d_list = tuple(d_list)
    for d in d_list:
        if d < 5 or d % 5 not in (0, 2):
            raise InvalidParameters(f"D must be 5k or 5k+2 with k >= 1, got {d}")
    t0 = time.perf_counter()
    rep = VerificationReport("extremal", f"D in {list(d_list)}, D+1 <= n <= {n_max}")
    values = {}
    for d in d_list:
        for n in range(d + 1, n_max + 1):
            g = extremal_diameter_graph(n, d)
            rep.checked += 1
            key = graph6_encode(g)
            got_d = diameter(g)
            if got_d != d:
                rep.fail(key, f"diameter {d}", f"diameter {got_d}")
            val = adjacency_dimension(g).value
            exact = n - d + (2 * d - 4) // 5
            bound = n - d - 1 + (2 * d + 4) // 5
            if val != exact or val != bound:
                rep.fail(key, f"dim2 = {bound}", f"dim2 = {val}")
            values[f"D={d},n={n}"] = val
    rep.details = {"dim2": values}
    return rep.finish(t0)


def verify_nminus2_characterization(max_n: int = 7, workers: int = 1,
                                    candidates: Callable[[int], list[Graph]] = nminus2_graphs
                                    ) -> VerificationReport:
    """dim2 = n - 2 exactly when G or its complement is one of the listed families."""
    _check_scope(max_n, lo=4)
    t0 = time.perf_counter()
    rep = VerificationReport("nminus2", f"all graphs of order 4..{max_n}")
    hits = {}
    for n in range(4, max_n + 1):
        listed = _canon_set(_with_complements(candidates(n)))
        hits[str(n)] = 0
        for r in records_for_order(n, workers):
            rep.checked += 1
            is_listed = r.graph6 in listed
            hits[str(n)] += r.dim2 == n - 2
            if is_listed != (r.dim2 == n - 2):
                rep.fail(r.graph6, f"dim2 == n-2 is {is_listed}", f"dim2 = {r.dim2}")
    rep.details = {"classes_with_dim2_n_minus_2": hits}
    return rep.finish(t0)


def verify_population_bound_and_omega(k_list: Iterable[int] = (1, 2), max_n: int = 7,
                                      workers: int = 1) -> VerificationReport:
    """n <= dim2 + 2^dim2 everywhere, and order-(k + 2^k) graphs of dim2 = k are the omega family."""
    k_list = tuple(k_list)
    if any(k not in (1, 2) for k in k_list):
        raise InvalidParameters("omega checks run for k in {1, 2}")
    _check_scope(max_n)
    t0 = time.perf_counter()
    rep = VerificationReport("omega", f"all graphs of order 1..{max_n}; omega families k in {list(k_list)}")
    for n in range(1, max_n + 1):
        for r in records_for_order(n, workers):
            rep.checked += 1
            if n > r.dim2 + (1 << r.dim2):
                rep.fail(r.graph6, "n <= dim2 + 2^dim2", f"n = {n}, dim2 = {r.dim2}")
            if r.dim2 < lower_bound_population(n):
                rep.fail(r.graph6, "dim2 >= population bound", f"dim2 = {r.dim2}")
    details = {}
    for k in k_list:
        n = k + (1 << k)
        landmarks = list(range(k))
        labeled = 0
        members = set()
        for g in iter_omega_members(k):
            labeled += 1
            rep.checked += 1
            key = graph6_encode(g)
            val = adjacency_dimension(g).value
            if g.order != n or val != k or not is_adjacency_resolving(g, landmarks):
                rep.fail(key, f"order {n}, dim2 {k}, landmarks resolving", f"order {g.order}, dim2 {val}")
            members.add(canonical_graph6(g))
        widths = omega_mask_widths(k)
        found = set()
        for r in records_for_order(n, workers):
            if r.dim2 == k:
                found.add(r.graph6)
                if r.graph6 not in members:
                    rep.fail(r.graph6, f"isomorphic to an omega member (k={k})", "no match")
        details[f"k={k}"] = {
            "labeled_count": labeled,
            "formula_count": 2 ** (widths[0] + widths[1]),
            "isomorphism_classes": len(members),
            "enumerated_classes_with_dim2_k": len(found),
        }
    rep.details = details
    return rep.finish(t0)


def verify_dim2_classification(n: int, workers: int = 1,
                               order5_list: Callable[[], list[Graph]] = order5_dim3_graphs
                               ) -> VerificationReport:
    """Which graphs of order n have dim2 = 2, order by order up to 6."""
    if not 1 <= n <= 6:
        raise InvalidParameters(f"classification covers orders 1..6, got {n}")
    t0 = time.perf_counter()
    rep = VerificationReport(f"dim2-n{n}", f"all graphs of order {n}")
    if n <= 2:
        def expect(key):
            return False
    elif n == 3:
        allowed = _canon_set([complete_graph(3), empty_graph(3)])

        def expect(key):
            return key in allowed
    elif n == 4:
        banned = _canon_set([complete_graph(4), empty_graph(4)])

        def expect(key):
            return key not in banned
    elif n == 5:
        banned = _canon_set(_with_complements(order5_list()))

        def expect(key):
            return key not in banned
    else:
        members = _canon_set(iter_omega_members(2))

        def expect(key):
            return key in members
    for r in records_for_order(n, workers):
        rep.checked += 1
        # orders 1 and 2 assert dim2 = 1 instead
        if n <= 2 and r.dim2 != 1:
            rep.fail(r.graph6, "dim2 = 1", f"dim2 = {r.dim2}")
        want = expect(r.graph6)
        if want != (r.dim2 == 2):
            rep.fail(r.graph6, f"dim2 == 2 is {want}", f"dim2 = {r.dim2}")
    rep.details = {"classes_with_dim2_2": sum(r.dim2 == 2 for r in records_for_order(n, workers))}
    return rep.finish(t0)


def explore_open_question(d: int, n_range: Iterable[int], workers: int = 1) -> VerificationReport:
    """Search for diameter-D graphs meeting the diameter bound; reports positives only."""
    if not 3 <= d <= 6:
        raise InvalidParameters(f"exploration covers 3 <= D <= 6, got {d}")
    t0 = time.perf_counter()
    n_range = [n for n in n_range if n >= d + 1]
    rep = VerificationReport("explore", f"D = {d}, n in {n_range}: census graphs (n <= {MAX_ENUM_ORDER}) "
                                        "and the path-plus-clique construction")
    findings = {}
    for n in n_range:
        target = n - d - 1 + (2 * d + 4) // 5
        examined = 0
        witness = None
        if n <= MAX_ENUM_ORDER:
            for r in records_for_order(n, workers):
                if r.diameter != d:
                    continue
                examined += 1
                if r.dim2 == target and witness is None:
                    witness = r.graph6
        g = extremal_diameter_graph(n, d)
        examined += 1
        if witness is None and adjacency_dimension(g).value == target:
            witness = graph6_encode(g)
        rep.checked += examined
        findings[str(n)] = {"target": target, "examined": examined,
                            "attained": witness is not None, "witness": witness}
    rep.details = {"findings": findings}
    return rep.finish(t0)


CHECKS = (
    "dim1-dimn1",
    "adjacency-results",
    "twins",
    "diameter-bound",
    "extremal",
    "nminus2",
    "omega",
    "dim2-classification",
)


def run_checks(ids: Iterable[str], max_n: int = 7, workers: int = 1,
               extended: bool = False) -> list[VerificationReport]:
    ids = list(CHECKS) if list(ids) == ["all"] else list(ids)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise InvalidParameters(f"unknown check id(s): {', '.join(unknown)}")
    _check_scope(max_n)
    reports = []
    for cid in ids:
        if cid == "dim1-dimn1":
            reports.append(verify_dim1_and_dimn1(max_n, workers))
        elif cid == "adjacency-results":
            reports.append(verify_adjacency_results(max_n, workers=workers))
        elif cid == "twins":
            reports.append(verify_twin_property(max_n, workers))
        elif cid == "diameter-bound":
            reports.append(verify_diameter_bound(max_n, workers))
        elif cid == "extremal":
            d_list, n_max = ((5, 7, 10), 13) if extended else ((5, 7), 12)
            reports.append(verify_extremal_construction(d_list, n_max))
        elif cid == "nminus2":
            if max_n >= 4:
                reports.append(verify_nminus2_characterization(max_n, workers))
        elif cid == "omega":
            reports.append(verify_population_bound_and_omega((1, 2), max_n, workers))
        elif cid == "dim2-classification":
            for n in range(1, min(max_n, 6) + 1):
                reports.append(verify_dim2_classification(n, workers))
    return reports
