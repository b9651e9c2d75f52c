"""Per-graph invariant records over all small graphs, persisted as JSON lines."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable

from .canon import MAX_ENUM_ORDER, enumerate_graphs
from .errors import ScopeTooLarge
from .graph import DISCONNECTED, diameter, twin_partition
from .graph6 import graph6_decode, graph6_encode
from .solver import (
    adjacency_dimension,
    lower_bound_population,
    lower_bound_twins,
    metric_dimension,
    upper_bound_diameter,
)


class InvalidRecord(ValueError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    m: int
    diameter: int
    dim2: int
    dim: int
    twin_class_sizes: list
    basis2: list
    lb_population: int
    lb_twins: int
    ub_diameter: int

    def validate(self) -> None:
        g = graph6_decode(self.graph6)
        if (g.order, g.num_edges) != (self.n, self.m):
            raise InvalidRecord(f"{self.graph6}: n/m disagree with graph6")
        if len(self.basis2) != self.dim2:
            raise InvalidRecord(f"{self.graph6}: basis size differs from dim2")
        if max(self.lb_population, self.lb_twins) > self.dim2:
            raise InvalidRecord(f"{self.graph6}: a lower bound exceeds dim2")
        if self.ub_diameter != -1 and self.dim2 > self.ub_diameter:
            raise InvalidRecord(f"{self.graph6}: dim2 exceeds the diameter bound")
        if self.dim != -1 and self.dim > self.dim2:
            raise InvalidRecord(f"{self.graph6}: dim exceeds dim2")

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> "CensusRecord":
        data = json.loads(line)
        if set(data) != {f.name for f in fields(cls)}:
            raise InvalidRecord(f"unexpected keys {sorted(data)}")
        return cls(**data)

    @property
    def connected(self) -> bool:
        return self.diameter != -1


def compute_record(graph6: str) -> CensusRecord:
    g = graph6_decode(graph6)
    d = diameter(g)
    connected = d != DISCONNECTED
    res = adjacency_dimension(g)
    return CensusRecord(
        graph6=graph6_encode(g),
        n=g.order,
        m=g.num_edges,
        diameter=int(d) if connected else -1,
        dim2=res.value,
        dim=metric_dimension(g).value if connected else -1,
        twin_class_sizes=sorted(len(c) for c in twin_partition(g)),
        basis2=list(res.basis),
        lb_population=lower_bound_population(g.order),
        lb_twins=lower_bound_twins(g),
        ub_diameter=upper_bound_diameter(g) if connected and g.order >= 2 else -1,
    )


_BY_ORDER: dict[int, list[CensusRecord]] = {}


def records_for_order(n: int, workers: int = 1) -> list[CensusRecord]:
    """Records for every isomorphism class of order ``n``, sorted by graph6."""
    if n not in _BY_ORDER:
        keys = [graph6_encode(g) for g in enumerate_graphs(n, workers=workers)]
        if workers > 1 and len(keys) > 64:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                recs = list(pool.map(compute_record, keys, chunksize=32))
        else:
            recs = [compute_record(k) for k in keys]
        _BY_ORDER[n] = sorted(recs, key=lambda r: r.graph6)
    return _BY_ORDER[n]


def run_census(max_n: int, connected_only: bool = False, workers: int = 1) -> list[CensusRecord]:
    if not 1 <= max_n <= MAX_ENUM_ORDER:
        raise ScopeTooLarge(f"census supports max_n in 1..{MAX_ENUM_ORDER}, got {max_n}")
    out = []
    for n in range(1, max_n + 1):
        out.extend(r for r in records_for_order(n, workers) if r.connected or not connected_only)
    return out


def write_jsonl(records: Iterable[CensusRecord], path) -> None:
    records = sorted(records, key=lambda r: (r.n, r.graph6))
    for r in records:
        r.validate()
    text = "".join(r.to_json() + "\n" for r in records)
    Path(path).write_text(text, encoding="utf-8")


def read_jsonl(path) -> list[CensusRecord]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            rec = CensusRecord.from_json(line)
            rec.validate()
            out.append(rec)
    return out


def dim2_distribution(records: Iterable[CensusRecord]) -> dict[int, dict[int, int]]:
    dist: dict[int, Counter] = {}
    for r in records:
        dist.setdefault(r.n, Counter())[r.dim2] += 1
    return {n: dict(sorted(c.items())) for n, c in sorted(dist.items())}


def format_summary(records: Iterable[CensusRecord]) -> str:
    dist = dim2_distribution(records)
    top = max((k for c in dist.values() for k in c), default=1)
    head = ["n", "graphs"] + [f"dim2={k}" for k in range(1, top + 1)]
    lines = ["  ".join(f"{h:>7}" for h in head)]
    for n, c in dist.items():
        row = [n, sum(c.values())] + [c.get(k, 0) for k in range(1, top + 1)]
        lines.append("  ".join(f"{x:>7}" for x in row))
    return "\n".join(lines)
