"""The ten acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.
"""

import json
import subprocess
import sys
import time

from adjdim import canon, census
from adjdim.canon import canonical_graph6, enumerate_graphs, labeled_graphs
from adjdim.census import dim2_distribution, run_census
from adjdim.families import cycle_graph, extremal_diameter_graph, iter_omega_members, path_graph
from adjdim.graph import diameter
from adjdim.solver import adjacency_dimension, path_cycle_dimension_formula
from adjdim.verify import (
    run_checks,
    verify_diameter_bound,
    verify_dim1_and_dimn1,
    verify_adjacency_results,
    verify_nminus2_characterization,
    verify_population_bound_and_omega,
    verify_dim2_classification,
)


def report(num, title, ok, detail=""):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}  {detail}".rstrip())
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_01_path_cycle_formula():
    t0 = time.perf_counter()
    bad = []
    for n in range(4, 13):
        want = (2 * n + 2) // 5
        for g in (path_graph(n), cycle_graph(n)):
            if adjacency_dimension(g).value != want or path_cycle_dimension_formula(n) != want:
                bad.append(n)
    elapsed = time.perf_counter() - t0
    report(1, "dim2 of P_n and C_n, n = 4..12", not bad and elapsed < 1.0,
           f"mismatches={bad} runtime={elapsed:.3f}s (limit 1s)")


def test_criterion_02_dim2_equals_one():
    rep = verify_dim1_and_dimn1(7)
    ones = [r for n in range(1, 8) for r in census.records_for_order(n) if r.dim2 == 1]
    ok = rep.passed and len(ones) == 5
    report(2, "dim2 = 1 characterisation, n <= 7", ok,
           f"graphs with dim2=1: {len(ones)}, counterexamples={len(rep.counterexamples)}")


def test_criterion_03_dim2_equals_n_minus_1():
    rep = verify_dim1_and_dimn1(7)
    top = [r for n in range(2, 8) for r in census.records_for_order(n) if r.dim2 == n - 1]
    ok = rep.passed and len(top) == 2 * 6
    report(3, "dim2 = n-1 characterisation, n <= 7", ok,
           f"graphs with dim2=n-1 (n=2..7): {len(top)}, counterexamples={len(rep.counterexamples)}")


def test_criterion_04_dim2_equals_n_minus_2():
    # start cold so the timing covers enumeration and solving
    census._BY_ORDER.clear()
    canon._classes.cache_clear()
    t0 = time.perf_counter()
    rep = verify_nminus2_characterization(7, workers=8)
    elapsed = time.perf_counter() - t0
    report(4, "dim2 = n-2 characterisation, n = 4..7", rep.passed and elapsed < 600,
           f"counterexamples={len(rep.counterexamples)} runtime={elapsed:.1f}s (limit 600s, 8 workers)")


def test_criterion_05_bounds_sandwich():
    a = verify_diameter_bound(7)
    b = verify_population_bound_and_omega((1, 2), 7)
    bad = 0
    for n in range(1, 8):
        for r in census.records_for_order(n):
            if r.connected and not max(r.lb_population, r.lb_twins) <= r.dim2:
                bad += 1
            if r.connected and n >= 2 and not r.dim2 <= r.ub_diameter:
                bad += 1
            if n > r.dim2 + 2 ** r.dim2:
                bad += 1
    ok = a.passed and b.passed and bad == 0
    report(5, "lower and upper bounds, n <= 7", ok,
           f"violations={bad + len(a.counterexamples) + len(b.counterexamples)}")


def test_criterion_06_complement_and_metric():
    rep = verify_adjacency_results(7)
    report(6, "complement invariance, dim <= dim2, equality at diameter 2", rep.passed,
           f"counterexamples={len(rep.counterexamples)} counts={rep.details['counts']}")


def test_criterion_07_extremal_construction():
    bad = []
    for d, ns in ((5, range(6, 13)), (7, range(8, 13))):
        for n in ns:
            g = extremal_diameter_graph(n, d)
            if diameter(g) != d or adjacency_dimension(g).value != n - d - 1 + (2 * d + 4) // 5:
                bad.append((d, n))
    report(7, "extremal construction meets the diameter bound", not bad, f"failures={bad}")


def test_criterion_08_omega_families():
    counts = {}
    ok = True
    for k in (1, 2):
        members = list(iter_omega_members(k))
        counts[k] = len(members)
        ok &= all(g.order == k + 2 ** k and adjacency_dimension(g).value == k for g in members)
    omega2 = {canonical_graph6(g) for g in iter_omega_members(2)}
    six = {r.graph6 for r in census.records_for_order(6) if r.dim2 == 2}
    ok &= counts == {1: 2, 2: 128} and six <= omega2
    ok &= verify_dim2_classification(6).passed
    dist3 = dim2_distribution(run_census(6))[3]
    ok &= dist3 == {1: 2, 2: 2}
    report(8, "omega families and small classifications", ok,
           f"labelled={counts} order6_dim2=2 classes={len(six)} n3={dist3}")


def test_criterion_09_pruned_equals_naive():
    bad = 0
    checked = 0
    for n in range(1, 6):
        for g in labeled_graphs(n):
            a, b = adjacency_dimension(g), adjacency_dimension(g, mode="naive")
            checked += 1
            bad += (a.value, a.basis) != (b.value, b.basis)
    for g in enumerate_graphs(6):
        a, b = adjacency_dimension(g), adjacency_dimension(g, mode="naive")
        checked += 1
        bad += (a.value, a.basis) != (b.value, b.basis)
    report(9, "pruned solver equals naive solver, n <= 6", bad == 0,
           f"graphs={checked} mismatches={bad}")


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "adjdim", *args], capture_output=True, text=True)


def test_criterion_10_determinism(tmp_path):
    files = []
    for i, workers in enumerate(("1", "8", "1")):
        c = tmp_path / f"census{i}.jsonl"
        v = tmp_path / f"verify{i}.txt"
        _cli("census", "--max-n", "6", "--out", str(c), "--workers", workers)
        _cli("verify", "all", "--max-n", "6", "--out", str(v), "--workers", workers)
        files.append((c.read_bytes(), v.read_bytes(), v.with_suffix(".json").read_bytes()))
    in_proc = [json.dumps(r.summary(), sort_keys=True) for r in run_checks(["all"], 6)]
    again = [json.dumps(r.summary(), sort_keys=True) for r in run_checks(["all"], 6, workers=2)]
    ok = files[0] == files[1] == files[2] and in_proc == again
    report(10, "census and verification outputs byte-identical, max_n = 6", ok,
           f"runs={len(files)} worker counts=1,8,1")
