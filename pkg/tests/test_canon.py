import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adjdim.canon import (
    canonical_form,
    canonical_graph,
    canonical_graph6,
    enumerate_graphs,
    is_isomorphic,
    labeled_graphs,
)
from adjdim.errors import OrderOutOfRange
from adjdim.graph import from_edges, is_connected, relabel
from adjdim.graph6 import graph6_decode
from oracles import atlas_by_order, perm_canon, to_nx
from test_graph import graphs

# isomorphism class counts of order 1..7, computed from the networkx atlas
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_counts_frozen_from_atlas():
    atlas = atlas_by_order()
    assert {n: len(a) for n, a in atlas.items()} == ALL_COUNTS
    assert {n: sum(nx.is_connected(h) for h in a) for n, a in atlas.items()} == CONNECTED_COUNTS


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts(n):
    gs = list(enumerate_graphs(n))
    assert len(gs) == ALL_COUNTS[n]
    assert len({canonical_form(g) for g in gs}) == len(gs)
    assert len(list(enumerate_graphs(n, connected_only=True))) == CONNECTED_COUNTS[n]
    assert all(is_connected(g) for g in enumerate_graphs(n, connected_only=True))


def test_enumeration_sorted_and_canonical():
    for n in range(1, 8):
        keys = [canonical_graph6(g) for g in enumerate_graphs(n)]
        assert keys == sorted(keys)
        assert all(canonical_graph(g) == g for g in enumerate_graphs(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_form_agrees_with_permutation_oracle(n):
    by_canon, by_oracle = {}, {}
    for g in labeled_graphs(n):
        edges = list(g.edges())
        by_canon.setdefault(canonical_form(g), set()).add(perm_canon(n, edges))
        by_oracle.setdefault(perm_canon(n, edges), set()).add(canonical_form(g))
    # the two partitions of labelled graphs coincide
    assert all(len(v) == 1 for v in by_canon.values())
    assert all(len(v) == 1 for v in by_oracle.values())
    assert len(by_canon) == ALL_COUNTS[n]


def test_order_six_classes_match_atlas():
    ours = {canonical_form(g) for g in labeled_graphs(6)}
    atlas = atlas_by_order()[6]
    atlas_keys = set()
    for h in atlas:
        g = from_edges(6, h.edges())
        atlas_keys.add(canonical_form(g))
    assert ours == atlas_keys and len(ours) == 156


def test_enumeration_pairwise_non_isomorphic_via_networkx():
    gs = [to_nx(g) for g in enumerate_graphs(6)]
    by_inv = {}
    for h in gs:
        key = (tuple(sorted(d for _, d in h.degree())), tuple(sorted(nx.triangles(h).values())))
        by_inv.setdefault(key, []).append(h)
    for group in by_inv.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                assert not nx.is_isomorphic(a, b)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g)
    assert is_isomorphic(g, h)
    assert graph6_decode(canonical_graph6(g)) == canonical_graph(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_is_isomorphic_matches_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_hard_regular_pair():
    # two cubic graphs on 8 vertices that colour refinement cannot separate
    cube = from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
                          (0, 4), (1, 5), (2, 6), (3, 7)])
    moebius = from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not is_isomorphic(cube, moebius)
    rnd = random.Random(3)
    perm = list(range(8))
    rnd.shuffle(perm)
    assert is_isomorphic(cube, relabel(cube, perm))


def test_scope_errors():
    with pytest.raises(OrderOutOfRange):
        list(enumerate_graphs(8))
    with pytest.raises(OrderOutOfRange):
        list(enumerate_graphs(0))
    with pytest.raises(OrderOutOfRange):
        list(labeled_graphs(7))
