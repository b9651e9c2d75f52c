import json

import pytest

from adjdim.canon import canonical_graph6
from adjdim.errors import InvalidParameters, ScopeTooLarge
from adjdim.families import complete_bipartite, path_graph
from adjdim.graph import complete_graph, disjoint_union
from adjdim.verify import (
    CHECKS,
    dim1_graphs,
    explore_open_question,
    nminus2_graphs,
    order5_dim3_graphs,
    run_checks,
    verify_diameter_bound,
    verify_dim1_and_dimn1,
    verify_dim2_classification,
    verify_extremal_construction,
    verify_adjacency_results,
    verify_nminus2_characterization,
    verify_population_bound_and_omega,
    verify_twin_property,
)


def test_every_check_passes_at_seven():
    reports = run_checks(["all"], max_n=7)
    assert [r.theorem_id for r in reports][:7] == list(CHECKS[:7])
    assert [r.theorem_id for r in reports][7:] == [f"dim2-n{n}" for n in range(1, 7)]
    for r in reports:
        assert r.passed, r.to_text()
        assert r.checked > 0


def test_individual_checks_details():
    rep = verify_adjacency_results(7)
    assert rep.details["path_cycle_dim2"]["4"] == [2, 2]
    assert rep.details["path_cycle_dim2"]["12"] == [5, 5]
    assert verify_twin_property(5).passed
    assert verify_diameter_bound(6).passed
    rep = verify_extremal_construction((5, 7), 12)
    assert rep.checked == 7 + 5 and rep.passed
    rep = verify_population_bound_and_omega((1, 2), 7)
    assert rep.details["k=1"]["labeled_count"] == 2
    assert rep.details["k=2"]["labeled_count"] == 128
    assert rep.details["k=2"]["formula_count"] == 128
    assert rep.details["k=2"]["isomorphism_classes"] == rep.details["k=2"]["enumerated_classes_with_dim2_k"]


def test_n_three_classification():
    rep = verify_dim2_classification(3)
    assert rep.passed and rep.details["classes_with_dim2_2"] == 2


def test_dropping_a_dim1_graph_is_caught():
    def short_list():
        return [g for g in dim1_graphs() if g.order != 3 or g.num_edges != 1]
    rep = verify_dim1_and_dimn1(5, dim1_list=short_list)
    assert not rep.passed
    key = canonical_graph6(disjoint_union(complete_graph(1), complete_graph(2)))
    assert [c[0] for c in rep.counterexamples] == [key]


def test_adding_a_wrong_dim1_graph_is_caught():
    rep = verify_dim1_and_dimn1(5, dim1_list=lambda: dim1_graphs() + [path_graph(4)])
    assert [c[0] for c in rep.counterexamples] == [canonical_graph6(path_graph(4))]


def test_perturbed_nminus2_list_is_caught():
    def without_star(n):
        star = canonical_graph6(complete_bipartite(1, n - 1))
        return [g for g in nminus2_graphs(n) if canonical_graph6(g) != star]
    rep = verify_nminus2_characterization(6, candidates=without_star)
    assert not rep.passed
    assert canonical_graph6(complete_bipartite(1, 5)) in {c[0] for c in rep.counterexamples}


def test_perturbed_order5_list_is_caught():
    rep = verify_dim2_classification(5, order5_list=lambda: order5_dim3_graphs()[1:])
    assert not rep.passed
    assert {c[0] for c in rep.counterexamples} == {canonical_graph6(complete_graph(5)),
                                                   "D??"}


def test_reports_are_deterministic():
    a = [r.summary() for r in run_checks(["all"], max_n=6)]
    b = [r.summary() for r in run_checks(["all"], max_n=6, workers=2)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    text = run_checks(["twins"], max_n=5)[0].to_text()
    assert "runtime" not in text


def test_explore():
    rep = explore_open_question(3, range(4, 8))
    f = rep.details["findings"]
    assert f["4"]["attained"] and f["4"]["target"] == 2
    with pytest.raises(InvalidParameters):
        explore_open_question(7, range(8, 9))


def test_argument_errors():
    with pytest.raises(InvalidParameters):
        run_checks(["bogus-id"])
    with pytest.raises(ScopeTooLarge):
        run_checks(["twins"], max_n=8)
    with pytest.raises(InvalidParameters):
        verify_extremal_construction((6,), 10)
    with pytest.raises(InvalidParameters):
        verify_population_bound_and_omega((3,))
    with pytest.raises(InvalidParameters):
        verify_dim2_classification(7)
