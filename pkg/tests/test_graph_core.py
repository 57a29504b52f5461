from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from signless.graph_core import (
    FamilyNotationError, FamilySpec, GraphError, LabeledGraph, Matching, UnicyclicGraph,
    all_maximum_matchings, attachment_branches, build_family, canonical_form, canonical_graph,
    cycle_graph, enumerate_unicyclic, family_graph, find_cycle, format_edge_list, free_trees,
    incident_edges_excluding, matching_number, maximum_matching, parse_edge_list, parse_family,
    path_graph, pendant_profile, read_edge_list, star_graph,
)

# number of unicyclic graphs on n vertices, n = 3..10 (OEIS A001429)
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657}
# free trees on n vertices (OEIS A000055)
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_matching_number(g) -> int:
    edges = g.edges()
    for k in range(len(edges), 0, -1):
        for sub in combinations(edges, k):
            verts = [v for e in sub for v in e]
            if len(set(verts)) == len(verts):
                return k
    return 0


# ── family notation ──────────────────────────────────────────

def test_parse_family_examples():
    spec = parse_family("G3(0,0;0,0;0,3)")
    assert spec == FamilySpec(3, ((0, 0), (0, 0), (0, 3)))
    assert spec.n == 6
    assert parse_family(" G4( 1,0 ; 0,1 ; 0,0 ; 0,0 ) ").n == 4 + 2 + 1


@pytest.mark.parametrize("text", ["G3(0,0;0,0)", "G2(0,0;0,0)", "G3(0,0;0,-1;0,0)", "H3(0,0;0,0;0,0)",
                                  "G3(0,0;0,0;0,x)", "G3 0,0;0,0;0,0"])
def test_parse_family_errors(text):
    with pytest.raises(FamilyNotationError):
        parse_family(text)


@given(st.integers(3, 6).flatmap(lambda g: st.tuples(
    st.just(g), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 3)), min_size=g, max_size=g))))
def test_family_round_trip(data):
    g, pairs = data
    spec = FamilySpec(g, tuple(pairs))
    assert parse_family(spec.format()) == spec
    graph = build_family(spec)
    assert graph.n == spec.n == g + sum(2 * s + t for s, t in pairs)
    assert graph.girth == g
    assert pendant_profile(graph).family_spec() == spec


def test_build_family_labels():
    g = family_graph("G3(1,1;0,0;0,0)")
    assert g.cycle == (0, 1, 2)
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (3, 4)]


# ── cycles and structure ─────────────────────────────────────

def test_find_cycle_order():
    g = UnicyclicGraph.from_edges(5, [(4, 2), (2, 3), (3, 4), (0, 4), (1, 0)])
    assert find_cycle(g.graph) == [2, 3, 4]
    assert g.girth == 3 and g.odd


@pytest.mark.parametrize("edges,n", [([(0, 1), (1, 2)], 3), ([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], 6)])
def test_not_unicyclic(edges, n):
    with pytest.raises(GraphError):
        UnicyclicGraph.from_edges(n, edges)


def test_labeled_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 3)])


def test_incident_edges_excluding():
    g = family_graph("G3(0,2;0,0;0,0)")
    assert incident_edges_excluding(g, 0, (0, 1)) == {(0, 2), (0, 3), (0, 4)}
    with pytest.raises(GraphError):
        incident_edges_excluding(g, 1, (0, 3))


def test_pendant_profile_detects_non_family_shape():
    # a path of length 3 hanging off the triangle
    g = UnicyclicGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)])
    prof = pendant_profile(g)
    assert prof.path_lengths[0] == (3,)
    assert not prof.family_shaped
    # a branching tree
    g = UnicyclicGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)])
    assert pendant_profile(g).non_path_branches == (0,)
    with pytest.raises(GraphError):
        attachment_branches(g, 0)


def test_distance_to_cycle():
    g = family_graph("G4(1,0;0,0;0,1;0,0)")
    prof = pendant_profile(g)
    assert prof.distance_to_cycle[5] == 2 and prof.distance_to_cycle[6] == 1


# ── matchings ────────────────────────────────────────────────

def test_matching_examples():
    assert matching_number(cycle_graph(5)) == 2
    assert matching_number(family_graph("G3(0,0;0,0;0,3)")) == 2
    assert matching_number(path_graph(6)) == 3
    assert matching_number(star_graph(5)) == 1


@pytest.mark.parametrize("n", range(3, 10))
def test_matching_against_networkx(n):
    for g in enumerate_unicyclic(n):
        m = maximum_matching(g)
        assert m.is_valid_in(g.graph)
        assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@pytest.mark.parametrize("n", range(3, 8))
def test_matching_against_subset_oracle(n):
    for g in enumerate_unicyclic(n):
        assert matching_number(g) == brute_matching_number(g)


def test_all_maximum_matchings():
    ms = all_maximum_matchings(cycle_graph(4))
    assert sorted(sorted(m.edges) for m in ms) == [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]
    ms = all_maximum_matchings(family_graph("G3(0,1;0,0;0,0)"))
    assert [sorted(m.edges) for m in ms] == [[(0, 3), (1, 2)]]


def test_matching_validity():
    g = cycle_graph(4)
    assert not Matching(frozenset({(0, 1), (1, 2)})).is_valid_in(g)
    assert not Matching(frozenset({(0, 2)})).is_valid_in(g)


# ── canonical forms ──────────────────────────────────────────

@pytest.mark.parametrize("n", [5, 7, 9])
def test_canonical_form_permutation_invariant(n):
    rng = random.Random(n)
    for g in list(enumerate_unicyclic(n))[::7]:
        code = canonical_form(g)
        for _ in range(50):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g.graph.relabel(perm)) == code


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_canonical_form_separates_classes(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    graphs = list(enumerate_unicyclic(n))
    a, b = rng.choice(graphs), rng.choice(graphs)
    same = canonical_form(a) == canonical_form(b)
    assert same == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_canonical_graph_is_isomorphic():
    g = family_graph("G4(1,0;0,2;0,0;0,1)")
    assert nx.is_isomorphic(to_nx(canonical_graph(g.graph)), to_nx(g))


def test_canonical_bound():
    with pytest.raises(GraphError):
        canonical_form(cycle_graph(12))


# ── enumeration ──────────────────────────────────────────────

@pytest.mark.parametrize("n", range(1, 11))
def test_free_tree_counts(n):
    trees = free_trees(n)
    assert len(trees) == TREE_COUNTS[n]
    for t in trees:
        assert t.is_connected() and t.num_edges == n - 1


@pytest.mark.parametrize("n", range(3, 11))
def test_unicyclic_counts(n):
    graphs = list(enumerate_unicyclic(n))
    assert len(graphs) == UNICYCLIC_COUNTS[n]
    for g in graphs:
        assert g.graph.is_connected() and g.graph.num_edges == n
        assert len(nx.cycle_basis(to_nx(g))) == 1


@pytest.mark.parametrize("n", range(3, 7))
def test_enumeration_matches_labeled_brute_force(n):
    # all labelled graphs with n edges on n vertices, connected, deduplicated by isomorphism
    reps: list[nx.Graph] = []
    for edges in combinations(combinations(range(n), 2), n):
        h = nx.Graph(list(edges))
        if h.number_of_nodes() != n or not nx.is_connected(h):
            continue
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    assert len(reps) == len(list(enumerate_unicyclic(n)))


def test_enumeration_filters():
    assert len(list(enumerate_unicyclic(5, girth_parity="odd"))) == 4
    assert [g.girth for g in enumerate_unicyclic(5, girth_parity="even")] == [4]
    assert all(matching_number(g) == 3 for g in enumerate_unicyclic(7, matching=3))
    assert all(g.girth == 5 for g in enumerate_unicyclic(7, girth=5))
    assert len(list(enumerate_unicyclic(4))) == 2


def test_enumeration_bound():
    with pytest.raises(GraphError):
        list(enumerate_unicyclic(11))
    with pytest.raises(GraphError):
        list(enumerate_unicyclic(2))


def test_enumeration_deterministic():
    a = [g.edges() for g in enumerate_unicyclic(7)]
    b = [g.edges() for g in enumerate_unicyclic(7)]
    assert a == b


# ── edge lists ───────────────────────────────────────────────

def test_edge_list_round_trip(tmp_path):
    g = family_graph("G4(0,1;1,0;0,0;0,0)")
    text = format_edge_list(g)
    assert text.splitlines()[0] == str(g.n)
    path = tmp_path / "g.txt"
    path.write_text(text)
    assert read_edge_list(path) == g.graph


@pytest.mark.parametrize("text", ["", "3\n0 1 2\n", "x\n", "3\n0 a\n", "3\n0 5\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)
