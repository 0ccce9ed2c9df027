import pytest
from hypothesis import given

import networkx as nx

from domhad.catalog import catalog
from domhad.graph import Graph, complement, union
from domhad.invariants import (
    CHI_EXACT_LIMIT,
    ChromaticLimitError,
    alpha_le_2,
    chromatic_number,
    chromatic_number_exact,
    clique_number,
    independence_number,
    invariant_bundle,
    matching_number,
    max_matching,
)

from oracles import brute_alpha, brute_chromatic, brute_clique, brute_matching, to_nx
from strategies import alpha2_graphs, graphs


def test_examples():
    assert independence_number(catalog("C_5"))[0] == 2
    assert independence_number(complement(catalog("petersen")))[0] == 2
    assert independence_number(catalog("K_7"))[0] == 1
    assert clique_number(catalog("W_5"))[0] == 3
    assert clique_number(catalog("kite"))[0] == 3
    assert chromatic_number(catalog("C_5")) == 3
    assert chromatic_number(complement(catalog("C_7"))) == 4
    assert matching_number(catalog("C_5")) == 2
    assert matching_number(catalog("petersen")) == 5
    assert matching_number(catalog("K_1")) == 0


def test_k9_minus_partial_matching():
    g = catalog("K_9")
    edges = [e for e in g.edges() if e not in {(0, 1), (2, 3), (4, 5), (6, 7)}]
    h = Graph.from_edges(9, edges)
    assert chromatic_number(h) == 5 == chromatic_number_exact(h) == brute_chromatic(h)


def test_alpha2_graph_on_nine_has_k4():
    # 9 vertices with alpha <= 2 force a K_4
    g = complement(union(catalog("C_5"), catalog("C_4")))
    assert alpha_le_2(g) and clique_number(g)[0] >= 4


def test_chromatic_limit():
    g = union(catalog("C_5"), Graph.empty(CHI_EXACT_LIMIT))
    with pytest.raises(ChromaticLimitError):
        chromatic_number(g)


@given(graphs(max_n=9))
def test_alpha_le_2_predicate(g):
    assert alpha_le_2(g) == (brute_alpha(g) <= 2)


@given(graphs(max_n=9))
def test_clique_and_alpha_witnesses(g):
    w, wm = clique_number(g)
    a, am = independence_number(g)
    assert w == brute_clique(g) and g.is_clique(wm) and wm.bit_count() == w
    assert a == brute_alpha(g) and g.is_independent(am) and am.bit_count() == a


@given(graphs(max_n=10))
def test_matching_is_maximum(g):
    m = max_matching(g)
    used = [v for e in m for v in e]
    assert len(used) == len(set(used)) and all(g.has_edge(u, v) for u, v in m)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@given(graphs(max_n=7))
def test_matching_bruteforce(g):
    assert matching_number(g) == brute_matching(g)


@given(alpha2_graphs(max_n=8))
def test_alpha2_chromatic_formula(g):
    assert chromatic_number(g) == chromatic_number_exact(g) == brute_chromatic(g)


@given(graphs(max_n=8))
def test_bundle_inequalities(g):
    b = invariant_bundle(g)
    assert b.omega <= b.chi and b.delta <= b.Delta
    if g.n:
        assert b.alpha * b.chi >= g.n
    assert b.chi == brute_chromatic(g)
