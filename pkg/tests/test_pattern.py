import itertools

from hypothesis import given, settings, strategies as st

import pytest

from domhad.catalog import catalog
from domhad.graph import complement
from domhad.invariants import clique_number
from domhad.pattern import contains_induced, find_induced, is_free

from oracles import naive_find_induced
from strategies import graphs


def _is_witness(g, h, w):
    assert len(set(w.values())) == h.n
    for u, v in itertools.combinations(range(h.n), 2):
        assert h.has_edge(u, v) == g.has_edge(w[u], w[v])


def test_examples():
    w = find_induced(catalog("W_5"), catalog("C_5"))
    assert w is not None and sorted(w.values()) == [1, 2, 3, 4, 5]
    assert find_induced(catalog("K_6"), catalog("2K_2")) is None
    w = find_induced(catalog("fig2_a"), catalog("C_4"))
    assert w is not None
    _is_witness(catalog("fig2_a"), catalog("C_4"), w)


def test_is_free_examples():
    assert is_free(catalog("C_5"), ["W_5"]) == {"W_5": True}
    assert is_free(catalog("W_5"), ["W_5"]) == {"W_5": False}
    cp = complement(catalog("petersen"))
    assert is_free(cp, ["K_4"])["K_4"] == (clique_number(cp)[0] < 4)


def test_unknown_name():
    with pytest.raises(KeyError):
        is_free(catalog("C_5"), ["nonsense"])


@given(graphs(max_n=8))
def test_self_embedding(g):
    assert find_induced(g, g) is not None


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=8), graphs(min_n=1, max_n=5))
def test_agrees_with_naive(g, h):
    w = find_induced(g, h)
    assert (w is not None) == naive_find_induced(g, h)
    if w is not None:
        _is_witness(g, h, w)


@settings(max_examples=100)
@given(graphs(min_n=1, max_n=8), graphs(min_n=2, max_n=5), st.data())
def test_monotone_under_pattern_deletion(g, h, data):
    if contains_induced(g, h):
        v = data.draw(st.integers(0, h.n - 1))
        assert contains_induced(g, h.delete(v))
