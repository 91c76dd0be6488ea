import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_concurrence
from maxconc.constructors import (GraphSpec, SignPattern, complement_index, complete_graph,
                                  cycle_graph, from_kets, from_sign_pattern, ghz, graph_state,
                                  hypergraph_state, parse_kets, star_graph, w_state)
from maxconc.state import canonical_cuts, concurrence


def _controlled_z(n, vertices):
    """Diagonal gate built by Kronecker products of projectors: -1 iff all vertices are 1."""
    p0 = np.diag([1.0, 0.0])
    p1 = np.diag([0.0, 1.0])
    eye = np.eye(2)
    all_ones = np.array([[1.0]])
    for q in range(n):
        all_ones = np.kron(all_ones, p1 if q in vertices else eye)
    return np.eye(2**n) - 2 * all_ones


def oracle_graph_state(n, edges):
    plus = np.ones(2) / math.sqrt(2)
    psi = np.array([1.0])
    for _ in range(n):
        psi = np.kron(psi, plus)
    for e in edges:
        psi = _controlled_z(n, set(e)) @ psi
    return psi


def test_ghz_and_w_amplitudes():
    assert np.allclose(ghz(3).amplitudes[[0, 7]], 1 / math.sqrt(2))
    assert np.count_nonzero(ghz(3).amplitudes) == 2
    assert np.flatnonzero(w_state(3).amplitudes).tolist() == [1, 2, 4]
    with pytest.raises(ValueError):
        ghz(1)


def test_complement_index():
    assert complement_index(3, 0) == 7
    assert complement_index(4, 0b0101) == 0b1010


@pytest.mark.parametrize("spec", [cycle_graph(5), star_graph(4), complete_graph(3),
                                  GraphSpec(4, hyperedges=[(0, 1, 2), (1, 2, 3)]),
                                  GraphSpec(3, [(0, 2)], [(0, 1, 2)])])
def test_hypergraph_state_matches_gate_oracle(spec):
    edges = list(spec.edges) + list(spec.hyperedges)
    assert np.allclose(hypergraph_state(spec).amplitudes, oracle_graph_state(spec.n, edges))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5), st.data())
def test_random_graphs_match_oracle(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    spec = GraphSpec.from_lists(n, edges)
    assert np.allclose(graph_state(spec).amplitudes, oracle_graph_state(n, edges))


@settings(max_examples=30, deadline=None)
@given(st.permutations([(0, 1), (1, 2), (2, 3), (0, 3)]))
def test_edge_order_is_irrelevant(order):
    assert GraphSpec.from_lists(4, order) == cycle_graph(4)
    assert hypergraph_state(GraphSpec.from_lists(4, order)) == hypergraph_state(cycle_graph(4))


def test_from_labels_is_one_based():
    assert GraphSpec.from_labels(3, [(1, 2)]).edges == frozenset({(0, 1)})


@pytest.mark.parametrize("edges,hyper,msg", [
    ([(0, 0)], [], "repeats"),
    ([(0, 3)], [], "outside"),
    ([(0, 1), (1, 0)], [], "duplicate"),
    ([], [(0, 1)], "hyperedge of size < 3"),
    ([(0, 1, 2)], [], "exactly 2"),
])
def test_graph_spec_validation(edges, hyper, msg):
    with pytest.raises(ValueError, match=msg):
        GraphSpec.from_lists(3, edges, hyper)


def test_graph_state_rejects_hyperedges():
    with pytest.raises(ValueError):
        graph_state(GraphSpec(3, hyperedges=[(0, 1, 2)]))


def test_star_graph_is_ghz_class():
    for n in (3, 4, 5):
        s = graph_state(star_graph(n))
        assert all(concurrence(s, c) == pytest.approx(1.0, abs=1e-12) for c in canonical_cuts(n))


def test_parse_kets_round_trip():
    p = parse_kets("-|000> + |011>+|101> -|110>")
    assert p.support == (0, 3, 5, 6) and p.signs == (-1, 1, 1, -1)
    assert parse_kets(p.ket_string()) == p
    assert np.allclose(from_kets("|00>+|11>").amplitudes, [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])


@pytest.mark.parametrize("text", ["", "|01>+|1>", "|012>", "+|00> x"])
def test_parse_kets_rejects(text):
    with pytest.raises(ValueError):
        parse_kets(text)


def test_sign_pattern_validation():
    with pytest.raises(ValueError):
        SignPattern(2, (), ())
    with pytest.raises(ValueError):
        SignPattern(2, (0, 1), (1,))
    with pytest.raises(ValueError):
        SignPattern(2, (0, 4), (1, 1))
    with pytest.raises(ValueError):
        SignPattern(2, (0, 1), (1, 2))
    with pytest.raises(ValueError):
        SignPattern(2, (1, 1), (1, -1))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.data())
def test_sign_pattern_state_properties(n, data):
    support = data.draw(st.lists(st.integers(0, 2**n - 1), min_size=1, unique=True))
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=len(support), max_size=len(support)))
    p = SignPattern(n, support, signs)
    s = from_sign_pattern(p)
    assert s.is_normalized
    assert SignPattern.from_vector(n, p.vector()) == p
    cut = canonical_cuts(n, [1])[0]
    # compare squares: sqrt amplifies round-off near zero
    assert concurrence(s, cut) ** 2 == pytest.approx(
        oracle_concurrence(s.amplitudes, n, cut.subset) ** 2, abs=1e-12)
