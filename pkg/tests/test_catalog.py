import numpy as np
import pytest

from conftest import oracle_concurrence
from maxconc.catalog import (SQRT_3_2, catalog_names, get_entry, paper_catalog, verify_catalog,
                             verify_entry)
from maxconc.constructors import cycle_graph, graph_state, hypergraph_state, star_graph
from maxconc.criteria import classify
from maxconc.state import Bipartition, canonical_cuts, concurrence


def test_catalog_size_and_names():
    names = catalog_names()
    assert len(names) >= 12
    assert len(set(names)) == len(names)
    with pytest.raises(KeyError, match="unknown catalog name"):
        get_entry("nope")


@pytest.mark.parametrize("entry", paper_catalog(), ids=lambda e: e.name)
def test_entry_states_are_normalized(entry):
    assert entry.state.is_normalized


@pytest.mark.parametrize("entry", paper_catalog(), ids=lambda e: e.name)
def test_expectations_against_oracle(entry):
    # every per-cut printed value is recomputed with the explicit-sum oracle
    for ex in entry.expectations:
        if ex.quantity in ("total", "double_cuts_at_bound"):
            continue
        cut = Bipartition.from_label(entry.state.n, ex.quantity)
        oracle = oracle_concurrence(entry.state.amplitudes, entry.state.n, cut.subset)
        reproduced = abs(oracle - ex.printed) <= 1e-3
        assert reproduced or entry.suspected_typo, (entry.name, ex.quantity, oracle)


def test_verify_catalog_has_no_hard_failures():
    checks = verify_catalog()
    assert not [r for c in checks for r in c.failures]
    flagged = {c.entry.name for c in checks if c.flagged}
    assert flagged == {"ghz3-graph-form", "me4-eight-term-a", "me4-eight-term-b",
                       "me4-sixteen-term-a", "me4-sixteen-term-b"}


def test_typo_flag_turns_into_failure_without_note():
    entry = get_entry("ghz3-graph-form")
    bare = type(entry)(entry.name, entry.description, entry.state, entry.expectations)
    assert verify_entry(bare).failures


def test_ghz3_graph_form_generator_gives_one():
    entry = get_entry("ghz3-graph-form")
    gen = hypergraph_state(entry.generator)
    for cut in canonical_cuts(3):
        assert concurrence(entry.state, cut) == pytest.approx(np.sqrt(3) / 2, abs=1e-12)
        assert concurrence(gen, cut) == pytest.approx(1.0, abs=1e-12)


def test_ame_cycle_entry_equals_cycle_graph():
    entry = get_entry("ame52-cycle")
    assert np.allclose(entry.state.amplitudes, graph_state(cycle_graph(5)).amplitudes)


def test_eme5_printed_is_not_the_star_but_both_are_eme():
    entry = get_entry("eme5-ghz-graph")
    star = graph_state(star_graph(5))
    assert not np.allclose(entry.state.amplitudes, star.amplitudes)
    assert classify(entry.state).is_EME and classify(star).is_EME


def test_psi4_double_cuts():
    psi = get_entry("psi4").state
    vals = [concurrence(psi, c) for c in canonical_cuts(4, [2])]
    assert sum(abs(v - SQRT_3_2) < 1e-9 for v in vals) == 2
    assert min(vals) == pytest.approx(1.0, abs=1e-9)


def test_sixteen_term_printed_states_factorize_on_d():
    for name in ("me4-sixteen-term-a", "me4-sixteen-term-b"):
        s = get_entry(name).state
        assert concurrence(s, Bipartition(4, (3,))) == pytest.approx(0.0, abs=1e-7)
