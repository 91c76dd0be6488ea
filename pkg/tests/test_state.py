import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_concurrence, oracle_reduced
from maxconc.constructors import ghz, w_state
from maxconc.state import (Bipartition, InvariantError, PureState, ReducedState, basis_state,
                           batch_concurrence, batch_purity, canonical_cuts, concurrence,
                           concurrence_from_purity, cut_matrix, cut_report, cut_reports,
                           linear_entropy, max_concurrence_bound, normalize_state, partial_trace,
                           purity, random_amplitudes, random_state, spectral_purity,
                           total_concurrence, von_neumann_entropy)


def states(max_n=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        seed = draw(st.integers(0, 2**32 - 1))
        return random_state(n, np.random.default_rng(seed))
    return build()


def test_w3_against_hand_computed_reduction():
    # rho_A of W3 = diag(2/3, 1/3)
    rho = partial_trace(w_state(3), Bipartition(3, (0,)))
    assert np.allclose(sorted(rho.spectrum), [1 / 3, 2 / 3], atol=1e-12)
    assert purity(rho) == pytest.approx(5 / 9, abs=1e-12)
    assert concurrence(w_state(3), Bipartition(3, (0,))) == pytest.approx(math.sqrt(8 / 9), abs=1e-12)


def test_ghz3_single_cut_values():
    g = ghz(3)
    for cut in canonical_cuts(3):
        rho = partial_trace(g, cut)
        assert purity(rho) == pytest.approx(0.5, abs=1e-12)
        assert von_neumann_entropy(rho) == pytest.approx(1.0, abs=1e-12)
        assert linear_entropy(rho) == pytest.approx(0.5, abs=1e-12)
    assert total_concurrence(g) == pytest.approx(3.0, abs=1e-12)


def test_product_state_has_zero_concurrence():
    s = basis_state(4, 5)
    for cut in canonical_cuts(4):
        assert concurrence(s, cut) == 0.0
        assert von_neumann_entropy(partial_trace(s, cut)) == pytest.approx(0.0, abs=1e-12)


def test_bound_values():
    assert max_concurrence_bound(1) == pytest.approx(1.0, abs=1e-12)
    assert max_concurrence_bound(2) == pytest.approx(1.224744871, abs=1e-9)
    assert max_concurrence_bound(3) == pytest.approx(1.322875656, abs=1e-9)
    with pytest.raises(ValueError):
        max_concurrence_bound(0)


def test_canonical_cut_counts():
    assert [c.label for c in canonical_cuts(3)] == ["A", "B", "C"]
    assert len(canonical_cuts(4, [2])) == 3
    assert len(canonical_cuts(5)) == 15
    assert len(canonical_cuts(6, [3])) == 10
    assert all(c.is_canonical for c in canonical_cuts(6))


def test_bipartition_labels_and_validation():
    cut = Bipartition.from_label(4, "AB")
    assert cut.subset == (0, 1) and cut.rest == (2, 3)
    assert str(cut) == "AB|CD"
    assert cut.complement().subset == (2, 3)
    assert Bipartition(4, (2, 3)).canonical() == cut
    for bad in [(), (0, 0), (4,), (0, 1, 2, 3)]:
        with pytest.raises(ValueError, match="invalid cut"):
            Bipartition(4, bad)


def test_cut_matrix_matches_tensor_transpose(rng):
    s = random_state(4, rng)
    cut = Bipartition(4, (1, 3))
    expected = np.transpose(s.tensor(), (1, 3, 0, 2)).reshape(4, 4)
    assert np.allclose(cut_matrix(s.amplitudes, 4, cut), expected)


def test_null_state_rejected():
    with pytest.raises(ValueError, match="null state"):
        normalize_state(PureState(2, np.zeros(4)))


def test_unnormalized_state_rejected():
    with pytest.raises(ValueError):
        concurrence(PureState(2, [1.0, 1.0, 0.0, 0.0]), Bipartition(2, (0,)))


def test_wrong_amplitude_count():
    with pytest.raises(ValueError, match="expected 8 amplitudes"):
        PureState(3, np.ones(7))


def test_concurrence_from_purity_guard():
    assert concurrence_from_purity(1.0 + 2e-10) == 0.0
    with pytest.raises(InvariantError):
        concurrence_from_purity(1.01)


def test_cut_report_flags_maximally_mixed():
    r = cut_report(ghz(4), Bipartition(4, (0, 1)))
    assert r.concurrence == pytest.approx(1.0)
    assert not r.is_maximally_mixed
    assert not r.at_bound
    assert all(x.is_maximally_mixed for x in cut_reports(ghz(4), [1]))


def test_reduced_state_check_rejects_non_hermitian():
    with pytest.raises(InvariantError):
        ReducedState(np.array([[0.5, 0.3], [0.0, 0.5]])).check()


def test_batch_paths_agree_with_scalar(rng):
    amps = random_amplitudes(4, 50, rng)
    cut = Bipartition(4, (0, 2))
    scalar = [concurrence(PureState(4, a), cut) for a in amps]
    assert np.allclose(batch_concurrence(amps, 4, cut), scalar, atol=1e-12)
    assert np.allclose(batch_purity(amps, 4, cut), 1 - np.square(scalar) / 2, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(states(4), st.data())
def test_reduction_matches_explicit_sum_oracle(state, data):
    if state.n < 2:
        return
    cut = data.draw(st.sampled_from(canonical_cuts(state.n)))
    rho = partial_trace(state, cut).matrix
    assert np.allclose(rho, oracle_reduced(state.amplitudes, state.n, cut.subset), atol=1e-12)
    assert concurrence(state, cut) == pytest.approx(
        oracle_concurrence(state.amplitudes, state.n, cut.subset), abs=1e-10)


@settings(max_examples=100, deadline=None)
@given(states())
def test_reduced_state_invariants(state):
    if state.n < 2:
        return
    for cut in canonical_cuts(state.n):
        rho = partial_trace(state, cut)
        rho.check()
        p = purity(rho)
        assert 2.0**-cut.k - 1e-12 <= p <= 1 + 1e-12
        assert p == pytest.approx(spectral_purity(rho), abs=1e-10)
        e = concurrence(state, cut)
        assert e <= max_concurrence_bound(cut.k) + 1e-12
        assert e * e == pytest.approx(2 * linear_entropy(rho), abs=1e-12)
        assert 0 <= von_neumann_entropy(rho) <= cut.k + 1e-12


@settings(max_examples=60, deadline=None)
@given(states(), st.data())
def test_complement_cut_symmetry(state, data):
    if state.n < 2:
        return
    cut = data.draw(st.sampled_from(canonical_cuts(state.n)))
    a = partial_trace(state, cut)
    b = partial_trace(state, cut.complement())
    assert purity(a) == pytest.approx(purity(b), abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(states(4), st.floats(0, 2 * math.pi))
def test_global_phase_invariance(state, phi):
    if state.n < 2:
        return
    shifted = PureState(state.n, state.amplitudes * np.exp(1j * phi))
    for cut in canonical_cuts(state.n):
        assert concurrence(shifted, cut) == pytest.approx(concurrence(state, cut), abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(states(2), states(2))
def test_tensor_product_factorizes(a, b):
    n = a.n + b.n
    prod = PureState(n, np.kron(a.amplitudes, b.amplitudes))
    subset = tuple(range(a.n))
    cut = Bipartition(n, subset).canonical()
    assert concurrence(prod, cut) == pytest.approx(0.0, abs=1e-6)
