"""Concurrence-based analysis of multiqubit pure states: maximally entangled (ME),
k-uniform, absolutely maximally entangled (AME) and equal maximally entangled (EME)."""

__version__ = "0.1.0"

from .state import (  # noqa: E402
    EPS_EXACT, EPS_PAPER, Bipartition, CutReport, InvariantError, PureState, ReducedState,
    canonical_cuts, concurrence, cut_report, cut_reports, linear_entropy, max_concurrence_bound,
    normalize_state, partial_trace, purity, spectral_purity, total_concurrence, von_neumann_entropy,
)
from .constructors import (  # noqa: E402
    GraphSpec, SignPattern, from_kets, from_sign_pattern, ghz, graph_state, hypergraph_state,
    w_state,
)
from .criteria import (  # noqa: E402
    Classification, classify, cross_term_sum, explicit_inequalities, k_uniformity,
    odd_support_obstruction,
)
from .catalog import paper_catalog  # noqa: E402
