"""Worked example states with their published concurrence values.

Each entry keeps the printed ket list verbatim (signs as published), the
published per-cut values, and, where one is known, the generating
graph. Entries whose printed signs do not reproduce the published values
carry a ``suspected_typo`` note; they are reported, never corrected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .constructors import GraphSpec, complete_graph, cycle_graph, from_kets, ghz, hypergraph_state, star_graph
from .state import (EPS_EXACT, EPS_PAPER, Bipartition, PureState, canonical_cuts, concurrence,
                    max_concurrence_bound, total_concurrence)

SQRT_3_2 = max_concurrence_bound(2)


@dataclass(frozen=True)
class Expectation:
    """A published value. ``quantity`` is a cut label (``"A"``, ``"AB"``), ``"total"``,
    or ``"double_cuts_at_bound"`` (how many 2-qubit cuts reach the k=2 bound)."""

    quantity: str
    printed: float


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    state: PureState
    expectations: tuple[Expectation, ...]
    kets: str | None = None
    generator: GraphSpec | None = None
    suspected_typo: str | None = None
    family: str = "example"
    tags: tuple[str, ...] = field(default_factory=tuple)


def evaluate_quantity(state: PureState, quantity: str) -> float:
    if quantity == "total":
        return total_concurrence(state)
    if quantity == "double_cuts_at_bound":
        return float(sum(abs(concurrence(state, c) - SQRT_3_2) <= EPS_EXACT
                         for c in canonical_cuts(state.n, [2])))
    return concurrence(state, Bipartition.from_label(state.n, quantity))


def _cuts(n: int, value: float, sizes=None) -> tuple[Expectation, ...]:
    return tuple(Expectation(c.label, value) for c in canonical_cuts(n, sizes))


def _singles(n: int, value: float = 1.0) -> tuple[Expectation, ...]:
    return _cuts(n, value, [1])


def _printed(name, description, kets, expectations, **kw) -> CatalogEntry:
    return CatalogEntry(name, description, from_kets(kets), tuple(expectations), kets=kets, **kw)


def _build() -> list[CatalogEntry]:
    entries = [
        CatalogEntry("ghz3", "three-qubit GHZ (|000>+|111>)/sqrt2", ghz(3),
                     _singles(3) + (Expectation("total", 3.0),), kets="+|000>+|111>",
                     family="me3"),
        _printed("me3-four-term", "three qubits, two complementary pairs, product of signs < 0",
                 "+|000>+|001>-|110>+|111>", _singles(3), family="me3"),
        _printed("me3-eight-term-a", "three qubits, all eight terms, negatives a,b,c,e",
                 "-|000>-|001>-|010>+|011>-|100>+|101>+|110>+|111>", _singles(3), family="me3"),
        _printed("me3-eight-term-b", "three qubits, all eight terms, negatives a,e,f,g",
                 "-|000>+|001>+|010>+|011>-|100>-|101>-|110>+|111>", _singles(3), family="me3"),
        _printed("ghz3-graph-form", "three-qubit GHZ written as the star graph 1-2, 1-3",
                 "+|000>+|001>+|010>+|011>+|100>-|101>-|110>-|111>", _singles(3),
                 generator=GraphSpec.from_labels(3, [(1, 3), (1, 2)]),
                 suspected_typo="printed signs give 0.866 on every cut; the star graph "
                                "1-2, 1-3 gives 1 (printed |111> sign should be +)"),
        _printed("sym3-graph", "three-qubit symmetric (triangle) graph state",
                 "+|000>+|001>+|010>-|011>+|100>-|101>-|110>-|111>", _singles(3),
                 generator=complete_graph(3)),
        _printed("hypergraph3", "three-qubit hypergraph state, one 3-edge",
                 "+|000>+|001>+|010>+|011>+|100>+|101>+|110>-|111>", _singles(3, 0.866),
                 generator=GraphSpec(3, hyperedges=[(0, 1, 2)])),
        CatalogEntry("ghz4", "four-qubit GHZ (|0000>+|1111>)/sqrt2", ghz(4), _singles(4),
                     kets="+|0000>+|1111>", family="me4"),
        _printed("me4-four-term", "four qubits, complementary pairs (a,p),(f,k), apfk < 0",
                 "+|0000>+|0101>-|1010>+|1111>", _singles(4), family="me4"),
        _printed("me4-eight-term-a", "four qubits, eight terms, negatives a,b,c,m",
                 "-|0000>-|0001>-|0010>+|0011>+|0100>+|0101>+|0110>-|1100>", _singles(4),
                 family="me4",
                 suspected_typo="printed support {a..g, m} is not a union of complementary "
                                "pairs; single cuts fall below 1"),
        _printed("me4-eight-term-b", "four qubits, eight terms, negatives a,i,j,k",
                 "-|0000>+|0001>+|0010>+|0011>+|0100>-|1000>-|1001>-|1010>", _singles(4),
                 family="me4",
                 suspected_typo="printed support {a..e, i, j, k} is not a union of "
                                "complementary pairs; single cuts fall below 1"),
        _printed("me4-sixteen-term-a", "four qubits, sixteen terms, negatives a..f, i, j",
                 "-|0000>-|0001>-|0010>-|0011>-|0100>-|0101>+|0110>+|0111>"
                 "-|1000>-|1001>+|1010>+|1011>+|1100>+|1101>+|1110>+|1111>",
                 _singles(4) + _cuts(4, 1.0, [2]), family="me4",
                 suspected_typo="signs are constant on each (..0, ..1) pair, so qubit D "
                                "factorizes and E_D = 0"),
        _printed("me4-sixteen-term-b", "four qubits, sixteen terms, negatives c,d,i,j,k,l,o,p",
                 "+|0000>+|0001>-|0010>-|0011>+|0100>+|0101>+|0110>+|0111>"
                 "-|1000>-|1001>-|1010>-|1011>+|1100>+|1101>-|1110>-|1111>",
                 _singles(4), family="me4",
                 suspected_typo="signs are constant on each (..0, ..1) pair, so qubit D "
                                "factorizes and E_D = 0"),
        _printed("psi4", "Higuchi-Sudbery four-qubit state (|0000>+|0111>+|1001>+|1110>)/2",
                 "+|0000>+|0111>+|1001>+|1110>", (Expectation("double_cuts_at_bound", 2),)),
        _printed("hypergraph4-3uniform", "four-qubit 3-uniform hypergraph (all four 3-edges)",
                 "+|0000>+|0001>+|0010>+|0011>+|0100>+|0101>+|0110>-|0111>"
                 "+|1000>+|1001>+|1010>-|1011>+|1100>-|1101>-|1110>+|1111>",
                 _cuts(4, 1.0), generator=GraphSpec(4, hyperedges=[(0, 1, 2), (0, 1, 3),
                                                                   (0, 2, 3), (1, 2, 3)])),
        _printed("ghz4-graph-form", "four-qubit GHZ as the star graph 1-2, 1-3, 1-4",
                 "+|0000>+|0001>+|0010>+|0011>+|0100>+|0101>+|0110>+|0111>"
                 "+|1000>-|1001>-|1010>+|1011>-|1100>+|1101>+|1110>-|1111>",
                 _cuts(4, 1.0), generator=GraphSpec.from_labels(4, [(1, 4), (1, 3), (1, 2)])),
        _printed("ame52-cycle", "five-qubit 2-uniform (AME) state of the 5-cycle graph",
                 "+|00000>+|00001>+|00010>-|00011>+|00100>+|00101>-|00110>+|00111>"
                 "+|01000>+|01001>+|01010>-|01011>-|01100>-|01101>+|01110>-|01111>"
                 "+|10000>-|10001>+|10010>+|10011>+|10100>-|10101>-|10110>-|10111>"
                 "-|11000>+|11001>-|11010>-|11011>+|11100>-|11101>-|11110>-|11111>",
                 _singles(5) + _cuts(5, 1.224, [2]),
                 generator=GraphSpec.from_labels(5, [(1, 5), (1, 2), (2, 3), (3, 4), (5, 4)])),
        _printed("eme5-ghz-graph", "five-qubit GHZ-class EME state (star graph)",
                 "+|00000>+|00001>+|00010>-|00011>+|00100>-|00101>-|00110>-|00111>"
                 "+|01000>-|01001>-|01010>-|01011>-|01100>-|01101>-|01110>+|01111>"
                 "+|10000>-|10001>-|10010>-|10011>-|10100>-|10101>-|10110>+|10111>"
                 "-|11000>-|11001>-|11010>+|11011>-|11100>+|11101>+|11110>+|11111>",
                 _cuts(5, 1.0),
                 generator=GraphSpec.from_labels(5, [(1, 4), (1, 5), (1, 3), (1, 2)])),
    ]
    return entries


_CATALOG: list[CatalogEntry] | None = None


def paper_catalog() -> list[CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return list(_CATALOG)


def catalog_names() -> list[str]:
    return [e.name for e in paper_catalog()]


def get_entry(name: str) -> CatalogEntry:
    for e in paper_catalog():
        if e.name == name:
            return e
    raise KeyError(f"unknown catalog name {name!r}; known: {', '.join(catalog_names())}")


@dataclass(frozen=True)
class CheckRow:
    entry: str
    quantity: str
    printed: float
    computed: float
    generated: float | None
    status: str  # "ok", "typo?" or "FAIL"

    @property
    def passed(self) -> bool:
        return self.status == "ok"


@dataclass(frozen=True)
class EntryCheck:
    entry: CatalogEntry
    rows: tuple[CheckRow, ...]
    generator_matches_printed: bool | None

    @property
    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if r.status == "FAIL"]

    @property
    def flagged(self) -> list[CheckRow]:
        return [r for r in self.rows if r.status == "typo?"]


def verify_entry(entry: CatalogEntry, tol: float = EPS_PAPER,
                 evaluate: Callable[[PureState, str], float] = evaluate_quantity) -> EntryCheck:
    """Compare published values with values recomputed from the printed state.

    Misses on entries without a ``suspected_typo`` note are hard failures.
    """
    gen_state = hypergraph_state(entry.generator) if entry.generator is not None else None
    rows = []
    for ex in entry.expectations:
        computed = evaluate(entry.state, ex.quantity)
        generated = evaluate(gen_state, ex.quantity) if gen_state is not None else None
        if abs(computed - ex.printed) <= tol:
            status = "ok"
        else:
            status = "typo?" if entry.suspected_typo else "FAIL"
        rows.append(CheckRow(entry.name, ex.quantity, ex.printed, computed, generated, status))
    matches = None
    if gen_state is not None:
        matches = bool(np.allclose(gen_state.amplitudes, entry.state.amplitudes, atol=EPS_EXACT))
    return EntryCheck(entry, tuple(rows), matches)


def verify_catalog(tol: float = EPS_PAPER) -> list[EntryCheck]:
    return [verify_entry(e, tol) for e in paper_catalog()]
