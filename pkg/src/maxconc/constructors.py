"""Named states and equal-magnitude families: GHZ, W, graph/hypergraph states, sign patterns."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .state import PureState


def _bits(n: int) -> np.ndarray:
    """``(2**n, n)`` table; row ``i`` holds the qubit values of basis index ``i``."""
    idx = np.arange(2**n)
    return (idx[:, None] >> (n - 1 - np.arange(n))) & 1


def complement_index(n: int, index: int) -> int:
    """Basis index of the bitwise-complemented ket (the complementary coefficient)."""
    return (2**n - 1) ^ index


def ghz(n: int) -> PureState:
    if n < 2:
        raise ValueError(f"GHZ needs n >= 2, got {n}")
    amps = np.zeros(2**n)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return PureState(n, amps)


def w_state(n: int) -> PureState:
    if n < 2:
        raise ValueError(f"W state needs n >= 2, got {n}")
    amps = np.zeros(2**n)
    amps[[1 << q for q in range(n)]] = 1 / math.sqrt(n)
    return PureState(n, amps)


@dataclass(frozen=True)
class GraphSpec:
    """Vertices ``0..n-1`` with 2-edges and hyperedges (size >= 3).

    Edges are stored as sorted tuples in a frozenset, so the order in which
    they were listed does not matter.
    """

    n: int
    edges: frozenset = frozenset()
    hyperedges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        object.__setattr__(self, "edges", self._normalize(self.edges, "edge", exact=2))
        object.__setattr__(self, "hyperedges", self._normalize(self.hyperedges, "hyperedge"))

    def _normalize(self, items, kind, exact=None):
        seen = set()
        for item in items:
            e = tuple(sorted(int(v) for v in item))
            if exact is not None and len(e) != exact:
                raise ValueError(f"{kind} {list(item)} must have exactly {exact} vertices")
            if exact is None and len(e) < 3:
                raise ValueError(f"hyperedge of size < 3: {list(item)}")
            if len(set(e)) != len(e):
                raise ValueError(f"{kind} {list(item)} repeats a vertex")
            if any(v < 0 or v >= self.n for v in e):
                raise ValueError(f"{kind} {list(item)} has a vertex outside [0, {self.n})")
            if e in seen:
                raise ValueError(f"duplicate {kind} {list(e)}")
            seen.add(e)
        return frozenset(seen)

    @classmethod
    def from_lists(cls, n: int, edges: Iterable[Sequence[int]] = (),
                   hyperedges: Iterable[Sequence[int]] = ()) -> "GraphSpec":
        return cls(n, tuple(map(tuple, edges)), tuple(map(tuple, hyperedges)))

    @classmethod
    def from_labels(cls, n: int, edges=(), hyperedges=()) -> "GraphSpec":
        """Build from 1-based vertex labels (label 1 is qubit 0, the most significant bit)."""
        shift = lambda es: [[v - 1 for v in e] for e in es]  # noqa: E731
        return cls.from_lists(n, shift(edges), shift(hyperedges))

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(self.edges)

    def sorted_hyperedges(self) -> list[tuple[int, ...]]:
        return sorted(self.hyperedges, key=lambda e: (len(e), e))


def hypergraph_state(spec: GraphSpec) -> PureState:
    """``|+>^n`` followed by a (multi-)controlled Z on every edge and hyperedge.

    Amplitudes are real, ``+-2**(-n/2)``; the sign of basis index ``i`` is
    flipped once for every (hyper)edge whose vertices are all 1 in ``i``.
    """
    bits = _bits(spec.n)
    parity = np.zeros(2**spec.n, dtype=np.int64)
    for e in list(spec.edges) + list(spec.hyperedges):
        parity += np.all(bits[:, list(e)] == 1, axis=1)
    signs = 1.0 - 2.0 * (parity % 2)
    return PureState(spec.n, signs * 2.0 ** (-spec.n / 2))


def graph_state(spec: GraphSpec) -> PureState:
    if spec.hyperedges:
        raise ValueError("graph_state takes 2-edges only; use hypergraph_state")
    return hypergraph_state(spec)


def cycle_graph(n: int) -> GraphSpec:
    return GraphSpec.from_lists(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int, center: int = 0) -> GraphSpec:
    return GraphSpec.from_lists(n, [(center, v) for v in range(n) if v != center])


def complete_graph(n: int) -> GraphSpec:
    return GraphSpec.from_lists(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@dataclass(frozen=True)
class SignPattern:
    """Equal-magnitude real state: ``+-1/sqrt(|support|)`` on ``support``, zero elsewhere."""

    n: int
    support: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        support = tuple(int(i) for i in self.support)
        signs = tuple(int(s) for s in self.signs)
        if not support:
            raise ValueError("sign pattern needs a nonempty support")
        if len(signs) != len(support):
            raise ValueError(f"{len(signs)} signs given for a support of {len(support)}")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1 or -1, got {signs}")
        if any(i < 0 or i >= 2**self.n for i in support):
            raise ValueError(f"support index outside [0, {2**self.n})")
        if len(set(support)) != len(support):
            raise ValueError("support has repeated indices")
        order = sorted(range(len(support)), key=support.__getitem__)
        object.__setattr__(self, "support", tuple(support[i] for i in order))
        object.__setattr__(self, "signs", tuple(signs[i] for i in order))

    @property
    def negatives(self) -> tuple[int, ...]:
        return tuple(i for i, s in zip(self.support, self.signs) if s < 0)

    def vector(self) -> np.ndarray:
        v = np.zeros(2**self.n)
        v[list(self.support)] = self.signs
        return v

    @classmethod
    def from_vector(cls, n: int, v: Sequence[float]) -> "SignPattern":
        v = np.asarray(v)
        support = tuple(int(i) for i in np.flatnonzero(v))
        return cls(n, support, tuple(int(np.sign(v[i])) for i in support))

    def ket_string(self) -> str:
        return "".join(f"{'+' if s > 0 else '-'}|{i:0{self.n}b}>"
                       for i, s in zip(self.support, self.signs))


def from_sign_pattern(p: SignPattern) -> PureState:
    return PureState(p.n, p.vector() / math.sqrt(len(p.support)))


_KET = re.compile(r"([+-]?)\s*\|([01]+)>")


def parse_kets(text: str) -> SignPattern:
    """Read an equal-magnitude ket sum such as ``"-|000> + |011>"``."""
    terms = _KET.findall(text)
    leftover = _KET.sub("", text).strip()
    if not terms or leftover:
        raise ValueError(f"cannot parse ket sum {text!r}")
    n = len(terms[0][1])
    if any(len(bits) != n for _, bits in terms):
        raise ValueError("kets of different lengths")
    return SignPattern(n, [int(b, 2) for _, b in terms], [-1 if s == "-" else 1 for s, _ in terms])


def from_kets(text: str) -> PureState:
    return from_sign_pattern(parse_kets(text))
