"""Dense qubit pure states, bipartitions, reduced states and entanglement measures.

Basis convention: index ``i`` of the amplitude vector stores the ket whose
qubit ``q`` value is bit ``n - 1 - q`` of ``i``, so qubit 0 (label ``A``) is
the most significant bit and ``|ABC>`` reads left to right.
"""
from __future__ import annotations

import itertools
import math
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

EPS_EXACT = 1e-9
EPS_PAPER = 1e-3
EPS_NORM = 1e-9

LABELS = string.ascii_uppercase


class InvariantError(RuntimeError):
    """An internal consistency check failed (not a user input problem)."""


@dataclass(frozen=True, eq=False)
class PureState:
    """Amplitude vector over the ``2**n`` computational basis states."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 2**self.n:
            raise ValueError(f"expected {2**self.n} amplitudes for n={self.n}, got {amps.size}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, values: Sequence[complex], normalize: bool = True) -> "PureState":
        values = np.asarray(values, dtype=np.complex128).reshape(-1)
        n = int(round(math.log2(values.size))) if values.size else 0
        if values.size == 0 or 2**n != values.size:
            raise ValueError(f"amplitude count {values.size} is not a power of two")
        state = cls(n, values)
        return normalize_state(state) if normalize else state

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm - 1.0) <= EPS_NORM

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n)

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amplitudes, other.amplitudes)

    def __hash__(self):
        return hash((self.n, self.amplitudes.tobytes()))

    def __repr__(self):
        return f"PureState(n={self.n}, amplitudes={np.array2string(self.amplitudes, precision=4)})"


def normalize_state(state: PureState) -> PureState:
    """Rescale to unit norm; raises on the zero vector."""
    norm = np.linalg.norm(state.amplitudes)
    if norm == 0.0:
        raise ValueError("null state")
    return PureState(state.n, state.amplitudes / norm)


# spec-facing name
normalize = normalize_state


def basis_state(n: int, index: int) -> PureState:
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[index] = 1.0
    return PureState(n, amps)


def random_state(n: int, rng: np.random.Generator) -> PureState:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))


def random_amplitudes(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` Haar-random normalized amplitude rows, shape ``(count, 2**n)``."""
    z = rng.standard_normal((count, 2**n)) + 1j * rng.standard_normal((count, 2**n))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


@dataclass(frozen=True, order=True)
class Bipartition:
    """The cut ``S | S'`` of ``n`` qubits, given by the sorted subset ``S``."""

    n: int
    subset: tuple[int, ...]

    def __post_init__(self):
        subset = tuple(int(q) for q in self.subset)
        if any(q < 0 or q >= self.n for q in subset):
            raise ValueError(f"invalid cut: subset {subset} out of range for n={self.n}")
        if len(set(subset)) != len(subset):
            raise ValueError(f"invalid cut: repeated qubit in {subset}")
        if not 0 < len(subset) < self.n:
            raise ValueError(f"invalid cut: subset {subset} must be nonempty and proper")
        object.__setattr__(self, "subset", tuple(sorted(subset)))

    @property
    def k(self) -> int:
        return len(self.subset)

    @property
    def label(self) -> str:
        if self.n <= len(LABELS):
            return "".join(LABELS[q] for q in self.subset)
        return ",".join(map(str, self.subset))

    @property
    def rest(self) -> tuple[int, ...]:
        return tuple(q for q in range(self.n) if q not in self.subset)

    def complement(self) -> "Bipartition":
        return Bipartition(self.n, self.rest)

    @property
    def is_canonical(self) -> bool:
        k = self.k
        if 2 * k < self.n:
            return True
        return 2 * k == self.n and self.subset[0] == 0

    def canonical(self) -> "Bipartition":
        return self if self.is_canonical else self.complement()

    @classmethod
    def from_label(cls, n: int, label: str) -> "Bipartition":
        try:
            subset = tuple(LABELS.index(ch) for ch in label.upper())
        except ValueError:
            raise ValueError(f"invalid cut: bad label {label!r}") from None
        return cls(n, subset)

    def __str__(self):
        other = "".join(LABELS[q] for q in self.rest) if self.n <= len(LABELS) else "..."
        return f"{self.label}|{other}"


def canonical_cuts(n: int, sizes: Iterable[int] | None = None) -> list[Bipartition]:
    """Every canonical bipartition of ``n`` qubits, ordered by size then lexicographically."""
    top = n // 2
    sizes = range(1, top + 1) if sizes is None else sorted(set(sizes))
    cuts = []
    for k in sizes:
        if not 1 <= k <= top:
            continue
        for subset in itertools.combinations(range(n), k):
            cut = Bipartition(n, subset)
            if cut.is_canonical:
                cuts.append(cut)
    return cuts


def cut_matrix(amplitudes: np.ndarray, n: int, cut: Bipartition) -> np.ndarray:
    """Reshape amplitudes to the ``2**k x 2**(n-k)`` coefficient matrix of the cut.

    Works on a single vector or a batch whose last axis holds the amplitudes.
    """
    if cut.n != n:
        raise ValueError(f"invalid cut: cut is for n={cut.n}, state has n={n}")
    lead = amplitudes.shape[:-1]
    t = amplitudes.reshape(lead + (2,) * n)
    nl = len(lead)
    axes = list(range(nl)) + [nl + q for q in cut.subset] + [nl + q for q in cut.rest]
    return t.transpose(axes).reshape(lead + (2**cut.k, 2 ** (n - cut.k)))


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Reduced density matrix of one side of a cut, with its spectrum."""

    matrix: np.ndarray
    spectrum: np.ndarray = field(init=False)
    purity: float = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        # Hermitian eigensolver; descending order
        spec = np.linalg.eigvalsh(m)[::-1].copy()
        spec.setflags(write=False)
        object.__setattr__(self, "spectrum", spec)
        object.__setattr__(self, "purity", float(np.sum(np.abs(m) ** 2)))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def check(self, tol: float = EPS_EXACT) -> None:
        if not np.allclose(self.matrix, self.matrix.conj().T, atol=tol):
            raise InvariantError("reduced state is not Hermitian")
        if abs(np.trace(self.matrix).real - 1.0) > tol:
            raise InvariantError(f"reduced state trace {np.trace(self.matrix).real} != 1")
        if self.spectrum.min() < -tol or self.spectrum.max() > 1 + tol:
            raise InvariantError(f"spectrum {self.spectrum} outside [0, 1]")
        if not 1.0 / self.dim - tol <= self.purity <= 1.0 + tol:
            raise InvariantError(f"purity {self.purity} outside [1/dim, 1]")


def partial_trace(state: PureState, cut: Bipartition) -> ReducedState:
    """``rho_S = Tr_{S'} |psi><psi|`` for the subset side of ``cut``."""
    m = cut_matrix(state.amplitudes, state.n, cut)
    return ReducedState(m @ m.conj().T)


def purity(rho: ReducedState) -> float:
    """``tr(rho^2)`` from the Frobenius norm of the matrix."""
    return rho.purity


def spectral_purity(rho: ReducedState) -> float:
    """``tr(rho^2)`` as the sum of squared eigenvalues (independent of :func:`purity`)."""
    return float(np.sum(rho.spectrum**2))


def von_neumann_entropy(rho: ReducedState) -> float:
    """Base-2 entropy ``-sum l log2 l`` with ``0 log 0 = 0``."""
    lam = rho.spectrum[rho.spectrum > 1e-15]
    return float(max(0.0, -np.sum(lam * np.log2(lam))))


def linear_entropy(rho: ReducedState) -> float:
    return 1.0 - rho.purity


def concurrence_from_purity(p: float) -> float:
    radicand = 2.0 * (1.0 - p)
    if radicand < 0.0:
        if radicand < -EPS_EXACT:
            raise InvariantError(f"purity {p} > 1: negative concurrence radicand {radicand}")
        return 0.0
    return math.sqrt(radicand)


def _require_normalized(state: PureState) -> None:
    if not state.is_normalized:
        raise ValueError(f"state is not normalized (norm {state.norm!r}); call normalize_state")


def concurrence(state: PureState, cut: Bipartition) -> float:
    """``E = sqrt(2 (1 - tr rho_S^2))`` for the cut."""
    _require_normalized(state)
    return concurrence_from_purity(partial_trace(state, cut).purity)


def max_concurrence_bound(k: int) -> float:
    """Largest concurrence a cut with ``k`` qubits on the small side can reach."""
    if k < 1:
        raise ValueError(f"cut size must be >= 1, got {k}")
    return math.sqrt((2**k - 1) / 2 ** (k - 1))


def total_concurrence(state: PureState) -> float:
    return sum(concurrence(state, cut) for cut in canonical_cuts(state.n))


@dataclass(frozen=True)
class CutReport:
    bipartition: Bipartition
    concurrence: float
    concurrence_sq: float
    purity: float
    entropy: float
    linear_entropy: float
    bound: float
    is_maximally_mixed: bool

    @property
    def at_bound(self) -> bool:
        return abs(self.concurrence - self.bound) <= EPS_EXACT


def cut_report(state: PureState, cut: Bipartition, tol: float = EPS_EXACT) -> CutReport:
    _require_normalized(state)
    rho = partial_trace(state, cut)
    p = rho.purity
    e = concurrence_from_purity(p)
    bound = max_concurrence_bound(cut.k)
    if e > bound + EPS_EXACT:
        raise InvariantError(f"concurrence {e} exceeds bound {bound} on cut {cut}")
    return CutReport(
        bipartition=cut,
        concurrence=e,
        concurrence_sq=2.0 * (1.0 - p),
        purity=p,
        entropy=von_neumann_entropy(rho),
        linear_entropy=1.0 - p,
        bound=bound,
        is_maximally_mixed=abs(p - 2.0**-cut.k) <= tol * rho.dim,
    )


def cut_reports(state: PureState, sizes: Iterable[int] | None = None,
                tol: float = EPS_EXACT) -> list[CutReport]:
    return [cut_report(state, cut, tol) for cut in canonical_cuts(state.n, sizes)]


def batch_purity(amplitudes: np.ndarray, n: int, cut: Bipartition) -> np.ndarray:
    """Purity of the cut for each row of an ``(m, 2**n)`` amplitude array."""
    m = cut_matrix(amplitudes, n, cut)
    rho = m @ np.conj(np.swapaxes(m, -1, -2))
    return np.sum(np.abs(rho) ** 2, axis=(-1, -2))


def batch_concurrence(amplitudes: np.ndarray, n: int, cut: Bipartition) -> np.ndarray:
    return np.sqrt(np.clip(2.0 * (1.0 - batch_purity(amplitudes, n, cut)), 0.0, None))

