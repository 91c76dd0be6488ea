"""Exhaustive sign-pattern enumeration and derivative-free optimization of cut concurrences."""
from __future__ import annotations

import itertools
import math
import re
import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .constructors import SignPattern, complement_index, from_sign_pattern, ghz
from .criteria import Classification, classify, printed_lhs
from .state import (EPS_EXACT, Bipartition, CutReport, InvariantError, PureState, batch_purity,
                    canonical_cuts, cut_matrix, cut_reports, max_concurrence_bound)

MAX_PATTERNS = 2**30
_BATCH_ELEMENTS = 1 << 22

PREDICATES = ("ME", "AME", "EME", "EE")


class EnumerationTooLarge(ValueError):
    def __init__(self, count: int):
        super().__init__(f"query would examine {count} sign patterns (limit {MAX_PATTERNS})")
        self.count = count


def parse_predicate(name: str) -> tuple[str, int]:
    """``"ME"``, ``"AME"``, ``"EME"``, ``"EE"`` or ``"k-uniform(K)"`` / ``"K-uniform"``."""
    name = name.strip()
    if name.upper() in PREDICATES:
        return name.upper(), 0
    m = re.fullmatch(r"k-uniform\((\d+)\)|(\d+)-uniform", name, flags=re.IGNORECASE)
    if m:
        k = int(m.group(1) or m.group(2))
        if k < 1:
            raise ValueError("k-uniform needs k >= 1")
        return "k-uniform", k
    raise ValueError(f"unknown predicate {name!r}; use ME, AME, EME, EE or k-uniform(K)")


def predicate_holds(c: Classification, predicate: str) -> bool:
    kind, k = parse_predicate(predicate)
    if kind == "k-uniform":
        return c.max_uniformity >= k
    return {"ME": c.is_ME, "AME": c.is_AME, "EME": c.is_EME, "EE": c.is_EE}[kind]


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    support_sizes: tuple[int, ...]
    predicate: str = "ME"
    dedupe: bool = False

    def __post_init__(self):
        sizes = tuple(sorted(set(int(s) for s in self.support_sizes)))
        if not sizes:
            raise ValueError("at least one support size is required")
        if any(s < 1 or s > 2**self.n for s in sizes):
            raise ValueError(f"support sizes must lie in [1, {2**self.n}]")
        parse_predicate(self.predicate)
        object.__setattr__(self, "support_sizes", sizes)

    @property
    def pattern_count(self) -> int:
        return count_patterns(self.n, self.support_sizes)


def count_patterns(n: int, sizes) -> int:
    return sum(math.comb(2**n, s) * 2**s for s in sizes)


def _sign_rows(s: int) -> np.ndarray:
    """All ``2**s`` sign vectors, ``+`` before ``-``, in lexicographic order."""
    j = np.arange(2**s)[:, None]
    return 1.0 - 2.0 * ((j >> (s - 1 - np.arange(s))) & 1)


def iter_pattern_batches(n: int, s: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(supports, vectors)`` chunks covering every support of size ``s``.

    ``vectors`` has shape ``(c, 2**s, 2**n)``: unit-norm equal-magnitude real
    states, supports in lexicographic order and signs in sign-bit order.
    """
    dim = 2**n
    signs = _sign_rows(s) / math.sqrt(s)
    per_support = signs.shape[0] * dim
    chunk = max(1, _BATCH_ELEMENTS // per_support)
    combos = itertools.combinations(range(dim), s)
    while True:
        block = np.array(list(itertools.islice(combos, chunk)), dtype=np.int64).reshape(-1, s)
        if block.size == 0:
            return
        vecs = np.zeros((block.shape[0], signs.shape[0], dim))
        rows = np.arange(block.shape[0])[:, None, None]
        cols = np.arange(signs.shape[0])[None, :, None]
        vecs[rows, cols, block[:, None, :]] = signs[None, :, :]
        yield block, vecs


def _batch_mask(vecs: np.ndarray, n: int, predicate: str, tol: float) -> np.ndarray:
    kind, k = parse_predicate(predicate)
    flat = vecs.reshape(-1, vecs.shape[-1])
    if kind == "ME":
        cuts = canonical_cuts(n, [1])
    elif kind == "k-uniform":
        cuts = canonical_cuts(n, [k]) if k <= n // 2 else []
        if not cuts:
            return np.zeros(flat.shape[0], dtype=bool)
    else:
        cuts = canonical_cuts(n)
    mask = np.ones(flat.shape[0], dtype=bool)
    conc = []
    for cut in cuts:
        p = batch_purity(flat, n, cut)
        if kind in ("ME", "AME", "k-uniform"):
            mask &= np.abs(p - 2.0**-cut.k) <= tol * 2**cut.k
        else:
            conc.append(np.sqrt(np.clip(2.0 * (1.0 - p), 0.0, None)))
    if kind in ("EE", "EME"):
        c = np.stack(conc)
        mask &= (c.max(axis=0) - c.min(axis=0)) <= tol
        if kind == "EME":
            mask &= np.all(np.abs(c - 1.0) <= tol, axis=0)
    return mask


@dataclass(frozen=True)
class EnumerationResult:
    query: EnumerationQuery
    hits: tuple[tuple[SignPattern, Classification], ...]
    examined: int
    raw_hits: int
    hits_by_size: dict[int, int] = field(default_factory=dict)
    seconds: float = 0.0


def _symmetry_maps(n: int) -> np.ndarray:
    """Index maps for every qubit permutation combined with every per-qubit bit flip."""
    idx = np.arange(2**n)
    bits = (idx[:, None] >> (n - 1 - np.arange(n))) & 1
    maps = []
    for perm in itertools.permutations(range(n)):
        permuted = bits[:, list(perm)]
        for flip in range(2**n):
            fb = (flip >> (n - 1 - np.arange(n))) & 1
            new = permuted ^ fb
            maps.append(new @ (1 << (n - 1 - np.arange(n))))
    return np.array(maps)


def canonical_key(v: np.ndarray, maps: np.ndarray) -> tuple:
    """Lexicographically smallest image of ``v`` under the symmetry group and a global sign."""
    images = np.zeros((2 * maps.shape[0], v.size))
    for g, m in enumerate(maps):
        images[2 * g, m] = v
    images[1::2] = -images[0::2]
    best = images[np.lexsort(images.T[::-1])[0]]
    return tuple(int(x) for x in np.sign(best))


def enumerate_sign_patterns(q: EnumerationQuery, tol: float = EPS_EXACT) -> EnumerationResult:
    """All equal-magnitude real states on the requested support sizes that satisfy the predicate.

    Every batch hit is re-checked through :func:`classify`; a disagreement is an
    internal error. With ``dedupe`` on, only the first pattern of each
    symmetry class (qubit permutations, bit flips, global sign) is kept.
    """
    count = q.pattern_count
    if count > MAX_PATTERNS:
        raise EnumerationTooLarge(count)
    t0 = time.perf_counter()
    maps = _symmetry_maps(q.n) if q.dedupe else None
    seen: set[tuple] = set()
    hits = []
    examined = raw = 0
    by_size: dict[int, int] = {}
    for s in q.support_sizes:
        by_size[s] = 0
        for supports, vecs in iter_pattern_batches(q.n, s):
            examined += vecs.shape[0] * vecs.shape[1]
            mask = _batch_mask(vecs, q.n, q.predicate, tol).reshape(vecs.shape[:2])
            for ci, si in zip(*np.nonzero(mask)):
                raw += 1
                by_size[s] += 1
                v = np.sign(vecs[ci, si])
                pattern = SignPattern.from_vector(q.n, v)
                if maps is not None:
                    key = canonical_key(v, maps)
                    if key in seen:
                        continue
                    seen.add(key)
                c = classify(from_sign_pattern(pattern), tol)
                if not predicate_holds(c, q.predicate):
                    raise InvariantError(f"batch predicate disagrees with classify on {pattern}")
                hits.append((pattern, c))
    return EnumerationResult(q, tuple(hits), examined, raw, by_size, time.perf_counter() - t0)


def is_complementary_pair_pattern(p: SignPattern) -> bool:
    """Support is a union of complementary pairs and, for two pairs, the sign product is negative."""
    support = set(p.support)
    if any(complement_index(p.n, i) not in support for i in support):
        return False
    if len(support) == 4:
        return math.prod(p.signs) < 0
    return True


@dataclass(frozen=True)
class PairRuleComparison:
    hits: int
    matching: int
    counterexamples: tuple[SignPattern, ...]
    rule_patterns: int
    rule_patterns_missed: int

    @property
    def rule_reproduced(self) -> bool:
        return not self.counterexamples and not self.rule_patterns_missed


def compare_pair_rule(n: int = 3, tol: float = EPS_EXACT) -> PairRuleComparison:
    """Check the four-term rule: ME states on four basis kets are exactly the unions of
    two complementary pairs with negative sign product."""
    res = enumerate_sign_patterns(EnumerationQuery(n, (4,), "ME"), tol)
    patterns = [p for p, _ in res.hits]
    bad = tuple(p for p in patterns if not is_complementary_pair_pattern(p))
    found = {(p.support, p.signs) for p in patterns}
    pairs = [(i, complement_index(n, i)) for i in range(2**(n - 1))]
    rule = missed = 0
    for (i, ci), (j, cj) in itertools.combinations(pairs, 2):
        support = tuple(sorted((i, ci, j, cj)))
        for signs in itertools.product((1, -1), repeat=4):
            if math.prod(signs) < 0:
                rule += 1
                missed += (support, signs) not in found
    return PairRuleComparison(len(patterns), len(patterns) - len(bad), bad, rule, missed)


def scan_min_single_cut(n: int, s: int) -> tuple[float, int]:
    """Largest min-over-single-cuts concurrence among all support-``s`` sign patterns."""
    best = 0.0
    examined = 0
    cuts = canonical_cuts(n, [1])
    for _, vecs in iter_pattern_batches(n, s):
        flat = vecs.reshape(-1, 2**n)
        examined += flat.shape[0]
        p = np.max([batch_purity(flat, n, c) for c in cuts], axis=0)
        best = max(best, float(np.sqrt(max(0.0, 2.0 * (1.0 - p.min())))))
    return best, examined


@dataclass(frozen=True)
class OptimizeConfig:
    n: int
    cut_sizes: tuple[int, ...] | None = None
    restarts: int = 20
    max_iter: int = 4000
    initial_step: float = 0.3
    min_step: float = 1e-7
    shrink: float = 0.5
    patience: int | None = None
    seed: int = 0
    real: bool = False
    normalize_by_bound: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("optimize needs n >= 2")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iter < 1 or self.initial_step <= 0 or self.min_step <= 0:
            raise ValueError("iteration count and step tolerances must be positive")
        if not 0 < self.shrink < 1:
            raise ValueError("shrink must lie in (0, 1)")
        if self.cut_sizes is not None:
            sizes = tuple(sorted(set(self.cut_sizes)))
            if not sizes or any(k < 1 or k > self.n // 2 for k in sizes):
                raise ValueError(f"cut sizes must lie in [1, {self.n // 2}]")
            object.__setattr__(self, "cut_sizes", sizes)

    @property
    def cuts(self) -> list[Bipartition]:
        return canonical_cuts(self.n, self.cut_sizes)


class _MinCutObjective:
    """min over cuts of concurrence (optionally divided by the cut's bound), on unnormalized vectors."""

    def __init__(self, n: int, cuts: list[Bipartition], normalize_by_bound: bool):
        idx = np.arange(2**n)
        self.index_blocks = [cut_matrix(idx, n, cut) for cut in cuts]
        self.scale = [max_concurrence_bound(c.k) ** 2 if normalize_by_bound else 1.0 for c in cuts]

    def __call__(self, x: np.ndarray) -> float:
        x = x / np.linalg.norm(x)
        worst = np.inf
        for block, scale in zip(self.index_blocks, self.scale):
            m = x[block]
            rho = m @ m.conj().T
            p = float(np.sum(rho.real**2 + rho.imag**2))
            worst = min(worst, 2.0 * (1.0 - p) / scale)
        return math.sqrt(max(worst, 0.0))


@dataclass(frozen=True)
class RestartResult:
    objective: float
    iterations: int
    converged: bool
    trace: tuple[float, ...]


@dataclass(frozen=True)
class OptimizeResult:
    config: OptimizeConfig
    state: PureState
    reports: tuple[CutReport, ...]
    objective: float
    trace: tuple[float, ...]
    restarts: tuple[RestartResult, ...]
    converged: bool


def _local_search(obj, x: np.ndarray, cfg: OptimizeConfig, rng: np.random.Generator):
    dim = x.size
    real_coords = dim if cfg.real else 2 * dim
    patience = cfg.patience or 2 * real_coords
    x = x / np.linalg.norm(x)
    f = obj(x)
    trace = [f]
    step = cfg.initial_step
    fails = 0
    it = 0
    while it < cfg.max_iter and step >= cfg.min_step:
        it += 1
        if rng.random() < 0.5:
            d = np.zeros(dim, dtype=x.dtype)
            j = rng.integers(real_coords)
            d[j % dim] = (1.0 if j < dim else 1.0j) * rng.choice((-1.0, 1.0))
        else:
            d = rng.standard_normal(dim)
            if not cfg.real:
                d = d + 1j * rng.standard_normal(dim)
            d /= np.linalg.norm(d)
        y = x + step * d
        y /= np.linalg.norm(y)
        fy = obj(y)
        if fy > f:
            x, f = y, fy
            trace.append(f)
            fails = 0
        else:
            fails += 1
            if fails >= patience:
                step *= cfg.shrink
                fails = 0
    return x, f, it, step < cfg.min_step, trace


def optimize(cfg: OptimizeConfig) -> OptimizeResult:
    """Maximize the minimum concurrence over the configured cuts.

    With ``normalize_by_bound`` (the default) each cut's concurrence is divided
    by its bound ``E_max(k)`` first, so mixed cut sizes compete on one scale and
    an objective of 1 means every cut is at its bound.

    Random unit-vector starts, then accept-on-improvement local search mixing
    single-coordinate and random-direction moves, renormalized after every move;
    the step shrinks after ``patience`` consecutive rejections. Restarts use
    independent child seeds of ``cfg.seed``, so results are reproducible.
    """
    obj = _MinCutObjective(cfg.n, cfg.cuts, cfg.normalize_by_bound)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    best_x, best_f, best_trace = None, -1.0, ()
    runs = []
    for ss in seeds:
        rng = np.random.default_rng(ss)
        x0 = rng.standard_normal(2**cfg.n)
        if not cfg.real:
            x0 = x0 + 1j * rng.standard_normal(2**cfg.n)
        x, f, it, conv, trace = _local_search(obj, x0, cfg, rng)
        runs.append(RestartResult(f, it, conv, tuple(trace)))
        if f > best_f:
            best_x, best_f, best_trace = x, f, tuple(trace)
    state = PureState(cfg.n, best_x / np.linalg.norm(best_x))
    ceiling = 1.0 if cfg.normalize_by_bound else max_concurrence_bound(min(c.k for c in cfg.cuts))
    if best_f > ceiling + EPS_EXACT:
        raise InvariantError(f"objective {best_f} exceeds bound {ceiling}")
    reports = tuple(cut_reports(state))
    return OptimizeResult(cfg, state, reports, best_f, best_trace, tuple(runs),
                          any(r.converged for r in runs))


@dataclass(frozen=True)
class FourQubitProbe:
    """Joint double-cut cross-term conditions for four qubits.

    ``printed`` maps catalog names of the published sixteen-term states to their
    (AB, AC, AD) left-hand sides; ``family_min_residual`` is the smallest sum of
    the three over every sixteen-term sign pattern (global sign fixed), and
    ``eight_negative_min_residual`` the same over patterns with eight minus signs.
    """

    printed: dict[str, tuple[float, float, float]]
    family_min_residual: float
    family_size: int
    eight_negative_min_residual: float
    ghz4_lhs: tuple[float, float, float]
    ghz4_double_cuts: tuple[float, float, float]
    psi4_double_cuts: tuple[float, float, float]

    @property
    def jointly_infeasible(self) -> bool:
        return self.family_min_residual > EPS_EXACT


def _double_lhs(amps: np.ndarray) -> tuple[float, float, float]:
    return tuple(printed_lhs(amps, 4, lab) for lab in ("AB", "AC", "AD"))


def ame_probe_4q() -> FourQubitProbe:
    from .catalog import get_entry
    from .state import concurrence

    printed = {name: _double_lhs(get_entry(name).state.amplitudes)
               for name in ("me4-sixteen-term-a", "me4-sixteen-term-b")}
    signs = _sign_rows(15)
    family = np.hstack([np.ones((signs.shape[0], 1)), signs]) / 4.0
    residual = np.zeros(family.shape[0])
    for cut in canonical_cuts(4, [2]):
        # diagonal is balanced for equal magnitudes, so the cross sum is (purity - 1/4) / 2
        residual += (batch_purity(family, 4, cut) - 0.25) / 2.0
    negatives = np.sum(family < 0, axis=1)
    g = ghz(4)
    psi4 = get_entry("psi4").state
    doubles = canonical_cuts(4, [2])
    return FourQubitProbe(
        printed=printed,
        family_min_residual=float(residual.min()),
        family_size=family.shape[0],
        eight_negative_min_residual=float(residual[negatives == 8].min()),
        ghz4_lhs=_double_lhs(g.amplitudes),
        ghz4_double_cuts=tuple(concurrence(g, c) for c in doubles),
        psi4_double_cuts=tuple(concurrence(psi4, c) for c in doubles),
    )
