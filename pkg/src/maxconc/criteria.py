"""Maximum-concurrence criteria: cross-term sums, printed coefficient inequalities,
k-uniformity and ME / AME / EE / EME classification."""
from __future__ import annotations

import functools
import string
from dataclasses import dataclass

import numpy as np

from .state import (EPS_EXACT, Bipartition, CutReport, PureState, cut_matrix, cut_reports,
                    _require_normalized)


@dataclass(frozen=True)
class CrossTermReport:
    """Split of ``tr(rho_S^2)`` into diagonal and off-diagonal (cross-term) mass.

    ``purity = diag_sum + 2 * cross_sum``. ``threshold`` is the cross-term bound
    a balanced reduction must stay below to beat concurrence 1 (``1/8`` for a
    4x4 reduction); single cuts can only reach 1, which needs the cross terms to
    vanish, so their threshold is 0 and the comparison is ``<=`` within tolerance.
    """

    bipartition: Bipartition
    diag_sum: float
    cross_sum: float
    threshold: float
    balanced: bool
    satisfied: bool

    @property
    def purity(self) -> float:
        return self.diag_sum + 2.0 * self.cross_sum


def cross_term_threshold(k: int) -> float:
    """Cross-sum bound for a balanced ``2**k`` reduction to have purity below 1/2."""
    return max(0.0, (0.5 - 2.0**-k) / 2.0)


def _compare(lhs: float, k: int, balanced: bool, tol: float) -> bool:
    if k == 1:
        return balanced and lhs <= tol
    return balanced and lhs < cross_term_threshold(k)


def cross_term_sum(state: PureState, cut: Bipartition, tol: float = EPS_EXACT) -> CrossTermReport:
    _require_normalized(state)
    m = cut_matrix(state.amplitudes, state.n, cut)
    rho = m @ m.conj().T
    diag = rho.diagonal().real
    off = np.abs(rho) ** 2
    cross = float(np.sum(np.triu(off, 1)))
    balanced = bool(np.all(np.abs(diag - 1.0 / diag.size) <= tol))
    return CrossTermReport(cut, float(np.sum(diag**2)), cross, cross_term_threshold(cut.k),
                           balanced, _compare(cross, cut.k, balanced, tol))


# Printed coefficient inequalities, transcribed term by term. Each string is one
# |x1 y1* + x2 y2* + ...|^2 term, written "x1.y1 x2.y2 ...". Five-qubit symbols
# after z are al, be, ga, de, th, ph (basis indices 26..31).
_SYMBOLS = {
    3: list("abcdefgh"),
    4: list("abcdefghijklmnop"),
    5: list(string.ascii_lowercase) + ["al", "be", "ga", "de", "th", "ph"],
}

_PRINTED_FORMS: dict[int, dict[str, list[str]]] = {
    3: {
        "A": ["a.e b.f c.g d.h"],
        "B": ["a.c b.d e.g f.h"],
        "C": ["a.b c.d e.f g.h"],
    },
    4: {
        "AB": ["a.e b.f c.g d.h", "a.i b.j c.k d.l", "a.m b.n c.o d.p",
               "e.m f.n g.o h.p", "i.m j.n k.o l.p", "e.i f.j g.k h.l"],
        "AC": ["a.c b.d e.g f.h", "a.i b.j e.m f.n", "a.k b.l e.o f.p",
               "c.k d.l g.o h.p", "i.k j.l m.o n.p", "i.c j.d m.g n.h"],
        "AD": ["a.b c.d e.f g.h", "a.i c.k e.m g.o", "a.j c.l e.n g.p",
               "b.j d.l f.n h.p", "i.j k.l m.n o.p", "b.i d.k f.m h.o"],
    },
    5: {
        "AB": ["a.i b.j c.k d.l e.m f.n g.o h.p", "a.q b.r c.s d.t e.u f.v g.w h.x",
               "a.y b.z c.al d.be e.ga f.de g.th h.ph", "i.y j.z k.al l.be m.ga n.de o.th p.ph",
               "q.y r.z s.al t.be u.ga v.de w.th x.ph", "i.q j.r k.s l.t m.u n.v o.w p.x"],
        "AC": ["a.e b.f c.g d.h i.m j.n k.o l.p", "a.q b.r c.s d.t i.y j.z k.al l.be",
               "a.u b.v c.w d.x i.ga j.de k.th l.ph", "e.u f.v g.w h.x m.ga n.de o.th p.ph",
               "q.u r.v s.w t.x y.ga z.de al.th be.ph", "e.q f.r g.s h.t m.y n.z o.al p.be"],
        "AD": ["a.c b.d e.g f.h i.k j.l m.o n.p", "a.q b.r e.u f.v i.y j.z m.ga n.de",
               "a.s b.t e.w f.x i.al j.be m.th n.ph", "c.s d.t g.w h.x k.al l.be o.th p.ph",
               "q.s r.t u.w v.x y.al z.be ga.th de.ph", "c.q d.r g.u h.v k.y l.z o.ga p.de"],
        "AE": ["a.b c.d e.f g.h i.j k.l m.n o.p", "a.q c.s e.u g.w i.y k.al m.ga o.th",
               "a.r c.t e.v g.x i.z k.be m.de o.ph", "b.r d.t f.v h.x j.z l.be n.de p.ph",
               "q.r s.t u.v w.x y.z al.be ga.de th.ph", "b.q d.s f.u h.w j.y l.al n.ga p.th"],
        "BC": ["a.e b.f c.g d.h q.u r.v s.w t.x", "a.i b.j c.k d.l q.y r.z s.al t.be",
               "a.m b.n c.o d.p q.ga r.de s.th t.ph", "e.m f.n g.o h.p u.ga v.de w.th x.ph",
               "i.m j.n k.o l.p y.ga z.de al.th be.ph", "e.i f.j g.k h.l u.y v.z w.al x.be"],
        "BD": ["a.c b.d e.g f.h q.s r.t u.w v.x", "a.i b.j e.m f.n q.y r.z u.ga v.de",
               "a.k b.l e.o f.p q.al r.be u.th v.ph", "c.k d.l g.o h.p s.al t.be w.th x.ph",
               "i.k j.l m.o n.p y.al z.be ga.th de.ph", "c.i d.j g.m h.n s.y t.z w.ga x.de"],
        "BE": ["a.b c.d e.f g.h q.r s.t u.v w.x", "a.i c.k e.m g.o q.y s.al u.ga w.th",
               "a.j c.l e.n g.p q.z s.be u.de w.ph", "b.j d.l f.n h.p r.z t.be v.de x.ph",
               "i.j k.l m.n o.p y.z al.be ga.de th.ph", "b.i d.k f.m h.o r.y t.al v.ga x.th"],
        "CD": ["a.c b.d i.k j.l q.s r.t y.al z.be", "a.e b.f i.m j.n q.u r.v y.ga z.de",
               "a.g b.h i.o j.p q.w r.x y.th z.ph", "c.g d.h k.o l.p s.w t.x al.th be.ph",
               "e.g f.h m.o n.p u.w v.x ga.th de.ph", "c.e d.f k.m l.n s.u t.v al.ga be.de"],
        "CE": ["a.b c.d i.j k.l q.r s.t y.z al.be", "a.e c.g i.m k.o q.u s.w y.ga al.th",
               "a.f c.h i.n k.p q.v s.x y.de al.ph", "b.f d.h j.n l.p r.v t.x z.de be.ph",
               "e.f g.h m.n o.p u.v w.x ga.de th.ph", "b.e d.g j.m l.o r.u t.w z.ga be.th"],
        "DE": ["a.b e.f i.j m.n q.r u.v y.z ga.de", "a.c e.g i.k m.o q.s u.w y.al ga.th",
               "a.d e.h i.l m.p q.t u.x y.be ga.ph", "b.d f.h j.l n.p r.t v.x z.be de.ph",
               "c.d g.h k.l o.p s.t w.x al.be th.ph", "b.c f.g j.k n.o r.s v.w z.al de.th"],
    },
}


def _parse_term(term: str, index: dict[str, int]) -> tuple[np.ndarray, np.ndarray]:
    pairs = [p.split(".") for p in term.split()]
    return (np.array([index[x] for x, _ in pairs]), np.array([index[y] for _, y in pairs]))


@functools.lru_cache(maxsize=None)
def _compiled_forms(n: int) -> dict[str, list[tuple[np.ndarray, np.ndarray]]]:
    index = {s: i for i, s in enumerate(_SYMBOLS[n])}
    return {cut: [_parse_term(t, index) for t in terms]
            for cut, terms in _PRINTED_FORMS[n].items()}


@dataclass(frozen=True)
class InequalityRow:
    bipartition: Bipartition
    lhs: float
    threshold: float
    balanced: bool
    satisfied: bool

    @property
    def below_threshold(self) -> bool:
        if self.bipartition.k == 1:
            return self.lhs <= EPS_EXACT
        return self.lhs < self.threshold


def printed_lhs(amplitudes: np.ndarray, n: int, label: str) -> float:
    """Evaluate one printed left-hand side straight from the coefficient symbols."""
    if n not in _PRINTED_FORMS:
        raise ValueError("explicit forms cover n <= 5; use cross_term_sum")
    total = 0.0
    for xs, ys in _compiled_forms(n)[label]:
        total += abs(np.sum(amplitudes[xs] * np.conj(amplitudes[ys]))) ** 2
    return float(total)


def explicit_inequalities(state: PureState, tol: float = EPS_EXACT) -> list[InequalityRow]:
    """Every printed condition for ``n`` in {3, 4, 5}, evaluated term by term.

    For n = 3 the condition is that the single-cut cross term vanishes; for
    n = 4 and 5 it is the double-cut ``< 1/8`` bound, which only means
    ``E > 1`` when the reduction's diagonal is balanced; ``balanced`` records
    whether that held and ``satisfied`` requires it.
    """
    n = state.n
    if n not in _PRINTED_FORMS:
        raise ValueError("explicit forms cover n <= 5; use cross_term_sum")
    _require_normalized(state)
    rows = []
    for label in _PRINTED_FORMS[n]:
        cut = Bipartition.from_label(n, label)
        lhs = printed_lhs(state.amplitudes, n, label)
        m = cut_matrix(state.amplitudes, n, cut)
        diag = np.sum(np.abs(m) ** 2, axis=1)
        balanced = bool(np.all(np.abs(diag - 1.0 / diag.size) <= tol))
        rows.append(InequalityRow(cut, lhs, cross_term_threshold(cut.k), balanced,
                                  _compare(lhs, cut.k, balanced, tol)))
    return rows


def is_k_uniform(state: PureState, k: int, tol: float = EPS_EXACT) -> bool:
    """Every ``k``-qubit reduction has purity ``2**-k`` (maximally mixed)."""
    return all(r.is_maximally_mixed for r in cut_reports(state, [k], tol))


def k_uniformity(state: PureState, tol: float = EPS_EXACT) -> int:
    _require_normalized(state)
    k = 0
    while k + 1 <= state.n // 2 and is_k_uniform(state, k + 1, tol):
        k += 1
    return k


@dataclass(frozen=True)
class Classification:
    n: int
    is_product: bool
    is_ME: bool
    max_uniformity: int
    is_AME: bool
    is_EE: bool
    is_EME: bool
    evidence: tuple[CutReport, ...]

    @property
    def labels(self) -> list[str]:
        out = ["product" if self.is_product else "entangled"]
        if self.is_ME:
            out.append("ME")
        if self.max_uniformity:
            out.append(f"{self.max_uniformity}-uniform")
        out += [name for name, flag in (("AME", self.is_AME), ("EE", self.is_EE),
                                        ("EME", self.is_EME)) if flag]
        return out


def classify_reports(n: int, reports: list[CutReport], tol: float = EPS_EXACT) -> Classification:
    singles = [r for r in reports if r.bipartition.k == 1]
    values = [r.concurrence for r in reports]
    is_product = all(r.concurrence <= tol for r in singles)
    # E = 1 on a single cut is the same statement as purity 1/2
    is_me = bool(singles) and all(r.is_maximally_mixed for r in singles)
    k = 0
    while k + 1 <= n // 2 and all(r.is_maximally_mixed for r in reports if r.bipartition.k == k + 1):
        k += 1
    is_ee = bool(values) and max(values) - min(values) <= tol
    is_eme = is_ee and is_me and all(abs(v - 1.0) <= tol for v in values)
    return Classification(n, is_product, is_me, k, bool(reports) and k == n // 2, is_ee, is_eme,
                          tuple(reports))


def classify(state: PureState, tol: float = EPS_EXACT) -> Classification:
    _require_normalized(state)
    return classify_reports(state.n, cut_reports(state, tol=tol), tol)


@dataclass(frozen=True)
class OddSupportVerdict:
    n: int
    support_size: int
    me_found: bool
    best_min_concurrence: float
    examined: int


def odd_support_obstruction(n: int, support_size: int) -> OddSupportVerdict:
    """Exhaustively check that no equal-magnitude real state with an odd number of
    nonzero coefficients has every single-cut concurrence equal to 1."""
    from .search import scan_min_single_cut

    if n not in (3, 4):
        raise ValueError(f"odd-support check supports n in {{3, 4}}, got {n}")
    if support_size % 2 == 0:
        raise ValueError("support size is even; use enumerate")
    if not 1 <= support_size <= 2**n:
        raise ValueError(f"support size {support_size} outside [1, {2**n}]")
    best, examined = scan_min_single_cut(n, support_size)
    return OddSupportVerdict(n, support_size, best >= 1.0 - EPS_EXACT, best, examined)

