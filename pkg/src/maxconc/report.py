"""Analysis reports: per-cut rows plus classification, as a table or JSON."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from . import __version__
from .criteria import Classification, classify_reports
from .state import EPS_EXACT, EPS_PAPER, CutReport, PureState, cut_reports


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    state_hash: str
    n: int
    rows: tuple[CutReport, ...]
    classification: Classification
    version: str
    tolerances: dict


def state_hash(state: PureState) -> str:
    return hashlib.sha256(state.amplitudes.tobytes()).hexdigest()[:16]


def analyze(state: PureState, name: str = "state", sizes=None, tol: float = EPS_EXACT) -> AnalysisReport:
    """Rows for the selected cut sizes; classification always uses every canonical cut."""
    all_rows = cut_reports(state, tol=tol)
    c = classify_reports(state.n, all_rows, tol)
    rows = tuple(r for r in all_rows if sizes is None or r.bipartition.k in sizes)
    return AnalysisReport(name, state_hash(state), state.n, rows, c, __version__,
                          {"exact": tol, "paper": EPS_PAPER})


def _row_dict(r: CutReport) -> dict:
    return {
        "cut": str(r.bipartition),
        "subset": list(r.bipartition.subset),
        "k": r.bipartition.k,
        "concurrence": r.concurrence,
        "concurrence_sq": r.concurrence_sq,
        "purity": r.purity,
        "entropy": r.entropy,
        "linear_entropy": r.linear_entropy,
        "bound": r.bound,
        "maximally_mixed": r.is_maximally_mixed,
    }


def classification_dict(c: Classification) -> dict:
    return {"product": c.is_product, "ME": c.is_ME, "max_uniformity": c.max_uniformity,
            "AME": c.is_AME, "EE": c.is_EE, "EME": c.is_EME, "labels": c.labels}


def render_machine(report: AnalysisReport) -> str:
    # json writes floats with repr, i.e. round-trip precision (17 significant digits)
    return json.dumps({
        "name": report.name,
        "state_hash": report.state_hash,
        "n": report.n,
        "version": report.version,
        "tolerances": report.tolerances,
        "cuts": [_row_dict(r) for r in report.rows],
        "classification": classification_dict(report.classification),
    }, indent=2)


def render_table(report: AnalysisReport) -> str:
    lines = [f"{report.name}  n={report.n}  hash={report.state_hash}",
             f"{'cut':<12}{'E':>14}{'E^2':>14}{'purity':>14}{'S(vN)':>14}{'S_L':>14}"
             f"{'E_max':>14}  mixed"]
    for r in report.rows:
        lines.append(f"{str(r.bipartition):<12}{r.concurrence:>14.10f}{r.concurrence_sq:>14.10f}"
                     f"{r.purity:>14.10f}{r.entropy:>14.10f}{r.linear_entropy:>14.10f}"
                     f"{r.bound:>14.10f}  {'yes' if r.is_maximally_mixed else 'no'}")
    total = sum(r.concurrence for r in report.rows)
    lines.append(f"total concurrence over listed cuts: {total:.10f}")
    lines.append("classification: " + ", ".join(report.classification.labels))
    return "\n".join(lines)
