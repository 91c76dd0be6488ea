"""JSON state documents: explicit amplitudes, (hyper)graph, sign pattern or catalog name.

Every document has a single top-level ``"state"`` object holding exactly one of
the keys ``amplitudes``, ``graph``, ``sign_pattern`` or ``catalog_name``::

    {"state": {"amplitudes": {"n": 1, "values": [[0.6, 0.0], [0.0, 0.8]]}}}
    {"state": {"graph": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "hyperedges": []}}}
    {"state": {"sign_pattern": {"n": 3, "support": [0, 1, 6, 7], "signs": [1, 1, -1, 1]}}}
    {"state": {"catalog_name": "ghz3"}}
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass

import numpy as np

from .catalog import catalog_names, get_entry
from .constructors import GraphSpec, SignPattern, from_sign_pattern, hypergraph_state
from .state import PureState, normalize_state

log = logging.getLogger(__name__)

KINDS = ("amplitudes", "graph", "sign_pattern", "catalog_name")
NORM_WARN = 1e-6


class StateFormatError(ValueError):
    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(path)
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.path = path
        self.line = line


@dataclass(frozen=True)
class StateDocument:
    kind: str
    amplitudes: tuple[tuple[float, float], ...] | None = None
    n: int | None = None
    graph: GraphSpec | None = None
    sign_pattern: SignPattern | None = None
    catalog_name: str | None = None

    def to_state(self) -> PureState:
        if self.kind == "amplitudes":
            amps = np.array([complex(re, im) for re, im in self.amplitudes])
            return normalize_state(PureState(self.n, amps))
        if self.kind == "graph":
            return hypergraph_state(self.graph)
        if self.kind == "sign_pattern":
            return from_sign_pattern(self.sign_pattern)
        return get_entry(self.catalog_name).state


def _int(value, path) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise StateFormatError(f"expected an integer, got {value!r}", path)
    return value


def _number(value, path) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise StateFormatError(f"malformed number {value!r}", path)
    return float(value)


def _int_list(value, path) -> list:
    if not isinstance(value, list):
        raise StateFormatError("expected a list", path)
    return [_int(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _parse_amplitudes(body, path) -> StateDocument:
    if not isinstance(body, dict):
        raise StateFormatError("expected an object with n and values", path)
    n = _int(body.get("n"), f"{path}.n")
    if n < 1:
        raise StateFormatError("n must be >= 1", f"{path}.n")
    values = body.get("values")
    if not isinstance(values, list):
        raise StateFormatError("expected a list of [re, im] pairs", f"{path}.values")
    if len(values) != 2**n:
        raise StateFormatError(f"expected {2**n} amplitudes, got {len(values)}", f"{path}.values")
    pairs = []
    for i, v in enumerate(values):
        p = f"{path}.values[{i}]"
        if not isinstance(v, list) or len(v) != 2:
            raise StateFormatError(f"malformed number {v!r}: expected [re, im]", p)
        pairs.append((_number(v[0], p), _number(v[1], p)))
    norm = math.sqrt(sum(re * re + im * im for re, im in pairs))
    if norm == 0.0:
        raise StateFormatError("null state: all amplitudes are zero", f"{path}.values")
    if abs(norm - 1.0) > NORM_WARN:
        log.warning("amplitudes have norm %.12g; normalizing on load", norm)
    return StateDocument("amplitudes", amplitudes=tuple(pairs), n=n)


def _parse_graph(body, path) -> StateDocument:
    if not isinstance(body, dict):
        raise StateFormatError("expected an object with n, edges, hyperedges", path)
    n = _int(body.get("n"), f"{path}.n")
    edges = body.get("edges", [])
    hyper = body.get("hyperedges", [])
    for key, items in (("edges", edges), ("hyperedges", hyper)):
        if not isinstance(items, list):
            raise StateFormatError("expected a list", f"{path}.{key}")
    edges = [_int_list(e, f"{path}.edges[{i}]") for i, e in enumerate(edges)]
    hyper = [_int_list(e, f"{path}.hyperedges[{i}]") for i, e in enumerate(hyper)]
    for i, e in enumerate(hyper):
        if len(e) < 3:
            raise StateFormatError(f"hyperedge of size < 3: {e}", f"{path}.hyperedges[{i}]")
    try:
        spec = GraphSpec.from_lists(n, edges, hyper)
    except ValueError as exc:
        raise StateFormatError(str(exc), path) from None
    return StateDocument("graph", graph=spec, n=n)


def _parse_sign_pattern(body, path) -> StateDocument:
    if not isinstance(body, dict):
        raise StateFormatError("expected an object with n, support, signs", path)
    n = _int(body.get("n"), f"{path}.n")
    support = _int_list(body.get("support"), f"{path}.support")
    signs = _int_list(body.get("signs"), f"{path}.signs")
    try:
        pattern = SignPattern(n, tuple(support), tuple(signs))
    except ValueError as exc:
        raise StateFormatError(str(exc), path) from None
    return StateDocument("sign_pattern", sign_pattern=pattern, n=n)


def parse_state(text: str) -> StateDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict) or set(data) != {"state"}:
        raise StateFormatError('document must be an object with the single key "state"')
    body = data["state"]
    if not isinstance(body, dict) or len(body) != 1 or next(iter(body)) not in KINDS:
        raise StateFormatError(f"state must hold exactly one of {', '.join(KINDS)}", "state")
    kind, value = next(iter(body.items()))
    path = f"state.{kind}"
    if kind == "amplitudes":
        return _parse_amplitudes(value, path)
    if kind == "graph":
        return _parse_graph(value, path)
    if kind == "sign_pattern":
        return _parse_sign_pattern(value, path)
    if not isinstance(value, str) or value not in catalog_names():
        raise StateFormatError(f"unknown catalog name {value!r}", path)
    return StateDocument("catalog_name", catalog_name=value)


def render_state(doc: StateDocument) -> str:
    if doc.kind == "amplitudes":
        body = {"n": doc.n, "values": [[re, im] for re, im in doc.amplitudes]}
    elif doc.kind == "graph":
        body = {"n": doc.graph.n,
                "edges": [list(e) for e in doc.graph.sorted_edges()],
                "hyperedges": [list(e) for e in doc.graph.sorted_hyperedges()]}
    elif doc.kind == "sign_pattern":
        p = doc.sign_pattern
        body = {"n": p.n, "support": list(p.support), "signs": list(p.signs)}
    else:
        body = doc.catalog_name
    return json.dumps({"state": {doc.kind: body}}, indent=2)


def document_from_state(state: PureState) -> StateDocument:
    return StateDocument("amplitudes", n=state.n,
                         amplitudes=tuple((float(a.real), float(a.imag)) for a in state.amplitudes))
