"""Command line: analyze, classify, enumerate, optimize, verify-paper.

Exit codes: 0 success, 1 published value not reproduced, 2 usage or input
error, 3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .catalog import catalog_names, get_entry, verify_catalog
from .criteria import explicit_inequalities
from .documents import StateFormatError, parse_state
from .report import analyze, classification_dict, render_machine, render_table
from .search import (EnumerationQuery, EnumerationTooLarge, OptimizeConfig, ame_probe_4q,
                     compare_pair_rule, enumerate_sign_patterns, optimize)
from .state import EPS_EXACT, EPS_PAPER, InvariantError

CUT_SIZES = {"single": (1,), "double": (2,), "all": None}


class UsageError(Exception):
    pass


def _load(args):
    if bool(args.state) == bool(args.catalog):
        raise UsageError("give exactly one of --state FILE or --catalog NAME")
    if args.catalog:
        try:
            return args.catalog, get_entry(args.catalog).state
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    try:
        with open(args.state, encoding="utf-8") as fh:
            doc = parse_state(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.state}: {exc.strerror}") from None
    return args.state, doc.to_state()


def _parse_sizes(text: str) -> tuple[int, ...]:
    sizes = set()
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            sizes.update(range(int(lo), int(hi) + 1))
        elif part:
            sizes.add(int(part))
    if not sizes:
        raise argparse.ArgumentTypeError("empty support list")
    return tuple(sorted(sizes))


def run_analyze(args, out) -> int:
    name, state = _load(args)
    tol = args.tolerance or EPS_EXACT
    report = analyze(state, name, CUT_SIZES[args.cuts], tol)
    print(render_machine(report) if args.format == "machine" else render_table(report), file=out)
    return 0


def run_classify(args, out) -> int:
    name, state = _load(args)
    report = analyze(state, name, None, args.tolerance or EPS_EXACT)
    c = report.classification
    if args.format == "machine":
        print(json.dumps({"name": name, "state_hash": report.state_hash,
                          "classification": classification_dict(c)}, indent=2), file=out)
    else:
        print(f"{name}: {', '.join(c.labels)}", file=out)
        for r in report.rows:
            print(f"  {str(r.bipartition):<10} E={r.concurrence:.10f}  bound={r.bound:.10f}", file=out)
    return 0


def run_enumerate(args, out) -> int:
    q = EnumerationQuery(args.n, args.support, args.predicate, args.dedupe)
    res = enumerate_sign_patterns(q, args.tolerance or EPS_EXACT)
    machine = args.format == "machine"
    for p, c in res.hits:
        if machine:
            print(json.dumps({"support": list(p.support), "signs": list(p.signs),
                              "labels": c.labels}), file=out)
        else:
            print(f"{p.ket_string()}    [{', '.join(c.labels)}]", file=out)
    summary = {"n": q.n, "predicate": q.predicate, "support_sizes": list(q.support_sizes),
               "examined": res.examined, "hits": res.raw_hits, "reported": len(res.hits),
               "hits_by_size": res.hits_by_size, "seconds": round(res.seconds, 3)}
    if q.n == 3 and 4 in q.support_sizes and q.predicate.upper() == "ME":
        cmp = compare_pair_rule(3)
        summary["pair_rule"] = {"hits": cmp.hits, "matching": cmp.matching,
                                "counterexamples": len(cmp.counterexamples),
                                "rule_patterns_missed": cmp.rule_patterns_missed}
    if machine:
        print(json.dumps({"summary": summary}), file=out)
    else:
        print(f"# examined {res.examined} patterns, {res.raw_hits} satisfy {q.predicate}"
              f" ({len(res.hits)} listed) by size {res.hits_by_size} in {res.seconds:.2f}s", file=out)
        if "pair_rule" in summary:
            pr = summary["pair_rule"]
            print(f"# four-term hits: {pr['matching']} of {pr['hits']} are two complementary pairs "
                  f"with negative sign product; {pr['counterexamples']} are not", file=out)
    return 0


def run_optimize(args, out) -> int:
    cfg = OptimizeConfig(args.n, CUT_SIZES[args.cuts], restarts=args.restarts,
                         max_iter=args.max_iter, seed=args.seed, real=args.real,
                         normalize_by_bound=not args.raw)
    res = optimize(cfg)
    if args.format == "machine":
        print(json.dumps({
            "objective": res.objective,
            "converged": res.converged,
            "restart_objectives": [r.objective for r in res.restarts],
            "amplitudes": [[a.real, a.imag] for a in res.state.amplitudes],
            "cuts": {str(r.bipartition): r.concurrence for r in res.reports},
        }, indent=2), file=out)
        return 0
    for i, r in enumerate(res.restarts):
        print(f"restart {i:4d}: objective {r.objective:.10f} after {r.iterations} steps"
              f"{'' if r.converged else ' (step budget exhausted)'}", file=out)
    print(f"# best objective {res.objective:.10f} over {cfg.restarts} restarts (seed {cfg.seed})",
          file=out)
    for r in res.reports:
        print(f"  {str(r.bipartition):<10} E={r.concurrence:.10f}  bound={r.bound:.10f}", file=out)
    return 0


def run_verify_paper(args, out) -> int:
    tol = args.tolerance or EPS_PAPER
    checks = verify_catalog(tol)
    failures = flagged = rows = 0
    for ch in checks:
        print(f"[{ch.entry.name}] {ch.entry.description}", file=out)
        for r in ch.rows:
            rows += 1
            gen = "" if r.generated is None else f"  graph={r.generated:.6f}"
            print(f"  {r.quantity:<22} printed={r.printed:<8g} computed={r.computed:.6f}{gen}"
                  f"  {r.status}", file=out)
        if ch.flagged:
            print(f"  suspected typo in printed state: {ch.entry.suspected_typo}", file=out)
        if ch.generator_matches_printed is False:
            print("  note: printed signs differ from the generating graph state", file=out)
        failures += len(ch.failures)
        flagged += len(ch.flagged)

    ame = get_entry("ame52-cycle")
    print("[ame52-cycle] printed five-qubit double-cut inequalities (< 1/8)", file=out)
    for row in explicit_inequalities(ame.state):
        status = "ok" if row.satisfied else "FAIL"
        failures += not row.satisfied
        rows += 1
        print(f"  E_{row.bipartition.label:<4} lhs={row.lhs:.6f}  balanced={row.balanced}  {status}",
              file=out)

    probe = ame_probe_4q()
    ok = probe.jointly_infeasible
    failures += not ok
    rows += 1
    print(f"[four-qubit probe] min joint double-cut residual over {probe.family_size} "
          f"sixteen-term sign patterns: {probe.family_min_residual:.6f}  {'ok' if ok else 'FAIL'}",
          file=out)

    print(f"# {len(checks)} catalog entries, {rows} checks, {failures} failures, "
          f"{flagged} flagged as suspected typos in published states", file=out)
    if failures or (args.strict and flagged):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxconc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, state=True):
        if state:
            sp.add_argument("--state", help="state document (JSON)")
            sp.add_argument("--catalog", help=f"catalog entry: {', '.join(catalog_names())}")
        sp.add_argument("--format", choices=("table", "machine"), default="table")
        sp.add_argument("--tolerance", type=float, default=None)

    a = sub.add_parser("analyze", help="per-cut concurrence, purity and entropy")
    common(a)
    a.add_argument("--cuts", choices=tuple(CUT_SIZES), default="all")
    a.set_defaults(func=run_analyze)

    c = sub.add_parser("classify", help="ME / k-uniform / AME / EE / EME verdict")
    common(c)
    c.set_defaults(func=run_classify)

    e = sub.add_parser("enumerate", help="exhaustive equal-magnitude sign-pattern search")
    common(e, state=False)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--support", type=_parse_sizes, required=True, help="e.g. 4 or 1-8 or 2,4")
    e.add_argument("--predicate", default="ME", help="ME, AME, EME, EE or k-uniform(K)")
    e.add_argument("--dedupe", action="store_true",
                   help="one pattern per class under qubit permutations, bit flips, global sign")
    e.set_defaults(func=run_enumerate)

    o = sub.add_parser("optimize", help="maximize the minimum cut concurrence")
    common(o, state=False)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--cuts", choices=tuple(CUT_SIZES), default="all")
    o.add_argument("--restarts", type=int, default=20)
    o.add_argument("--max-iter", type=int, default=4000)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--real", action="store_true", help="search real amplitudes only")
    o.add_argument("--raw", action="store_true",
                   help="objective is the raw min concurrence instead of min E / E_max(k)")
    o.set_defaults(func=run_optimize)

    v = sub.add_parser("verify-paper", help="recompute every published value in the catalog")
    common(v, state=False)
    v.add_argument("--strict", action="store_true", help="suspected typos also fail")
    v.set_defaults(func=run_verify_paper)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) < 0 or getattr(args, "seed", 0) >= 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        return args.func(args, out)
    except (UsageError, StateFormatError, EnumerationTooLarge, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"{parser.prog} {args.command}: internal invariant breach: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
