"""Command-line interface: generate, solve, verify, audit, and batch-run.

Exit codes: 0 = SAT / valid / audit-clean, 1 = UNSAT / invalid / violations,
2 = usage or I/O error, 3 = budget exhausted (UNKNOWN / FAIL).  All output is
JSON (or TSV with --format tsv) on stdout; given identical arguments the
output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import audit as audit_mod
from . import graph as graph_mod
from .matching import local_search
from .solver import (EdgeColoring, PackingSequence, SEQ_12_24, solve_exact,
                     solve_pipeline, verify)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    pass


def _load_graph(args):
    if getattr(args, "input", None):
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from None
        if args.input.endswith((".g6", ".graph6")):
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise CliError("expected exactly one graph6 line; use batch for files")
            return graph_mod.parse_graph6(lines[0])
        return graph_mod.parse_edge_list(text)
    if getattr(args, "family", None):
        fam = args.family.strip().lower()
        if fam == "random_cubic":
            if args.n is None:
                raise CliError("--family random_cubic needs --n")
            return graph_mod.random_cubic(args.n, args.seed)
        return graph_mod.generate_named(fam)
    raise CliError("provide --input or --family")


def _emit(payload, fmt):
    if fmt == "tsv":
        for key, value in _flatten(payload):
            print(f"{key}\t{value}")
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}{k}.")
        return
    if isinstance(obj, list):
        yield prefix.rstrip("."), json.dumps(obj, sort_keys=True)
        return
    yield prefix.rstrip("."), obj


def _cmd_gen(args):
    g = _load_graph(args)
    if args.format == "graph6":
        print(graph_mod.to_graph6(g))
    else:
        sys.stdout.write(graph_mod.to_edge_list_text(g))
    return EXIT_OK


def _cmd_distance(args):
    g = _load_graph(args)
    if not (0 <= args.e1 < g.m and 0 <= args.e2 < g.m):
        raise CliError(f"edge ids must be in [0, {g.m})")
    d = graph_mod.edge_distance(g, args.e1, args.e2)
    payload = {"e1": args.e1, "e2": args.e2,
               "distance": None if d == math.inf else d}
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_solve(args):
    g = _load_graph(args)
    seq = PackingSequence.parse(args.sequence)
    if args.method == "pipeline":
        if seq.values != SEQ_12_24.values:
            raise CliError("the pipeline solves exactly the (1^2,2^4) sequence")
        result = solve_pipeline(g, args.seed)
    else:
        result = solve_exact(g, seq, budget=args.budget)
    _emit(result.to_json_dict(g, seq), args.format)
    if result.status == "sat":
        return EXIT_OK
    if result.status == "unsat":
        return EXIT_NEGATIVE
    return EXIT_BUDGET


def _cmd_verify(args):
    g = _load_graph(args)
    seq = PackingSequence.parse(args.sequence)
    try:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        coloring = EdgeColoring.from_classes(doc["classes"], g.m)
        violations = verify(g, seq, coloring)
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise CliError(f"bad coloring file: {exc}") from None
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {
        "status": "valid" if not violations else "invalid",
        "sequence": list(seq),
        "violations": [
            {"class": v.class_index, "e1": v.e1, "e2": v.e2,
             "distance": None if v.distance == math.inf else v.distance,
             "required": v.required}
            for v in violations],
    }
    _emit(payload, args.format)
    return EXIT_OK if not violations else EXIT_NEGATIVE


def _cmd_audit(args):
    g = _load_graph(args)
    result = local_search(g, args.seed, budget=args.budget)
    pair = result.pair
    report = audit_mod.check_lemmas(g, pair, stability=(2, 1, 3) if result.stable else None)
    comps = audit_mod.classify_components(g, pair)
    kinds = {}
    for c in comps:
        kinds[c.kind] = kinds.get(c.kind, 0) + 1
    payload = {
        "stable": result.stable,
        "union_size": pair.union_size,
        "m1": sorted(pair.m1),
        "m2": sorted(pair.m2),
        "component_kinds": kinds,
        "lemmas": report.to_json_dict(),
    }
    clean = result.stable and not report.hard_violations()
    if all(c.kind != "VIOLATION" for c in comps):
        payload["charges"] = audit_mod.compute_charges(g, pair).to_json_dict()
    else:
        payload["charges"] = None
        clean = False
    _emit(payload, args.format)
    return EXIT_OK if clean else EXIT_NEGATIVE


def _cmd_batch(args):
    records = []
    errors = 0
    graphs = []
    if args.input:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from None
        for idx, line in enumerate(ln for ln in lines if ln.strip()):
            try:
                graphs.append((idx, graph_mod.parse_graph6(line)))
            except ValueError as exc:
                records.append({"index": idx, "status": "error", "error": str(exc)})
                errors += 1
    elif args.family:
        fam = args.family.strip().lower()
        for idx in range(args.count):
            if fam == "random_cubic":
                if args.n is None:
                    raise CliError("--family random_cubic needs --n")
                graphs.append((idx, graph_mod.random_cubic(args.n, args.seed + idx)))
            else:
                graphs.append((idx, graph_mod.generate_named(fam)))
    else:
        raise CliError("batch needs --input or --family")

    seq = PackingSequence.parse(args.sequence)
    counts = {"sat": 0, "unsat": 0, "unknown": 0, "fail": 0}
    fallbacks = 0
    for idx, g in graphs:
        if args.method == "pipeline":
            result = solve_pipeline(g, args.seed + idx)
        else:
            result = solve_exact(g, seq, budget=args.budget)
        counts[result.status] = counts.get(result.status, 0) + 1
        if result.method == "fallback":
            fallbacks += 1
        records.append({"index": idx, "n": g.n, "m": g.m, "status": result.status,
                        "method": result.method, "nodes": result.nodes})
    records.sort(key=lambda rec: rec["index"])
    payload = {
        "results": records,
        "graphs": len(graphs),
        "errors": errors,
        "counts": counts,
        "fallbacks": fallbacks,
    }
    if args.format == "tsv":
        for rec in records:
            cols = [rec["index"], rec.get("n", ""), rec.get("m", ""),
                    rec["status"], rec.get("method", ""), rec.get("nodes", "")]
            print("\t".join(str(c) for c in cols))
        print(f"# graphs={len(graphs)} errors={errors} "
              + " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
              + f" fallbacks={fallbacks}")
    else:
        _emit(payload, "json")
    if errors:
        return EXIT_USAGE
    if counts["fail"] or counts["unknown"]:
        return EXIT_BUDGET
    if counts["unsat"]:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgepack",
        description="S-packing edge-colorings of subcubic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("json", "tsv")):
        p.add_argument("--input", help="edge-list file (or .g6 for graph6)")
        p.add_argument("--family", help="named family, random_cubic, or c<n>")
        p.add_argument("--n", type=int, help="vertex count for random_cubic")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])

    p = sub.add_parser("gen", help="generate or convert a graph")
    add_common(p, fmt_choices=("edgelist", "graph6"))
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("distance", help="edge distance between two edges")
    add_common(p)
    p.add_argument("e1", type=int)
    p.add_argument("e2", type=int)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("solve", help="decide S-packing colorability")
    add_common(p)
    p.add_argument("--sequence", required=True, help='e.g. "1^2,2^4"')
    p.add_argument("--method", choices=("exact", "pipeline"), default="exact")
    p.add_argument("--budget", type=int, default=50_000_000)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a coloring file")
    add_common(p)
    p.add_argument("--sequence", required=True)
    p.add_argument("--coloring", required=True, help='JSON {"classes": [[EdgeId,...],...]}')
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="local search plus structural audit")
    add_common(p)
    p.add_argument("--budget", type=int, default=200_000)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("batch", help="run a solver over many graphs")
    add_common(p)
    p.add_argument("--count", type=int, default=1, help="number of generated graphs")
    p.add_argument("--sequence", default="1^2,2^4")
    p.add_argument("--method", choices=("exact", "pipeline"), default="pipeline")
    p.add_argument("--budget", type=int, default=50_000_000)
    p.set_defaults(func=_cmd_batch)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
