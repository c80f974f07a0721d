"""Command line entry point: ``largeset catalog | eval | verify | export-graph``.

Exit codes: 0 when every result is decided (or every check passes),
2 when some result is undecided because a budget or bound ran out,
1 on errors and failed checks.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .analysis import banach_density_estimate
from .catalog import CATALOG, build, coerce_element
from .config import OPERATIONS, ExperimentConfig, _value, load
from .errors import ConfigError, LargesetError
from .graph import QuotientGraph, write_dimacs
from .groups import parse_window
from .largeness import (
    check_3fat_cover,
    default_probes,
    duality_check,
    fat_ramsey_m,
    fatness,
    is_delta_star_k,
    is_ip_star,
    is_piecewise_syndetic,
    is_thick_on,
    kappa_fat_check,
    syndeticity_index,
    thickness_index,
)
from .report import EXACT, LargenessReport
from .sets import FiniteSet, SetSpec
from .suites import SUITES, run_suite

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# eval


def run_op(op: str, A: SetSpec, w, params: dict, budget: int) -> LargenessReport:
    ctx = A.ctx
    p = dict(params)
    if op == "fatness":
        return fatness(A, w, budget=budget)
    if op == "syndeticity_index":
        return syndeticity_index(A, w, p.get("pad", 0), p.get("kmax", 8), budget=budget)
    if op in ("thickness_index", "piecewise_syndetic"):
        probes = default_probes(ctx, w, length=p.get("probe_length", 8), subset_size=p.get("subset_size", 0))
        fn = thickness_index if op == "thickness_index" else is_piecewise_syndetic
        return fn(A, w, p.get("kmax", 3), probes=probes, budget=budget)
    if op == "kappa_fat":
        return kappa_fat_check(A, w, p.get("k", 3), budget=budget)
    if op == "ramsey_m":
        return fat_ramsey_m(A, w, p.get("n", 3), budget=budget)
    if op == "delta_star":
        return is_delta_star_k(A, w, p.get("k", 2), p.get("side", "left"), budget=budget)
    if op == "ip_star":
        return is_ip_star(A, w, p.get("n", 2), budget=budget)
    if op == "three_fat_cover":
        return check_3fat_cover(A, w, budget=budget)
    if op == "duality":
        return duality_check(A, w, pad=p.get("pad", 0), kmax=p.get("kmax", 6), budget=budget)
    if op == "thick_on":
        F = FiniteSet(ctx, (coerce_element(ctx, e) for e in p.get("F", [])))
        g = is_thick_on(A, F, w)
        rep = LargenessReport("thick_on", g is not None, ctx, window=w, extra={"F": F})
        if g is None:
            rep.counterexample = F
            rep.notes.append("no translate of F inside A on the window")
        else:
            rep.witness = g
        return rep
    if op == "density":
        d = banach_density_estimate(A, w, p.get("d_list", [10, 20]))
        rep = LargenessReport("density", True, ctx, window=w, exactness=EXACT, extra=d.to_dict())
        return rep
    raise ConfigError(f"unknown operation {op!r}")


def evaluate(cfg: ExperimentConfig) -> dict:
    A = build(cfg.construction, cfg.params)
    w = parse_window(cfg.window) if cfg.window else A.window
    if w is None:
        raise ConfigError(f"{cfg.construction} has no default window; set 'window'")
    A.ctx.check_window(w)
    results = []
    for op in cfg.ops:
        params = cfg.op_params.get(op, {})
        rep = run_op(op, A, w, params, cfg.budget)
        results.append({"op": op, "params": dict(sorted(params.items())), **rep.to_dict()})
    return {
        "tool": "largeset",
        "version": __version__,
        "config": cfg.to_dict(),
        "construction": {"name": A.name, "family": A.ctx.family, "provenance": dict(A.provenance)},
        "window": str(w),
        "results": results,
        "decided": all(r["holds"] is not None for r in results),
    }


CSV_FIELDS = ["op", "params", "predicate", "holds", "value", "witness", "counterexample",
              "window", "exactness", "notes", "extra"]


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in doc["results"]:
        writer.writerow({k: json.dumps(r[k], sort_keys=True) for k in CSV_FIELDS})
    return buf.getvalue()


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"


def _config_from_args(args) -> ExperimentConfig:
    if args.config:
        cfg = load(args.config)
    elif getattr(args, "construction", None):
        cfg = ExperimentConfig(construction=args.construction, source="<args>")
        for item in args.param or []:
            if "=" not in item:
                raise ConfigError(f"--param expects key=value, got {item!r}")
            k, v = item.split("=", 1)
            cfg.params[k.strip()] = _value(v)
    else:
        raise ConfigError("give --config PATH or --construction NAME")
    if args.window:
        cfg.window = args.window
    if args.seed is not None:
        cfg.seed = args.seed
    if args.budget is not None:
        cfg.budget = args.budget
    if getattr(args, "format", None):
        cfg.format = args.format
    ops = getattr(args, "op", None)
    if ops:
        bad = [o for o in ops if o not in OPERATIONS]
        if bad:
            raise ConfigError(f"unknown operation(s) {bad}")
        cfg.ops = ops
    return cfg


def cmd_eval(args) -> int:
    cfg = _config_from_args(args)
    doc = evaluate(cfg)
    doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    stem = Path(args.config).stem if args.config else cfg.construction
    out = Path(args.out)
    atomic_write(out / f"{stem}.json", to_json(doc))
    atomic_write(out / f"{stem}.csv", to_csv(doc))
    if cfg.format == "csv":
        sys.stdout.write(to_csv(doc))
    else:
        for r in doc["results"]:
            print(f"{r['op']}: holds={r['holds']} value={r['value']} [{r['exactness']}]")
        print(f"wrote {out / (stem + '.json')} and {out / (stem + '.csv')}")
    return EXIT_OK if doc["decided"] else EXIT_UNDECIDED


# ---------------------------------------------------------------------------
# catalog / verify / export-graph


def cmd_catalog(args) -> int:
    entries = [e for e in CATALOG.values()
               if args.family is None or e.family in (args.family, "any")]
    if args.json:
        print(json.dumps([{"name": e.name, "family": e.family, "params": e.params, "description": e.description}
                          for e in entries], indent=2))
        return EXIT_OK
    for e in entries:
        params = ", ".join(f"{k}: {v}" for k, v in e.params.items()) or "no parameters"
        print(f"{e.name:22s} {e.family:8s} {e.description}")
        print(f"{'':22s} {'':8s} params: {params}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; available: {', '.join(SUITES)}, all", file=sys.stderr)
        return EXIT_ERROR
    extra = {} if args.count is None else {"count": args.count}
    ok = True
    docs = []
    for name in names:
        res = run_suite(name, seed=args.seed or 0, **extra)
        docs.append(res.to_dict())
        if args.format != "json":
            print(f"== {name}")
            for c in res.checks:
                if args.verbose or not c.passed:
                    print("  " + c.line())
            n_ok = sum(c.passed for c in res.checks)
            print(f"   {n_ok}/{len(res.checks)} checks passed")
        ok &= res.passed
    if args.format == "json":
        print(json.dumps(docs, indent=2))
    if args.out:
        atomic_write(Path(args.out) / "verify.json", json.dumps(docs, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_export_graph(args) -> int:
    cfg = _config_from_args(args)
    A = build(cfg.construction, cfg.params)
    w = parse_window(cfg.window) if cfg.window else A.window
    if w is None:
        raise ConfigError(f"{cfg.construction} has no default window; pass --window")
    g = QuotientGraph.build(A, w)
    comments = [
        f"quotient graph of {A.name} on {w}: x ~ y iff x^-1 y and y^-1 x lie in the set",
        "provenance " + json.dumps(dict(A.provenance), sort_keys=True, default=str),
    ]
    if not A.membership(A.ctx.identity):
        comments.append("warning: the identity is not in the set, so the set is not fat")
    buf = io.StringIO()
    write_dimacs(g, buf, comments)
    if args.out:
        atomic_write(Path(args.out), buf.getvalue())
        print(f"wrote {args.out}: {len(g)} vertices, {g.edge_count()} edges")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="largeset", description="Largeness of subsets of groups on finite windows.")
    ap.add_argument("--version", action="version", version=f"largeset {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the available constructions")
    p.add_argument("--family", choices=["integer", "boolean", "free"])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_catalog)

    def common(p, out_help):
        p.add_argument("--config", help="key=value or JSON experiment file")
        p.add_argument("--construction", help="catalog name, instead of --config")
        p.add_argument("--param", action="append", metavar="KEY=VALUE", help="construction parameter")
        p.add_argument("--window", help="e.g. int:-50..50, bool:2:-12..12, free:6")
        p.add_argument("--seed", type=int)
        p.add_argument("--budget", type=int, help="search node budget")
        p.add_argument("--out", help=out_help)

    p = sub.add_parser("eval", help="evaluate predicates on a construction")
    common(p, "output directory (default: current directory)")
    p.add_argument("--op", action="append", help="operation to run (repeatable); overrides the config")
    p.add_argument("--format", choices=["json", "csv"])
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="number of random instances where applicable")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="directory for verify.json")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-graph", help="write the quotient graph in DIMACS format")
    common(p, "output file (default: stdout)")
    p.set_defaults(func=cmd_export_graph)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "eval" and args.out is None:
        args.out = "."
    try:
        return args.func(args)
    except (LargesetError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
