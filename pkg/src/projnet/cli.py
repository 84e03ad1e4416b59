"""Command-line entry point: ``projnet {generate,analyze,table,sweep}``."""

from __future__ import annotations

import argparse
import hashlib
import json
import platform
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .design import (PRESETS, SWEEP_FAMILIES, CostConfig, reproduce_table, scalability_sweep,
                     sweep_csv, table_csv)
from .metrics import MetricsReport, analyze, check_report, dragonfly_hierarchical, scope_from_name
from .topology import Topology, TopologyError, build, from_edge_list

EXIT_OK, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 2, 3

FAMILY_FLAGS = ("q", "n", "r", "h", "dim", "degree", "seed")


@dataclass
class RunManifest:
    command: str
    arguments: dict
    seed: int | None
    config_path: str | None
    versions: dict = field(default_factory=lambda: {
        "projnet": __version__, "python": platform.python_version(), "numpy": np.__version__})
    outputs: dict = field(default_factory=dict)

    def record(self, name: str, data: bytes) -> None:
        self.outputs[name] = hashlib.sha256(data).hexdigest()

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


class UsageError(Exception):
    pass


def _family_params(args) -> dict:
    params = {k: getattr(args, k) for k in FAMILY_FLAGS if getattr(args, k, None) is not None}
    family = args.family.replace("-", "_")
    if family != "random_regular":
        params.pop("seed", None)
    return params


def _emit(args, manifest: RunManifest, text: str) -> None:
    """Write the output and its manifest.  Without --out or --manifest the
    manifest goes to stderr so stdout stays clean."""
    data = text.encode()
    if args.out:
        Path(args.out).write_bytes(data)
        manifest.record(str(args.out), data)
        target = args.manifest or f"{args.out}.manifest.json"
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
        manifest.record("<stdout>", data)
        target = args.manifest
    if target:
        Path(target).write_text(manifest.to_json())
    else:
        sys.stderr.write(manifest.to_json())


def _manifest(args) -> RunManifest:
    skip = {"func", "out", "manifest"}
    arguments = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return RunManifest(command=args.command, arguments=arguments, seed=getattr(args, "seed", None),
                       config_path=getattr(args, "config", None))


def _load_graph(args) -> Topology:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        return from_edge_list(text)
    if not args.family:
        raise UsageError("give a family name or --input")
    return build(args.family, **_family_params(args))


def cmd_generate(args) -> int:
    G = build(args.family, **_family_params(args))
    text = {"edgelist": G.edge_list, "dot": G.to_dot, "json": G.to_json}[args.format]()
    _emit(args, _manifest(args), text)
    return EXIT_OK


def _human_metrics(rep: MetricsReport) -> str:
    lines = [f"family       {rep.family}",
             f"scope        {rep.scope}",
             f"diameter k   {rep.k}",
             f"kbar         {rep.kbar} ({float(rep.kbar):.4f})"]
    if rep.u is not None:
        lines.append(f"u            {rep.u} ({float(rep.u):.4f})")
        lines.append(f"kbar/u       {float(rep.kbar_over_u):.4f}")
    lines.append("W            " + " ".join(f"{t}:{c}" for t, c in sorted(rep.W.items())))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    G = _load_graph(args)
    if not G.is_connected():
        raise TopologyError("graph is disconnected")
    if args.routing == "hierarchical":
        if G.family != "dragonfly":
            raise UsageError("hierarchical routing applies to dragonfly only")
        rep = dragonfly_hierarchical(G)
    else:
        scope = scope_from_name(args.scope)
        rep = analyze(G, scope, loads=not args.no_loads, threads=args.threads)
        check_report(rep, len(scope.terminals(G)))
    text = rep.to_json() if args.format == "json" else _human_metrics(rep)
    _emit(args, _manifest(args), text)
    return EXIT_OK


def _config(args, default: str | None = None) -> CostConfig | None:
    if args.config:
        if args.config in PRESETS:
            return PRESETS[args.config]
        return CostConfig.from_file(args.config)
    return PRESETS[default] if default else None


def cmd_table(args) -> int:
    rows = reproduce_table(args.table_id, args.mode, seed=args.seed or 0, threads=args.threads,
                           config=_config(args))
    if args.format == "json":
        text = json.dumps([{"row": row, "design": rep.to_dict()} for row, rep in rows],
                          indent=2, sort_keys=True) + "\n"
    else:
        text = table_csv(rows)
    _emit(args, _manifest(args), text)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.rmax < 5:
        raise UsageError("--rmax must be at least 5")
    families = SWEEP_FAMILIES if args.families is None else tuple(
        f.strip().replace("-", "_") for f in args.families.split(",") if f.strip())
    unknown = set(families) - set(SWEEP_FAMILIES)
    if unknown:
        raise UsageError(f"unknown sweep families {sorted(unknown)}; choose from {list(SWEEP_FAMILIES)}")
    rows = scalability_sweep(args.rmax, families, threads=args.threads,
                             config=_config(args, "ref-10k"), with_bound=not args.no_bound)
    _emit(args, _manifest(args), sweep_csv(rows))
    return EXIT_OK


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="field order (pn, demi-pn, mms, oft, paley)")
    p.add_argument("--n", type=int, help="size parameter (complete, hamming, hypercube, mlfm, ...)")
    p.add_argument("--r", type=int, help="number of parts (turan)")
    p.add_argument("--h", type=int, help="dragonfly global ports per router")
    p.add_argument("--dim", type=int, help="hamming dimension")
    p.add_argument("--degree", type=int, help="random regular degree")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="write output here (default: stdout)")
    p.add_argument("--manifest", help="also write the run manifest here")
    p.add_argument("--threads", type=int, default=1)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="projnet", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a topology and export it")
    g.add_argument("family")
    _add_family_flags(g)
    _add_common(g)
    g.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="distance distribution and link utilization")
    a.add_argument("family", nargs="?")
    a.add_argument("--input", help="edge-list file instead of a family")
    _add_family_flags(a)
    _add_common(a)
    a.add_argument("--scope", choices=("all", "leaf"), default="all")
    a.add_argument("--routing", choices=("minimal", "hierarchical"), default="minimal")
    a.add_argument("--format", choices=("json", "human"), default="json")
    a.add_argument("--no-loads", action="store_true", help="distances only")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("table", help="reproduce a design table as CSV")
    t.add_argument("table_id", choices=("IV", "V", "VI"))
    t.add_argument("--mode", choices=("injected", "heuristic"), default="injected")
    t.add_argument("--config", help="preset name or key=value file overriding the table presets")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(t)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("sweep", help="scalability and cost curves")
    s.add_argument("--rmax", type=int, required=True)
    s.add_argument("--families", help=f"comma list from {','.join(SWEEP_FAMILIES)}")
    s.add_argument("--config", help="preset name or key=value file")
    s.add_argument("--no-bound", action="store_true", help="omit the terminal bound curves")
    _add_common(s)
    s.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"projnet {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except AssertionError as exc:
        print(f"projnet {args.command}: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
