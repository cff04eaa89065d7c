"""Command-line front end.

    hybridwidth compute --class bip --kind ed -k 1 --g6 Dhc
    hybridwidth verify  --class bip --kind ed -k 1 --x 0 --g6 Dhc
    hybridwidth oracle  --class triangle-free --g6 C~
    hybridwidth corpus  wheel 8

Exit status: 0 when the command ran (the decision is in the report), 1 when a
size cap was exceeded, 2 on bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus
from .classes import ClassOracle, resolve_class
from .graph import Graph, GraphParseError, SizeCapError, encode_graph6, parse_edge_list, parse_graph6, vset
from .solvers import solve
from .witness import (
    SolverStats,
    brute_force_hhdepth,
    brute_force_torso_param,
    note1_holds,
    torso_value,
    verify_witness,
)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    graph: Graph | None = None
    oracle: ClassOracle | None = None
    kind: str = "ed"
    k: int = 0
    s: int | None = None
    fmt: str = "text"
    seed: int | None = None
    x: int = 0


def read_graph(path: str | None, g6: str | None) -> Graph:
    if (path is None) == (g6 is None):
        raise ConfigError("give exactly one of an input file or --g6")
    if g6 is not None:
        return parse_graph6(g6)
    text = Path(path).read_text(encoding="utf-8")
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.startswith(("p ", "c ", "c\t")) or first == "c":
        return parse_edge_list(text)
    return parse_graph6(first)


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        out.write(f"{key}: {value}\n")


def cmd_compute(cfg: RunConfig, out=sys.stdout) -> int:
    g = cfg.graph
    s = cfg.s if cfg.s is not None else max(1, g.n)
    stats = SolverStats()
    w = solve(g, cfg.k, s, cfg.kind, cfg.oracle, stats)
    report = {
        "class": cfg.oracle.name,
        "kind": cfg.kind,
        "k": cfg.k,
        "s": s,
        "question": f"{'hhdepth' if cfg.kind == 'ed' else 'hhtw'} <= {cfg.k if cfg.kind == 'ed' else cfg.k - 1}",
        "decision": "yes" if w is not None else "no",
        "branch": stats.last,
    }
    if w is not None:
        report["witness"] = w.to_dict(g)
    _emit(report, cfg.fmt, out)
    return 0


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    g = cfg.graph
    ok = verify_witness(g, cfg.x, cfg.k, cfg.kind, cfg.oracle)
    report = {"class": cfg.oracle.name, "kind": cfg.kind, "k": cfg.k, "x": g.relabel(cfg.x), "valid": ok}
    if ok:
        value = torso_value(g, cfg.x, cfg.kind)
        report["value"] = value
        report["note1"] = note1_holds(g, cfg.x, cfg.kind, value)
    _emit(report, cfg.fmt, out)
    return 0


def cmd_oracle(cfg: RunConfig, out=sys.stdout) -> int:
    g = cfg.graph
    ed_rec = brute_force_hhdepth(g, cfg.oracle)
    ed_torso = brute_force_torso_param(g, cfg.oracle, "ed")
    tw = brute_force_torso_param(g, cfg.oracle, "tw")
    report = {
        "class": cfg.oracle.name,
        "ed": ed_rec,
        "tw": tw,
        "prop1": "ok" if ed_rec == ed_torso else f"MISMATCH (torso form gives {ed_torso})",
    }
    _emit(report, cfg.fmt, out)
    return 0 if ed_rec == ed_torso else 3


def cmd_corpus(family: str, args: list[str], seed: int | None, dest: str | None, out=sys.stdout) -> int:
    g = corpus.build(family, args, seed)
    line = encode_graph6(g) + "\n"
    if dest:
        Path(dest).write_text(line, encoding="utf-8")
    else:
        out.write(line)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hybridwidth", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("input", nargs="?", help="graph6 or DIMACS edge-list file")
        p.add_argument("--g6", help="inline graph6 string")
        p.add_argument("--class", dest="cls", default="bip",
                       help="bip | triangle-free | claw-free | maxdeg:<d> | split | cograph | cliques | file:<path>")
        p.add_argument("--format", dest="fmt", choices=["json", "text"], default="text")
        p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs single-threaded")

    for name in ("compute", "verify"):
        p = sub.add_parser(name)
        graph_args(p)
        p.add_argument("--kind", choices=["ed", "tw"], default="ed")
        p.add_argument("-k", type=int, required=True)
        if name == "compute":
            p.add_argument("-s", type=int, help="unbreakability size threshold (default: n, i.e. exhaustive)")
        else:
            p.add_argument("--x", default="", help="comma-separated witness vertices")
    p = sub.add_parser("oracle")
    graph_args(p)
    p = sub.add_parser("corpus")
    p.add_argument("family", choices=sorted(corpus.FAMILIES))
    p.add_argument("args", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write here instead of stdout")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    try:
        if args.command == "corpus":
            return cmd_corpus(args.family, args.args, args.seed, args.out, out)
        cfg = RunConfig(
            command=args.command,
            graph=read_graph(args.input, args.g6),
            oracle=resolve_class(args.cls),
            fmt=args.fmt,
        )
        if args.command in ("compute", "verify"):
            if args.k < 0:
                raise ConfigError("k must be non-negative")
            cfg.kind, cfg.k = args.kind, args.k
        if args.command == "compute":
            if args.s is not None and args.s < 1:
                raise ConfigError("s must be at least 1")
            cfg.s = args.s
            return cmd_compute(cfg, out)
        if args.command == "verify":
            ids = [int(t) for t in args.x.split(",") if t.strip()]
            if any(not 0 <= v < cfg.graph.n for v in ids):
                raise ConfigError("witness vertex out of range")
            cfg.x = vset(ids)
            return cmd_verify(cfg, out)
        return cmd_oracle(cfg, out)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphParseError, ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
