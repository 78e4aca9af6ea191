"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 usage or IO error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import re
import sys
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

import numpy as np

from .benchgen import NewmanSpec, generate_newman, scaling_suite
from .colony import MacoConfig, Partition, detect
from .graph import (Graph, GraphFormatError, load_edge_list, load_ground_truth,
                    write_edge_list, write_ground_truth)
from .metrics import modularity, nmi
from .trace import DEFAULT_CHECKPOINTS, trace_run
from .walk import WeightedView, convergence_trace

log = logging.getLogger("maco")

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunRecord:
    graph: str
    T: int
    S: int
    rho: float
    l: int
    seed: int
    seconds: float
    Q: float
    NMI: Optional[float]
    communities: int

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def to_row(self) -> list[str]:
        return ["" if v is None else repr(v) if isinstance(v, float) else str(v)
                for v in asdict(self).values()]

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "RunRecord":
        kw = {}
        for f in fields(cls):
            raw = row[f.name]
            if f.name == "graph":
                kw[f.name] = raw
            elif f.name in ("T", "S", "l", "seed", "communities"):
                kw[f.name] = int(raw)
            else:
                kw[f.name] = None if raw == "" else float(raw)
        return cls(**kw)


def write_records(records, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(RunRecord.header())
    for r in records:
        w.writerow(r.to_row())


def read_records(stream) -> list[RunRecord]:
    return [RunRecord.from_row(row) for row in csv.DictReader(stream)]


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _open_out(path: Optional[str]):
    if path in (None, "-"):
        return sys.stdout
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def load_graph(path: str, order: str = "appearance") -> Graph:
    try:
        return load_edge_list(_read_text(path), order=order)
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def resolve_config(args) -> MacoConfig:
    """Flags override the config file, which overrides the defaults."""
    values = asdict(MacoConfig())
    if getattr(args, "config", None):
        try:
            from_file = json.loads(_read_text(args.config))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.config}: {exc}") from exc
        unknown = set(from_file) - set(values)
        if unknown:
            raise UsageError(f"{args.config}: unknown key(s) {sorted(unknown)}")
        values.update(from_file)
    for key in ("T", "S", "rho", "l", "seed"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    try:
        return MacoConfig(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def write_partition(graph: Graph, part: Partition, stream, fmt: str = "tsv") -> None:
    sep = "\t" if fmt == "tsv" else ","
    if fmt == "csv":
        stream.write("node,community\n")
    for i, c in enumerate(part.labels.tolist()):
        stream.write(f"{graph.tokens[i]}{sep}{c}\n")


def read_partition(text: str, graph: Graph) -> Partition:
    labels = np.full(graph.n, -1, dtype=np.int64)
    for line in text.splitlines():
        parts = re.split(r"[\t,\s]+", line.strip())
        if not line.strip() or parts[0] == "node":
            continue
        labels[graph.index_of(parts[0])] = int(parts[1])
    if (labels < 0).any():
        raise UsageError("partition file does not cover every node")
    return Partition.from_labels(labels)


def cmd_detect(args) -> int:
    graph = load_graph(args.graph, args.node_order)
    truth = None
    if args.truth:
        try:
            truth = load_ground_truth(_read_text(args.truth), graph)
        except GraphFormatError as exc:
            raise UsageError(f"{args.truth}: {exc}") from exc
    config = resolve_config(args)
    t0 = time.perf_counter()
    part = detect(graph, config, threads=args.threads)
    seconds = time.perf_counter() - t0
    out = _open_out(args.out)
    try:
        write_partition(graph, part, out, args.format)
    finally:
        if out is not sys.stdout:
            out.close()
    q = modularity(graph, part)
    score = nmi(part, truth) if truth is not None else None
    report = sys.stderr if out is sys.stdout else sys.stdout
    report.write("metric,value,seed,graph\n")
    report.write(f"Q,{q!r},{config.seed},{args.graph}\n")
    if score is not None:
        report.write(f"NMI,{score!r},{config.seed},{args.graph}\n")
    if args.record:
        rec = RunRecord(args.graph, config.T, config.S, config.rho, config.l, config.seed,
                        seconds, q, score, part.k)
        with _open_out(args.record) as fh:
            write_records([rec], fh)
    return EXIT_OK


def _mean_std(values):
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std(ddof=1)) if len(arr) > 1 else 0.0


_MU = re.compile(r"mu[_=-]?(\d+(?:\.\d+)?)", re.IGNORECASE)


def lfr_instances(root: Path) -> dict[float, list[Path]]:
    """Group directories holding ``network.dat`` + ``community.dat`` by their mu value.

    mu is read from the nearest path component named like ``mu0.3``,
    ``mu_0.3`` or ``mu=0.3``.
    """
    groups: dict[float, list[Path]] = {}
    for net in sorted(root.rglob("network.dat")):
        inst = net.parent
        if not (inst / "community.dat").exists():
            continue
        rel = inst.relative_to(root).parts if inst != root else (inst.name,)
        mu = next((float(m.group(1)) for part in reversed(rel)
                   if (m := _MU.fullmatch(part))), None)
        if mu is None:
            raise UsageError(f"{inst}: cannot infer mu from path")
        groups.setdefault(mu, []).append(inst)
    return dict(sorted(groups.items()))


def cmd_sweep(args) -> int:
    config = resolve_config(args)
    rows = []
    if args.lfr_dir:
        root = Path(args.lfr_dir)
        if not root.is_dir():
            raise UsageError(f"{root}: not a directory")
        groups = lfr_instances(root)
        if not groups:
            raise UsageError(f"{root}: no LFR instances (network.dat + community.dat)")
        for mu, dirs in groups.items():
            scores = []
            for rep, inst in enumerate(dirs):
                try:
                    g = load_edge_list(_read_text(str(inst / "network.dat")))
                    t = load_ground_truth(_read_text(str(inst / "community.dat")), g)
                except GraphFormatError as exc:
                    raise UsageError(f"{inst}: {exc}") from exc
                cfg = MacoConfig(**{**asdict(config), "seed": config.seed + rep})
                scores.append(nmi(detect(g, cfg, threads=args.threads), t))
            rows.append((mu, *_mean_std(scores), len(scores)))
        name = "mu"
    else:
        for z_out in args.zout:
            scores = []
            for rep in range(args.reps):
                spec = NewmanSpec(args.groups, args.size, args.degree - z_out, z_out,
                                  seed=config.seed * 100003 + rep)
                g, t = generate_newman(spec)
                cfg = MacoConfig(**{**asdict(config), "seed": config.seed + rep})
                scores.append(nmi(detect(g, cfg, threads=args.threads), t))
            rows.append((z_out, *_mean_std(scores), args.reps))
        name = "z_out"
    out = _open_out(args.out)
    w = csv.writer(out, lineterminator="\n")
    w.writerow([name, "mean_nmi", "std_nmi", "R"])
    for r in rows:
        w.writerow([repr(float(r[0])), repr(r[1]), repr(r[2]), r[3]])
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def linear_fit_r2(x, y) -> tuple[float, float, float]:
    """Least-squares ``y = a + b x``; returns (a, b, R^2)."""
    x, y = np.asarray(x, float), np.asarray(y, float)
    b, a = np.polyfit(x, y, 1)
    resid = y - (a + b * x)
    ss_tot = np.sum((y - y.mean()) ** 2)
    return float(a), float(b), float(1.0 - np.sum(resid ** 2) / ss_tot) if ss_tot else 1.0


def bench_rows(C_list, reps: int, config: MacoConfig, threads: int = 1):
    rows = []
    for graph, _ in scaling_suite(C_list, seed=config.seed):
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            detect(graph, config, threads=threads)
            times.append(time.perf_counter() - t0)
        sec = float(np.median(times))
        rows.append((graph.n, sec, math.sqrt(sec)))
    return rows


def cmd_bench(args) -> int:
    config = resolve_config(args)
    rows = bench_rows(args.C, args.reps, config, args.threads)
    out = _open_out(args.out)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "seconds", "sqrt_seconds"])
    for n, sec, root in rows:
        w.writerow([n, repr(sec), repr(root)])
    if out is not sys.stdout:
        out.close()
    if len(rows) > 2:
        _, slope, r2 = linear_fit_r2([r[0] for r in rows], [r[2] for r in rows])
        print(f"sqrt(seconds) ~ n: slope={slope:.3g} R2={r2:.4f}", file=sys.stderr)
    return EXIT_OK


def cmd_trace(args) -> int:
    graph = load_graph(args.graph, args.node_order)
    config = resolve_config(args)
    try:
        source = graph.index_of(args.source)
    except GraphFormatError as exc:
        raise UsageError(str(exc)) from exc
    bad = [c for c in args.checkpoints if not 1 <= c <= config.T]
    if bad:
        raise UsageError(f"checkpoint(s) {bad} beyond T={config.T}")
    written = trace_run(graph, config, source, Path(args.out), args.checkpoints, args.threads)
    for path in written:
        print(path)
    return EXIT_OK


def cmd_converge(args) -> int:
    graph = load_graph(args.graph, args.node_order)
    if args.source is None:
        source = int(np.argmax(graph.degree))
    else:
        try:
            source = graph.index_of(args.source)
        except GraphFormatError as exc:
            raise UsageError(str(exc)) from exc
    rows = convergence_trace(WeightedView.build(graph), source, args.l_max)
    out = _open_out(args.out)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["l", "euclidean_delta", "list_delta"])
    for l, eu, ld in rows:
        w.writerow([l, repr(eu), ld])
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = NewmanSpec(args.groups, args.size, args.z_in, args.z_out, args.seed)
    try:
        graph, truth = generate_newman(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    prefix = Path(args.prefix)
    with _open_out(f"{prefix}.edges") as fh:
        write_edge_list(graph, fh)
    with _open_out(f"{prefix}.truth") as fh:
        write_ground_truth(graph, truth, fh)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    graph = load_graph(args.graph, args.node_order)
    part = read_partition(_read_text(args.partition), graph)
    print("metric,value,seed,graph")
    print(f"Q,{modularity(graph, part)!r},,{args.graph}")
    if args.truth:
        try:
            truth = load_ground_truth(_read_text(args.truth), graph)
        except GraphFormatError as exc:
            raise UsageError(f"{args.truth}: {exc}") from exc
        print(f"NMI,{nmi(part, truth)!r},,{args.graph}")
    return EXIT_OK


def _add_order_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-order", choices=("appearance", "natural"), default="appearance",
                   help="index nodes by first appearance (default) or by numeric token value")


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--T", type=int, help="iterations (default 20)")
    p.add_argument("--S", type=int, help="ants per iteration (default 100)")
    p.add_argument("--rho", type=float, help="pheromone retention (default 0.6)")
    p.add_argument("--l", type=int, help="walk steps (default 20)")
    p.add_argument("--seed", type=int, help="master seed (default 0)")
    p.add_argument("--config", help="JSON file with any of T, S, rho, l, seed")
    p.add_argument("--threads", type=int, default=1, help="worker threads; results do not depend on it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maco", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="detect communities in an edge list")
    p.add_argument("graph")
    p.add_argument("--truth", help="ground-truth file; enables NMI")
    p.add_argument("--out", help="partition file (default stdout)")
    p.add_argument("--format", choices=("tsv", "csv"), default="tsv")
    p.add_argument("--record", help="write a RunRecord CSV here")
    _add_config_flags(p)
    _add_order_flag(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("sweep", help="mean NMI over a Newman z_out sweep or LFR mu directory")
    p.add_argument("--zout", type=float, nargs="+", default=list(range(9)))
    p.add_argument("--reps", type=int, default=50)
    p.add_argument("--groups", type=int, default=4)
    p.add_argument("--size", type=int, default=32)
    p.add_argument("--degree", type=float, default=16.0)
    p.add_argument("--lfr-dir", help="directory of LFR instances grouped by mu")
    p.add_argument("--out")
    _add_config_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="runtime on the planted-partition scaling suite")
    p.add_argument("--C", type=int, nargs="+", default=[4, 8, 12, 16, 20])
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--out")
    _add_config_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="dump per-iteration ant and matrix traces")
    p.add_argument("graph")
    p.add_argument("--source", required=True, help="node token of the traced ant")
    p.add_argument("--checkpoints", type=int, nargs="+", default=list(DEFAULT_CHECKPOINTS))
    p.add_argument("--out", required=True, help="output directory")
    _add_config_flags(p)
    _add_order_flag(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("converge", help="per-step walk convergence deltas")
    p.add_argument("graph")
    p.add_argument("--source", help="node token (default: max-degree node)")
    p.add_argument("--l-max", type=int, default=50)
    p.add_argument("--out")
    _add_order_flag(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("generate", help="write a Newman planted-partition benchmark")
    p.add_argument("prefix", help="writes PREFIX.edges and PREFIX.truth")
    p.add_argument("--groups", type=int, default=4)
    p.add_argument("--size", type=int, default=32)
    p.add_argument("--z-in", type=float, default=16.0)
    p.add_argument("--z-out", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evaluate", help="modularity / NMI of an existing partition file")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--truth")
    _add_order_flag(p)
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"maco: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"maco: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
