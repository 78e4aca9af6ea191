"""CSV dumps of a single ant's local solve and of the colony's per-iteration matrices."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .colony import MacoConfig, run_epa
from .graph import Graph
from .localsolve import extract_community, sweep, unfold_community
from .walk import WeightedView

DEFAULT_CHECKPOINTS = (1, 5, 10, 15, 20)


@dataclass(frozen=True, eq=False)
class AntTrace:
    source: int
    psi: np.ndarray
    order: np.ndarray
    phi: np.ndarray
    cut: int
    community: np.ndarray
    degenerate: bool


def trace_ant(graph: Graph, view: WeightedView, s: int, l: int) -> AntTrace:
    cands = unfold_community(view, s, l)
    scan = sweep(graph, cands.order)
    com = extract_community(graph, cands, scan)
    return AntTrace(s, cands.psi, cands.order, scan.phi, len(com), com, cands.degenerate)


def write_ant_trace(ant: AntTrace, graph: Graph, prefix: Path) -> None:
    """Writes ``<prefix>_psi.csv``, ``<prefix>_sweep.csv`` and ``<prefix>_community.csv``."""
    with open(f"{prefix}_psi.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["node", "psi"])
        for i, p in enumerate(ant.psi.tolist()):
            w.writerow([graph.tokens[i], repr(p)])
    with open(f"{prefix}_sweep.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["position", "node", "psi", "phi", "cut"])
        for k, node in enumerate(ant.order.tolist(), start=1):
            phi = ant.phi[k - 1] if len(ant.phi) >= k else float("nan")
            w.writerow([k, graph.tokens[node], repr(float(ant.psi[node])), repr(float(phi)),
                        int(k == ant.cut)])
    with open(f"{prefix}_community.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["node"])
        w.writerows([graph.tokens[i]] for i in ant.community.tolist())


def write_matrix(mat: np.ndarray, path: Path) -> None:
    fmt = "%d" if np.issubdtype(mat.dtype, np.integer) else "%.17g"
    np.savetxt(path, mat, delimiter=",", fmt=fmt)


def trace_run(graph: Graph, config: MacoConfig, source: int, outdir: Path,
              checkpoints=DEFAULT_CHECKPOINTS, threads: int = 1) -> list[Path]:
    """Run the colony and dump a bundle per checkpoint iteration.

    The designated ant from ``source`` is solved on the same pheromone the
    colony used in that iteration; it does not vote and draws no random
    numbers, so the run itself is unchanged.
    """
    checkpoints = sorted(set(int(c) for c in checkpoints))
    bad = [c for c in checkpoints if not 1 <= c <= config.T]
    if bad:
        raise ValueError(f"checkpoint(s) {bad} outside 1..{config.T}")
    if config.early_stop is not None:
        raise ValueError("tracing requires a fixed iteration count")
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def hook(it, B_before, votes, B_after):
        if it not in checkpoints:
            return
        bundle = outdir / f"iter{it:03d}"
        bundle.mkdir(exist_ok=True)
        ant = trace_ant(graph, WeightedView.build(graph, B_before), source, config.l)
        write_ant_trace(ant, graph, bundle / "ant")
        write_matrix(votes, bundle / "solution.csv")
        write_matrix(B_after, bundle / "pheromone.csv")
        written.append(bundle)

    run_epa(graph, config, threads=threads, on_iteration=hook)
    return written
