"""One ant's local community: rank nodes by the walk, cut at minimum conductance."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .walk import WeightedView, degree_corrected_distribution, rank_nodes


@dataclass(frozen=True, eq=False)
class CandidateList:
    source: int
    order: np.ndarray
    values: np.ndarray
    degenerate: bool = False
    psi: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class ConductanceScan:
    """Per-prefix sweep of a candidate list.

    ``phi[k-1]`` is the conductance of the first ``k`` candidates, or NaN
    where undefined (the prefix or its complement has zero volume).
    """

    cut: np.ndarray
    vol: np.ndarray
    phi: np.ndarray
    best_k: int

    @property
    def best_phi(self) -> float:
        return float(self.phi[self.best_k - 1])


def unfold_community(view: WeightedView, s: int, l: int) -> CandidateList:
    """Rank nodes by the degree-corrected walk from ``s`` and drop zeros."""
    walk = degree_corrected_distribution(view, s, l)
    if walk.degenerate:
        return CandidateList(s, np.array([s]), np.array([1.0]), True, walk.values)
    order = rank_nodes(walk.values)
    vals = walk.values[order]
    keep = vals > 0
    return CandidateList(s, order[keep], vals[keep], False, walk.values)


def conductance(graph: Graph, nodes) -> float:
    """Boundary edge count over the smaller side's volume, on unit weights."""
    mask = np.zeros(graph.n, dtype=bool)
    mask[np.asarray(list(nodes), dtype=np.int64)] = True
    if not mask.any() or mask.all():
        raise ValueError("conductance needs a nonempty proper subset")
    e = graph.edges
    cut = int(np.count_nonzero(mask[e[:, 0]] != mask[e[:, 1]]))
    vol = int(graph.degree[mask].sum())
    denom = min(vol, graph.total_degree - vol)
    if denom == 0:
        raise ValueError("conductance undefined: a side has zero volume")
    return cut / denom


def sweep(graph: Graph, order: np.ndarray) -> ConductanceScan:
    """Conductance of every prefix of ``order``, maintained incrementally.

    Adding node v to S changes the cut by ``deg(v) - 2 * |N(v) & S|`` and
    the volume by ``deg(v)``. Each edge inside the list is charged once, to
    whichever endpoint comes later.
    """
    order = np.asarray(order, dtype=np.int64)
    k = len(order)
    pos = np.full(graph.n, -1, dtype=np.int64)
    pos[order] = np.arange(k)
    pu, pv = pos[graph.edges[:, 0]], pos[graph.edges[:, 1]]
    inner = (pu >= 0) & (pv >= 0)
    back = np.bincount(np.maximum(pu[inner], pv[inner]), minlength=k)
    deg = graph.degree[order]
    cut = np.cumsum(deg - 2 * back)
    vol = np.cumsum(deg)
    denom = np.minimum(vol, graph.total_degree - vol)
    phi = np.full(k, np.nan)
    np.divide(cut, denom, out=phi, where=denom > 0)
    valid = np.flatnonzero(~np.isnan(phi))
    best = int(valid[np.argmin(phi[valid])]) + 1 if len(valid) else 0
    return ConductanceScan(cut=cut, vol=vol, phi=phi, best_k=best)


def extract_community(graph: Graph, candidates: CandidateList,
                      scan: ConductanceScan | None = None) -> np.ndarray:
    """Minimum-conductance prefix of the candidate list that contains the source.

    Ties go to the shortest prefix. Falls back to ``{s}`` when no defined
    prefix contains the source.
    """
    s = candidates.source
    order = candidates.order
    if len(order) <= 1:
        return np.array([s])
    if scan is None:
        scan = sweep(graph, order)
    hit = np.flatnonzero(order == s)
    if not len(hit):
        return np.array([s])
    phi = scan.phi[hit[0]:]
    if np.isnan(phi).all():
        return np.array([s])
    k = hit[0] + int(np.nanargmin(phi)) + 1
    return np.sort(order[:k])
