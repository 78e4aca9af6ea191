"""Ant colony loop over a pheromone matrix, and the read-out of communities from it.

Every iteration, S ants each pick a random source, grow a local community
with the constrained walk plus conductance cut, and vote for all pairs
inside it. The votes are folded into the pheromone matrix as
``B <- rho * B + votes``. After T iterations each unlabeled node's row is
thresholded at its mean to read off a community.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .graph import Graph
from .localsolve import extract_community, unfold_community
from .walk import WeightedView

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MacoConfig:
    T: int = 20
    S: int = 100
    rho: float = 0.6
    l: int = 20
    seed: int = 0
    early_stop: Optional[float] = None

    def __post_init__(self):
        if self.T < 1 or self.S < 1 or self.l < 1:
            raise ValueError("T, S and l must be >= 1")
        if not 0.0 <= self.rho < 1.0:
            raise ValueError("rho must lie in [0, 1)")


@dataclass(frozen=True, eq=False)
class Partition:
    """Community id per node, ids consecutive from 0."""

    labels: np.ndarray

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Renumber arbitrary labels to 0..k-1 by first appearance."""
        _, first, inv = np.unique(np.asarray(labels), return_index=True, return_inverse=True)
        rank = np.empty(len(first), dtype=np.int64)
        rank[np.argsort(first)] = np.arange(len(first))
        return cls(rank[inv.ravel()])

    @classmethod
    def from_communities(cls, n: int, communities) -> "Partition":
        labels = np.full(n, -1, dtype=np.int64)
        for c, members in enumerate(communities):
            labels[list(members)] = c
        if (labels < 0).any():
            raise ValueError("communities do not cover every node")
        return cls.from_labels(labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def k(self) -> int:
        return int(self.labels.max()) + 1 if self.n else 0

    @property
    def communities(self) -> list[list[int]]:
        return [np.flatnonzero(self.labels == c).tolist() for c in range(self.k)]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.communities}


IterationHook = Callable[[int, np.ndarray, np.ndarray, np.ndarray], None]


def ant_rng(seed: int, iteration: int, ant: int) -> np.random.Generator:
    return np.random.default_rng([seed, iteration, ant])


def one_ant(graph: Graph, view: WeightedView, s: int, l: int) -> np.ndarray:
    if view.weighted_degree[s] <= 0:
        # all pheromone on s's edges evaporated (only possible with rho = 0)
        return np.array([s])
    return extract_community(graph, unfold_community(view, s, l))


def run_epa(graph: Graph, config: MacoConfig, threads: int = 1,
            on_iteration: IterationHook | None = None) -> np.ndarray:
    """Evolve the pheromone matrix for ``config.T`` iterations.

    Ant ``j`` of iteration ``i`` (both 1-based) draws its source from its own
    generator seeded by ``(seed, i, j)``, so the result does not depend on
    ``threads``. ``on_iteration(i, B_before, votes, B_after)`` is called after
    each update.
    """
    sources = graph.active
    if not len(sources):
        raise ValueError("graph has no non-isolated nodes")
    n = graph.n
    B = np.full((n, n), float(n))
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for it in range(1, config.T + 1):
            view = WeightedView.build(graph, B)
            draws = [sources[ant_rng(config.seed, it, j).integers(len(sources))]
                     for j in range(1, config.S + 1)]
            work = lambda s: one_ant(graph, view, int(s), config.l)  # noqa: E731
            coms = pool.map(work, draws) if pool else map(work, draws)
            votes = np.zeros((n, n), dtype=np.int64)
            for com in coms:
                votes[np.ix_(com, com)] += 1
            new_B = config.rho * B + votes
            if on_iteration is not None:
                on_iteration(it, B, votes, new_B)
            change = np.linalg.norm(new_B - B) / np.linalg.norm(B)
            B = new_B
            if config.early_stop is not None and change < config.early_stop:
                log.info("early stop at iteration %d (relative change %.3g)", it, change)
                break
    finally:
        if pool:
            pool.shutdown()
    return B


def run_ppa(pheromone: np.ndarray) -> Partition:
    """Threshold rows of the pheromone matrix at their mean.

    Nodes are visited in index order; an unlabeled node labels every
    entry of its row strictly above the row mean, overwriting labels set
    by earlier rows. A row with no entry above its mean (a constant row)
    gives a singleton.
    """
    B = np.asarray(pheromone, dtype=float)
    n = B.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        if labels[i] >= 0:
            continue
        row = B[i]
        members = np.flatnonzero(row > row.sum() / n)
        labels[members] = i
        labels[i] = i
    return Partition.from_labels(labels)


def detect(graph: Graph, config: MacoConfig | None = None, threads: int = 1) -> Partition:
    """Run the colony and read off a partition; isolated nodes become trailing singletons."""
    config = config or MacoConfig()
    if graph.n < 2:
        raise ValueError("need at least two nodes")
    B = run_epa(graph, config, threads=threads)
    active = graph.active
    sub = run_ppa(B[np.ix_(active, active)])
    labels = np.empty(graph.n, dtype=np.int64)
    labels[active] = sub.labels
    labels[graph.isolated] = sub.k + np.arange(len(graph.isolated))
    return Partition(labels)
