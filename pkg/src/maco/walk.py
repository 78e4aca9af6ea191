"""Random-walk kernels on the pheromone-weighted graph.

Three l-step distributions from a source node ``s`` are provided:

* ``plain_walk``: the ordinary Markov walk with transition ``m_ij / d'_i``.
* ``annealed_constrained_walk``: at each step the walk's mass is reduced by
  what the same mass would produce on the annealed (configuration-model)
  network, clamped at zero and renormalised.
* ``degree_corrected_distribution``: the constrained walk divided by the
  weighted degree once, after the final step.

Annealed transitions never need the dense ``c_ij`` matrix: because
``sum_r c_ir = d'_i``, every row of the annealed chain equals the stationary
vector ``d' / sum(d')``, so one step costs O(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
import scipy.sparse as sp

from .graph import Graph

NORM_TOL = 1e-12
DUST = 1e-15


class DanglingNodeError(ValueError):
    """A walk was started from, or stepped out of, a node with zero weight."""


@dataclass(frozen=True, eq=False)
class WeightedView:
    """The graph with edge weights ``m_ij = a_ij * b_ij`` taken from a pheromone matrix."""

    graph: Graph
    weights: sp.csr_matrix
    weighted_degree: np.ndarray

    @classmethod
    def build(cls, graph: Graph, pheromone: np.ndarray | None = None) -> "WeightedView":
        adj = graph.adjacency
        if pheromone is None:
            data = np.ones(adj.nnz)
        else:
            rows = np.repeat(np.arange(graph.n), np.diff(adj.indptr))
            data = np.asarray(pheromone, dtype=float)[rows, adj.indices]
            # subnormal weights would overflow 1/d'; treat them as evaporated
            data[data < np.finfo(float).tiny] = 0.0
        w = sp.csr_matrix((data, adj.indices, adj.indptr), shape=adj.shape)
        return cls(graph=graph, weights=w, weighted_degree=np.asarray(w.sum(axis=1)).ravel())

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total_weight(self) -> float:
        return float(self.weighted_degree.sum())

    @property
    def stationary(self) -> np.ndarray:
        """``d'_j / sum_r d'_r``: every row of the annealed transition matrix."""
        return self.weighted_degree / self.total_weight

    def _inv_degree(self) -> np.ndarray:
        d = self.weighted_degree
        inv = np.zeros_like(d)
        np.divide(1.0, d, out=inv, where=d > 0)
        return inv

    def _check_source(self, s: int) -> None:
        if not 0 <= s < self.n:
            raise IndexError(f"node {s} out of range")
        if self.weighted_degree[s] <= 0:
            raise DanglingNodeError(f"node {s} has zero weighted degree")

    def step(self, dist: np.ndarray) -> np.ndarray:
        """One step of the weighted walk: ``sum_r dist(r) p_ri``."""
        # M is symmetric, so dist @ P == M @ (dist / d')
        return self.weights @ (dist * self._inv_degree())


@dataclass(frozen=True, eq=False)
class TransitionVector:
    source: int
    steps: int
    values: np.ndarray
    degenerate: bool = False


def transition_prob(view: WeightedView, i: int, j: int) -> float:
    """Probability of moving ``i -> j`` on the weighted graph."""
    view._check_source(i)
    return float(view.weights[i, j] / view.weighted_degree[i])


def transition_row(view: WeightedView, i: int) -> np.ndarray:
    view._check_source(i)
    return view.weights[[i]].toarray().ravel() / view.weighted_degree[i]


def annealed_transition(view: WeightedView, i: int, j: int) -> float:
    """Probability of moving ``i -> j`` on the annealed network.

    The row sum includes the diagonal term ``c_ii``; the result therefore
    reduces to ``d'_j / sum(d')`` for every ``i``.
    """
    view._check_source(i)
    return float(view.stationary[j])


def indicator(n: int, s: int) -> np.ndarray:
    v = np.zeros(n)
    v[s] = 1.0
    return v


def _normalise(raw: np.ndarray) -> np.ndarray:
    v = raw / raw.sum()
    v[v < DUST] = 0.0
    return v / v.sum()


def plain_walk(view: WeightedView, s: int, l: int) -> TransitionVector:
    if l < 0:
        raise ValueError("step count must be >= 0")
    view._check_source(s)
    alpha = indicator(view.n, s)
    for _ in range(l):
        alpha = view.step(alpha)
    return TransitionVector(s, l, alpha)


def iter_constrained(view: WeightedView, s: int) -> Iterator[tuple[np.ndarray, bool]]:
    """Yield ``(beta_l, degenerate)`` for l = 0, 1, 2, ...

    Once a step clamps every entry to zero the walk is pinned to the
    indicator at ``s`` and flagged degenerate from then on.
    """
    view._check_source(s)
    beta = indicator(view.n, s)
    yield beta, False
    pi = view.stationary
    while True:
        raw = view.step(beta) - beta.sum() * pi
        np.maximum(raw, 0.0, out=raw)
        if raw.sum() <= 0.0:
            beta = indicator(view.n, s)
            while True:
                yield beta, True
        beta = _normalise(raw)
        yield beta, False


def annealed_constrained_walk(view: WeightedView, s: int, l: int) -> TransitionVector:
    if l < 0:
        raise ValueError("step count must be >= 0")
    for step, (beta, degenerate) in enumerate(iter_constrained(view, s)):
        if step == l:
            return TransitionVector(s, l, beta, degenerate)
    raise AssertionError("unreachable")


def degree_correct(view: WeightedView, beta: np.ndarray) -> np.ndarray:
    """Divide by weighted degree and renormalise; zero-weight nodes get 0."""
    psi = beta * view._inv_degree()
    return _normalise(psi)


def degree_corrected_distribution(view: WeightedView, s: int, l: int) -> TransitionVector:
    walk = annealed_constrained_walk(view, s, l)
    return TransitionVector(s, l, degree_correct(view, walk.values), walk.degenerate)


def rank_nodes(values: np.ndarray) -> np.ndarray:
    """Node indices by descending value, ties by ascending index."""
    return np.lexsort((np.arange(len(values)), -values))


def convergence_trace(view: WeightedView, s: int, l_max: int) -> list[tuple[int, float, int]]:
    """Per-step change of the degree-corrected distribution.

    Returns rows ``(l, euclidean_delta, list_delta)`` for l = 1..l_max where
    ``euclidean_delta = ||psi_l - psi_{l-1}||`` and ``list_delta`` counts
    positions at which the full descending rankings of all n nodes differ.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    rows = []
    prev_psi = prev_rank = None
    for l, (beta, _) in enumerate(iter_constrained(view, s)):
        psi = degree_correct(view, beta)
        rank = rank_nodes(psi)
        if prev_psi is not None:
            rows.append((l, float(np.linalg.norm(psi - prev_psi)),
                         int(np.count_nonzero(rank != prev_rank))))
        if l == l_max:
            return rows
        prev_psi, prev_rank = psi, rank
    raise AssertionError("unreachable")
