"""Partition quality: normalized mutual information and Newman-Girvan modularity."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def _labels(part) -> np.ndarray:
    for attr in ("labels", "assignment"):
        if hasattr(part, attr):
            part = getattr(part, attr)
            break
    labels = np.asarray(part)
    if labels.ndim != 1:
        raise ValueError("expected a 1-d label vector")
    # canonical ids by first appearance: sums then run in a label-independent order
    _, first, inv = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    return rank[inv.ravel()]


def confusion(a, b) -> np.ndarray:
    """Contingency counts ``N[i, j]`` of nodes in community i of ``a`` and j of ``b``."""
    la, lb = _labels(a), _labels(b)
    if len(la) != len(lb):
        raise ValueError(f"partitions cover {len(la)} and {len(lb)} nodes")
    table = np.zeros((la.max() + 1, lb.max() + 1), dtype=np.int64)
    np.add.at(table, (la, lb), 1)
    return table


def nmi(a, b) -> float:
    """Normalized mutual information (Danon et al.), natural log.

    Two single-community partitions are identical and score 1.
    """
    table = confusion(a, b).astype(float)
    N = table.sum()
    rows, cols = table.sum(axis=1), table.sum(axis=0)
    nz = table > 0
    num = -2.0 * np.sum(table[nz] * np.log(table[nz] * N / np.outer(rows, cols)[nz]))
    den = np.sum(rows * np.log(rows / N)) + np.sum(cols * np.log(cols / N))
    if den == 0.0:
        return 1.0
    return float(min(max(num / den, 0.0), 1.0))


def modularity(graph: Graph, partition) -> float:
    """``sum_c [e_c / m - (a_c / 2m)^2]`` with e_c internal edges, a_c degree sum."""
    labels = _labels(partition)
    if len(labels) != graph.n:
        raise ValueError(f"partition covers {len(labels)} nodes, graph has {graph.n}")
    m = graph.m
    k = labels.max() + 1
    lu, lv = labels[graph.edges[:, 0]], labels[graph.edges[:, 1]]
    internal = np.bincount(lu[lu == lv], minlength=k)
    a = np.bincount(labels, weights=graph.degree, minlength=k)
    return float(np.sum(internal / m - (a / (2.0 * m)) ** 2))
