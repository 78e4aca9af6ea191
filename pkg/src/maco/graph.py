"""Immutable undirected simple graphs and edge-list / ground-truth IO."""

from __future__ import annotations

import io
import logging
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")


class GraphFormatError(ValueError):
    """Raised for malformed or unusable edge-list / ground-truth input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph over contiguous 0-based node indices.

    ``edges`` is an (m, 2) int array with ``u < v`` per row, sorted
    lexicographically. ``tokens[i]`` is the external name of node ``i``.
    """

    n: int
    edges: np.ndarray
    tokens: tuple[str, ...]
    adjacency: sp.csr_matrix = field(repr=False)
    degree: np.ndarray = field(repr=False)
    duplicates_dropped: int = 0
    self_loops_dropped: int = 0

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]],
                   tokens: Iterable[str] | None = None) -> "Graph":
        """Build a graph from index pairs, dropping self-loops and duplicates."""
        seen: set[tuple[int, int]] = set()
        dup = loops = 0
        for u, v in pairs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                dup += 1
                continue
            seen.add(key)
        edges = np.array(sorted(seen), dtype=np.int64).reshape(-1, 2)
        toks = tuple(tokens) if tokens is not None else tuple(str(i) for i in range(n))
        if len(toks) != n:
            raise GraphFormatError("token count does not match node count")
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        adj = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        adj.sort_indices()
        degree = np.diff(adj.indptr).astype(np.int64)
        return cls(n=n, edges=edges, tokens=toks, adjacency=adj, degree=degree,
                   duplicates_dropped=dup, self_loops_dropped=loops)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_degree(self) -> int:
        return int(self.degree.sum())

    def neighbors(self, i: int) -> np.ndarray:
        a = self.adjacency
        return a.indices[a.indptr[i]:a.indptr[i + 1]]

    @property
    def isolated(self) -> np.ndarray:
        """Indices of degree-0 nodes."""
        return np.flatnonzero(self.degree == 0)

    @property
    def active(self) -> np.ndarray:
        """Indices of nodes with at least one edge."""
        return np.flatnonzero(self.degree > 0)

    def index_of(self, token: str) -> int:
        try:
            return self._token_index[token]
        except KeyError:
            raise GraphFormatError(f"unknown node token {token!r}") from None

    @property
    def _token_index(self) -> dict[str, int]:
        cache = self.__dict__.get("_tok_cache")
        if cache is None:
            cache = {t: i for i, t in enumerate(self.tokens)}
            object.__setattr__(self, "_tok_cache", cache)
        return cache

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(map(tuple, self.edges.tolist()))
        return g


@dataclass(frozen=True)
class GroundTruth:
    """Planted community label per node index, renumbered 0..k-1."""

    assignment: np.ndarray

    @property
    def k(self) -> int:
        return int(self.assignment.max()) + 1 if len(self.assignment) else 0


def _lines(stream: TextIO | str):
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        yield lineno, line.split()


def _natural_key(token: str):
    return (0, int(token), "") if token.lstrip("-").isdigit() else (1, 0, token)


def load_edge_list(stream: TextIO | str, allow_empty: bool = False,
                   order: str = "appearance") -> Graph:
    """Parse a whitespace-separated edge list.

    Node tokens are arbitrary strings, mapped to indices in order of first
    appearance, or with ``order="natural"`` by integer value (non-numeric
    tokens after, lexically). Self-loops and repeated edges are dropped and
    counted. Tokens seen only in self-loops still become (isolated) nodes.

    Raises:
        GraphFormatError: a line does not hold exactly two tokens, or the
            graph has no edges once loops and duplicates are removed.
    """
    index: dict[str, int] = {}
    pairs = []
    for lineno, parts in _lines(stream):
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 2 tokens, got {len(parts)}")
        ids = []
        for tok in parts:
            if tok not in index:
                index[tok] = len(index)
            ids.append(index[tok])
        pairs.append((ids[0], ids[1]))
    tokens = list(index)
    if order == "natural":
        tokens.sort(key=_natural_key)
        remap = np.empty(len(tokens), dtype=np.int64)
        remap[[index[t] for t in tokens]] = np.arange(len(tokens))
        pairs = [(remap[u], remap[v]) for u, v in pairs]
    elif order != "appearance":
        raise ValueError(f"unknown node order {order!r}")
    graph = Graph.from_edges(len(tokens), pairs, tokens=tokens)
    if graph.m == 0 and not allow_empty:
        raise GraphFormatError("graph has no edges")
    if graph.duplicates_dropped or graph.self_loops_dropped:
        log.warning("dropped %d duplicate edge(s) and %d self-loop(s)",
                    graph.duplicates_dropped, graph.self_loops_dropped)
    if len(graph.isolated):
        log.warning("%d isolated node(s)", len(graph.isolated))
    return graph


def write_edge_list(graph: Graph, stream: TextIO) -> None:
    for u, v in graph.edges.tolist():
        stream.write(f"{graph.tokens[u]} {graph.tokens[v]}\n")


def load_ground_truth(stream: TextIO | str, graph: Graph) -> GroundTruth:
    """Parse ``node community`` lines into a label per graph node.

    Community tokens are renumbered 0..k-1 in order of first appearance
    when scanning nodes by index.
    """
    raw: dict[int, str] = {}
    for lineno, parts in _lines(stream):
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 2 tokens, got {len(parts)}")
        node = graph.index_of(parts[0])
        if node in raw:
            raise GraphFormatError(f"line {lineno}: duplicate entry for node {parts[0]!r}")
        raw[node] = parts[1]
    missing = [graph.tokens[i] for i in range(graph.n) if i not in raw]
    if missing:
        raise GraphFormatError(f"node without label: {missing[0]!r}"
                               + (f" (+{len(missing) - 1} more)" if len(missing) > 1 else ""))
    names: dict[str, int] = {}
    labels = np.array([names.setdefault(raw[i], len(names)) for i in range(graph.n)],
                      dtype=np.int64)
    return GroundTruth(labels)


def write_ground_truth(graph: Graph, truth: GroundTruth, stream: TextIO) -> None:
    for i, c in enumerate(truth.assignment.tolist()):
        stream.write(f"{graph.tokens[i]} {c}\n")


def karate() -> Graph:
    """Zachary's karate club (34 nodes, 78 edges), bundled with the package."""
    from importlib.resources import files

    with files("maco.data").joinpath("karate.edges").open("r", encoding="utf-8") as fh:
        return load_edge_list(fh, order="natural")
