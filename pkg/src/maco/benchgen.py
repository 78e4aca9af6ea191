"""Planted-partition benchmark graphs (Newman's four-group model and its scaled variant)."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GroundTruth

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewmanSpec:
    groups: int = 4
    group_size: int = 32
    z_in: float = 16.0
    z_out: float = 0.0
    seed: int = 0

    @property
    def n(self) -> int:
        return self.groups * self.group_size

    @property
    def p_in(self) -> float:
        return self.z_in / (self.group_size - 1)

    @property
    def p_out(self) -> float:
        if self.groups < 2:
            return 0.0
        return self.z_out / (self.group_size * (self.groups - 1))

    def validate(self) -> None:
        if self.groups < 1 or self.group_size < 2:
            raise ValueError("need at least one group of two nodes")
        if self.z_in + self.z_out > self.n - 1:
            raise ValueError("expected degree exceeds n - 1")
        for name, p in (("p_in", self.p_in), ("p_out", self.p_out)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name}={p:.4g} outside [0, 1]")


def generate_newman(spec: NewmanSpec) -> tuple[Graph, GroundTruth]:
    """Independent Bernoulli edges with ``p_in`` inside groups and ``p_out`` across."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    group = np.arange(n) // spec.group_size
    iu, ju = np.triu_indices(n, k=1)
    prob = np.where(group[iu] == group[ju], spec.p_in, spec.p_out)
    hit = rng.random(len(iu)) < prob
    graph = Graph.from_edges(n, zip(iu[hit], ju[hit]))
    if len(graph.isolated):
        log.warning("generated graph has %d isolated node(s)", len(graph.isolated))
    return graph, GroundTruth(group.astype(np.int64))


def scaling_suite(C_list, seed: int = 0, group_size: int = 100,
                  z_in: float = 10.0, z_out: float = 6.0):
    """One planted-partition instance per group count C, with n = group_size * C."""
    out = []
    for C in C_list:
        if C < 2:
            raise ValueError("scaling instances need at least two groups")
        inst_seed = int(np.random.SeedSequence([seed, C]).generate_state(1)[0])
        out.append(generate_newman(NewmanSpec(C, group_size, z_in, z_out, inst_seed)))
    return out
