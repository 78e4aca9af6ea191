"""Community detection by an ant colony steered with annealed-constrained random walks."""

from .colony import MacoConfig, Partition, detect, run_epa, run_ppa
from .graph import Graph, GroundTruth, load_edge_list, load_ground_truth
from .metrics import modularity, nmi

__all__ = [
    "Graph", "GroundTruth", "MacoConfig", "Partition", "detect", "load_edge_list",
    "load_ground_truth", "modularity", "nmi", "run_epa", "run_ppa",
]
