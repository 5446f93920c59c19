from randgraph.sampler import class_sizes, edge_probability, expected_edges, trial_rng, sample, sample_symmetric
from randgraph.experiment import summarize, empirical_h, convergence_report

__all__ = [
    "class_sizes", "edge_probability", "expected_edges", "trial_rng", "sample", "sample_symmetric",
    "summarize", "empirical_h", "convergence_report",
]
