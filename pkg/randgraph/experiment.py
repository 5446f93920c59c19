from typing import Iterable
import logging

import numpy as np
import pandas as pd

from bgraph.counter import HomomorphismCounter
from bgraph.density import h_density
from limits.quasi import R_value
from models.bipartite_graph import BipartiteGraph
from models.quasi_params import QuasiParams
from models.random_model import RandomModelParams, TrialStats
from randgraph.sampler import sample

logger = logging.getLogger(__name__)


def summarize(n: int, target: float, values: list) -> TrialStats:
    """Median and quartiles over the defined values; None entries are only counted."""
    stats = TrialStats(n=n, target=target, values=list(values))
    defined = np.asarray(stats.defined_values, dtype=float)
    if defined.size:
        stats.q25, stats.median, stats.q75 = (float(q) for q in np.quantile(defined, [0.25, 0.5, 0.75]))
        stats.median_abs_error = float(np.median(np.abs(defined - target)))
    return stats


def empirical_h(h: BipartiteGraph, model: RandomModelParams,
                counter: HomomorphismCounter | None = None) -> TrialStats:
    """h(H, G(n, beta, alpha)) over seeded trials against the limit R(beta, alpha, H)."""
    target = float(R_value(model.params, h))
    values = []
    for trial in range(model.trials):
        g = sample(model.params, model.n, model.seed, trial)
        values.append(h_density(h, g, counter) if g.has_edges else None)

    stats = summarize(model.n, target, values)
    if stats.undefined_count:
        logger.warning("n=%d: %d of %d samples had no edge", model.n, stats.undefined_count, model.trials)
    logger.info("n=%d: median h=%s target=%.4f", model.n, stats.median, target)
    return stats


def convergence_report(h: BipartiteGraph, params: QuasiParams, n_list: Iterable[int],
                       trials: int = 50, seed: int = 0,
                       counter: HomomorphismCounter | None = None) -> pd.DataFrame:
    """One row per n: median h, quartiles, target R, undefined count and median |h - R|."""
    rows = []
    for n in n_list:
        stats = empirical_h(h, RandomModelParams(n, params, seed, trials), counter)
        rows.append({
            "n": n,
            "median_h": stats.median,
            "q25": stats.q25,
            "q75": stats.q75,
            "R": stats.target,
            "undefined": stats.undefined_count,
            "median_abs_error": stats.median_abs_error,
        })
    return pd.DataFrame(rows, columns=["n", "median_h", "q25", "q75", "R", "undefined", "median_abs_error"])
