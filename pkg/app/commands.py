from typing import Callable
import logging

import numpy as np
import pandas as pd

from bgraph.density import density_report, kappa, t as t_density, tau_profile
from entropy.information import random_distribution
from entropy.sidorenko import entropy_sidorenko_sweep
from entropy.solver import MaxEntSolver
from groups.catalog import group_catalog
from groups.cosets import coset_graph, hom_count_via_w, t_via_w, w_count
from groups.subgroups import generated_subgroup, whole_group
from groups.sweep import catalog_triples, sidorenko_sweep
from limits.quasi import R_value
from limits.sparsity import sparsity_report
from limits.type_graph import main_theorem_experiment
from models.quasi_params import QuasiParams
from randgraph.experiment import convergence_report
from shared.constants import CAP_CELLS, DEFAULT_TEST_GRAPH_CAP, MAXENT_TOL
from shared.errors import ConfigError
from shared.parser import ObjectParser, parse_int_list, parse_number

logger = logging.getLogger(__name__)

# a command returns either a JSON-ready dict or a table
Result = dict | pd.DataFrame

DEFAULT_SWEEP_GRAPHS = ["p1", "path2", "path3", "c4", "c6", "k2,2", "k2,3"]


def _require(args, name: str):
    value = getattr(args, name, None)
    if value is None or value == []:
        raise ConfigError(f"--{name.replace('_', '-')} is required for '{args.command}'")
    return value


def _one_graph(args, parser: ObjectParser, name: str = "H"):
    specs = _require(args, name)
    if isinstance(specs, list):
        if len(specs) != 1:
            raise ConfigError(f"'{args.command}' takes exactly one --{name}")
        specs = specs[0]
    return parser.graph(specs)


def _params(args) -> QuasiParams:
    return QuasiParams(parse_number(_require(args, "beta")), parse_number(_require(args, "alpha")))


def _subgroups(args, parser: ObjectParser):
    group, fixed = parser.group(_require(args, "group"))
    if args.t1 is None and args.t2 is None and fixed is not None:
        return group, fixed
    t1 = generated_subgroup(group, parse_int_list(args.t1)) if args.t1 else whole_group(group)
    t2 = generated_subgroup(group, parse_int_list(args.t2)) if args.t2 else whole_group(group)
    return group, (t1, t2)


def run_density(args, parser: ObjectParser) -> Result:
    return density_report(_one_graph(args, parser), _one_graph(args, parser, "G"))


def run_profile(args, parser: ObjectParser) -> Result:
    profile = tau_profile(_one_graph(args, parser, "G"), int(args.cap or DEFAULT_TEST_GRAPH_CAP))
    return pd.DataFrame(profile.to_rows(), columns=["key", "n1", "n2", "h"])


def run_kappa(args, parser: ObjectParser) -> Result:
    g1 = _one_graph(args, parser, "G")
    g2 = parser.graph(_require(args, "G2"))
    cap = int(args.cap or DEFAULT_TEST_GRAPH_CAP)
    return {"kappa": kappa(g1, g2, cap), "cap": cap}


def run_maxent(args, parser: ObjectParser) -> Result:
    solver = MaxEntSolver(tol=args.tol or MAXENT_TOL, cap_cells=args.cap or CAP_CELLS)
    solution = solver.solve(_one_graph(args, parser), parser.distribution(_require(args, "X")))
    return solution.to_report()


def run_coset(args, parser: ObjectParser) -> Result:
    group, (t1, t2) = _subgroups(args, parser)
    graph = coset_graph(group, t1, t2)
    return {"group": group.name, "order": group.order, "t1": list(t1.elements),
            "t2": list(t2.elements), "graph": graph.to_dict()}


def run_wcount(args, parser: ObjectParser) -> Result:
    h = _one_graph(args, parser)
    group, (t1, t2) = _subgroups(args, parser)
    target = coset_graph(group, t1, t2)
    via_w = t_via_w(h, group, t1, t2)
    direct = t_density(h, target)
    return {
        "w": w_count(h, group, t1, t2),
        "hom": hom_count_via_w(h, group, t1, t2),
        "t_via_w": f"{via_w.numerator}/{via_w.denominator}",
        "t_direct": f"{direct.numerator}/{direct.denominator}",
        "equal": via_w == direct,
    }


def run_sidorenko_sweep(args, parser: ObjectParser) -> Result:
    graphs = [parser.graph(spec) for spec in (args.H or DEFAULT_SWEEP_GRAPHS)]
    if args.mode == "entropy":
        rng = np.random.default_rng(args.seed or 0)
        sizes = [(2, 2), (2, 3), (3, 2), (3, 3)]
        distributions = [random_distribution(*sizes[k % len(sizes)], rng) for k in range(args.trials or 20)]
        return entropy_sidorenko_sweep(graphs, distributions, MaxEntSolver(cap_cells=args.cap or CAP_CELLS))
    return sidorenko_sweep(graphs, catalog_triples(group_catalog(args.max_order or 24)))


def run_quasirandom(args, parser: ObjectParser) -> Result:
    h = _one_graph(args, parser)
    params = _params(args)
    target = R_value(params, h)
    if args.R_only:
        return {"R": float(target), "R_exact": str(target)}
    n_list = parse_int_list(_require(args, "n"), "--n list")
    return convergence_report(h, params, n_list, trials=args.trials or 50, seed=args.seed or 0)


def run_typegraph(args, parser: ObjectParser) -> Result:
    nu = parser.distribution(_require(args, "X"))
    N_list = parse_int_list(_require(args, "N"), "--N list")
    return main_theorem_experiment(nu, _one_graph(args, parser), N_list)


def run_sparsity(args, parser: ObjectParser) -> Result:
    report = sparsity_report(_one_graph(args, parser, "G"), args.n_max or 20)
    return {"beta_v": report.beta_v, "beta_e": report.beta_e, "beta_hat": report.beta_hat,
            "g_values": report.g_values, "t_values": report.t_values}


COMMANDS: dict[str, Callable] = {
    "density": run_density,
    "profile": run_profile,
    "kappa": run_kappa,
    "maxent": run_maxent,
    "coset": run_coset,
    "wcount": run_wcount,
    "sidorenko-sweep": run_sidorenko_sweep,
    "quasirandom": run_quasirandom,
    "typegraph": run_typegraph,
    "sparsity": run_sparsity,
}
