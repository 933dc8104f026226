"""Exact computation of general d-position numbers of finite graphs."""

__version__ = "0.1.0"

from .closed_forms import diameter_lower_bound, gp_clique_tail, gp_cycle, gp_path
from .derived import complement, has_true_twins, srg_clique_bound, strong_d_resolving_graph
from .errors import ConnectivityError, GPDError, InputError, ParseError, ResourceLimitError, TimeLimitExceeded
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    are_parallel,
    build_graph,
    format_edge_list,
    in_interval,
    is_isometric_subset,
    is_maximally_distant,
    mutually_maximally_distant,
    parse_edge_list,
    read_edge_list,
    subgraph_distance,
)
from .solve import (
    SolveReport,
    SolverOptions,
    clique_number,
    dissociation_number,
    gp_number,
    gpd_branch_and_bound,
    gpd_bruteforce,
    gpd_greedy,
    independence_number,
    three_path_vertex_cover_number,
)
from .verify import (
    CliqueDecomposition,
    components_of_induced,
    is_gdp_by_characterization,
    is_gdp_by_definition,
    is_general_position,
)

_ESTIMATORS = ("CompanionInvariant", "GeneralPositionSolver", "StrongResolvingGraph")


def __getattr__(name):
    # scikit-learn is only imported when an estimator is first requested
    if name in _ESTIMATORS:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
