"""Graphs derived from a host graph: strong d-resolving graph, complement, twins."""
from __future__ import annotations

from itertools import combinations

from .errors import InputError
from .graph import DistanceMatrix, Graph, build_graph, mutually_maximally_distant
from .solve import SolverOptions, clique_number

__all__ = ["strong_d_resolving_graph", "complement", "has_true_twins", "srg_clique_bound"]


def strong_d_resolving_graph(g: Graph, d_mat: DistanceMatrix, k: int) -> Graph:
    """Join ``u, v`` when they are mutually maximally distant or at distance >= ``k``.

    The result may be disconnected.
    """
    if k < 2:
        raise InputError(f"strong d-resolving graph needs k >= 2, got {k}")
    if d_mat.n != g.n:
        raise InputError("distance matrix does not match graph")
    r = d_mat.rows
    edges = [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if r[u][v] >= k or mutually_maximally_distant(d_mat, g, u, v)
    ]
    return build_graph(g.n, edges)


def complement(g: Graph) -> Graph:
    return build_graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)))


def has_true_twins(g: Graph) -> tuple[int, int] | None:
    """First pair ``(u, v)``, ``u < v``, with equal closed neighbourhoods, else None."""
    seen: dict[int, int] = {}
    for v, mask in enumerate(g.neighbor_masks):
        key = mask | (1 << v)
        if key in seen:
            return seen[key], v
        seen[key] = v
    return None


def srg_clique_bound(g: Graph, d_mat: DistanceMatrix, k: int, options: SolverOptions | None = None) -> int:
    """Clique number of the strong k-resolving graph, a lower bound on gp_k."""
    srg = strong_d_resolving_graph(g, d_mat, k)
    return clique_number(srg, options or SolverOptions()).value
