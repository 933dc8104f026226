"""Input coercion used by the estimators and the CLI."""
from __future__ import annotations

import numpy as np

from .errors import InputError
from .graph import Graph, build_graph, vertex_set

__all__ = ["check_graph", "check_bound", "check_vertex_set"]

check_vertex_set = vertex_set


def check_graph(X) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a :class:`Graph`, an ``(n, edges)`` pair, a square symmetric
    0/1 adjacency array, or any object exposing ``number_of_nodes()`` and
    ``edges()`` whose nodes are exactly ``0..n-1`` (e.g. a networkx graph).
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "number_of_nodes") and hasattr(X, "edges"):
        n = X.number_of_nodes()
        if set(X.nodes()) != set(range(n)):
            raise InputError("graph nodes must be labelled 0..n-1")
        return build_graph(n, X.edges())
    if isinstance(X, tuple) and len(X) == 2 and np.isscalar(X[0]):
        return build_graph(int(X[0]), X[1])
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"expected a square adjacency matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise InputError("adjacency matrix must be symmetric")
    if np.any(np.diag(arr) != 0):
        raise InputError("adjacency matrix must have a zero diagonal")
    if not np.isin(arr, (0, 1)).all():
        raise InputError("adjacency matrix entries must be 0 or 1")
    iu, ju = np.nonzero(np.triu(arr, 1))
    return build_graph(arr.shape[0], zip(iu.tolist(), ju.tolist()))


def check_bound(k, minimum: int = 1, name: str = "d") -> int:
    if isinstance(k, bool) or int(k) != k:
        raise InputError(f"{name} must be an integer, got {k!r}")
    k = int(k)
    if k < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {k}")
    return k
