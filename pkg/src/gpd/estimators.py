"""scikit-learn style wrappers.

``fit`` takes a graph (anything :func:`~gpd.validation.check_graph`
accepts) and stores the optimum; ``transform`` returns the witness as a
boolean membership vector. Hyper-parameters live in ``__init__`` so
``get_params``/``set_params``/``clone`` work as usual.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .derived import strong_d_resolving_graph
from .errors import InputError
from .graph import all_pairs_distances
from .solve import SolverOptions, clique_number, dissociation_number, gp_number, independence_number
from .validation import check_bound, check_graph


class _WitnessMixin(TransformerMixin, auto_wrap_output_keys=None):
    def transform(self, X=None):
        check_is_fitted(self, "report_")
        if X is not None and check_graph(X) != self.graph_:
            raise InputError("transform only applies to the graph passed to fit")
        mask = np.zeros(self.graph_.n, dtype=bool)
        mask[list(self.witness_)] = True
        return mask

    def score(self, X=None, y=None):
        check_is_fitted(self, "report_")
        return self.value_

    def _store(self, g, report):
        self.graph_ = g
        self.report_ = report
        self.value_ = report.value
        self.witness_ = report.witness
        return self


class GeneralPositionSolver(_WitnessMixin, BaseEstimator):
    """Largest general d-position set of a connected graph.

    Parameters
    ----------
    d : int
        Geodesic length bound (>= 1).
    method : {"branch_and_bound", "bruteforce", "greedy"}
        ``greedy`` only gives a lower bound.
    workers, time_limit_ms, bruteforce_cap, bnb_cap
        Forwarded to :class:`~gpd.solve.SolverOptions`.
    """

    def __init__(self, d=2, method="branch_and_bound", workers=1, time_limit_ms=None, bruteforce_cap=24, bnb_cap=40):
        self.d = d
        self.method = method
        self.workers = workers
        self.time_limit_ms = time_limit_ms
        self.bruteforce_cap = bruteforce_cap
        self.bnb_cap = bnb_cap

    def _options(self):
        return SolverOptions(
            bruteforce_cap=self.bruteforce_cap,
            bnb_cap=self.bnb_cap,
            workers=self.workers,
            time_limit_ms=self.time_limit_ms,
        )

    def fit(self, X, y=None):
        g = check_graph(X)
        k = check_bound(self.d, 1)
        self.distances_ = all_pairs_distances(g)
        return self._store(g, gp_number(g, k, self.method, self.distances_, self._options()))


_COMPANIONS = {"diss": dissociation_number, "alpha": independence_number, "omega": clique_number}


class CompanionInvariant(_WitnessMixin, BaseEstimator):
    """Dissociation (``"diss"``), independence (``"alpha"``) or clique (``"omega"``) number."""

    def __init__(self, invariant="diss", bnb_cap=40, workers=1, time_limit_ms=None):
        self.invariant = invariant
        self.bnb_cap = bnb_cap
        self.workers = workers
        self.time_limit_ms = time_limit_ms

    def fit(self, X, y=None):
        if self.invariant not in _COMPANIONS:
            raise InputError(f"invariant must be one of {sorted(_COMPANIONS)}, got {self.invariant!r}")
        g = check_graph(X)
        opts = SolverOptions(bnb_cap=self.bnb_cap, workers=self.workers, time_limit_ms=self.time_limit_ms)
        return self._store(g, _COMPANIONS[self.invariant](g, opts))


class StrongResolvingGraph(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    """Maps a connected graph to its strong d-resolving graph."""

    def __init__(self, d=2):
        self.d = d

    def fit(self, X, y=None):
        check_bound(self.d, 2)
        return self

    def transform(self, X):
        g = check_graph(X)
        return strong_d_resolving_graph(g, all_pairs_distances(g), check_bound(self.d, 2))
