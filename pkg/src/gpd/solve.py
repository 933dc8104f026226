"""Exact and heuristic solvers for gp_k and companion invariants.

Solvers return a :class:`SolveReport`. Among maximum witnesses the
lexicographically smallest (by sorted vertex tuple) is always returned, so
results are reproducible across methods and worker counts.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from ._search import maximum_set
from .errors import InputError, ResourceLimitError, TimeLimitExceeded
from .graph import DistanceMatrix, Graph, all_pairs_distances
from .verify import is_gdp_by_characterization

__all__ = [
    "SolveReport",
    "SolverOptions",
    "gpd_bruteforce",
    "gpd_branch_and_bound",
    "gpd_greedy",
    "gp_number",
    "dissociation_number",
    "three_path_vertex_cover_number",
    "independence_number",
    "clique_number",
    "gpd_conflict_table",
]

METHODS = ("bruteforce", "branch_and_bound", "greedy")


@dataclass(frozen=True)
class SolveReport:
    value: int
    witness: tuple[int, ...]
    method: str
    nodes_explored: int
    elapsed: float
    invariant: str = "gp"

    def as_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "value": self.value,
            "witness": list(self.witness),
            "method": self.method,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


@dataclass(frozen=True)
class SolverOptions:
    """Caps and execution knobs.

    Parallel search only kicks in for graphs with at least
    ``min_parallel_order`` vertices; below that process start-up dominates.
    """

    bruteforce_cap: int = 24
    bnb_cap: int = 40
    workers: int = 1
    time_limit_ms: int | None = None
    min_parallel_order: int = 16

    def effective_workers(self, n: int) -> int:
        return self.workers if n >= self.min_parallel_order else 1


_DEFAULT = SolverOptions()


def _distances(g: Graph, d: DistanceMatrix | None) -> DistanceMatrix:
    if d is None:
        return all_pairs_distances(g)
    if d.n != g.n:
        raise InputError(f"distance matrix has order {d.n}, graph has order {g.n}")
    return d


def _check_k(k: int, minimum: int) -> int:
    k = int(k)
    if k < minimum:
        raise InputError(f"geodesic bound must be >= {minimum}, got {k}")
    return k


def _check_cap(g: Graph, cap: int, what: str, hint: str = "") -> None:
    if g.n > cap:
        raise ResourceLimitError(f"{what} is capped at {cap} vertices, graph has {g.n}{hint}")


def _everything(g: Graph, method: str, t0: float) -> SolveReport:
    return SolveReport(g.n, tuple(range(g.n)), method, 0, time.perf_counter() - t0, "gp_1")


# -- general d-position ------------------------------------------------------


def gpd_bruteforce(g: Graph, d: DistanceMatrix | None, k: int, options: SolverOptions = _DEFAULT) -> SolveReport:
    """Exact gp_k by enumerating every general k-position set.

    Sets grow one vertex at a time in increasing index order and a branch
    dies at its first violating triple. No bounding is applied, which keeps
    this usable as an oracle for :func:`gpd_branch_and_bound`.
    """
    t0 = time.perf_counter()
    k = _check_k(k, 1)
    _check_cap(g, options.bruteforce_cap, "brute force", "; use branch_and_bound")
    if k == 1:
        return _everything(g, "bruteforce", t0)
    d = _distances(g, d)
    r = d.rows
    n = g.n
    deadline = None if options.time_limit_ms is None else time.monotonic() + options.time_limit_ms / 1000

    def bad(a: int, b: int, c: int) -> bool:
        ab, ac, bc = r[a][b], r[a][c], r[b][c]
        return (ab + bc == ac and ac <= k) or (ab + ac == bc and bc <= k) or (ac + bc == ab and ab <= k)

    best: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def extend(start: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            raise TimeLimitExceeded("time limit exceeded during brute force")
        if len(chosen) > len(best):
            best = chosen.copy()
        for v in range(start, n):
            if any(bad(a, b, v) for a, b in combinations(chosen, 2)):
                continue
            chosen.append(v)
            extend(v + 1)
            chosen.pop()

    extend(0)
    return SolveReport(len(best), tuple(best), "bruteforce", nodes, time.perf_counter() - t0, f"gp_{k}")


def gpd_conflict_table(g: Graph, d: DistanceMatrix, k: int) -> list[list[int]]:
    """``table[a][b]`` masks every ``c`` for which ``{a, b, c}`` is not in general k-position.

    Each triple is classified by the structural characterisation, so the
    branch and bound does not share code with the definition oracle.
    """
    n = g.n
    table = [[0] * n for _ in range(n)]
    for a, b, c in combinations(range(n), 3):
        if not is_gdp_by_characterization(g, d, (a, b, c), k):
            table[a][b] |= 1 << c
            table[b][a] |= 1 << c
            table[a][c] |= 1 << b
            table[c][a] |= 1 << b
            table[b][c] |= 1 << a
            table[c][b] |= 1 << a
    return table


def gpd_greedy(g: Graph, d: DistanceMatrix | None, k: int, options: SolverOptions = _DEFAULT) -> SolveReport:
    """Maximal general k-position set, scanning vertices by descending degree."""
    t0 = time.perf_counter()
    k = _check_k(k, 2)
    d = _distances(g, d)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    chosen: list[int] = []
    for v in order:
        if is_gdp_by_characterization(g, d, chosen + [v], k):
            chosen.append(v)
    witness = tuple(sorted(chosen))
    return SolveReport(len(witness), witness, "greedy", g.n, time.perf_counter() - t0, f"gp_{k}")


def gpd_branch_and_bound(g: Graph, d: DistanceMatrix | None, k: int, options: SolverOptions = _DEFAULT) -> SolveReport:
    """Exact gp_k by bitset branch and bound, seeded with the greedy value."""
    t0 = time.perf_counter()
    k = _check_k(k, 1)
    _check_cap(g, options.bnb_cap, "branch and bound")
    if k == 1:
        return _everything(g, "branch_and_bound", t0)
    d = _distances(g, d)
    floor = gpd_greedy(g, d, k).value
    table = gpd_conflict_table(g, d, k)
    res = maximum_set(
        g.n,
        [0] * g.n,
        table,
        floor=floor,
        time_limit_ms=options.time_limit_ms,
        workers=options.effective_workers(g.n),
    )
    return SolveReport(len(res.members), res.members, "branch_and_bound", res.nodes, time.perf_counter() - t0, f"gp_{k}")


_SOLVERS = {
    "bruteforce": gpd_bruteforce,
    "branch_and_bound": gpd_branch_and_bound,
    "bnb": gpd_branch_and_bound,
    "greedy": gpd_greedy,
}


def gp_number(
    g: Graph, k: int, method: str = "branch_and_bound", d: DistanceMatrix | None = None, options: SolverOptions = _DEFAULT
) -> SolveReport:
    """Dispatch to one of the gp_k solvers by name."""
    try:
        solver = _SOLVERS[method]
    except KeyError:
        raise InputError(f"unknown method {method!r}; choose from {sorted(_SOLVERS)}") from None
    return solver(g, d, k, options)


# -- companion invariants ---------------------------------------------------


def dissociation_number(g: Graph, options: SolverOptions = _DEFAULT) -> SolveReport:
    """Largest vertex set inducing maximum degree at most 1."""
    t0 = time.perf_counter()
    _check_cap(g, options.bnb_cap, "dissociation search")
    nm = g.neighbor_masks
    n = g.n
    table = [[0] * n for _ in range(n)]
    for a, b in combinations(range(n), 2):
        ab = (nm[a] >> b) & 1
        for c in range(b + 1, n):
            # a triple is forbidden once it spans two edges (a P_3 or a triangle)
            if ab + ((nm[a] >> c) & 1) + ((nm[b] >> c) & 1) >= 2:
                table[a][b] |= 1 << c
                table[b][a] |= 1 << c
                table[a][c] |= 1 << b
                table[c][a] |= 1 << b
                table[b][c] |= 1 << a
                table[c][b] |= 1 << a
    res = maximum_set(n, [0] * n, table, time_limit_ms=options.time_limit_ms, workers=options.effective_workers(n))
    return SolveReport(len(res.members), res.members, "branch_and_bound", res.nodes, time.perf_counter() - t0, "diss")


def three_path_vertex_cover_number(g: Graph, options: SolverOptions = _DEFAULT) -> int:
    """Smallest set meeting every path on three vertices; equals ``n - diss``."""
    return g.n - dissociation_number(g, options).value


def independence_number(g: Graph, options: SolverOptions = _DEFAULT) -> SolveReport:
    t0 = time.perf_counter()
    _check_cap(g, options.bnb_cap, "independent set search")
    res = maximum_set(
        g.n, list(g.neighbor_masks), time_limit_ms=options.time_limit_ms, workers=options.effective_workers(g.n)
    )
    return SolveReport(len(res.members), res.members, "branch_and_bound", res.nodes, time.perf_counter() - t0, "alpha")


def clique_number(g: Graph, options: SolverOptions = _DEFAULT) -> SolveReport:
    t0 = time.perf_counter()
    _check_cap(g, options.bnb_cap, "clique search")
    full = (1 << g.n) - 1
    blocked = [full & ~(nm | (1 << v)) for v, nm in enumerate(g.neighbor_masks)]
    res = maximum_set(g.n, blocked, time_limit_ms=options.time_limit_ms, workers=options.effective_workers(g.n))
    return SolveReport(len(res.members), res.members, "branch_and_bound", res.nodes, time.perf_counter() - t0, "omega")
