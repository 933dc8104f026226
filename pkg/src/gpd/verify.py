"""Two independent checkers for general d-position sets.

:func:`is_gdp_by_definition` scans triples directly. It is the reference
oracle. :func:`is_gdp_by_characterization` splits the set into the
components of its induced subgraph and reasons about distances between
whole components, so its cost grows with the number of components rather
than the number of vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError
from .graph import DistanceMatrix, Graph, vertex_set

__all__ = [
    "CliqueDecomposition",
    "first_violation",
    "is_gdp_by_definition",
    "components_of_induced",
    "is_gdp_by_characterization",
    "is_general_position",
]


@dataclass(frozen=True)
class CliqueDecomposition:
    """Connected components of an induced subgraph, each flagged complete or not."""

    parts: tuple[frozenset[int], ...]
    each_complete: tuple[bool, ...]

    @property
    def all_complete(self) -> bool:
        return all(self.each_complete)

    def __len__(self):
        return len(self.parts)


def first_violation(d: DistanceMatrix, s: Iterable[int], k: int) -> tuple[int, int, int] | None:
    """Return ``(u, v, w)`` with ``v`` on a ``u,w``-geodesic of length <= k, or None.

    Ordered pairs ``(u, w)`` are visited in ascending order, so the triple
    returned is deterministic.
    """
    members = sorted(vertex_set(s, d.n))
    r = d.rows
    for u in members:
        ru = r[u]
        for w in members:
            duw = ru[w]
            if w == u or duw > k:
                continue
            rw = r[w]
            for v in members:
                if v != u and v != w and ru[v] + rw[v] == duw:
                    return u, v, w
    return None


def is_gdp_by_definition(g: Graph, d: DistanceMatrix, s: Iterable[int], k: int) -> bool:
    """True iff no three members of ``s`` lie on a common geodesic of length <= ``k``."""
    if k < 1:
        raise InputError(f"geodesic bound must be >= 1, got {k}")
    return first_violation(d, s, k) is None


def components_of_induced(g: Graph, s: Iterable[int]) -> CliqueDecomposition:
    s = vertex_set(s, g.n)
    parts, complete = [], []
    seen: set[int] = set()
    for root in sorted(s):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y in s and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        size = len(comp)
        # complete iff every member sees all the others inside the component
        ok = all(sum(1 for y in g.adjacency[x] if y in comp) == size - 1 for x in comp)
        parts.append(frozenset(comp))
        complete.append(ok)
    return CliqueDecomposition(tuple(parts), tuple(complete))


def is_gdp_by_characterization(g: Graph, d: DistanceMatrix, s: Iterable[int], k: int) -> bool:
    """Structural test via cliques of the induced subgraph; needs ``k >= 2``.

    ``s`` passes iff (i) every component of the induced subgraph is a
    clique, (ii) two non-parallel cliques are at distance at least ``k``,
    and (iii) whenever one clique sits "between" two others (the distances
    add up), the outer two are more than ``k`` apart.
    """
    if k < 2:
        raise InputError("the structural characterisation needs k >= 2; use the definition for k = 1")
    dec = components_of_induced(g, s)
    if not dec.all_complete:
        return False
    parts = [tuple(p) for p in dec.parts]
    ell = len(parts)
    if ell < 2:
        return True
    r = d.rows
    gap = [[0] * ell for _ in range(ell)]
    for i, j in combinations(range(ell), 2):
        values = [r[x][y] for x in parts[i] for y in parts[j]]
        lo = min(values)
        if lo < k and max(values) != lo:
            return False
        gap[i][j] = gap[j][i] = lo
    for i, j, h in combinations(range(ell), 3):
        a, b, c = gap[i][j], gap[j][h], gap[i][h]
        # any of the three parts may be the middle one
        if (a + b == c and c <= k) or (a + c == b and b <= k) or (b + c == a and a <= k):
            return False
    return True


def is_general_position(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> bool:
    """Classical general position: the definition checker at ``k = diam``."""
    return is_gdp_by_definition(g, d, s, max(d.diameter, 1))
