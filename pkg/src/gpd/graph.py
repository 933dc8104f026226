"""Graph representation, hop distances and the geodesic predicates.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable; a
:class:`DistanceMatrix` is built once per connected graph and every
predicate below is a constant-time lookup (or a short scan) on it.
"""
from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import ConnectivityError, InputError, ParseError

__all__ = [
    "Graph",
    "DistanceMatrix",
    "build_graph",
    "all_pairs_distances",
    "in_interval",
    "subgraph_distance",
    "are_parallel",
    "is_maximally_distant",
    "mutually_maximally_distant",
    "is_isometric_subset",
    "vertex_set",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Finite simple undirected graph on ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``. Build
    instances with :func:`build_graph`; the constructor trusts its input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(len(a) for a in self.adjacency) // 2)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitmasks."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def fingerprint(self) -> str:
        """SHA-256 of the canonical edge-list text (no comments)."""
        return hashlib.sha256(format_edge_list(self).encode()).hexdigest()


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, collapsing duplicate edges.

    Raises :class:`InputError` on self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    ``dist`` is a read-only ``(n, n)`` integer array. ``rows`` holds the same
    data as nested tuples, which is what the pure-Python hot loops index.
    """

    n: int
    dist: np.ndarray
    diameter: int

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self.dist)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Shortest-path distances of ``g``; raises :class:`ConnectivityError` if disconnected."""
    if g.n == 0:
        raise InputError("graph has no vertices")
    rows, cols = [], []
    for u, v in g.edges():
        rows += (u, v)
        cols += (v, u)
    adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    raw = shortest_path(adj, method="D", directed=False, unweighted=True)
    if not np.all(np.isfinite(raw)):
        raise ConnectivityError(f"graph on {g.n} vertices is disconnected")
    dist = raw.astype(np.int32)
    dist.setflags(write=False)
    return DistanceMatrix(g.n, dist, int(dist.max()))


def vertex_set(s: Iterable[int], n: int) -> frozenset[int]:
    """Validate ``s`` as a subset of ``0..n-1`` and return it as a frozenset."""
    members = [int(v) for v in s]
    out = frozenset(members)
    if len(out) != len(members):
        raise InputError("vertex set contains duplicates")
    for v in out:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} outside 0..{n - 1}")
    return out


def _check_vertices(d: DistanceMatrix, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < d.n:
            raise InputError(f"vertex {v} outside 0..{d.n - 1}")


def in_interval(d: DistanceMatrix, u: int, v: int, w: int) -> bool:
    """True iff ``v`` lies on some shortest ``u,w``-path."""
    _check_vertices(d, u, v, w)
    r = d.rows
    return r[u][w] == r[u][v] + r[v][w]


def subgraph_distance(d: DistanceMatrix, a: Iterable[int], b: Iterable[int]) -> int:
    """Minimum distance between a vertex of ``a`` and a vertex of ``b``."""
    a, b = vertex_set(a, d.n), vertex_set(b, d.n)
    if not a or not b:
        raise InputError("subgraph_distance needs two non-empty sets")
    r = d.rows
    return min(r[x][y] for x in a for y in b)


def are_parallel(d: DistanceMatrix, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every pair across ``a`` and ``b`` is at the same distance."""
    a, b = vertex_set(a, d.n), vertex_set(b, d.n)
    if not a or not b:
        raise InputError("are_parallel needs two non-empty sets")
    if a & b:
        raise InputError("are_parallel needs disjoint sets")
    r = d.rows
    values = {r[x][y] for x in a for y in b}
    return len(values) == 1


def is_maximally_distant(d: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    """True iff no neighbour of ``u`` is farther from ``v`` than ``u`` is."""
    _check_vertices(d, u, v)
    if u == v:
        raise InputError("maximal distance needs two distinct vertices")
    row = d.rows[v]
    duv = row[u]
    return all(row[w] <= duv for w in g.adjacency[u])


def mutually_maximally_distant(d: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    return is_maximally_distant(d, g, u, v) and is_maximally_distant(d, g, v, u)


def is_isometric_subset(d: DistanceMatrix, g: Graph, s: Iterable[int]) -> bool:
    """True iff distances inside the induced subgraph on ``s`` match those of ``g``.

    A disconnected induced subgraph is never isometric.
    """
    s = vertex_set(s, d.n)
    if not s:
        raise InputError("is_isometric_subset needs a non-empty set")
    r = d.rows
    for src in s:
        seen = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y in s and y not in seen:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        if len(seen) != len(s):
            return False
        if any(r[src][y] != dy for y, dy in seen.items()):
            return False
    return True


# -- edge-list text format -------------------------------------------------
#
#   # comment lines anywhere
#   n m
#   u v        (m lines, 0-based)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises :class:`ParseError` on bad input."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped.split()))
    if not lines:
        raise ParseError("missing 'n m' header line")
    lineno, header = lines[0]
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise ParseError(f"line {lineno}: expected 'n m', got {' '.join(header)!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, tokens in body:
        try:
            u, v = (int(x) for x in tokens)
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(tokens)!r}") from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
