"""Deterministic graph families, including the gadgets for the gp_k chain.

Vertex numbering is part of each constructor's contract; see the
docstrings. Every family is also reachable by name through
:func:`generate`, which is what the CLI uses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from .errors import InputError, ResourceLimitError
from .graph import Graph, build_graph

__all__ = [
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "cartesian_grid",
    "star_gadget",
    "broom_tree",
    "chained_gadget",
    "clique_tail",
    "clique_tail_labels",
    "clique_reduction",
    "random_connected",
    "GadgetSpec",
    "FAMILIES",
    "generate",
]


def _at_least(name: str, value: int, minimum: int) -> int:
    value = int(value)
    if value < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {value}")
    return value


def path(n: int) -> Graph:
    n = _at_least("n", n, 1)
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    n = _at_least("n", n, 3)
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    n = _at_least("n", n, 1)
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Sides ``0..m-1`` and ``m..m+n-1``."""
    m = _at_least("m", m, 1)
    n = _at_least("n", n, 1)
    return build_graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def cartesian_grid(r: int, s: int) -> Graph:
    """P_r x P_s with cell ``(i, j)`` at index ``i*s + j``."""
    r = _at_least("r", r, 1)
    s = _at_least("s", s, 1)
    edges = []
    for i in range(r):
        for j in range(s):
            v = i * s + j
            if j + 1 < s:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + s))
    return build_graph(r * s, edges)


def star_gadget(n: int) -> Graph:
    """Star on ``2n`` leaves plus two hubs, each hub tied to half the leaves.

    Numbering: centre ``x = 0``; ``u_i = i`` and ``v_i = n + i`` for
    ``i = 1..n``; hubs ``u = 2n + 1`` and ``v = 2n + 2``.
    """
    n = _at_least("n", n, 2)
    u, v = 2 * n + 1, 2 * n + 2
    edges = [(0, i) for i in range(1, 2 * n + 1)]
    edges += [(u, i) for i in range(1, n + 1)]
    edges += [(v, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n + 3, edges)


def broom_tree(r: int) -> Graph:
    """Path ``0..r`` with two pendant leaves on every internal vertex.

    The leaves of internal vertex ``i`` (``1 <= i <= r-1``) are
    ``r + 2i - 1`` and ``r + 2i``.
    """
    r = _at_least("r", r, 2)
    edges = [(i, i + 1) for i in range(r)]
    for i in range(1, r):
        edges += [(i, r + 2 * i - 1), (i, r + 2 * i)]
    return build_graph(3 * r - 1, edges)


def chained_gadget(k: int, ell: int) -> Graph:
    """Chain of ``k`` blocks ``{u_j, w_j, x_j1..x_jl}`` closed by one extra ``x``.

    Block ``j`` (1-based) starts at ``b = (j-1)(ell+2)`` with ``u_j = b``,
    ``w_j = b+1`` and ``x_{j,i} = b+1+i``. The closing vertex
    ``x_{k+1,1}`` is ``k(ell+2)``. Both ``u_j`` and ``w_j`` see every
    ``x_{j,i}`` and the first ``x`` of the next block.
    """
    k = _at_least("k", k, 4)
    ell = _at_least("l", ell, 4)
    size = ell + 2
    edges = []
    for j in range(k):
        base = j * size
        nxt = (j + 1) * size + 2 if j + 1 < k else k * size
        for hub in (base, base + 1):
            edges += [(hub, base + 2 + i) for i in range(ell)]
            edges.append((hub, nxt))
    return build_graph(k * size + 1, edges)


def clique_tail_labels(t: int) -> dict[str, object]:
    """Index layout of :func:`clique_tail`.

    ``A = 0..2t-1``, ``B = 2t..4t-1``, ``v_i = 4t + i - 1`` for
    ``i = 1..t-1`` and ``u_i = 5t + i - 3`` for ``i = 2..t-1``.
    """
    t = _at_least("t", t, 3)
    return {
        "A": tuple(range(2 * t)),
        "B": tuple(range(2 * t, 4 * t)),
        "v": {i: 4 * t + i - 1 for i in range(1, t)},
        "u": {i: 5 * t + i - 3 for i in range(2, t)},
    }


def clique_tail(t: int) -> Graph:
    """K_{4t} on ``A | B`` with a tail ``v_1..v_{t-1}`` hanging off ``B``.

    Each pendant ``u_i`` is adjacent to ``v_i`` and ``v_{i-1}``. Order
    ``6t - 3``, diameter ``t``.
    """
    lab = clique_tail_labels(t)
    v, u = lab["v"], lab["u"]
    edges = list(combinations(range(4 * t), 2))
    edges += [(b, v[1]) for b in lab["B"]]
    edges += [(v[i], v[i + 1]) for i in range(1, t - 1)]
    for i in range(2, t):
        edges += [(u[i], v[i]), (u[i], v[i - 1])]
    return build_graph(6 * t - 3, edges)


def clique_reduction(g: Graph) -> Graph:
    """Join ``g`` to ``A | B | {v_1}`` of the clique-tail gadget of order ``t = |g|``.

    The gadget keeps its own numbering ``0..6t-4``; vertex ``i`` of ``g``
    becomes ``6t - 3 + i``.
    """
    t = g.n
    if t < 3:
        raise InputError(f"payload graph needs at least 3 vertices, got {t}")
    if not g.is_connected():
        raise InputError("payload graph must be connected")
    lab = clique_tail_labels(t)
    base = clique_tail(t)
    off = 6 * t - 3
    hubs = list(lab["A"]) + list(lab["B"]) + [lab["v"][1]]
    edges = list(base.edges())
    edges += [(off + a, off + b) for a, b in g.edges()]
    edges += [(h, off + x) for h in hubs for x in range(t)]
    return build_graph(off + t, edges)


def random_connected(n: int, p: float, seed: int | None = 0, max_attempts: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by resampling; deterministic per seed."""
    n = _at_least("n", n, 1)
    p = float(p)
    if not 0 < p <= 1:
        raise InputError(f"edge probability must lie in (0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    for _ in range(max_attempts):
        keep = rng.random(iu.size) < p
        g = build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))
        if g.is_connected():
            return g
    raise ResourceLimitError(f"no connected G({n}, {p}) sample within {max_attempts} attempts")


# -- named access ------------------------------------------------------------


@dataclass(frozen=True)
class GadgetSpec:
    family: str
    params: dict[str, float] = field(default_factory=dict)
    payload: Graph | None = None

    def label(self) -> str:
        inner = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family} {inner}".strip()


def _random(params):
    return random_connected(int(params["n"]), params.get("p", 0.5), int(params.get("seed", 0)))


FAMILIES: dict[str, tuple[tuple[str, ...], Callable]] = {
    "path": (("n",), lambda p: path(p["n"])),
    "cycle": (("n",), lambda p: cycle(p["n"])),
    "complete": (("n",), lambda p: complete(p["n"])),
    "complete_bipartite": (("m", "n"), lambda p: complete_bipartite(p["m"], p["n"])),
    "cartesian_grid": (("r", "s"), lambda p: cartesian_grid(p["r"], p["s"])),
    "star_gadget": (("n",), lambda p: star_gadget(p["n"])),
    "broom_tree": (("r",), lambda p: broom_tree(p["r"])),
    "chained_gadget": (("k", "l"), lambda p: chained_gadget(p["k"], p["l"])),
    "clique_tail": (("t",), lambda p: clique_tail(p["t"])),
    "random_connected": (("n",), _random),
    "clique_reduction": ((), None),
}


def generate(spec: GadgetSpec) -> Graph:
    """Build the graph described by ``spec``; raises :class:`InputError` on a bad spec."""
    if spec.family not in FAMILIES:
        raise InputError(f"unknown family {spec.family!r}; choose from {sorted(FAMILIES)}")
    if spec.family == "clique_reduction":
        if spec.payload is None:
            raise InputError("clique_reduction needs a payload graph")
        return clique_reduction(spec.payload)
    required, build = FAMILIES[spec.family]
    missing = [name for name in required if name not in spec.params]
    if missing:
        raise InputError(f"family {spec.family!r} is missing parameter(s): {', '.join(missing)}")
    params = {k: (v if k == "p" else int(v)) for k, v in spec.params.items()}
    return build(params)
