"""Closed-form values of gp_k for paths, cycles and the clique-tail gadget.

All arithmetic is on integers; ``-(-a // b)`` is the ceiling of ``a / b``.
"""
from __future__ import annotations

from .errors import InputError

__all__ = ["gp_path", "gp_cycle", "gp_clique_tail", "diameter_lower_bound"]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gp_path(n: int, k: int) -> int:
    """gp_k(P_n) for ``n >= 3`` and ``2 <= k <= n - 1``."""
    if n < 3 or not 2 <= k <= n - 1:
        raise InputError(f"gp_path needs n >= 3 and 2 <= k <= n-1, got n={n}, k={k}")
    blocks = _ceil_div(n, k + 1)
    return 2 * blocks - 1 if n % (k + 1) == 1 else 2 * blocks


def gp_cycle(n: int, k: int) -> int:
    """gp_k(C_n) for ``n >= 3`` and ``k >= 2``."""
    if n < 3:
        raise InputError(f"cycles need n >= 3, got {n}")
    if k < 2:
        raise InputError(f"gp_cycle needs k >= 2, got {k}")
    if n == 3:
        return 3
    if n == 4:
        return 2
    if k >= n // 2:
        return 3
    blocks = n // (k + 1)
    return 2 * blocks + 1 if n % (k + 1) == k else 2 * blocks


def gp_clique_tail(t: int, k: int) -> int:
    if t < 3 or not 2 <= k <= t:
        raise InputError(f"gp_clique_tail needs t >= 3 and 2 <= k <= t, got t={t}, k={k}")
    if k == t:
        return 4 * t
    if k == t - 1:
        return 4 * t + 2
    return 5 * t - k + 1


def diameter_lower_bound(diam: int, k: int) -> int:
    """Lower bound on gp_k of any connected graph with the given diameter (``2 <= k <= diam``).

    It is gp_k of a diametral path, which is an isometric subgraph.
    """
    if not 2 <= k <= diam:
        raise InputError(f"diameter_lower_bound needs 2 <= k <= diam, got diam={diam}, k={k}")
    blocks = _ceil_div(diam + 1, k + 1)
    return 2 * blocks - 1 if diam % (k + 1) == 0 else 2 * blocks
