"""Bitset branch-and-bound for maximum sets avoiding forbidden pairs and triples.

Every exact invariant in the package is a maximum vertex set avoiding a
family of forbidden pairs (independence, clique) and/or forbidden triples
(general d-position, dissociation). Sets are Python ints used as bitmasks.

Branching always takes the lowest-index candidate and tries "include"
before "exclude", so leaves are visited in lexicographic order of their
sorted member tuples; replacing the incumbent only on strict improvement
therefore yields the lexicographically smallest maximum set.
"""
from __future__ import annotations

import multiprocessing as mp
import sys
import time
from dataclasses import dataclass

from .errors import TimeLimitExceeded

_CHECK_EVERY = 1024


@dataclass
class SearchResult:
    members: tuple[int, ...]
    nodes: int


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class _Search:
    def __init__(self, n, pair_block, triple_block, floor, deadline, shared=None):
        self.n = n
        self.pair_block = pair_block
        self.triple_block = triple_block
        # sets smaller than ``floor`` are never reported; ties at ``floor`` are kept
        self.best_size = floor - 1
        self.best: tuple[int, ...] | None = None
        self.nodes = 0
        self.deadline = deadline
        self.shared = shared

    def _tick(self):
        self.nodes += 1
        if self.nodes % _CHECK_EVERY == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise TimeLimitExceeded("time limit exceeded during branch and bound")
            if self.shared is not None:
                # other workers' incumbents only prune strictly worse branches,
                # so ties survive and the reduction stays schedule-independent
                other = self.shared.value - 1
                if other > self.best_size:
                    self.best_size = other
                    self.best = None

    def run(self, chosen: list[int], cand: int) -> None:
        self._tick()
        size = len(chosen)
        if cand == 0:
            if size > self.best_size:
                self.best_size = size
                self.best = tuple(chosen)
                if self.shared is not None:
                    with self.shared.get_lock():
                        if size > self.shared.value:
                            self.shared.value = size
            return
        if size + cand.bit_count() <= self.best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        inc = rest & ~self.pair_block[v]
        if self.triple_block is not None:
            row = self.triple_block[v]
            for a in chosen:
                inc &= ~row[a]
        chosen.append(v)
        self.run(chosen, inc)
        chosen.pop()
        self.run(chosen, rest)


_WORKER_STATE: dict = {}


def _init_worker(n, pair_block, triple_block, floor, deadline, shared):
    _WORKER_STATE.update(
        n=n, pair_block=pair_block, triple_block=triple_block, floor=floor, deadline=deadline, shared=shared
    )


def _solve_rooted(root: int):
    st = _WORKER_STATE
    search = _Search(st["n"], st["pair_block"], st["triple_block"], st["floor"], st["deadline"], st["shared"])
    full = (1 << st["n"]) - 1
    cand = full & ~((1 << (root + 1)) - 1) & ~st["pair_block"][root]
    search.run([root], cand)
    return search.best, search.nodes


def maximum_set(
    n: int,
    pair_block: list[int],
    triple_block: list[list[int]] | None = None,
    *,
    floor: int = 0,
    time_limit_ms: int | None = None,
    workers: int = 1,
) -> SearchResult:
    """Lexicographically smallest maximum set avoiding all forbidden pairs and triples.

    ``pair_block[v]`` masks the vertices that may not join ``v``;
    ``triple_block[a][b]`` masks the ``c`` for which ``{a, b, c}`` is
    forbidden. ``floor`` is a known achievable size used for pruning; the
    caller guarantees a set of that size exists.
    """
    deadline = None if time_limit_ms is None else time.monotonic() + time_limit_ms / 1000
    if n == 0:
        return SearchResult((), 0)
    limit = sys.getrecursionlimit()
    if limit < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    if workers <= 1:
        search = _Search(n, pair_block, triple_block, floor, deadline)
        search.run([], (1 << n) - 1)
        return SearchResult(search.best or (), search.nodes)

    # one task per smallest member; tasks partition the search space
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    shared = ctx.Value("i", floor)
    with ctx.Pool(
        processes=workers,
        initializer=_init_worker,
        initargs=(n, pair_block, triple_block, floor, deadline, shared),
    ) as pool:
        results = pool.map(_solve_rooted, range(n), chunksize=1)
    best: tuple[int, ...] | None = None
    nodes = 0
    for found, count in results:
        nodes += count
        if found is not None and (best is None or len(found) > len(best)):
            best = found
    return SearchResult(best or (), nodes)
