"""Parallel counting by cutting the tree at the ordinary frontier.

The ordinary semigroup of genus g is {0} union [g+1, infinity); the
ordinary nodes form a chain through the tree, and each one has exactly
one ordinary child.  Every non-ordinary semigroup lies in exactly one
subtree rooted at a non-ordinary child of an ordinary node, so those
subtrees plus the chain itself partition the whole tree.  Subtrees are
fully independent: workers share nothing and the final reduction is an
elementwise sum, making the result identical for any worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass
from typing import Iterator

from .core import Semigroup, check_genus_bound, root, son, son_candidates
from .explorer import count_from

try:
    from . import fastcount as _fastcount
except ImportError:
    _fastcount = None


def is_ordinary(S: Semigroup) -> bool:
    """True iff the gaps are exactly 1..g, i.e. the conductor is g+1."""
    return S.c == S.g + 1


@dataclass(frozen=True)
class SubtreeTask:
    """An independent unit of work: a frontier root and the global bound."""

    root: Semigroup
    bound: int


def ordinary(g: int, G: int) -> Semigroup:
    """The ordinary semigroup of genus g, built along the ordinary chain.

    Each step removes the conductor, the smallest removable generator,
    which is the unique move that keeps the node ordinary.
    """
    G = check_genus_bound(G)
    if not 0 <= g <= G:
        raise ValueError(f"ordinary genus {g} outside [0, {G}]")
    S = root(G)
    for _ in range(g):
        S = son(S, S.c, G)
    return S


def frontier_tasks(G: int) -> Iterator[SubtreeTask]:
    """Subtree tasks rooted at the non-ordinary children of ordinary nodes.

    Emitted in (genus ascending, removed element ascending) order; the
    genus-g ordinary node contributes exactly g tasks, so a bound G
    yields (G-1)G/2 of them.  Roots are materialized lazily.
    """
    G = check_genus_bound(G)
    S = root(G)
    for _ in range(1, G):
        S = son(S, S.c, G)
        for x in son_candidates(S):
            if x != S.c:
                yield SubtreeTask(root=son(S, x, G), bound=G)


def parallel_count(G: int, workers: int, kernel: str = "auto") -> list:
    """Exactly ``count(G)``, computed over the frontier by a worker pool.

    The ordinary chain contributes one node per genus; everything else
    is summed from the subtree tasks.  Idle workers pull the next task
    (subtree costs are very uneven), and a failing task aborts the whole
    run with a diagnostic.
    """
    G = check_genus_bound(G)
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    counts = [1] * (G + 1)
    if G < 2:
        return counts
    if kernel == "auto" and _fastcount is not None:
        _fastcount.warm_up()  # compile once, before the pool forks threads
    tasks = frontier_tasks(G)
    with ThreadPoolExecutor(max_workers=workers) as pool:

        def submit(task: SubtreeTask):
            return pool.submit(count_from, task.root, task.bound, kernel=kernel)

        in_flight = {submit(t) for t in itertools.islice(tasks, 2 * workers)}
        while in_flight:
            done, in_flight = wait(in_flight, return_when=FIRST_COMPLETED)
            for fut in done:
                try:
                    part = fut.result()
                except Exception as exc:
                    for pending in in_flight:
                        pending.cancel()
                    raise RuntimeError(f"subtree worker failed: {exc}") from exc
                counts = [a + b for a, b in zip(counts, part)]
            in_flight.update(submit(t) for t in itertools.islice(tasks, len(done)))
    return counts
