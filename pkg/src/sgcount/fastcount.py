"""Jitted counting path: the whole pop/expand loop fused in one function.

Used by the explorer when counting with kernel choice "auto".  It must
agree lane-for-lane with the reference traversal built from
:func:`sgcount.core.son`; the test suite pins that equivalence against
both the reference path and the brute-force oracle.

The function releases the GIL, so subtree tasks dispatched to a thread
pool genuinely run in parallel.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .core import Semigroup


@njit(cache=True, nogil=True)
def _count_subtree(delta, c, g, m, G, counts):  # pragma: no cover - jitted
    L = 3 * G + 1
    cap = G * (G + 1) // 2 + 2  # proven stack ceiling for the whole tree
    tables = np.empty((cap, L), np.uint8)
    cs = np.empty(cap, np.int64)
    gs = np.empty(cap, np.int64)
    ms = np.empty(cap, np.int64)
    tables[0, :] = delta
    cs[0] = c
    gs[0] = g
    ms[0] = m
    top = 1
    parent = np.empty(L, np.uint8)
    while top > 0:
        top -= 1
        pc = cs[top]
        pg = gs[top]
        pm = ms[top]
        counts[pg] += 1
        if pg >= G:
            continue
        if pg == G - 1:
            # children would all be leaves: count removable generators only
            row = tables[top]
            k = 0
            for x in range(pc, pc + pm):
                if row[x] == 1:
                    k += 1
            counts[G] += k
            continue
        parent[:] = tables[top]  # the popped slot is reused for children
        for x in range(pc, pc + pm):
            if parent[x] == 1:
                row = tables[top]
                for y in range(x):
                    row[y] = parent[y]
                for y in range(x, L):
                    row[y] = parent[y] - (1 if parent[y - x] != 0 else 0)
                cs[top] = x + 1
                gs[top] = pg + 1
                ms[top] = pm if x > pm else pm + 1
                top += 1


_COUNTER_CEILING = 1 << 62


def count_subtree(start: Semigroup, G: int) -> list[int]:
    """Per-genus counts over the subtree rooted at ``start``."""
    counts = np.zeros(G + 1, np.int64)
    _count_subtree(start.delta, start.c, start.g, start.m, G, counts)
    if int(counts.max(initial=0)) >= _COUNTER_CEILING:
        raise OverflowError("a per-genus counter approached the 64-bit limit")
    return [int(v) for v in counts]


def warm_up() -> None:
    """Force compilation before timing or threading starts."""
    from .core import root

    count_subtree(root(0), 0)
