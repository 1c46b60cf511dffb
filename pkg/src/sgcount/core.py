"""Decomposition-number representation of a numerical semigroup.

A semigroup explored up to genus G is held as the vector of its
decomposition numbers d(0..3G), where d(x) counts the ways to write
x = y + z with y, z in the semigroup and y <= z.  Conductor, genus,
multiplicity and the minimal generating set are all readable from that
vector, and the vector of a child (the semigroup minus one generator)
is a single guarded decrement pass over the parent's.

Each entry fits one byte: d(x) <= 1 + x//2, so with G <= 169 the
largest possible entry is 1 + (3*169)//2 = 254.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .kernel import decrement_where_nonzero_vector

# Largest supported genus bound: entries of an exploration table must fit
# an 8-bit lane, and the worst case 1 + (3G)//2 reaches 255 at G = 170.
MAX_GENUS_BOUND = 169

# 1-D contiguous uint8 array of length 3G+1; entry x holds d(x).
DecompTable = np.ndarray

Kernel = Callable[[np.ndarray, np.ndarray, int], None]


class GenusBoundError(ValueError):
    """Genus bound outside the supported [0, MAX_GENUS_BOUND] range."""


def check_genus_bound(G: int) -> int:
    if not 0 <= int(G) <= MAX_GENUS_BOUND:
        raise GenusBoundError(
            f"genus bound must be in [0, {MAX_GENUS_BOUND}], got {G}"
        )
    return int(G)


def table_length(G: int) -> int:
    return 3 * G + 1


@dataclass(frozen=True, eq=False)
class Semigroup:
    """One node of the semigroup tree: cached conductor, genus,
    multiplicity, and the decomposition table.

    Immutable after construction; the table is a read-only array.  The
    root caches c = 1 (not the conventional 0 of the naturals) so that
    the child-candidate window [c, c + m) starts at 1 and never treats
    0 as removable.
    """

    c: int
    g: int
    m: int
    delta: DecompTable

    def __repr__(self) -> str:
        return f"Semigroup(c={self.c}, g={self.g}, m={self.m})"


def _freeze(delta: np.ndarray) -> np.ndarray:
    delta.setflags(write=False)
    return delta


def root(G: int) -> Semigroup:
    """The representation of the naturals, ready for exploration up to G.

    d(x) = 1 + x//2 for every x: each y <= x/2 is an admissible smaller
    half of a decomposition of x.
    """
    G = check_genus_bound(G)
    x = np.arange(table_length(G), dtype=np.int64)
    delta = (1 + x // 2).astype(np.uint8)
    return Semigroup(c=1, g=0, m=1, delta=_freeze(delta))


def son(S: Semigroup, x: int, G: int, kernel: Kernel | None = None) -> Semigroup:
    """The child of S obtained by removing the generator x.

    Requires S.g < G, x in [S.c, S.c + S.m) and S.delta[x] == 1 (x is a
    removable generator).  Violations are programming errors, checked
    when assertions are enabled; the parent is never modified either way.

    The child's table is a fresh copy of the parent's, with entry y
    decremented for every y >= x whose shifted parent entry d(y - x) is
    nonzero: removing x kills exactly one decomposition of each such y.
    """
    if __debug__:
        assert S.g < G, f"cannot expand a node at the genus bound ({S.g} >= {G})"
        assert S.c <= x < S.c + S.m, f"x={x} outside candidate window [{S.c}, {S.c + S.m})"
        assert S.delta[x] == 1, f"x={x} is not a removable generator (d={S.delta[x]})"
    decrement = kernel if kernel is not None else decrement_where_nonzero_vector
    child = np.array(S.delta)
    n = child.shape[0] - x
    decrement(S.delta[:n], child[x:], n)
    return Semigroup(
        c=x + 1,
        g=S.g + 1,
        m=S.m if x > S.m else S.m + 1,
        delta=_freeze(child),
    )


def son_candidates(S: Semigroup) -> list[int]:
    """Generators removable from S, in increasing order.

    These are the x in the window [c, c + m) with d(x) == 1; removing
    any other element does not leave a numerical semigroup, and no
    element at or beyond c + m is ever a generator.
    """
    window = S.delta[S.c : S.c + S.m]
    return [int(i) + S.c for i in np.nonzero(window == 1)[0]]


def derive_conductor(delta: DecompTable) -> int:
    """1 + the largest x with d(x) == 0; 0 when there is no gap at all.

    The zero entries of the table are exactly the gaps, so this is the
    conductor (with the convention that the naturals have conductor 0).
    """
    zeros = np.nonzero(delta == 0)[0]
    return int(zeros[-1]) + 1 if zeros.size else 0


def derive_genus(delta: DecompTable) -> int:
    """Number of zero entries, i.e. the number of gaps."""
    return int(np.count_nonzero(delta == 0))


def derive_multiplicity(delta: DecompTable) -> int:
    """Smallest x >= 1 with d(x) > 0, i.e. the smallest nonzero element."""
    nz = np.nonzero(delta[1:])[0]
    if nz.size == 0:
        raise ValueError("table has no nonzero entry past index 0")
    return int(nz[0]) + 1


def derive_irreducibles(delta: DecompTable) -> set[int]:
    """All x >= 1 with d(x) == 1: the minimal generating set.

    Index 0 is excluded; d(0) == 1 always, yet 0 is never a generator.
    """
    ones = np.nonzero(delta[1:] == 1)[0]
    return {int(i) + 1 for i in ones}


def gap_set(S: Semigroup) -> frozenset[int]:
    """The gaps of S (all below the conductor, hence inside the table)."""
    return frozenset(int(i) for i in np.nonzero(S.delta == 0)[0])


def contains(S: Semigroup, n: int) -> bool:
    """Membership test: d(n) > 0 within the table, true beyond it.

    Every n past the table bound 3G exceeds 2G >= c(S), so it belongs.
    """
    if n < 0:
        raise ValueError("membership is defined for non-negative integers")
    if n >= S.delta.shape[0]:
        return True
    return bool(S.delta[n] > 0)


def validate(S: Semigroup) -> list[str]:
    """Cross-check the cached fields and structural bounds; [] when consistent.

    Each violation is a human-readable string naming the failed check.
    """
    out: list[str] = []
    d = S.delta
    L = d.shape[0]
    if L == 0 or d[0] != 1:
        out.append(f"d[0] must be 1, found {d[0] if L else 'missing'}")
    x = np.arange(L, dtype=np.int64)
    bad = np.nonzero(d.astype(np.int64) > 1 + x // 2)[0]
    if bad.size:
        b = int(bad[0])
        out.append(f"d[{b}]={int(d[b])} exceeds the 1+x//2 bound")
    dc = derive_conductor(d)
    if S.g == 0:
        if not (S.c == 1 and dc == 0):
            out.append(f"root conductor pair must be (cached=1, derived=0), got ({S.c}, {dc})")
    elif dc != S.c:
        out.append(f"cached conductor {S.c} != derived {dc}")
    dg = derive_genus(d)
    if dg != S.g:
        out.append(f"cached genus {S.g} != derived {dg}")
    if L > 1:
        try:
            dm = derive_multiplicity(d)
        except ValueError:
            out.append("multiplicity underivable: no nonzero entry past index 0")
        else:
            if dm != S.m:
                out.append(f"cached multiplicity {S.m} != derived {dm}")
    if S.g >= 1 and S.c > 2 * S.g:
        out.append(f"conductor {S.c} exceeds twice the genus {S.g}")
    if S.m > S.g + 1:
        out.append(f"multiplicity {S.m} exceeds genus+1 ({S.g + 1})")
    return out
