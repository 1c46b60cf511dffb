"""Brute-force reference implementation of every semigroup notion.

A numerical semigroup is a subset of the non-negative integers that
contains 0, is closed under addition and has finite complement.  This
module represents one as an explicit membership bitmap over [0, B] and
computes everything (decomposition numbers, irreducibles, Apery sets,
the tree of all semigroups up to a genus) by direct, unoptimized scans.

It exists to validate the incremental engine in :mod:`sgcount.core` and
:mod:`sgcount.explorer`; nothing here is on a hot path, and nothing here
shares code with the fast representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


class NotNumericalSemigroupError(ValueError):
    """The given generators do not generate a numerical semigroup."""


@dataclass(frozen=True)
class NaiveSemigroup:
    """Membership bitmap over [0, B] plus cached conductor and genus.

    ``member[n]`` is True iff n belongs to the semigroup, for n <= B.
    Every integer >= c belongs, so membership beyond B is implied.
    """

    member: tuple[bool, ...]
    c: int
    g: int

    @property
    def bound(self) -> int:
        return len(self.member) - 1

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n <= self.bound:
            return self.member[n]
        return n >= self.c


def from_membership(member: Iterable[bool]) -> NaiveSemigroup:
    """Build a NaiveSemigroup from an explicit bitmap, rescanning c and g."""
    bits = tuple(bool(b) for b in member)
    gaps = [n for n, ok in enumerate(bits) if not ok]
    c = gaps[-1] + 1 if gaps else 0
    return NaiveSemigroup(member=bits, c=c, g=len(gaps))


def closure(generators: Iterable[int], B: int) -> NaiveSemigroup:
    """Smallest addition-closed subset of [0, B] containing 0 and the generators.

    The generators must be positive with overall gcd 1, otherwise the
    complement in the naturals is infinite and no numerical semigroup exists.
    """
    gens = sorted(set(int(x) for x in generators))
    if not gens or gens[0] < 1:
        raise NotNumericalSemigroupError("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NotNumericalSemigroupError(f"generators {gens} have gcd {g} != 1")
    member = [False] * (B + 1)
    member[0] = True
    for n in range(1, B + 1):
        member[n] = any(g <= n and member[n - g] for g in gens)
    return from_membership(member)


def multiplicity(S: NaiveSemigroup) -> int:
    """Smallest nonzero element."""
    for n in range(1, S.bound + 1):
        if S.member[n]:
            return n
    raise ValueError("no nonzero element within the bitmap bound")


def gap_set(S: NaiveSemigroup) -> frozenset[int]:
    """The gaps: non-negative integers outside the semigroup (all are < c)."""
    return frozenset(n for n in range(S.bound + 1) if not S.member[n])


def naive_decomp(S: NaiveSemigroup, x: int) -> int:
    """Number of ways to write x = y + z with y, z in S and y <= z.

    Counted as the number of admissible smaller halves y: y in S,
    x - y in S and 2y <= x.
    """
    if x < 0 or x > S.bound:
        raise ValueError(f"x={x} outside the bitmap bound {S.bound}")
    return sum(
        1 for y in range(0, x // 2 + 1) if S.member[y] and S.member[x - y]
    )


def decomp_table(S: NaiveSemigroup, length: int) -> list[int]:
    """Decomposition numbers of 0 .. length-1, computed entry by entry."""
    return [naive_decomp(S, x) for x in range(length)]


def naive_irreducibles(S: NaiveSemigroup) -> set[int]:
    """Nonzero elements not expressible as a sum of two nonzero elements.

    These form the minimal generating set of the semigroup.
    """
    out = set()
    for x in range(1, S.bound + 1):
        if not S.member[x]:
            continue
        reducible = any(
            S.member[y] and S.member[x - y] for y in range(1, (x + 1) // 2 + 1)
            if x - y >= 1
        )
        if not reducible:
            out.add(x)
    return out


def apery_set(S: NaiveSemigroup) -> set[int]:
    """Elements x with x - m(S) no longer in the semigroup.

    Has exactly m(S) elements: the least element of each residue class
    modulo the multiplicity.
    """
    m = multiplicity(S)
    return {x for x in range(S.bound + 1) if S.member[x] and not S.contains(x - m)}


def _remove(S: NaiveSemigroup, x: int) -> NaiveSemigroup:
    member = list(S.member)
    member[x] = False
    return from_membership(member)


def is_addition_closed(member: Iterable[bool]) -> bool:
    """Direct pair scan for closure under addition within the bitmap."""
    bits = tuple(bool(b) for b in member)
    top = len(bits) - 1
    for a in range(1, top + 1):
        if not bits[a]:
            continue
        for b in range(a, top - a + 1):
            if bits[b] and not bits[a + b]:
                return False
    return True


MAX_ENUMERATION_GENUS = 14


def naive_enumerate(G: int) -> dict[int, list[frozenset[int]]]:
    """All numerical semigroups of genus <= G, as gap sets keyed by genus.

    Recursively removes every irreducible element >= c from each node,
    starting from the naturals.  Exponential; G is capped at
    MAX_ENUMERATION_GENUS.
    """
    if not 0 <= G <= MAX_ENUMERATION_GENUS:
        raise ValueError(f"enumeration bound must be in [0, {MAX_ENUMERATION_GENUS}]")
    B = 4 * G + 1
    out: dict[int, list[frozenset[int]]] = {g: [] for g in range(G + 1)}
    stack = [closure({1}, B)]
    while stack:
        S = stack.pop()
        out[S.g].append(gap_set(S))
        if S.g < G:
            for x in sorted(naive_irreducibles(S)):
                if x >= S.c:
                    stack.append(_remove(S, x))
    return out
