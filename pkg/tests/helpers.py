"""Shared helpers bridging the fast representation and the oracle."""

from sgcount import oracle
from sgcount.core import Semigroup, root, son, son_candidates


def naive_of(S: Semigroup, B: int) -> oracle.NaiveSemigroup:
    """Oracle view of a fast node: explicit membership over [0, B]."""
    L = S.delta.shape[0]
    member = [bool(S.delta[n] > 0) if n < L else True for n in range(B + 1)]
    return oracle.from_membership(member)


def chain(G: int, removals) -> Semigroup:
    """Apply a sequence of generator removals starting from the root.

    Asserts that each removed element really is a candidate at its step.
    """
    S = root(G)
    for x in removals:
        assert x in son_candidates(S), f"{x} not removable from {S!r}"
        S = son(S, x, G)
    return S


def collect_walk(G: int, kernel: str = "vector"):
    from sgcount.explorer import walk

    nodes = []
    walk(G, nodes.append, kernel=kernel)
    return nodes
