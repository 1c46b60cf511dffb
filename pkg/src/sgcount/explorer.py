"""Depth-first exploration of the semigroup tree up to a genus bound.

The tree is rooted at the naturals; the children of a node are the
semigroups obtained by removing one removable generator.  A node of
genus g sits at depth g, so cutting at genus G makes the tree finite.

The traversal uses an explicit stack (children pushed in increasing
removed-element order), never recursion.  ``count`` is the tallying
entry point; with kernel choice "auto" it delegates to the jitted fused
loop, otherwise it shares the visitor-driven core with ``walk``.
"""

from __future__ import annotations

from typing import Callable

from .core import Semigroup, check_genus_bound, root, son, son_candidates
from .kernel import get_kernel

try:
    from . import fastcount as _fastcount
except ImportError:  # pure-Python fallback only
    _fastcount = None

# Receives every visited node exactly once, read-only.
Visitor = Callable[[Semigroup], None]

# counts[g] = number of semigroups of genus g; exact Python integers.
GenusCounts = list


def resolve_kernel(name: str) -> str:
    """The traversal actually used for a kernel choice ("fast" when jitted)."""
    if name == "auto":
        return "fast" if _fastcount is not None else "vector"
    get_kernel(name)
    return name


def _traverse(start, G, visit, kernel_fn, expand_hook=None):
    stack = [start]
    while stack:
        S = stack.pop()
        visit(S)
        if S.g < G:
            children = [son(S, x, G, kernel=kernel_fn) for x in son_candidates(S)]
            stack.extend(children)
            if expand_hook is not None:
                expand_hook(S, children, stack)


def walk(G: int, visitor: Visitor, kernel: str = "vector") -> None:
    """Invoke ``visitor`` once per semigroup of genus <= G, depth-first.

    Children are generated in increasing removed-element order; beyond
    that the visit order is unspecified.  A visitor exception aborts the
    walk and propagates.
    """
    G = check_genus_bound(G)
    _traverse(root(G), G, visitor, get_kernel(kernel))


def count(G: int, kernel: str = "auto") -> GenusCounts:
    """Exact number of numerical semigroups of each genus g <= G."""
    G = check_genus_bound(G)
    return count_from(root(G), G, kernel=kernel)


def count_from(start: Semigroup, G: int, kernel: str = "auto") -> GenusCounts:
    """Per-genus counts restricted to the subtree rooted at ``start``."""
    G = check_genus_bound(G)
    if start.g > G:
        raise ValueError(f"subtree root genus {start.g} exceeds the bound {G}")
    if kernel == "auto" and _fastcount is not None:
        return _fastcount.count_subtree(start, G)
    counts = [0] * (G + 1)

    def tally(S: Semigroup) -> None:
        counts[S.g] += 1

    _traverse(start, G, tally, get_kernel(kernel))
    return counts
