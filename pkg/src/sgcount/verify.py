"""Cross-validation suites: the incremental engine against the oracle.

Everything here is desk-scale (the genus bound is capped) and exact; a
suite either passes or reports the first discrepancy it found.  The
optional ``tamper`` hook lets tests corrupt the starting node and watch
the suites catch it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import oracle
from .core import (
    Semigroup,
    gap_set,
    root,
    son_candidates,
    table_length,
    validate,
)
from .explorer import _traverse, count
from .kernel import get_kernel

MAX_VERIFY_GENUS = 14


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    detail: str = ""


def _collect(G: int, tamper: Callable[[Semigroup], Semigroup] | None):
    start = root(G)
    if tamper is not None:
        start = tamper(start)
    nodes: list[Semigroup] = []
    _traverse(start, G, nodes.append, get_kernel("vector"))
    return nodes


def _naive_of(S: Semigroup, B: int) -> oracle.NaiveSemigroup:
    L = S.delta.shape[0]
    member = [(S.delta[n] > 0) if n < L else True for n in range(B + 1)]
    return oracle.from_membership(member)


def run_suites(
    G: int, tamper: Callable[[Semigroup], Semigroup] | None = None
) -> list[SuiteResult]:
    """Run all verification suites at genus bound G (capped at 14)."""
    if not 0 <= G <= MAX_VERIFY_GENUS:
        raise ValueError(f"verification bound must be in [0, {MAX_VERIFY_GENUS}]")
    try:
        nodes = _collect(G, tamper)
    except Exception as exc:
        return [SuiteResult("traversal", False, f"walk aborted: {exc}")]
    reference = oracle.naive_enumerate(G)
    results = [
        _suite_counts(G, nodes, reference, tamper),
        _suite_gap_sets(nodes, reference),
        _suite_node_invariants(G, nodes),
        _suite_tables(G, nodes),
    ]
    return results


def _suite_counts(G, nodes, reference, tamper) -> SuiteResult:
    name = "per-genus counts"
    walked = [0] * (G + 1)
    for S in nodes:
        if not 0 <= S.g <= G:
            return SuiteResult(name, False, f"walked node with genus {S.g} outside [0, {G}]")
        walked[S.g] += 1
    expected = [len(reference[g]) for g in range(G + 1)]
    if walked != expected:
        return SuiteResult(name, False, f"walk tally {walked} != oracle {expected}")
    if tamper is None:
        fast = count(G)
        if fast != expected:
            return SuiteResult(name, False, f"count() {fast} != oracle {expected}")
    return SuiteResult(name, True)


def _suite_gap_sets(nodes, reference) -> SuiteResult:
    name = "gap-set enumeration"
    walked = Counter(gap_set(S) for S in nodes)
    expected = Counter(gs for sets in reference.values() for gs in sets)
    if walked != expected:
        missing = next(iter(expected - walked), None)
        extra = next(iter(walked - expected), None)
        return SuiteResult(
            name, False, f"gap-set multisets differ (missing={missing}, extra={extra})"
        )
    return SuiteResult(name, True)


def _suite_node_invariants(G, nodes) -> SuiteResult:
    name = "node invariants"
    B = 4 * G + 1
    for S in nodes:
        violations = validate(S)
        if violations:
            return SuiteResult(name, False, f"{S!r}: {violations[0]}")
        if len(son_candidates(S)) > S.m:
            return SuiteResult(name, False, f"{S!r}: more candidates than multiplicity")
        if S.g >= 1:
            gaps = gap_set(S)
            for s in range(S.c):
                if S.delta[s] > 0 and (S.c - 1 - s) not in gaps:
                    return SuiteResult(
                        name, False, f"{S!r}: gap symmetry fails at element {s}"
                    )
        naive = _naive_of(S, B)
        if len(oracle.apery_set(naive)) != S.m:
            return SuiteResult(name, False, f"{S!r}: Apery set size != multiplicity")
    return SuiteResult(name, True)


def _suite_tables(G, nodes) -> SuiteResult:
    name = "tables vs oracle"
    B = 4 * G + 1
    L = table_length(G)
    for S in nodes:
        naive = _naive_of(S, B)
        expected = oracle.decomp_table(naive, L)
        got = [int(v) for v in S.delta]
        if got != expected:
            x = next(i for i, (a, b) in enumerate(zip(got, expected)) if a != b)
            return SuiteResult(
                name, False, f"{S!r}: d({x}) = {got[x]}, oracle says {expected[x]}"
            )
    return SuiteResult(name, True)
