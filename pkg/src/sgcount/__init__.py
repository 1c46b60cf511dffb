"""Exact counting and enumeration of numerical semigroups by genus."""

from .core import (
    GenusBoundError,
    MAX_GENUS_BOUND,
    Semigroup,
    contains,
    derive_conductor,
    derive_genus,
    derive_irreducibles,
    derive_multiplicity,
    gap_set,
    root,
    son,
    son_candidates,
    validate,
)
from .explorer import count, count_from, walk
from .parallel import SubtreeTask, frontier_tasks, ordinary, parallel_count

__all__ = [
    "GenusBoundError",
    "MAX_GENUS_BOUND",
    "Semigroup",
    "SubtreeTask",
    "contains",
    "count",
    "count_from",
    "derive_conductor",
    "derive_genus",
    "derive_irreducibles",
    "derive_multiplicity",
    "frontier_tasks",
    "gap_set",
    "ordinary",
    "parallel_count",
    "root",
    "son",
    "son_candidates",
    "validate",
    "walk",
]
