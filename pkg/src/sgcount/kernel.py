"""Byte-lane decrement kernels, the inner loop of child construction.

Both kernels implement the same contract over the first ``n`` lanes of
two disjoint uint8 views:

    dst[i] -= 1   wherever src[i] != 0,   for 0 <= i < n

The scalar kernel is the plain reference loop.  The vector kernel does
the same work lane-parallel the way byte SIMD units do: compare each
source lane to zero, turn the mask into a 0/1 step, subtract the step.
numpy provides that path portably (views may start at any offset), so
there is no platform without vector support to fall back from; the
scalar kernel remains the semantic reference and the tail/debug tool.
"""

from __future__ import annotations

import numpy as np


def _check_contract(src: np.ndarray, dst: np.ndarray, n: int) -> None:
    assert n >= 0, "lane count must be non-negative"
    assert src.shape[0] >= n and dst.shape[0] >= n, "views shorter than lane count"
    if n:
        assert not np.shares_memory(src[:n], dst[:n]), "src and dst views overlap"
        assert not np.any((src[:n] != 0) & (dst[:n] == 0)), (
            "a guarded lane would wrap below zero"
        )


def decrement_where_nonzero_scalar(src: np.ndarray, dst: np.ndarray, n: int) -> None:
    """Reference kernel: one lane at a time."""
    if __debug__:
        _check_contract(src, dst, n)
    for i in range(n):
        if src[i]:
            dst[i] -= 1


def decrement_where_nonzero_vector(src: np.ndarray, dst: np.ndarray, n: int) -> None:
    """Lane-parallel kernel; bit-identical results to the scalar one."""
    if __debug__:
        _check_contract(src, dst, n)
    step = (src[:n] != 0).view(np.uint8)  # 0/1 per lane
    np.subtract(dst[:n], step, out=dst[:n])


_KERNELS = {
    "scalar": decrement_where_nonzero_scalar,
    "vector": decrement_where_nonzero_vector,
    "auto": decrement_where_nonzero_vector,
}


def get_kernel(name: str):
    """Map a kernel choice (scalar|vector|auto) to its implementation."""
    try:
        return _KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown kernel {name!r}; choose from {sorted(_KERNELS)}") from None
