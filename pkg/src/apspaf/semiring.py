"""Dense (min,+), (max,min) and Boolean matrix products with witnesses.

Every product returns the value matrix and a witness matrix holding, per
cell, the smallest index ``k`` that attains the value (``-1`` when the cell
carries the semiring zero). The cubic kernel is blocked over ``k`` so the
broadcast temporaries stay bounded; another kernel can be registered under a
new name and selected per call.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .graph import INF

NO_WITNESS = -1

# Upper bound on elements in one broadcast temporary.
_BLOCK_ELEMS = 1 << 22


class ProductResult(NamedTuple):
    values: np.ndarray
    witnesses: np.ndarray


class DimensionError(ValueError):
    pass


def _check_square(x: np.ndarray, y: np.ndarray) -> int:
    if x.ndim != 2 or x.shape[0] != x.shape[1] or x.shape != y.shape:
        raise DimensionError(f"need equal square operands, got {x.shape} and {y.shape}")
    return x.shape[0]


def _k_blocks(n: int):
    step = max(1, _BLOCK_ELEMS // max(1, n * n))
    for k0 in range(0, n, step):
        yield k0, min(n, k0 + step)


def _blocked_minplus(x: np.ndarray, y: np.ndarray) -> ProductResult:
    n = x.shape[0]
    best = np.full((n, n), INF, dtype=np.int64)
    wit = np.full((n, n), NO_WITNESS, dtype=np.int64)
    for k0, k1 in _k_blocks(n):
        s = x[:, k0:k1, None] + y[None, k0:k1, :]
        bv = s.min(axis=1)
        bw = s.argmin(axis=1) + k0
        better = bv < best
        best[better] = bv[better]
        wit[better] = bw[better]
    np.minimum(best, INF, out=best)
    wit[best >= INF] = NO_WITNESS
    return ProductResult(best, wit)


def _blocked_maxmin(x: np.ndarray, y: np.ndarray) -> ProductResult:
    n = x.shape[0]
    best = np.zeros((n, n), dtype=np.float64)
    wit = np.full((n, n), NO_WITNESS, dtype=np.int64)
    for k0, k1 in _k_blocks(n):
        s = np.minimum(x[:, k0:k1, None], y[None, k0:k1, :])
        bv = s.max(axis=1)
        bw = s.argmax(axis=1) + k0
        better = bv > best
        best[better] = bv[better]
        wit[better] = bw[better]
    wit[best <= 0] = NO_WITNESS
    return ProductResult(best, wit)


def _blocked_boolean(x: np.ndarray, y: np.ndarray) -> ProductResult:
    n = x.shape[0]
    xb, yb = x.astype(bool), y.astype(bool)
    hit = np.zeros((n, n), dtype=bool)
    wit = np.full((n, n), NO_WITNESS, dtype=np.int64)
    for k0, k1 in _k_blocks(n):
        s = xb[:, k0:k1, None] & yb[None, k0:k1, :]
        bv = s.any(axis=1)
        fresh = bv & ~hit
        wit[fresh] = (s.argmax(axis=1) + k0)[fresh]
        hit |= bv
    return ProductResult(hit.astype(np.uint8), wit)


class Kernel(NamedTuple):
    minplus: Callable[[np.ndarray, np.ndarray], ProductResult]
    maxmin: Callable[[np.ndarray, np.ndarray], ProductResult]
    boolean: Callable[[np.ndarray, np.ndarray], ProductResult]


KERNELS: dict[str, Kernel] = {
    "blocked": Kernel(_blocked_minplus, _blocked_maxmin, _blocked_boolean),
}
DEFAULT_KERNEL = "blocked"


def register_kernel(name: str, kernel: Kernel) -> None:
    """Make ``kernel`` selectable by name, e.g. a faster (max,min) multiplier."""
    KERNELS[name] = kernel


def _kernel(name: str | None) -> Kernel:
    try:
        return KERNELS[name or DEFAULT_KERNEL]
    except KeyError:
        raise ValueError(f"unknown kernel {name!r}; have {sorted(KERNELS)}") from None


def minplus_product(x: np.ndarray, y: np.ndarray, kernel: str | None = None) -> ProductResult:
    """``min_k x[i,k] + y[k,j]`` over int64 matrices using the INF sentinel."""
    _check_square(x, y)
    return _kernel(kernel).minplus(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))


def maxmin_product(x: np.ndarray, y: np.ndarray, kernel: str | None = None) -> ProductResult:
    """``max_k min(x[i,k], y[k,j])`` over capacity matrices (0 means no path)."""
    _check_square(x, y)
    return _kernel(kernel).maxmin(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))


def boolean_product(x: np.ndarray, y: np.ndarray, kernel: str | None = None) -> ProductResult:
    """OR over ``k`` of ``x[i,k] AND y[k,j]``; entries must be 0 or 1."""
    _check_square(x, y)
    for m in (x, y):
        if not np.isin(m, (0, 1)).all():
            raise ValueError("boolean product needs 0/1 entries")
    return _kernel(kernel).boolean(np.asarray(x), np.asarray(y))
