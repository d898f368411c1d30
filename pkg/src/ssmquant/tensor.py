"""Dense float32 tensors, a deterministic reference GEMM, and seeded RNG streams.

Tensors are plain C-contiguous ``numpy.float32`` arrays throughout the
package (row-major, shape+flat-data semantics). Anything loaded from an
archive is validated to be finite.
"""

from __future__ import annotations

import numpy as np

__all__ = ["ShapeError", "as_f32", "require_finite", "matmul", "make_rng"]


class ShapeError(ValueError):
    """Raised when operand shapes are inconsistent."""


def as_f32(x, shape=None) -> np.ndarray:
    """Coerce to a C-contiguous float32 array, optionally reshaped."""
    a = np.ascontiguousarray(x, dtype=np.float32)
    if shape is not None:
        a = a.reshape(shape)
    return a


def require_finite(a: np.ndarray, name: str = "tensor") -> np.ndarray:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite values")
    return a


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Reference GEMM: c[i,j] = sum_k a[i,k] * b[k,j].

    Accumulates in float64 with a fixed ascending-k summation order (one
    rank-1 update per k), so the result is bit-identical to a scalar
    triple loop using the same order. No BLAS, no pairwise reduction.
    Returns float32.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul needs 2-D operands, got {a.shape} and {b.shape}")
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ShapeError(f"inner dimensions disagree: {a.shape} x {b.shape}")
    a64 = a.astype(np.float64)
    b64 = b.astype(np.float64)
    acc = np.zeros((m, n), dtype=np.float64)
    for kk in range(k):
        acc += a64[:, kk : kk + 1] * b64[kk : kk + 1, :]
    return acc.astype(np.float32)


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Counter-based deterministic generator (Philox).

    Extra ``stream`` integers derive independent substreams from one base
    seed, e.g. ``make_rng(seed, generation, index)``. Same arguments give
    the same stream on every platform.
    """
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF] + [s & 0xFFFFFFFFFFFFFFFF for s in stream], dtype=np.uint64)
    if key.size > 4:
        raise ValueError("at most three substream keys are supported")
    padded = np.zeros(4, dtype=np.uint64)
    padded[: key.size] = key
    return np.random.Generator(np.random.Philox(key=padded))
