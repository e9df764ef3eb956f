"""Array-at-a-time operations for bulk experiments and property sweeps.

Opinions travel as (n, 3) float64 arrays with columns belief, disbelief,
uncertainty; Cartesian points as (n, 2) arrays.  The heavy lifting runs
on the active kernel backend (numba-compiled loops by default, pure
numpy when forced or when numba is absent; see SL_TRUST_BACKEND).
"""

from __future__ import annotations

import numpy as np

from ._kernels import backend_name, load_backend
from .sampling import sample_simplex

__all__ = [
    "backend_name",
    "sample_simplex",
    "combine_many",
    "to_cartesian_many",
    "from_cartesian_many",
    "angles_many",
    "magnitude_ratio_many",
]


def _cols(arr: np.ndarray, width: int) -> tuple[np.ndarray, ...]:
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f"expected an (n, {width}) array, got shape {arr.shape}")
    return tuple(np.ascontiguousarray(arr[:, i]) for i in range(width))


def combine_many(trust: np.ndarray, confidence: np.ndarray) -> np.ndarray:
    """Row-wise trust-confidence combination of two (n, 3) opinion arrays."""
    tb, td, tu = _cols(trust, 3)
    cb, cd, cu = _cols(confidence, 3)
    if tb.shape != cb.shape:
        raise ValueError("trust and confidence arrays must have the same length")
    return np.column_stack(load_backend().combine_many(tb, td, tu, cb, cd, cu))


def to_cartesian_many(opinions: np.ndarray) -> np.ndarray:
    b, d, u = _cols(opinions, 3)
    return np.column_stack(load_backend().cartesian_many(b, d, u))


def from_cartesian_many(points: np.ndarray) -> np.ndarray:
    """Inverse mapping; assumes the points lie in the triangle."""
    x, y = _cols(points, 2)
    return np.column_stack(load_backend().from_cartesian_many(x, y))


def angles_many(opinions: np.ndarray) -> np.ndarray:
    """(n, 5) array of alpha, beta, gamma, delta, epsilon per opinion."""
    b, d, u = _cols(opinions, 3)
    return np.column_stack(load_backend().angles_many(b, d, u))


def magnitude_ratio_many(opinions: np.ndarray) -> np.ndarray:
    b, d, u = _cols(opinions, 3)
    return load_backend().magnitude_ratio_many(b, d, u)
