"""Deterministic, platform-stable sampling of opinions.

Uniform sampling on the simplex {b + d + u = 1, components >= 0} via
normalized exponential triples drawn from a counter-based Philox
generator, so a seed reproduces the same stream on every platform.
"""

from __future__ import annotations

import numpy as np

from .constants import DEFAULT_SEED

__all__ = ["sample_simplex", "sample_opinion_rows"]


def sample_simplex(n: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Return an (n, 3) float64 array of barycentric-uniform triples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.Philox(key=seed))
    draws = rng.standard_exponential((n, 3))
    return draws / draws.sum(axis=1, keepdims=True)


# Alias kept descriptive at call sites that treat rows as opinions.
sample_opinion_rows = sample_simplex
