"""Numba-compiled batch kernels: the reference elementwise functions
wrapped in @njit loops.  Compilation is cached on disk, so only the first
process ever pays the JIT cost.

reference.py stays importable without numba, so the elementwise functions
that call helpers are cloned here with those helpers swapped for their
compiled dispatchers before being jitted themselves."""

import types

import numpy as np
from numba import njit

from . import reference as _ref

NAME = "numba"


def _njit_clone(func, **compiled_helpers):
    """njit a copy of ``func`` whose globals see compiled helpers."""
    globs = dict(func.__globals__)
    globs.update(compiled_helpers)
    clone = types.FunctionType(
        func.__code__, globs, func.__name__, func.__defaults__, func.__closure__
    )
    return njit(cache=True)(clone)


_cartesian = njit(cache=True)(_ref.cartesian_elem)
_from_cartesian = njit(cache=True)(_ref.from_cartesian_elem)
_angles = njit(cache=True)(_ref.angles_elem)
_stable = njit(cache=True)(_ref._stable_triangle_angles)
_ratio = _njit_clone(_ref.magnitude_ratio_elem, cartesian_elem=_cartesian)
_combine = _njit_clone(
    _ref.combine_elem,
    angles_elem=_angles,
    magnitude_ratio_elem=_ratio,
    _stable_triangle_angles=_stable,
    cartesian_elem=_cartesian,
    from_cartesian_elem=_from_cartesian,
)


@njit(cache=True)
def cartesian_many(b, d, u):
    n = b.shape[0]
    x = np.empty(n)
    y = np.empty(n)
    for i in range(n):
        x[i], y[i] = _cartesian(b[i], d[i], u[i])
    return x, y


@njit(cache=True)
def from_cartesian_many(x, y):
    n = x.shape[0]
    b = np.empty(n)
    d = np.empty(n)
    u = np.empty(n)
    for i in range(n):
        b[i], d[i], u[i] = _from_cartesian(x[i], y[i])
    return b, d, u


@njit(cache=True)
def angles_many(b, d, u):
    n = b.shape[0]
    alpha = np.empty(n)
    beta = np.empty(n)
    gamma = np.empty(n)
    delta = np.empty(n)
    epsilon = np.empty(n)
    for i in range(n):
        alpha[i], beta[i], gamma[i], delta[i], epsilon[i] = _angles(b[i], d[i], u[i])
    return alpha, beta, gamma, delta, epsilon


@njit(cache=True)
def magnitude_ratio_many(b, d, u):
    n = b.shape[0]
    r = np.empty(n)
    for i in range(n):
        r[i] = _ratio(b[i], d[i], u[i])
    return r


@njit(cache=True)
def combine_many(tb, td, tu, cb, cd, cu):
    n = tb.shape[0]
    wb = np.empty(n)
    wd = np.empty(n)
    wu = np.empty(n)
    for i in range(n):
        res = _combine(tb[i], td[i], tu[i], cb[i], cd[i], cu[i])
        wb[i] = res[0]
        wd[i] = res[1]
        wu[i] = res[2]
    return wb, wd, wu
