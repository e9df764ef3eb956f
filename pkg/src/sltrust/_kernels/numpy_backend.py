"""Vectorized numpy implementations of the batch kernels.

Mirrors reference.py exactly, with np.where standing in for branches.
Selected when numba is unavailable or SL_TRUST_BACKEND=numpy.
"""

import math

import numpy as np

SQRT3 = math.sqrt(3.0)
SIN_60 = SQRT3 / 2.0
PI_OVER_3 = math.pi / 3.0
TWO_PI_OVER_3 = 2.0 * math.pi / 3.0
HALF_PI = math.pi / 2.0

NAME = "numpy"


def cartesian_many(b, d, u):
    x = (d + 0.5 * u) / SIN_60
    return x, np.asarray(u, dtype=np.float64).copy()


def from_cartesian_many(x, y):
    u = np.asarray(y, dtype=np.float64).copy()
    d = x * SIN_60 - 0.5 * y
    b = 1.0 - d - u
    return b, d, u


def angles_many(b, d, u):
    run = d + 0.5 * u
    rise = u * SIN_60
    alpha = np.clip(np.where(b == 1.0, 0.0, np.arctan2(rise, run)), 0.0, PI_OVER_3)
    beta = np.clip(
        np.where(d == 1.0, PI_OVER_3, np.arctan2(rise, 1.0 - run)), 0.0, PI_OVER_3
    )
    gamma = PI_OVER_3 - beta
    ou = np.sqrt((1.0 + d - u) ** 2 / 3.0 + b * b)
    safe_ou = np.where(ou == 0.0, 1.0, ou)
    delta = np.where(u == 1.0, 0.0, np.arcsin(np.clip(b / safe_ou, -1.0, 1.0)))
    epsilon = math.pi - gamma - delta
    return alpha, beta, gamma, delta, epsilon


def magnitude_ratio_many(b, d, u):
    x, y = cartesian_many(b, d, u)
    return np.clip(0.5 * (SQRT3 * x + y), 0.0, 1.0)


def _stable_triangle_angles_many(tb, td, tu):
    td_len = np.sqrt((4.0 / 3.0) * (tb + 0.5 * tu) ** 2 + tu * tu)
    tu_len = np.sqrt((1.0 + td - tu) ** 2 / 3.0 + tb * tb)
    gamma = np.arcsin(np.minimum(1.0, tb / np.where(td_len == 0.0, 1.0, td_len)))
    gamma = np.where(td_len == 0.0, 0.0, gamma)
    delta = np.arcsin(np.minimum(1.0, tb / np.where(tu_len == 0.0, 1.0, tu_len)))
    delta = np.where(tu_len == 0.0, 0.0, delta)
    beta = PI_OVER_3 - gamma
    epsilon = math.pi - gamma - delta
    return gamma, delta, beta, epsilon, td_len, tu_len


def combine_many(tb, td, tu, cb, cd, cu):
    alpha_c = angles_many(cb, cd, cu)[0]
    r_c = magnitude_ratio_many(cb, cd, cu)
    gamma_t, delta_t, beta_t, eps_t, td_len, tu_len = _stable_triangle_angles_many(
        tb, td, tu
    )
    tx, ty = cartesian_many(tb, td, tu)
    tau = alpha_c * eps_t / PI_OVER_3
    alpha_cp = tau - beta_t
    psi = gamma_t + tau
    comp = (eps_t - tau) + delta_t
    den = 2.0 * np.where(psi <= HALF_PI, np.sin(psi), np.sin(comp))
    reach = np.where(den > 0.0, 2.0 * tb / np.where(den == 0.0, 1.0, den), 0.0)
    shift = r_c * reach
    wu = tu + np.sin(alpha_cp) * shift
    wd = td + (tu - wu) * 0.5 + np.cos(alpha_cp) * SIN_60 * shift
    wb = 1.0 - wd - wu
    # exact straight-line branches for edge confidence (direction 0 or pi/3)
    toward_d = (cu == 0.0) & (cb < 1.0)
    toward_u = (cd == 0.0) & (cb < 1.0) & ~toward_d
    dx = tx + r_c * (2.0 / SQRT3 - tx)
    dy = ty - r_c * ty
    ux_ = tx + r_c * (1.0 / SQRT3 - tx)
    uy = ty + r_c * (1.0 - ty)
    ex = np.where(toward_d, dx, ux_)
    ey = np.where(toward_d, dy, uy)
    eb, ed, eu = from_cartesian_many(ex, ey)
    edge = toward_d | toward_u
    wb = np.where(edge, eb, wb)
    wd = np.where(edge, ed, wd)
    wu = np.where(edge, eu, wu)
    wb = np.clip(wb, 0.0, 1.0)
    wd = np.clip(wd, 0.0, 1.0)
    wu = np.clip(wu, 0.0, 1.0)
    total = wb + wd + wu
    wb, wd, wu = wb / total, wd / total, wu / total
    # zero displacement leaves T untouched, bit for bit
    still = r_c * np.where(edge, np.where(toward_d, td_len, tu_len), reach) == 0.0
    wb = np.where(still, tb, wb)
    wd = np.where(still, td, wd)
    wu = np.where(still, tu, wu)
    return wb, wd, wu
