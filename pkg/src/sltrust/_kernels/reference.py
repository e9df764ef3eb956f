"""Element-wise float kernels for the opinion-triangle geometry.

These functions are the single source of truth for the hot math: the
scalar API calls them directly, the numba backend compiles them as-is,
and the numpy backend mirrors them with vectorized code.  They take and
return plain floats/tuples only, so they stay nopython-compilable.

Triangle convention: B=(0,0), D=(2/sqrt3, 0), U=(1/sqrt3, 1); the y axis
is the uncertainty axis and each altitude has length 1.
"""

import math

SQRT3 = math.sqrt(3.0)
SIN_60 = SQRT3 / 2.0
PI_OVER_3 = math.pi / 3.0
TWO_PI_OVER_3 = 2.0 * math.pi / 3.0
HALF_PI = math.pi / 2.0


def cartesian_elem(b, d, u):
    """Opinion -> Cartesian point: x = (d + u/2)/sin60, y = u."""
    return (d + 0.5 * u) / SIN_60, u


def from_cartesian_elem(x, y):
    """Cartesian point -> raw (b, d, u); membership is checked by callers."""
    u = y
    d = x * SIN_60 - 0.5 * y
    b = 1.0 - d - u
    return b, d, u


def angles_elem(b, d, u):
    """Direction and triangle angles (alpha, beta, gamma, delta, epsilon).

    alpha is the direction of the opinion as seen from B against the BD
    axis; beta/gamma/delta/epsilon describe the triangle spanned with the
    D and U vertices.  Vertex cases follow the defining piecewise clauses;
    tiny excursions from rounding are clamped back into range.
    """
    run = d + 0.5 * u  # x * sin60
    rise = u * SIN_60
    if b == 1.0:
        alpha = 0.0
    else:
        alpha = math.atan2(rise, run)
        if alpha < 0.0:
            alpha = 0.0
        elif alpha > PI_OVER_3:
            alpha = PI_OVER_3
    if d == 1.0:
        beta = PI_OVER_3
    else:
        beta = math.atan2(rise, 1.0 - run)
        if beta < 0.0:
            beta = 0.0
        elif beta > PI_OVER_3:
            beta = PI_OVER_3
    gamma = PI_OVER_3 - beta
    if u == 1.0:
        delta = 0.0
    else:
        ou = math.sqrt((1.0 + d - u) * (1.0 + d - u) / 3.0 + b * b)
        arg = b / ou
        if arg > 1.0:
            arg = 1.0
        elif arg < -1.0:
            arg = -1.0
        delta = math.asin(arg)
    epsilon = math.pi - gamma - delta
    return alpha, beta, gamma, delta, epsilon


def ou_length_elem(b, d, u):
    """Distance from the opinion's point to the U vertex."""
    return math.sqrt((1.0 + d - u) * (1.0 + d - u) / 3.0 + b * b)


def magnitude_ratio_elem(b, d, u):
    """|B->O| / |B->M_O|, clipped into [0, 1]; 0 at the B vertex."""
    x, y = cartesian_elem(b, d, u)
    r = 0.5 * (SQRT3 * x + y)
    if r < 0.0:
        r = 0.0
    elif r > 1.0:
        r = 1.0
    return r


def max_point_elem(alpha):
    """Farthest valid point along direction ``alpha`` from B (it lies on DU)."""
    ca = math.cos(alpha)
    sa = math.sin(alpha)
    x = 2.0 * ca / (SQRT3 * ca + sa)
    y = 2.0 - SQRT3 * x
    return x, y


def reach_elem(alpha_cp, tb, tu):
    """Length |T->M| available along direction ``alpha_cp`` from point T.

    Piecewise: the exact angles -pi/3 and 2pi/3 (rays parallel to the DU
    edge, reachable only when T sits on DU) use the closed-form distances
    to D and U; pi/2 avoids the tangent blow-up; otherwise the ray is
    intersected with the DU edge.  A non-positive denominator can only
    arise from rounding at a degenerate T, where the displacement
    collapses to zero.
    """
    if alpha_cp == HALF_PI:
        return 2.0 * tb
    if alpha_cp == -PI_OVER_3:
        return (2.0 / SQRT3) * tu
    if alpha_cp == TWO_PI_OVER_3:
        return (2.0 / SQRT3) * (1.0 - tu)
    den = math.sin(alpha_cp) + SQRT3 * math.cos(alpha_cp)
    if den <= 0.0:
        return 0.0
    return 2.0 * tb / den


def _stable_triangle_angles(tb, td, tu):
    """gamma, delta, beta, epsilon of T via cancellation-free identities.

    sin(gamma) = b/|TD| and sin(delta) = b/|TU| (the altitude from the DU
    edge equals the belief), so tiny angles near the collapsed sub-triangle
    keep full relative precision, unlike pi/3 - arctan(...) differences.
    Values agree with the piecewise defining forms to rounding error.
    """
    td_len = math.sqrt((4.0 / 3.0) * (tb + 0.5 * tu) ** 2 + tu * tu)
    tu_len = math.sqrt((1.0 + td - tu) ** 2 / 3.0 + tb * tb)
    gamma = 0.0 if td_len == 0.0 else math.asin(min(1.0, tb / td_len))
    delta = 0.0 if tu_len == 0.0 else math.asin(min(1.0, tb / tu_len))
    beta = PI_OVER_3 - gamma
    epsilon = math.pi - gamma - delta
    return gamma, delta, beta, epsilon, td_len, tu_len


def combine_elem(tb, td, tu, cb, cd, cu):
    """Trust-confidence combination of T and C, with trace intermediates.

    Returns (wb, wd, wu, alpha_c, alpha_cp, r_c, reach, shift) where
    ``shift = r_c * reach`` is the length |T->C'| actually travelled.

    Confidence sitting exactly on a triangle edge is handled as the exact
    straight-line move it is: direction 0 (the BD edge) points at the D
    vertex and direction pi/3 (the BU edge) at the U vertex, so those
    branches move T toward the vertex in Cartesian coordinates directly.
    This also covers degenerate T on the DU edge, where the sub-triangle
    collapses: edge confidence slides W along DU, anything else leaves T
    in place (the generic branch's zero belief forces zero displacement).
    """
    alpha_c = angles_elem(cb, cd, cu)[0]
    r_c = magnitude_ratio_elem(cb, cd, cu)
    gamma_t, delta_t, beta_t, eps_t, td_len, tu_len = _stable_triangle_angles(tb, td, tu)
    tx, ty = cartesian_elem(tb, td, tu)
    toward_d = cu == 0.0 and cb < 1.0
    toward_u = cd == 0.0 and cb < 1.0 and not toward_d
    if toward_d:
        # C on the BD edge: projected direction is exactly T -> D
        alpha_cp = -beta_t
        reach = td_len
    elif toward_u:
        # C on the BU edge: projected direction is exactly T -> U
        alpha_cp = eps_t - beta_t
        reach = tu_len
    else:
        tau = alpha_c * eps_t / PI_OVER_3
        alpha_cp = tau - beta_t
        # den = 2 sin(alpha_cp + pi/3); built from gamma + tau (or its
        # complement past pi/2) so near-parallel rays stay accurate
        psi = gamma_t + tau
        if psi <= HALF_PI:
            den = 2.0 * math.sin(psi)
        else:
            den = 2.0 * math.sin((eps_t - tau) + delta_t)
        reach = 2.0 * tb / den if den > 0.0 else 0.0
    shift = r_c * reach
    if shift == 0.0:
        # zero displacement: the result is T, bit for bit
        return tb, td, tu, alpha_c, alpha_cp, r_c, reach, shift
    if toward_d:
        wx = tx + r_c * (2.0 / SQRT3 - tx)
        wy = ty - r_c * ty
        wb, wd, wu = from_cartesian_elem(wx, wy)
    elif toward_u:
        wx = tx + r_c * (1.0 / SQRT3 - tx)
        wy = ty + r_c * (1.0 - ty)
        wb, wd, wu = from_cartesian_elem(wx, wy)
    else:
        wu = tu + math.sin(alpha_cp) * shift
        wd = td + (tu - wu) * 0.5 + math.cos(alpha_cp) * SIN_60 * shift
        wb = 1.0 - wd - wu
    # Rounding hygiene: pull stray components back onto the simplex.
    if wb < 0.0:
        wb = 0.0
    elif wb > 1.0:
        wb = 1.0
    if wd < 0.0:
        wd = 0.0
    elif wd > 1.0:
        wd = 1.0
    if wu < 0.0:
        wu = 0.0
    elif wu > 1.0:
        wu = 1.0
    total = wb + wd + wu
    wb /= total
    wd /= total
    wu /= total
    return wb, wd, wu, alpha_c, alpha_cp, r_c, reach, shift
