"""Classical alpha-geometry on the probability simplex.

The geometry is pulled back through the embedding rho -> p rho^(1/p)
(rho -> log rho at p = inf), with alpha = 1 - 2/p.  Three evaluators:

* ``plane_curvature``: exact curvature of the embedded curve for n = 2,
  via the closed form A_p g_p(theta) / f_p(theta)^(3/2) in the angle chart
  rho = (cos^2 theta, sin^2 theta).  This is the curvature of the embedded
  curve; the intrinsic scalar curvature of a 1-manifold vanishes, so n = 2
  monotonicity studies use this function, not ``simplex_scal_fd``.
* ``simplex_metric``: the pull-back metric on the interior of the simplex
  in the chart that drops the last coordinate, in closed form.
* ``simplex_scal_fd``: intrinsic scalar curvature for n >= 3 by finite
  differences of the closed-form metric.

For p < 0 the embedding carries a negative leading factor; the metric uses
the squared Jacobian, so the same closed form applies.
"""

from __future__ import annotations

import math

import numpy as np

from .majorization import validate_density
from .riemann import scalar_curvature_fd

DEFAULT_FD_STEP = 1e-4
STENCIL_MARGIN_FACTOR = 4.0


def alpha_from_p(p) -> float:
    """alpha = 1 - 2/p (1 at p = inf)."""
    if p == math.inf:
        return 1.0
    if p == 0:
        raise ValueError("p must be nonzero")
    return 1.0 - 2.0 / float(p)


def p_from_alpha(alpha: float):
    """p = 2/(1 - alpha) (inf at alpha = 1)."""
    if alpha == 1.0:
        return math.inf
    return 2.0 / (1.0 - alpha)


def _check_plane_p(p) -> None:
    if p == math.inf:
        return
    p = float(p)
    if p == 0.0 or 0.0 < p < 1.0:
        raise ValueError("plane curvature needs p in (1, inf], p = 1, or p < 0")


def plane_curvature(p, theta):
    """Curvature of the n = 2 alpha-geometry at theta in (0, pi/2).

    For finite p:

        A_p = ((p-1)/p) (1/2)^(2(1-2/p))
        g_p(theta) = sin(2 theta)^(2 - 4/p)
        f_p(theta) = cos(theta)^(4/pt) + sin(theta)^(4/pt),  1/pt = 1 - 1/p

    and c_p = A_p g_p / f_p^(3/2).  At p = inf this degenerates to
    (sin theta cos theta)^2 / (cos^4 theta + sin^4 theta)^(3/2).
    p = 1 is exposed as the flat limit (identically zero).
    """
    _check_plane_p(p)
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= math.pi / 2.0):
        raise ValueError("theta must lie in the open interval (0, pi/2)")
    s, c = np.sin(theta), np.cos(theta)
    if p == math.inf:
        out = (s * c) ** 2 / (c ** 4 + s ** 4) ** 1.5
    else:
        p = float(p)
        if p == 1.0:
            out = np.zeros_like(theta)
        else:
            amp = (p - 1.0) / p * 0.5 ** (2.0 * (1.0 - 2.0 / p))
            grow = np.sin(2.0 * theta) ** (2.0 - 4.0 / p)
            e = 4.0 * (1.0 - 1.0 / p)
            base = c ** e + s ** e
            out = amp * grow / base ** 1.5
    return out if out.ndim else float(out)


def simplex_metric(p, rho) -> np.ndarray:
    """Pull-back metric on the simplex interior, last coordinate eliminated.

    g_ij = rho_i^(2/p - 2) delta_ij + rho_n^(2/p - 2); the p = inf exponent
    is -2.
    """
    rho = validate_density(rho)
    w = -2.0 if p == math.inf else 2.0 / float(p) - 2.0
    diag = rho[:-1] ** w
    return np.diag(diag) + rho[-1] ** w


def _chart_metric(p, n: int):
    w = -2.0 if p == math.inf else 2.0 / float(p) - 2.0

    def metric(chart: np.ndarray) -> np.ndarray:
        last = 1.0 - chart.sum()
        return np.diag(chart ** w) + last ** w

    return metric


def simplex_scal_fd(p, rho, step: float = DEFAULT_FD_STEP) -> float:
    """Intrinsic scalar curvature of the alpha-geometry at rho.

    Uses central differences with Richardson extrapolation at (step, step/2);
    the chart must keep all implied coordinates more than 4*step away from
    the simplex boundary.  Known constants: 1/4 (n-1)(n-2) at p = 2, zero at
    p = 1, and identically zero for n = 2 (one-dimensional chart).
    """
    rho = validate_density(rho)
    if p != math.inf and float(p) == 0.0:
        raise ValueError("p must be nonzero")
    if rho.min() <= STENCIL_MARGIN_FACTOR * step:
        raise ValueError("insufficient margin for stencil")
    metric = _chart_metric(p, rho.size)
    return scalar_curvature_fd(metric, rho[:-1], step)


def dualized_pullback(p, rho, A, B, tangent_tol: float = 1e-10) -> float:
    """Pairing of the embedded tangents with the dual-embedded tangents.

    Computes sum_k (rho_k^(1/p-1) A_k)(rho_k^(1/pt-1) B_k) for tangent
    vectors A, B (entries summing to zero).  The exponents add to -1, so the
    value collapses to the Fisher pairing sum_k A_k B_k / rho_k for every
    p > 1; the p-independence is the point and is what tests pin down.
    """
    p = float(p)
    if not p > 1.0:
        raise ValueError("p must exceed 1")
    rho = validate_density(rho)
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != rho.shape or B.shape != rho.shape:
        raise ValueError("tangent vectors must match the density dimension")
    scale = max(1.0, float(np.max(np.abs(A))), float(np.max(np.abs(B))))
    if abs(A.sum()) > tangent_tol * scale or abs(B.sum()) > tangent_tol * scale:
        raise ValueError("tangent vectors must have zero entry sum")
    pt = p / (p - 1.0)
    u = rho ** (1.0 / p - 1.0) * A
    v = rho ** (1.0 / pt - 1.0) * B
    return float(u @ v)
