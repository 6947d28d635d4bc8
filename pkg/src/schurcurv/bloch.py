"""Non-commutative alpha-geometry on 2x2 density matrices.

States are charted by the Bloch vector, rho = (I + r.sigma)/2 with |r| < 1.
The differential of the embedding rho -> p rho^(1/p) (log rho at p = inf)
acts in the eigenbasis of rho by entrywise multiplication with the first
divided difference of t -> p t^(1/p) on eigenvalue pairs, and the pull-back
metric in the Pauli tangent frame A_i = sigma_i/2 is

    g_ij = Tr(Dphi(A_i) Dphi(A_j)).

The 2x2 eigendecomposition is closed form: eigenvalues (1 +/- |r|)/2 and
eigenvectors built from r/|r|; r = 0 goes through the confluent kernel
branch directly.  Scalar curvature comes from the shared finite-difference
tensor pipeline over the 3-dimensional Bloch chart.

Only n = 2 is implemented; finite-difference curvature of the
15-dimensional n = 4 chart is beyond desk scale.
"""

from __future__ import annotations

import math

import numpy as np

from .riemann import scalar_curvature_fd

METRIC_RADIUS_MAX = 0.99
CURVATURE_RADIUS_MAX = 0.95
KERNEL_CONFLUENT_REL_GAP = 1e-8
DEFAULT_FD_STEP = 1e-3

_SIGMA = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def bloch_density(r) -> np.ndarray:
    """rho = (I + r.sigma)/2 for a Bloch vector with |r| < 1."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if np.linalg.norm(r) >= 1.0:
        raise ValueError("Bloch vector must satisfy |r| < 1")
    rho = 0.5 * np.eye(2, dtype=complex)
    for ri, sigma in zip(r, _SIGMA):
        rho += 0.5 * ri * sigma
    return rho


def divided_difference(p, x: float, y: float) -> float:
    """First divided difference of t -> p t^(1/p) (log t at p = inf).

    The diagonal branch engages below a relative gap of 1e-8 and returns
    the derivative at the midpoint: m^(1/p - 1), or 1/m at p = inf.  Away
    from the diagonal the difference is computed through expm1/log1p, which
    stays accurate for small gaps.
    """
    if not (x > 0.0 and y > 0.0):
        raise ValueError("kernel arguments must be positive")
    if p != math.inf and float(p) == 0.0:
        raise ValueError("p must be nonzero")
    gap = x - y
    if abs(gap) < KERNEL_CONFLUENT_REL_GAP * max(x, y):
        m = 0.5 * (x + y)
        return 1.0 / m if p == math.inf else m ** (1.0 / float(p) - 1.0)
    if p == math.inf:
        return math.log1p(gap / y) / gap
    p = float(p)
    if p == 1.0:
        return 1.0  # t -> t is linear
    a = 1.0 / p
    return p * y ** a * math.expm1(a * math.log1p(gap / y)) / gap


def _eigenbasis(r: np.ndarray):
    """Unitary of eigenvectors and eigenvalues of rho(r), closed form."""
    s = float(np.linalg.norm(r))
    if s < 1e-15:
        return np.eye(2, dtype=complex), (0.5, 0.5)
    n = r / s
    lam = ((1.0 + s) / 2.0, (1.0 - s) / 2.0)
    if 1.0 + n[2] > 1e-12:
        v_plus = np.array([1.0 + n[2], n[0] + 1.0j * n[1]], dtype=complex)
        v_minus = np.array([-(n[0] - 1.0j * n[1]), 1.0 + n[2]], dtype=complex)
        v_plus /= np.linalg.norm(v_plus)
        v_minus /= np.linalg.norm(v_minus)
    else:
        v_plus = np.array([0.0, 1.0], dtype=complex)
        v_minus = np.array([1.0, 0.0], dtype=complex)
    return np.column_stack([v_plus, v_minus]), lam


def pullback_metric_2x2(p, r) -> np.ndarray:
    """Pull-back metric of the embedding at the Bloch point, Pauli frame."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if np.linalg.norm(r) > METRIC_RADIUS_MAX:
        raise ValueError("too close to state-space boundary")
    if p != math.inf and float(p) == 1.0:
        return 0.5 * np.eye(3)  # Dphi is the identity; g_ij = Tr(A_i A_j)
    U, lam = _eigenbasis(r)
    kernel = np.array(
        [
            [divided_difference(p, lam[0], lam[0]), divided_difference(p, lam[0], lam[1])],
            [divided_difference(p, lam[1], lam[0]), divided_difference(p, lam[1], lam[1])],
        ]
    )
    # Dphi(A) in the eigenbasis; traces are basis independent so there is no
    # need to transform back.
    frames = [kernel * (U.conj().T @ (0.5 * sigma) @ U) for sigma in _SIGMA]
    g = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            val = float(np.real(np.trace(frames[i] @ frames[j])))
            g[i, j] = val
            g[j, i] = val
    return g


def matrix_scal_fd(p, r, step: float = DEFAULT_FD_STEP) -> float:
    """Intrinsic scalar curvature of the Bloch ball with the pull-back metric.

    Requires |r| <= 0.95 so the finite-difference stencil stays inside the
    metric's domain.  Known constants: 3/2 at p = 2 (Wigner-Yanase) and zero
    at p = 1.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if np.linalg.norm(r) > CURVATURE_RADIUS_MAX:
        raise ValueError("insufficient margin for stencil")
    return scalar_curvature_fd(lambda x: pullback_metric_2x2(p, x), r, step)


def radial_curvature_profile(p, radii, step: float = DEFAULT_FD_STEP) -> np.ndarray:
    """Curvature along the x-axis at the given radii (unitary invariance
    makes the direction immaterial; tests check that separately)."""
    return np.array([matrix_scal_fd(p, (s, 0.0, 0.0), step) for s in radii])
