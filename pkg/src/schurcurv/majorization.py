"""Majorization preorder on probability vectors, in the "more mixed" sense.

Throughout this package ``x > y`` (majorizes) means *x is more mixed than y*:
every prefix sum of x sorted decreasingly is dominated by the corresponding
prefix sum of y.  This is the reverse of the symbol convention used in most
majorization textbooks; the API name ``majorizes`` always means "is more
mixed than".  With this orientation the uniform vector dominates everything,
and ``x = T y`` for a doubly stochastic ``T`` is equivalent to ``x`` being
more mixed than ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SUM_TOL = 1e-12
PREFIX_TOL = 1e-12
STOCHASTIC_TOL = 1e-12
WITNESS_TOL = 1e-10
BOUNDARY_CLAMP = 1e-3


def validate_density(v, tol: float = SUM_TOL) -> np.ndarray:
    """Check strict positivity and unit sum, returning a float array."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError("density vector must be one-dimensional with length >= 2")
    if np.any(arr <= 0.0):
        raise ValueError("density vector entries must be strictly positive")
    if abs(arr.sum() - 1.0) > tol:
        raise ValueError("density vector entries must sum to 1")
    return arr


def majorizes(x, y, tol: float = PREFIX_TOL) -> bool:
    """True iff x is more mixed than y.

    Prefix sums of the decreasingly sorted vectors are compared; ties within
    ``tol`` count as satisfied.  Total sums are equal by the density-vector
    invariant.
    """
    x = validate_density(x)
    y = validate_density(y)
    if x.size != y.size:
        raise ValueError("incomparable dimensions")
    px = np.cumsum(np.sort(x)[::-1])
    py = np.cumsum(np.sort(y)[::-1])
    return bool(np.all(px[:-1] <= py[:-1] + tol))


def is_doubly_stochastic(T, tol: float = STOCHASTIC_TOL) -> bool:
    T = np.asarray(T, dtype=float)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        return False
    return bool(
        np.all(T >= -tol)
        and np.all(np.abs(T.sum(axis=0) - 1.0) <= tol)
        and np.all(np.abs(T.sum(axis=1) - 1.0) <= tol)
    )


@dataclass(frozen=True, eq=False)
class MajorizationPair:
    """An ordered comparable pair: more_mixed = witness @ less_mixed."""

    more_mixed: np.ndarray
    less_mixed: np.ndarray
    witness: np.ndarray | None = None

    def is_permutation_pair(self, tol: float = PREFIX_TOL) -> bool:
        """True when the two vectors coincide up to coordinate relabeling."""
        return bool(
            np.all(np.abs(np.sort(self.more_mixed) - np.sort(self.less_mixed)) <= tol)
        )


def sample_doubly_stochastic(n: int, k: int, seed=None, *, rng=None) -> np.ndarray:
    """Convex combination of k uniformly random permutation matrices.

    Weights are drawn from the flat Dirichlet distribution, so the result is
    a random point of the Birkhoff polytope; k = n*n summands is enough to
    reach its interior in practice.  Deterministic for a fixed seed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    if rng is None:
        rng = np.random.default_rng(seed)
    T = np.zeros((n, n))
    weights = rng.dirichlet(np.ones(k))
    eye = np.eye(n)
    for w in weights:
        T += w * eye[rng.permutation(n)]
    return T


def sample_comparable_pair(n: int, seed=None, *, rng=None) -> MajorizationPair:
    """Draw y from the clamped simplex interior and mix it with a random map.

    The base point is kept at least BOUNDARY_CLAMP away from the simplex
    boundary because curvature evaluation downstream needs strictly positive
    spectra.  The constructed pair always satisfies ``majorizes(Ty, y)``.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    y = rng.dirichlet(np.ones(n))
    y = (1.0 - n * BOUNDARY_CLAMP) * y + BOUNDARY_CLAMP
    T = sample_doubly_stochastic(n, n * n, rng=rng)
    x = T @ y
    pair = MajorizationPair(more_mixed=x, less_mixed=y, witness=T)
    if not majorizes(x, y):
        raise AssertionError("constructed pair fails the prefix-sum test")
    return pair


def mixing_path(rho, t: float) -> np.ndarray:
    """Straight-line mixing toward the uniform vector.

    Returns (1-t) rho + t u.  The path is monotone for majorization: larger
    t gives a more mixed vector.
    """
    rho = validate_density(rho)
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    return (1.0 - t) * rho + t / rho.size
