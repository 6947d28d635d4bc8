"""Scalar curvature of a monotone metric as a function of the spectrum.

The curvature of the metric induced by a family f on the cone of positive
matrices is a triple sum over the spectrum:

    Scal(rho) = sum_{x,y,z in spectrum} h(x,y,z) - sum_{x in spectrum} h(x,x,x)

with h = h1 - h2/2 + 2 h3 - h4 built from the Chentsov-Morozova kernel c
and (log c)' (derivative in the first argument):

    h1 = (c(x,y) - z c(x,z) c(y,z)) / ((x-z)(y-z) c(x,z) c(y,z))
    h2 = (c(x,z) - c(y,z))^2 / ((x-y)^2 c(x,y) c(x,z) c(y,z))
    h3 = z ((log c)'(z,x) - (log c)'(z,y)) / (x - y)
    h4 = z (log c)'(z,x) (log c)'(z,y)

The sum runs over the eigenvalue *list*, multiplicities included.  On the
trace-one manifold the curvature gains a dimensional constant:

    Scal_normalized = Scal_ambient + (n^2-1)(n^2-2)/4.

Coinciding arguments are removable singularities, and all of them are
resolved analytically (split-and-extrapolate evaluation survives only as a
test oracle, because the h1 numerator vanishes like gap * spread and its
double cancellation can cost eight digits in double precision).  The limits
are family generic, needing only f, f', f'':

* y = z = t, spectator x, u = x/t:
      h1 -> (u f'(u)/f(u) - 1/2) / (x - t),   h2, h3, h4 direct
* x = y = s, spectator z:
      h2 -> (d1 c(s,z))^2 / (c(s,s) c(s,z)^2)
      h3 -> z * d2 dlog_c(z, s),              h1, h4 direct
* x = y = z = t:
      h1 = h3 = (f''(1) + 1/4)/t,  h2 = h4 = 1/(4t),
      so h(t, t, t) = (3 f''(1) + 3/8)/t.

Here d1 c(x, y) = -f'(x/y)/(y^2 f(x/y)^2) and

    d2 dlog_c(z, x) = (u f''(u) f(u) + f'(u) f(u) - u f'(u)^2) / (x f(u))^2

with u = z/x, the derivative in the second argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .families import MetricFamily

# Relative gap below which two arguments count as coincident.
CONFLUENT_REL_GAP = 1e-8
# With a coincident pair and the spectator within this many coincidence gaps,
# the whole triple collapses to the diagonal limit.  The threshold balances
# the diagonal error O(spread) against the quadratic cancellation in the
# pair-limit numerator, eps * (scale/spread)^2; both are ~6e-6 relative at
# the crossover, the worst accuracy anywhere in the confluent dispatch.
_DIAGONAL_COLLAPSE_FACTOR = 600.0

# The classic qutrit SLD reference values are quoted for the Bures metric,
# which is 1/4 of the Chentsov-Morozova normalization used here; curvature
# scales inversely with the metric.
BURES_SCALE = 4.0

SPECTRUM_SUM_TOL = 1e-12

# Half-width of the even-symmetric averaging window used by andai_r at the
# most mixed state, where the displayed terms diverge individually.
ANDAI_EVEN_WINDOW = 1e-4


class HComponents(NamedTuple):
    h1: float
    h2: float
    h3: float
    h4: float
    h: float


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature value plus the convention and formula path that produced it."""

    value: float
    convention: str  # "ambient" (positive cone) or "normalized" (trace one)
    metric: str
    spectrum: tuple[float, ...]
    formula_path: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "convention": self.convention,
            "metric": self.metric,
            "spectrum": list(self.spectrum),
            "formula_path": self.formula_path,
        }


def validate_spectrum(eigs, tol: float = SPECTRUM_SUM_TOL) -> np.ndarray:
    arr = np.asarray(eigs, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError("spectrum must be one-dimensional with length >= 2")
    if np.any(arr <= 0.0):
        raise ValueError("spectrum must be strictly positive (faithful state)")
    if abs(arr.sum() - 1.0) > tol:
        raise ValueError("not a density spectrum")
    return arr


def normalization_constant(n: int) -> float:
    """Offset between trace-one and ambient curvature: (n^2-1)(n^2-2)/4."""
    return (n * n - 1) * (n * n - 2) / 4.0


def _h_raw(family: MetricFamily, x: float, y: float, z: float) -> HComponents:
    c = family.c
    cxy, cxz, cyz = c(x, y), c(x, z), c(y, z)
    dzx, dzy = family.dlog_c(z, x), family.dlog_c(z, y)
    h1 = (cxy - z * cxz * cyz) / ((x - z) * (y - z) * cxz * cyz)
    h2 = (cxz - cyz) ** 2 / ((x - y) ** 2 * cxy * cxz * cyz)
    h3 = z * (dzx - dzy) / (x - y)
    h4 = z * dzx * dzy
    return HComponents(h1, h2, h3, h4, h1 - 0.5 * h2 + 2.0 * h3 - h4)


def _h_diagonal(family: MetricFamily, t: float) -> HComponents:
    w = family.curvature_weight()  # f''(1)
    h13 = (w + 0.25) / t
    h24 = 0.25 / t
    return HComponents(h13, h24, h13, h24, (3.0 * w + 0.375) / t)


def _h_pair_yz(family: MetricFamily, x: float, t: float) -> HComponents:
    """Limit of h(x, y, z) as y, z -> t with x held away from t."""
    u = x / t
    f, fp = family.f(u), family.df(u)
    cxt = family.c(x, t)
    ctt = 1.0 / t
    dtx = family.dlog_c(t, x)
    dtt = -0.5 / t
    h1 = (u * fp / f - 0.5) / (x - t)
    h2 = (cxt - ctt) ** 2 / ((x - t) ** 2 * cxt * cxt * ctt)
    h3 = t * (dtx - dtt) / (x - t)
    h4 = t * dtx * dtt
    return HComponents(h1, h2, h3, h4, h1 - 0.5 * h2 + 2.0 * h3 - h4)


def _h_pair_xy(family: MetricFamily, s: float, z: float) -> HComponents:
    """Limit of h(x, y, z) as x, y -> s with z held away from s."""
    u = s / z
    f, fp = family.f(u), family.df(u)
    csz = family.c(s, z)
    css = 1.0 / s
    dzs = family.dlog_c(z, s)
    d1c = -fp / (z * z * f * f)
    # derivative of dlog_c(z, x) in x, at x = s
    w = z / s
    fw, fpw, fppw = family.f(w), family.df(w), family.d2f(w)
    d2dl = (w * fppw * fw + fpw * fw - w * fpw * fpw) / ((s * fw) ** 2)
    h1 = (css - z * csz * csz) / ((s - z) ** 2 * csz * csz)
    h2 = d1c * d1c / (css * csz * csz)
    h3 = z * d2dl
    h4 = z * dzs * dzs
    return HComponents(h1, h2, h3, h4, h1 - 0.5 * h2 + 2.0 * h3 - h4)


def h_components(family: MetricFamily, x: float, y: float, z: float) -> HComponents:
    """The four h components and their combination, finite for all positive
    triples; coincident arguments dispatch to the analytic limits."""
    x, y, z = float(x), float(y), float(z)
    for v in (x, y, z):
        if not v > 0.0:
            raise ValueError("h arguments must be strictly positive")
    scale = max(x, y, z)
    tau = CONFLUENT_REL_GAP * scale
    gxy, gxz, gyz = abs(x - y), abs(x - z), abs(y - z)
    if min(gxy, gxz, gyz) >= tau:
        return _h_raw(family, x, y, z)
    small = int(gxy < tau) + int(gxz < tau) + int(gyz < tau)
    if small >= 2:
        return _h_diagonal(family, (x + y + z) / 3.0)
    if gxy < tau:
        pair_mean, spectator, is_xy = 0.5 * (x + y), z, True
    elif gxz < tau:
        # h is symmetric in its first two arguments; relabel to a (y, z) pair
        pair_mean, spectator, is_xy = 0.5 * (x + z), y, False
    else:
        pair_mean, spectator, is_xy = 0.5 * (y + z), x, False
    if abs(spectator - pair_mean) <= _DIAGONAL_COLLAPSE_FACTOR * tau:
        return _h_diagonal(family, (x + y + z) / 3.0)
    if is_xy:
        return _h_pair_xy(family, pair_mean, spectator)
    return _h_pair_yz(family, spectator, pair_mean)


def scal_ambient(family: MetricFamily, spectrum) -> CurvatureReport:
    """Curvature of the metric over the full positive cone, from the spectrum.

    Ordered triples are summed in index order (deterministic reduction) over
    the eigenvalue list with multiplicities; the diagonal sum is subtracted.
    """
    eigs = validate_spectrum(spectrum)
    n = eigs.size
    total = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total += h_components(family, eigs[i], eigs[j], eigs[k]).h
    diag = sum(_h_diagonal(family, eigs[i]).h for i in range(n))
    return CurvatureReport(
        value=total - diag,
        convention="ambient",
        metric=family.name,
        spectrum=tuple(float(v) for v in eigs),
        formula_path="h-sum",
    )


def scal_normalized(family: MetricFamily, spectrum) -> CurvatureReport:
    """Curvature of the metric restricted to the trace-one manifold."""
    ambient = scal_ambient(family, spectrum)
    n = len(ambient.spectrum)
    return CurvatureReport(
        value=ambient.value + normalization_constant(n),
        convention="normalized",
        metric=ambient.metric,
        spectrum=ambient.spectrum,
        formula_path="h-sum",
    )


def _andai_terms(family: MetricFamily, a: float) -> float:
    u = (1.0 - a) / (1.0 + a)
    f = family.f(u)
    fp = family.df(u)
    fpp = family.d2f(u)
    one_a3 = (1.0 + a) ** 3
    t1 = 14.0 * (a - 1.0) * fp * fp / (one_a3 * f * f)
    t2 = 2.0 * (a * a + 7.0 * a - 6.0) * fp / ((1.0 + a) ** 2 * a * f)
    t3 = 8.0 * (1.0 - a) * fpp / (one_a3 * f)
    t4 = 2.0 * (1.0 + a) * f / (a * a)
    t5 = (3.0 * a ** 3 + 5.0 * a ** 2 + 8.0 * a - 4.0) / (2.0 * (1.0 + a) * a * a)
    return t1 + t2 + t3 + t4 + t5


def andai_r(family: MetricFamily, a: float) -> float:
    """Closed-form qubit curvature profile r_f(a), a = 2*lambda_1 - 1.

    Evaluates the five-term closed form verbatim.  The individual terms
    diverge at a = 0 although r_f is smooth and even there, so inside a
    small window the value is taken as the average at +/- ANDAI_EVEN_WINDOW.
    Matches the normalized h-sum curvature on the spectrum
    ((1+a)/2, (1-a)/2).
    """
    if not -1.0 < a < 1.0:
        raise ValueError("a must lie in (-1, 1)")
    if abs(a) < ANDAI_EVEN_WINDOW:
        lo = _andai_terms(family, -ANDAI_EVEN_WINDOW)
        hi = _andai_terms(family, ANDAI_EVEN_WINDOW)
        return 0.5 * (lo + hi)
    return _andai_terms(family, a)
