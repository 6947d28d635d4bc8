"""Finite-difference scalar curvature of a metric given in a coordinate chart.

Standard tensor chain: Christoffel symbols from metric derivatives, then
Riemann -> Ricci -> scalar:

    Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
    R^l_kij    = d_i Gamma^l_jk - d_j Gamma^l_ik
                 + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
    Ric_kj     = R^i_kij,   Scal = g^{kj} Ric_kj

First and second metric derivatives come from central differences at steps
(h, h/2), Richardson-extrapolated to fourth order.  The stencil reaches at
most 2h from the base point; callers enforce their own domain margins.
"""

from __future__ import annotations

import numpy as np


def _metric_derivatives(metric, x: np.ndarray, h: float):
    d = x.size
    g0 = metric(x)
    d1 = np.empty((d, d, d))
    d2 = np.empty((d, d, d, d))
    plus = []
    minus = []
    for i in range(d):
        e = np.zeros(d)
        e[i] = h
        plus.append(metric(x + e))
        minus.append(metric(x - e))
        d1[i] = (plus[i] - minus[i]) / (2.0 * h)
        d2[i, i] = (plus[i] - 2.0 * g0 + minus[i]) / (h * h)
    for i in range(d):
        ei = np.zeros(d)
        ei[i] = h
        for j in range(i + 1, d):
            ej = np.zeros(d)
            ej[j] = h
            mixed = (
                metric(x + ei + ej)
                - metric(x + ei - ej)
                - metric(x - ei + ej)
                + metric(x - ei - ej)
            ) / (4.0 * h * h)
            d2[i, j] = mixed
            d2[j, i] = mixed
    return g0, d1, d2


def scalar_curvature_fd(metric, x, step: float) -> float:
    """Scalar curvature at x of the metric field ``metric: R^d -> (d, d)``."""
    x = np.asarray(x, dtype=float)
    g0, d1_h, d2_h = _metric_derivatives(metric, x, step)
    _, d1_h2, d2_h2 = _metric_derivatives(metric, x, step / 2.0)
    d1 = (4.0 * d1_h2 - d1_h) / 3.0
    d2 = (4.0 * d2_h2 - d2_h) / 3.0

    ginv = np.linalg.inv(g0)
    # gam_lower[i, j, l] = 1/2 (d_i g_jl + d_j g_il - d_l g_ij)
    gam_lower = 0.5 * (d1 + np.einsum("jil->ijl", d1) - np.einsum("lij->ijl", d1))
    gam = np.einsum("kl,ijl->kij", ginv, gam_lower)

    dginv = -np.einsum("ka,mab,bl->mkl", ginv, d1, ginv)
    dgam_lower = 0.5 * (
        d2 + np.einsum("mjil->mijl", d2) - np.einsum("mlij->mijl", d2)
    )
    # dgam[m, k, i, j] = d_m Gamma^k_ij
    dgam = np.einsum("mkl,ijl->mkij", dginv, gam_lower) + np.einsum(
        "kl,mijl->mkij", ginv, dgam_lower
    )

    riemann = (
        np.einsum("iljk->lkij", dgam)
        - np.einsum("jlik->lkij", dgam)
        + np.einsum("lim,mjk->lkij", gam, gam)
        - np.einsum("ljm,mik->lkij", gam, gam)
    )
    ricci = np.einsum("ikij->kj", riemann)
    return float(np.einsum("kj,kj->", ginv, ricci))
