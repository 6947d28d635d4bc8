"""Operator-monotone function bundles behind the monotone metrics.

Every family is described by a normalized symmetric operator monotone
function f on (0, inf):

    f(1) = 1,     f(x) = x f(1/x).

The bundled evaluators are f, f', f'' together with the Chentsov-Morozova
kernel

    c(x, y) = 1 / (y f(x/y))

and the derivative of log c with respect to its first argument.  Implemented
families:

* ``wyd(p)``  -- f_p(x) = (x-1)^2 / (p pt (x^(1/p)-1)(x^(1/pt)-1)),
  with 1/p + 1/pt = 1; the p = 1 and p = inf members coincide and equal
  the BKM function (x-1)/log x.
* ``sld()``   -- f(x) = (1+x)/2 (Bures metric).
* ``bkm()``   -- (x-1)/log x.
* ``wy()``    -- f_2(x) = (sqrt(x)+1)^2 / 4 in closed form.

The f_p quotient is 0/0 at x = 1 and suffers cancellation nearby, so f_p is
evaluated through the auxiliary function phi(t) = (e^t - 1)/t:

    f_p(x) = phi(log x)^2 / (phi(a log x) phi(b log x)),   a = 1/p, b = 1 - a.

phi and its derivatives switch to fixed Taylor series for small arguments,
which makes f_p, f_p', f_p'' stable on the whole positive axis, including
p arbitrarily close to 1 where b is tiny.  Derivatives are analytic (chain
rule on this representation); no runtime numerical differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

ADMISSIBLE_NEG_MAX = -1.0
ADMISSIBLE_POS_MIN = 0.5

_SERIES_CUTOFF = 0.1
# Taylor coefficients of phi(t) = sum_k t^k / (k+1)! and its derivatives.
_PHI_C = [1.0 / math.factorial(k + 1) for k in range(13)]
_DPHI_C = [k / math.factorial(k + 1) for k in range(1, 15)]
_D2PHI_C = [k * (k - 1) / math.factorial(k + 1) for k in range(2, 16)]


def _poly(coeffs, t: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _phi(t: float) -> float:
    if abs(t) < _SERIES_CUTOFF:
        return _poly(_PHI_C, t)
    return math.expm1(t) / t


def _dphi(t: float) -> float:
    if abs(t) < _SERIES_CUTOFF:
        return _poly(_DPHI_C, t)
    return ((t - 1.0) * math.expm1(t) + t) / (t * t)


def _d2phi(t: float) -> float:
    if abs(t) < _SERIES_CUTOFF:
        return _poly(_D2PHI_C, t)
    return ((t * t - 2.0 * t + 2.0) * math.expm1(t) + t * (t - 2.0)) / (t ** 3)


def _psi(t: float) -> float:
    return _dphi(t) / _phi(t)


def _dpsi(t: float) -> float:
    p = _phi(t)
    r = _dphi(t) / p
    return _d2phi(t) / p - r * r


def _check_positive(*values: float) -> None:
    for v in values:
        if not v > 0.0:
            raise ValueError("argument must be strictly positive")


def is_admissible(p) -> bool:
    """Whether f_p is operator monotone: p in (-inf, -1] union [1/2, +inf]."""
    try:
        p = float(p)
    except (TypeError, ValueError):
        return False
    if math.isnan(p):
        return False
    return p <= ADMISSIBLE_NEG_MAX or p >= ADMISSIBLE_POS_MIN


@dataclass(frozen=True)
class MetricFamily:
    """Immutable bundle of evaluators for one monotone metric."""

    name: str
    f: Callable[[float], float]
    df: Callable[[float], float]
    d2f: Callable[[float], float]

    def c(self, x: float, y: float) -> float:
        """Chentsov-Morozova kernel 1/(y f(x/y)); symmetric in (x, y)."""
        _check_positive(x, y)
        return 1.0 / (y * self.f(x / y))

    def dlog_c(self, z: float, x: float) -> float:
        """d/dz log c(z, x) = -f'(z/x) / (x f(z/x))."""
        _check_positive(z, x)
        u = z / x
        return -self.df(u) / (x * self.f(u))

    def curvature_weight(self) -> float:
        """f''(1), the only family datum entering the confluent h-limits."""
        return self.d2f(1.0)


def _wyd_exponents(p) -> tuple[float, float]:
    if p == math.inf:
        return 0.0, 1.0
    p = float(p)
    if p == 0.0:
        raise ValueError("undefined parameter")
    a = 1.0 / p
    return a, 1.0 - a


def f_wyd(p, x: float) -> float:
    """f_p evaluated through the phi representation; exact limits at p=1, inf."""
    _check_positive(x)
    a, b = _wyd_exponents(p)
    y = math.log(x)
    return _phi(y) ** 2 / (_phi(a * y) * _phi(b * y))


def _wyd_df(a: float, b: float, x: float) -> float:
    y = math.log(x)
    f = _phi(y) ** 2 / (_phi(a * y) * _phi(b * y))
    m = 2.0 * _psi(y) - a * _psi(a * y) - b * _psi(b * y)
    return f * m / x


def _wyd_d2f(a: float, b: float, x: float) -> float:
    y = math.log(x)
    f = _phi(y) ** 2 / (_phi(a * y) * _phi(b * y))
    m = 2.0 * _psi(y) - a * _psi(a * y) - b * _psi(b * y)
    dm = 2.0 * _dpsi(y) - a * a * _dpsi(a * y) - b * b * _dpsi(b * y)
    return f * (m * m + dm - m) / (x * x)


def wyd(p) -> MetricFamily:
    """The WYD(p) family; p must be admissible (operator monotone)."""
    if not is_admissible(p):
        raise ValueError(f"p={p!r} is not an admissible WYD parameter")
    a, b = _wyd_exponents(p)
    label = "wyd:inf" if p == math.inf else f"wyd:{float(p)!r}"

    def f(x: float) -> float:
        _check_positive(x)
        y = math.log(x)
        return _phi(y) ** 2 / (_phi(a * y) * _phi(b * y))

    def df(x: float) -> float:
        _check_positive(x)
        return _wyd_df(a, b, x)

    def d2f(x: float) -> float:
        _check_positive(x)
        return _wyd_d2f(a, b, x)

    return MetricFamily(name=label, f=f, df=df, d2f=d2f)


def sld() -> MetricFamily:
    """Bures metric: f = (1+x)/2."""

    def f(x: float) -> float:
        _check_positive(x)
        return 0.5 * (1.0 + x)

    def df(x: float) -> float:
        _check_positive(x)
        return 0.5

    def d2f(x: float) -> float:
        _check_positive(x)
        return 0.0

    return MetricFamily(name="sld", f=f, df=df, d2f=d2f)


def bkm() -> MetricFamily:
    """Kubo-Mori metric: f = (x-1)/log x, the p -> 1 member of the WYD scale."""
    fam = wyd(1.0)
    return MetricFamily(name="bkm", f=fam.f, df=fam.df, d2f=fam.d2f)


def wy() -> MetricFamily:
    """Wigner-Yanase metric in closed form: f_2 = (sqrt(x)+1)^2 / 4."""

    def f(x: float) -> float:
        _check_positive(x)
        s = math.sqrt(x)
        return 0.25 * (s + 1.0) ** 2

    def df(x: float) -> float:
        _check_positive(x)
        s = math.sqrt(x)
        return 0.25 * (s + 1.0) / s

    def d2f(x: float) -> float:
        _check_positive(x)
        return -0.125 * x ** -1.5

    return MetricFamily(name="wy", f=f, df=df, d2f=d2f)


def parse_metric(selector: str) -> MetricFamily:
    """Parse a metric selector: 'sld' | 'bkm' | 'wy' | 'wyd:<p>'."""
    token = selector.strip().lower()
    if token == "sld":
        return sld()
    if token == "bkm":
        return bkm()
    if token == "wy":
        return wy()
    if token.startswith("wyd:"):
        raw = token.split(":", 1)[1]
        p = math.inf if raw in ("inf", "infinity") else float(raw)
        return wyd(p)
    raise ValueError(f"unknown metric selector {selector!r}")


def f_derivatives(family: MetricFamily, x: float) -> tuple[float, float]:
    """(f'(x), f''(x)) for the family, analytic."""
    return family.df(x), family.d2f(x)


def cm_c(family: MetricFamily, x: float, y: float) -> float:
    return family.c(x, y)


def cm_dlog(family: MetricFamily, z: float, x: float) -> float:
    return family.dlog_c(z, x)
