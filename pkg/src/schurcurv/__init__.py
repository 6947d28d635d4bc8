"""Curvature of information geometries and its behavior under mixing.

The package has three layers:

* majorization machinery on probability vectors (`majorization`),
* curvature evaluators: spectral h-sum curvature of monotone metrics
  (`curvature`, `families`), exact plane curvature and finite-difference
  simplex curvature of alpha-geometries (`simplex`), and the qubit
  pull-back curvature (`bloch`),
* an empirical Schur-monotonicity classifier (`schur`) and a CLI (`cli`).
"""

__version__ = "0.1.0"

from .majorization import (
    MajorizationPair,
    majorizes,
    mixing_path,
    sample_comparable_pair,
    sample_doubly_stochastic,
    validate_density,
)
from .families import (
    MetricFamily,
    bkm,
    cm_c,
    cm_dlog,
    f_derivatives,
    f_wyd,
    is_admissible,
    parse_metric,
    sld,
    wy,
    wyd,
)
from .curvature import (
    BURES_SCALE,
    CurvatureReport,
    andai_r,
    h_components,
    normalization_constant,
    scal_ambient,
    scal_normalized,
    validate_spectrum,
)
from .simplex import (
    alpha_from_p,
    dualized_pullback,
    p_from_alpha,
    plane_curvature,
    simplex_metric,
    simplex_scal_fd,
)
from .bloch import (
    bloch_density,
    divided_difference,
    matrix_scal_fd,
    pullback_metric_2x2,
    radial_curvature_profile,
)
from .schur import (
    ProbeResult,
    SchurVerdict,
    classify,
    probe,
    shannon_entropy,
    sld_probe_pair,
)
