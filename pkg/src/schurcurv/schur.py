"""Empirical Schur-monotonicity classifier with counterexample extraction.

A scalar function f of a density vector (or spectrum) is Schur-increasing
when f(x) >= f(y) whenever x is more mixed than y, Schur-decreasing with the
inequality reversed, and strictly so when equality only happens on
permutation pairs.  The classifier samples comparable pairs, evaluates the
signed differences delta = f(more_mixed) - f(less_mixed) and reports:

* "increasing"   : no delta below -tol, at least one above +tol
* "decreasing"   : no delta above +tol, at least one below -tol
* "neither"      : violations in both directions
* "inconclusive" : all deltas within tol (covers constant targets, which
                   must not be overstated as increasing or decreasing)

Tolerances are relative: tol * (1 + max |f|) per pair.  Verdicts are
deterministic for a fixed seed; pair generation mixes random doubly
stochastic maps (broad exploration) with mixing-path chains (pairs that
concentrate along rays toward the uniform vector).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .majorization import (
    BOUNDARY_CLAMP,
    MajorizationPair,
    mixing_path,
    sample_comparable_pair,
)

DEFAULT_REL_TOL = 1e-9
PERMUTATION_TOL = 1e-12
_MAX_STORED_COUNTEREXAMPLES = 8


def shannon_entropy(v) -> float:
    """- sum rho log rho, the canonical strictly Schur-increasing function."""
    arr = np.asarray(v, dtype=float)
    return float(-np.sum(arr * np.log(arr)))


@dataclass(frozen=True)
class ProbeResult:
    """Single-pair instrument: function values, delta, verdict contribution."""

    f_more_mixed: float
    f_less_mixed: float
    delta: float
    violates: str | None  # "increasing", "decreasing", or None

    def to_dict(self) -> dict:
        return {
            "f_more_mixed": self.f_more_mixed,
            "f_less_mixed": self.f_less_mixed,
            "delta": self.delta,
            "violates": self.violates,
        }


@dataclass
class SchurVerdict:
    classification: str
    samples_tested: int
    strict: bool
    increasing_violations: int
    decreasing_violations: int
    counterexamples_increasing: list[dict] = field(default_factory=list)
    counterexamples_decreasing: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "classification": self.classification,
            "samples_tested": self.samples_tested,
            "strict": self.strict,
            "increasing_violations": self.increasing_violations,
            "decreasing_violations": self.decreasing_violations,
            "counterexamples_increasing": self.counterexamples_increasing,
            "counterexamples_decreasing": self.counterexamples_decreasing,
        }


def _evaluate(target, pair: MajorizationPair):
    try:
        f_more = float(target(pair.more_mixed))
        f_less = float(target(pair.less_mixed))
    except Exception as exc:
        raise RuntimeError(
            "target evaluation failed for pair "
            f"more_mixed={pair.more_mixed.tolist()} "
            f"less_mixed={pair.less_mixed.tolist()}"
        ) from exc
    return f_more, f_less


def probe(target, pair: MajorizationPair, tol: float = DEFAULT_REL_TOL) -> ProbeResult:
    """Evaluate the target on one comparable pair."""
    f_more, f_less = _evaluate(target, pair)
    delta = f_more - f_less
    tol_eff = tol * (1.0 + max(abs(f_more), abs(f_less)))
    violates = None
    if delta < -tol_eff:
        violates = "increasing"
    elif delta > tol_eff:
        violates = "decreasing"
    return ProbeResult(f_more, f_less, delta, violates)


def _counterexample_record(pair: MajorizationPair, f_more, f_less) -> dict:
    # Full input precision so violations can be re-checked independently.
    return {
        "more_mixed": pair.more_mixed.tolist(),
        "less_mixed": pair.less_mixed.tolist(),
        "f_more_mixed": f_more,
        "f_less_mixed": f_less,
        "delta": f_more - f_less,
    }


def _chain_pair(n: int, rng) -> MajorizationPair:
    base = rng.dirichlet(np.ones(n))
    base = (1.0 - n * BOUNDARY_CLAMP) * base + BOUNDARY_CLAMP
    t1, t2 = np.sort(rng.uniform(0.0, 1.0, size=2))
    return MajorizationPair(
        more_mixed=mixing_path(base, t2),
        less_mixed=mixing_path(base, t1),
        witness=None,
    )


def classify(
    target,
    n: int,
    samples: int,
    seed: int,
    tol: float = DEFAULT_REL_TOL,
    probes: tuple[MajorizationPair, ...] = (),
) -> SchurVerdict:
    """Sample comparable pairs and classify the target's Schur behavior.

    ``probes`` are evaluated in addition to the sampled pairs and regardless
    of the seed; mandatory reference pairs are injected this way.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    pairs = list(probes)
    for idx in range(samples):
        if idx % 2 == 0:
            pairs.append(sample_comparable_pair(n, rng=rng))
        else:
            pairs.append(_chain_pair(n, rng))

    inc_violations: list[dict] = []
    dec_violations: list[dict] = []
    weak_nonperm = 0
    for pair in pairs:
        f_more, f_less = _evaluate(target, pair)
        delta = f_more - f_less
        tol_eff = tol * (1.0 + max(abs(f_more), abs(f_less)))
        if delta < -tol_eff:
            inc_violations.append(_counterexample_record(pair, f_more, f_less))
        elif delta > tol_eff:
            dec_violations.append(_counterexample_record(pair, f_more, f_less))
        elif not pair.is_permutation_pair(PERMUTATION_TOL):
            weak_nonperm += 1

    if inc_violations and dec_violations:
        classification = "neither"
    elif inc_violations:
        classification = "decreasing"
    elif dec_violations:
        classification = "increasing"
    else:
        classification = "inconclusive"
    # Strictness: every non-permutation pair moved by more than the tolerance.
    strict = classification in ("increasing", "decreasing") and weak_nonperm == 0

    return SchurVerdict(
        classification=classification,
        samples_tested=len(pairs),
        strict=strict,
        increasing_violations=len(inc_violations),
        decreasing_violations=len(dec_violations),
        counterexamples_increasing=inc_violations[:_MAX_STORED_COUNTEREXAMPLES],
        counterexamples_decreasing=dec_violations[:_MAX_STORED_COUNTEREXAMPLES],
    )


def sld_probe_pair() -> MajorizationPair:
    """The classic qutrit pair: (1/6, 1/6, 2/3) is more mixed than
    (2/9, 1/9, 2/3), yet the Bures curvature is larger at the more mixed
    state, so the pair witnesses a Schur-decreasing violation."""
    return MajorizationPair(
        more_mixed=np.array([1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0]),
        less_mixed=np.array([2.0 / 9.0, 1.0 / 9.0, 2.0 / 3.0]),
        witness=None,
    )
