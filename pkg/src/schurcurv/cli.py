"""Command-line front end: CSV/JSON emitters for every computation."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .bloch import matrix_scal_fd, radial_curvature_profile
from .curvature import andai_r, normalization_constant, scal_ambient
from .families import MetricFamily, parse_metric, wyd
from .schur import classify, probe, shannon_entropy, sld_probe_pair
from .simplex import plane_curvature, simplex_scal_fd

OUT_DIR_ENV = "SCHURCURV_OUT_DIR"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def parse_number(token: str) -> float:
    """Accept plain floats, 'inf', and exact rationals like 2/9."""
    token = token.strip()
    if token.lower() in ("inf", "+inf", "infinity"):
        return math.inf
    if "/" in token:
        return float(Fraction(token))
    return float(token)


def parse_vector(text: str) -> np.ndarray:
    return np.array([parse_number(tok) for tok in text.split(",")])


def parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("grid must be min:max:count")
    lo, hi = parse_number(parts[0]), parse_number(parts[1])
    count = int(parts[2])
    if count < 2:
        raise ValueError("grid count must be >= 2")
    if not lo < hi:
        raise ValueError("grid needs min < max")
    return np.linspace(lo, hi, count)


def _resolve_out(path: str | None):
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, out_path: str | None) -> None:
    resolved = _resolve_out(out_path)
    if resolved is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(resolved, "w", newline="") as fh:
            fh.write(text)


def _csv(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(repr(float(v)) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_report(command: str, config: dict, result) -> str:
    payload = {
        "command": command,
        "version": __version__,
        "config": config,
        "result": result,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_plane(args) -> int:
    p = parse_number(args.p)
    grid = parse_grid(args.grid)
    values = plane_curvature(p, grid)
    _emit(_csv("theta,c", zip(grid, np.atleast_1d(values))), args.out)
    return EXIT_OK


def cmd_curvature(args) -> int:
    family = parse_metric(args.metric)
    eigs = parse_vector(args.eigs)
    ambient = scal_ambient(family, eigs)
    n = eigs.size
    value = ambient.value
    if args.convention == "normalized":
        value = ambient.value + normalization_constant(n)
    result = {
        "value": value,
        "convention": args.convention,
        "ambient_value": ambient.value,
        "normalized_value": ambient.value + normalization_constant(n),
        "metric": family.name,
        "spectrum": [float(v) for v in eigs],
        "formula_path": ambient.formula_path,
    }
    config = {"metric": args.metric, "eigs": args.eigs, "convention": args.convention}
    _emit(_json_report("curvature", config, result), args.out)
    return EXIT_OK


def cmd_andai(args) -> int:
    if args.metric is not None:
        family = parse_metric(args.metric)
    elif args.p is not None:
        family = wyd(parse_number(args.p))
    else:
        raise ValueError("andai needs --metric or --p")
    grid = parse_grid(args.grid)
    rows = [(a, andai_r(family, a)) for a in grid]
    _emit(_csv("a,r", rows), args.out)
    return EXIT_OK


def _schur_target(selector: str, n: int):
    """Resolve a target selector to (callable, mandatory probes)."""
    token = selector.strip().lower()
    if token == "entropy":
        return shannon_entropy, ()
    if token in ("neg-entropy", "negentropy"):
        return (lambda v: -shannon_entropy(v)), ()
    if token.startswith("spectrum:"):
        family = parse_metric(token.split(":", 1)[1])
        target = lambda v: scal_ambient(family, v).value  # noqa: E731
        probes = (sld_probe_pair(),) if n == 3 else ()
        return target, probes
    if token.startswith("simplex:"):
        p = parse_number(token.split(":", 1)[1])
        return (lambda v: simplex_scal_fd(p, v)), ()
    raise ValueError(f"unknown schur target {selector!r}")


def cmd_schur(args) -> int:
    target, probes = _schur_target(args.target, args.n)
    verdict = classify(
        target, n=args.n, samples=args.samples, seed=args.seed,
        tol=args.tol, probes=probes,
    )
    config = {
        "target": args.target,
        "n": args.n,
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
    }
    _emit(_json_report("schur", config, verdict.to_dict()), args.out)
    return EXIT_OK


def cmd_simplex(args) -> int:
    p = parse_number(args.p)
    rho = parse_vector(args.rho)
    if args.n is not None and args.n != rho.size:
        raise ValueError("--n disagrees with the length of --rho")
    value = simplex_scal_fd(p, rho, step=args.fd_step)
    config = {"p": args.p, "n": rho.size, "rho": args.rho, "fd_step": args.fd_step}
    result = {"scal": value, "p": float(p), "rho": [float(v) for v in rho],
              "formula_path": "fd-riemann"}
    _emit(_json_report("simplex", config, result), args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    p = parse_number(args.p)
    r = parse_vector(args.bloch)
    value = matrix_scal_fd(p, r, step=args.fd_step)
    config = {"p": args.p, "bloch": args.bloch, "fd_step": args.fd_step}
    result = {"scal": value, "p": float(p), "bloch": [float(v) for v in r],
              "formula_path": "fd-riemann"}
    _emit(_json_report("matrix", config, result), args.out)
    return EXIT_OK


def _qubit_grid_report(family: MetricFamily, pairs: int, seed: int, tol: float) -> dict:
    """Schur-increasing violations of the closed-form qubit profile over
    random radial pairs; smaller |a| is the more mixed state."""
    rng = np.random.default_rng(seed)
    violations = 0
    worst = 0.0
    for _ in range(pairs):
        a1, a2 = rng.uniform(1e-3, 0.95, size=2)
        lo, hi = (a1, a2) if a1 < a2 else (a2, a1)
        delta = andai_r(family, lo) - andai_r(family, hi)
        if delta < -tol * (1.0 + abs(delta)):
            violations += 1
            worst = min(worst, delta)
    return {
        "metric": family.name,
        "pairs": pairs,
        "increasing_violations": violations,
        "worst_delta": worst,
    }


def _radial_report(p, radii, step: float) -> dict:
    values = radial_curvature_profile(p, radii, step)
    diffs = np.diff(values)
    if np.all(diffs < 0):
        monotone = "decreasing"
    elif np.all(diffs > 0):
        monotone = "increasing"
    else:
        monotone = "mixed"
    # Conjectured behavior: more mixed (smaller |r|) means larger curvature
    # for p > 2, smaller for 1 < p < 2.
    if p == math.inf or p > 2.0:
        expected = "decreasing"
    elif 1.0 < p < 2.0:
        expected = "increasing"
    else:
        expected = None
    return {
        "p": "inf" if p == math.inf else float(p),
        "radii": [float(s) for s in radii],
        "scal": [float(v) for v in values],
        "monotone_in_radius": monotone,
        "expected_if_conjectured": expected,
        "consistent_with_conjecture": None if expected is None else monotone == expected,
    }


def cmd_evidence(args) -> int:
    """Non-asserting conjecture-evidence report; outcomes are recorded,
    never turned into failures."""
    result: dict = {}

    simplex_entries = []
    for p in (1.5, 3.0, math.inf):
        for n in (3, 4):
            target, _ = _schur_target(f"simplex:{'inf' if p == math.inf else p}", n)
            verdict = classify(target, n=n, samples=args.samples, seed=args.seed)
            simplex_entries.append(
                {
                    "p": "inf" if p == math.inf else p,
                    "n": n,
                    "verdict": verdict.to_dict(),
                }
            )
    result["simplex_alpha"] = simplex_entries

    radii = np.linspace(0.05, 0.9, args.radial_points)
    result["matrix_radial"] = [
        _radial_report(p, radii, step=1e-3) for p in (1.5, 3.0, 10.0, math.inf)
    ]

    sld_target, sld_probes = _schur_target("spectrum:sld", 3)
    sld_verdict = classify(
        sld_target, n=3, samples=args.samples, seed=args.seed, probes=sld_probes
    )
    probe_result = probe(sld_target, sld_probe_pair())
    result["sld_spectrum_n3"] = {
        "verdict": sld_verdict.to_dict(),
        "reference_probe": probe_result.to_dict(),
    }

    result["bkm_qubit_grid"] = _qubit_grid_report(
        parse_metric("bkm"), pairs=1000, seed=args.seed, tol=1e-9
    )
    result["wyd_qubit_grids"] = [
        _qubit_grid_report(wyd(1.0 + 10.0 ** -k), pairs=1000, seed=args.seed, tol=1e-9)
        for k in range(1, 7)
    ]

    config = {
        "samples": args.samples,
        "seed": args.seed,
        "radial_points": args.radial_points,
    }
    _emit(_json_report("evidence", config, result), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurcurv",
        description="Curvature of information metrics and its behavior under mixing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("plane", help="plane curvature sweep, CSV theta,c")
    sp.add_argument("--p", required=True)
    sp.add_argument("--grid", required=True, help="min:max:count over (0, pi/2)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_plane)

    sp = sub.add_parser("curvature", help="spectral curvature report, JSON")
    sp.add_argument("--metric", required=True, help="wyd:<p> | sld | bkm | wy")
    sp.add_argument("--eigs", required=True, help="comma list, rationals allowed")
    sp.add_argument("--convention", choices=("ambient", "normalized"), default="ambient")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_curvature)

    sp = sub.add_parser("andai", help="closed-form qubit profile r(a), CSV a,r")
    sp.add_argument("--metric", help="wyd:<p> | sld | bkm | wy")
    sp.add_argument("--p", help="shorthand for --metric wyd:<p>")
    sp.add_argument("--grid", required=True, help="min:max:count over (-1, 1)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_andai)

    sp = sub.add_parser("schur", help="Schur-monotonicity verdict, JSON")
    sp.add_argument("--target", required=True,
                    help="entropy | neg-entropy | spectrum:<metric> | simplex:<p>")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_schur)

    sp = sub.add_parser("simplex", help="simplex curvature at a point, JSON")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--rho", required=True)
    sp.add_argument("--fd-step", type=float, default=1e-4)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_simplex)

    sp = sub.add_parser("matrix", help="Bloch-ball curvature at a point, JSON")
    sp.add_argument("--p", required=True)
    sp.add_argument("--bloch", required=True)
    sp.add_argument("--fd-step", type=float, default=1e-3)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("evidence", help="conjecture-evidence report, JSON")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--radial-points", type=int, default=100)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_evidence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # numerical failure paths
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
