#!/usr/bin/env python3
"""Render the qubit curvature profiles r(a) from the CSVs in figures/.

Regenerate the data with:

    schurcurv andai --p 1.1      --grid=-0.99:0.99:199 --out figures/r_p_1.1.csv
    schurcurv andai --p 1.000001 --grid=-0.99:0.99:199 --out figures/r_p_1.000001.csv
"""

import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [float(r["a"]) for r in rows], [float(r["r"]) for r in rows]


def main():
    fig_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.2))
    for ax, tag in zip(axes, ("1.1", "1.000001")):
        a, r = load(fig_dir / f"r_p_{tag}.csv")
        ax.plot(a, r)
        ax.set_title(f"p = {tag}")
        ax.set_xlabel("a")
        ax.set_ylabel("r(a)")
    fig.tight_layout()
    out = fig_dir / "radial_profiles.png"
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
