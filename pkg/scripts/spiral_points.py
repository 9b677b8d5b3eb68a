"""Corner points, intersection points and drift for the reference spirals.

Prints P* for each reference parameter set, scans the input base d to show
which value reproduces the published outwinding point, and writes the
corner points of each spiral as CSV.
"""
import argparse
import csv
import math
from pathlib import Path

import numpy as np

from exponacci.core import FIBONACCI, Params, solve_closed_form
from exponacci.spiral import corner_points, intersection_point, intersection_quadruple

SETS = {
    "fibonacci": FIBONACCI,
    "outwinding": Params(0.5, 0.8, 1.0, 0.9, 3.0, 4.0),
    "drift": Params(0.5, 0.8, 1.0, 1.1, 3.0, 4.0),
    "inwinding": Params(0.5, 0.35, 1.0, 0.8, 19.0, 16.0),
}
PUBLISHED_OUTWINDING = (1.033, 1.502)


def scan_d(target, d_values):
    """Distance from P*(d) to ``target`` for each input base d."""
    base = SETS["outwinding"]
    rows = []
    for d in d_values:
        p = Params(base.a, base.b, base.c, float(d), base.g0, base.g1)
        star = intersection_point(p, solve_closed_form(p))
        rows.append((float(d), star.x, star.y, math.dist(star, target)))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=48)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for name, p in SETS.items():
        cf = solve_closed_form(p)
        star = intersection_point(p, cf)
        print(f"{name:<11} P* = ({star.x:.6f}, {star.y:.6f})")
        with open(args.out / f"corners_{name}.csv", "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["n", "x", "y"])
            writer.writerows((c.n, c.x, c.y) for c in corner_points(p, cf, args.n_max))

    rows = scan_d(PUBLISHED_OUTWINDING, np.round(np.arange(0.70, 0.96, 0.01), 2))
    best = min(rows, key=lambda r: r[3])
    print(f"closest d to published outwinding P*: d = {best[0]:.2f} "
          f"-> ({best[1]:.4f}, {best[2]:.4f}), distance {best[3]:.1e}")

    p = SETS["drift"]
    cf = solve_closed_form(p)
    for n in (12, 24, 36, 48):
        quad = intersection_quadruple(p, cf, n)
        spread = max(math.dist(q, quad.p_star) for q in quad.quadruple)
        print(f"drift n={n:<3} farthest quadruple point from P*: {spread:.3f}")


if __name__ == "__main__":
    main()
