"""Height profile of the spatial spiral for several input bases.

Writes z at the start of each arc for every height mode and prints how
close the cumulative height gets to its limit c / (1 - d).
"""
import argparse
import csv
from pathlib import Path

from exponacci.core import Params, solve_closed_form
from exponacci.spiral import SpiralSample, ZMode, spatial_points


def profile(d: float, n_arcs: int, samples: int):
    p = Params(0.5, 0.8, 1.0, d, 3.0, 4.0)
    cf = solve_closed_form(p)
    planar = [SpiralSample(n, 0, 0.0, 0.0) for n in range(1, n_arcs + 1)]
    return {mode: spatial_points(p, cf, planar, samples, mode) for mode in ZMode}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-arcs", type=int, default=80)
    parser.add_argument("--samples", type=int, default=24)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for d in (0.5, 0.9, 1.0, 1.1):
        heights = profile(d, args.n_arcs, args.samples)
        with open(args.out / f"spatial_d{d}.csv", "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["n", *(m.value for m in ZMode)])
            for row in zip(*heights.values()):
                writer.writerow([row[0].n, *(pt.z for pt in row)])
        last = heights[ZMode.CUMULATIVE][-1].z
        limit = f"limit {1.0 / (1.0 - d):.4f}" if d < 1.0 else "unbounded"
        print(f"d = {d}: cumulative z at n = {args.n_arcs} is {last:.6f} ({limit})")


if __name__ == "__main__":
    main()
