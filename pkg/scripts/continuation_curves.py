"""Sample the continuous extension for one parameter set of each curve class.

Writes (t, re, im) per class and prints the class and winding angle.
"""
import argparse
import csv
from pathlib import Path

from exponacci.continuation import classify_curve, sample_curve, winding_angle
from exponacci.core import Params, solve_closed_form

SETS = {
    "oscillatory": Params(0.7, 1.4, 0.3, 0.5, -0.5, 2.5),
    "spiral": Params(-0.7, 1.4, 0.3, 0.5, -0.5, 2.5),
    "boundary": Params(2.0, 3.0, 2.0, 2.0, -1.0, -2.0),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t-max", type=float, default=10.0)
    parser.add_argument("--steps", type=int, default=1000)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for name, p in SETS.items():
        cf = solve_closed_form(p)
        cls = classify_curve(p, cf)
        samples = sample_curve(p, cf, args.t_max, args.steps)
        with open(args.out / f"curve_{name}.csv", "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["t", "re", "im"])
            writer.writerows((s.t, s.re, s.im) for s in samples)
        print(f"{name:<12} class {cls.kind.value:<12} b/alpha = {cls.ratio:.4f} "
              f"B = {cf.cap_b:.5f} winding {winding_angle(samples):.2f} rad")


if __name__ == "__main__":
    main()
