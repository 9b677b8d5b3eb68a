"""Fuzz every identity over random parameters at high precision.

Prints one report line per identity plus the negative control, and the
same check in plain floating point for comparison.
"""
import argparse

from exponacci.identities import CASES, NEGATIVE_CONTROL, TOLERANCE, fuzz_identity


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dps", type=int, default=100)
    args = parser.parse_args()

    for case in [*CASES.values(), NEGATIVE_CONTROL]:
        report = fuzz_identity(case, samples=args.samples, seed=args.seed, dps=args.dps)
        floats = fuzz_identity(case, samples=args.samples, seed=args.seed, dps=None)
        print(f"{report.line(TOLERANCE)} | float64 max {floats.max_rel_residual:.1e}, "
              f"failing {report.failure_fraction(TOLERANCE):.1%}")


if __name__ == "__main__":
    main()
