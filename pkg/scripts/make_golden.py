"""Regenerate the CLI golden files under tests/golden/.

Run after an intentional change to CLI output; the golden tests compare
byte for byte.
"""
from pathlib import Path

from exponacci.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

# name -> argv (without --out)
CASES = {
    "seq_fibonacci.csv": ["seq", "-n", "12"],
    "sums_fig2.csv": ["sums", "-a", "0.5", "-b", "0.8", "-c", "1", "-d", "0.9",
                      "--g0", "3", "--g1", "4", "-n", "12"],
    "spiral_fibonacci.svg": ["spiral", "--format", "svg", "--n-max", "10",
                             "--n-arcs", "6", "--samples", "8"],
    "curve_fibonacci.csv": ["curve", "--t-max", "3", "--step", "0.25"],
    "verify_shannon.txt": ["verify", "--identity", "shannon", "--samples", "50",
                           "--seed", "42", "--dps", "30"],
}


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        code = run(argv + ["--out", str(GOLDEN / name)])
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main()
