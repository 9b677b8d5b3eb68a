"""Command-line front end: ``exponacci {seq,sums,spiral,curve,verify}``.

Parameters come from flags or from a JSON config (``--config``); flags win.
Every number is written with 17 significant digits, CSV uses commas, a
header row and LF line endings, so a fixed config always produces the same
bytes.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 incompatible options.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Sequence

from .continuation import g_continuous
from .core import (
    ClosedForm,
    Params,
    Winding,
    classify,
    g_closed,
    g_iterative,
    horadam_h,
    solve_closed_form,
)
from .errors import ExponacciError
from .identities import CASES, TOLERANCE, fuzz_identity
from .spiral import (
    AmplitudeMode,
    ZMode,
    arched_spiral,
    asymptote_slopes,
    corner_points,
    intersection_point,
    spatial_points,
)
from .sums import SumForm, alternating_sum, gamma_brute, gamma_n, partial_sum

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARAMS = 2
EXIT_OPTIONS = 3

SEED_ENV = "EXPONACCI_SEED"
FORMATS = ("csv", "svg", "json", "text")


class OptionError(Exception):
    """Options that cannot be combined (exit code 3)."""


@dataclass
class RunConfig:
    """Everything a subcommand needs; mirrors the JSON config schema."""

    a: float = 1.0
    b: float = 1.0
    c: float = 0.0
    d: float = 0.0
    g0: float = 0.0
    g1: float = 1.0
    n: int = 10
    n_max: int = 20
    n_arcs: int = 8
    samples: int = 24
    style: str = "both"
    winding: str = "auto"
    z_mode: str = "none"
    amplitude: str = "c"
    t_max: float = 10.0
    step: float = 0.01
    identity: str = "all"
    fuzz_samples: int = 1000
    seed: int = 0
    dps: int = 100
    fixed_params: bool = False
    out: str | None = None
    format: str | None = None

    @property
    def params(self) -> Params:
        return Params(
            float(self.a), float(self.b), float(self.c),
            float(self.d), float(self.g0), float(self.g1),
        )

    def check_ranges(self) -> None:
        if self.n < 0 or self.n_max < 0:
            raise OptionError("n and n_max must be >= 0")
        if self.n_arcs < 0:
            raise OptionError("n_arcs must be >= 0")
        if self.samples < 2:
            raise OptionError("samples (points per arc) must be >= 2")
        if not (self.t_max > 0 and self.step > 0):
            raise OptionError("t_max and step must be positive")
        if self.fuzz_samples < 1:
            raise OptionError("fuzz_samples must be >= 1")


# -- number and table formatting ---------------------------------------------


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if x is None:
        return ""
    # Adding 0.0 folds -0.0 into 0.0 so integer-t imaginary parts print as 0.
    return format(float(x) + 0.0, ".17g")


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _text_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    cells = [list(header)] + [[fmt(v) for v in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return "\n".join(
        "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells
    ) + "\n"


def _json_value(obj, indent: int = 0) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_json_value(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_json_value(v) for v in obj) + "]"
        items = [inner + _json_value(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if obj is None or isinstance(obj, (bool, int)):
        return json.dumps(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    x = float(obj)
    return fmt(x) if math.isfinite(x) else "null"


def dumps_json(obj) -> str:
    """JSON with every float written at 17 significant digits."""
    return _json_value(obj) + "\n"


def _table(header, rows, fmt_name: str, key: str) -> str:
    rows = list(rows)
    if fmt_name == "csv":
        return _csv(header, rows)
    if fmt_name == "text":
        return _text_table(header, rows)
    if fmt_name == "json":
        return dumps_json({key: [dict(zip(header, r)) for r in rows]})
    raise OptionError(f"format {fmt_name!r} is not available for this command")


# -- commands ----------------------------------------------------------------


def cmd_seq(cfg: RunConfig, params: Params, cf: ClosedForm) -> tuple[str, int]:
    rows = []
    for n in range(cfg.n + 1):
        it = g_iterative(params, n)
        cl = g_closed(cf, params, n)
        residual = abs(cl - it) / max(1.0, abs(it))
        rows.append((n, it, cl, horadam_h(cf, params, n), residual))
    header = ("n", "g_iterative", "g_closed", "h_n", "residual")
    return _table(header, rows, cfg.format or "csv", "rows"), EXIT_OK


def cmd_sums(cfg: RunConfig, params: Params, cf: ClosedForm) -> tuple[str, int]:
    rows = []
    for n in range(cfg.n + 1):
        row = [n]
        row += [partial_sum(params, cf, n, f) for f in SumForm]
        row += [alternating_sum(params, cf, n, f) for f in SumForm]
        row += [gamma_n(params, cf, n).value, gamma_brute(params, n)]
        rows.append(row)
    header = (
        "n", "sum_a", "sum_b", "sum_c", "alt_a", "alt_b", "alt_c", "gamma", "gamma_brute",
    )
    return _table(header, rows, cfg.format or "csv", "rows"), EXIT_OK


@dataclass
class _SpiralData:
    corners: list
    arcs: list
    p_star: tuple[float, float]
    slopes: tuple[float, float]
    winding: Winding
    gamma: float


def _spiral_data(cfg: RunConfig, params: Params, cf: ClosedForm) -> _SpiralData:
    cls = classify(params, cf)
    if cfg.style not in ("rect", "arch", "both"):
        raise OptionError(f"unknown style {cfg.style!r}")
    detected = Winding.INWINDING if cls.winding is Winding.INWINDING else Winding.OUTWINDING
    if cfg.winding != "auto":
        requested = Winding(cfg.winding)
        if requested is not detected:
            raise OptionError(
                f"{requested.value} arcs requested but the spiral is "
                f"{cls.winding.value} (gamma = {fmt(cls.gamma)})"
            )
    corners = corner_points(params, cf, cfg.n_max) if cfg.style != "arch" else []
    arcs = []
    if cfg.style != "rect" and cfg.n_arcs > 0:
        arcs = arched_spiral(params, cf, cfg.n_arcs, cfg.samples, detected)
        if cfg.z_mode != "none":
            arcs = spatial_points(
                params, cf, arcs, cfg.samples, ZMode(cfg.z_mode), AmplitudeMode(cfg.amplitude)
            )
    star = intersection_point(params, cf)
    even, odd = asymptote_slopes(cls)
    return _SpiralData(corners, arcs, (star.x, star.y), (float(even), float(odd)), cls.winding, cls.gamma)


def _spiral_csv(data: _SpiralData, with_z: bool) -> str:
    header = ["kind", "n", "i", "x", "y"] + (["z"] if with_z else [])
    rows = []
    for p in data.corners:
        rows.append(["corner", p.n, 0, p.x, p.y] + ([None] if with_z else []))
    for s in data.arcs:
        rows.append(["arc", s.n, s.i, s.x, s.y] + ([s.z] if with_z else []))
    lines = [",".join(header)]
    lines += [",".join(v if isinstance(v, str) else fmt(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _svg_points(points) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)


def _spiral_svg(data: _SpiralData) -> str:
    xs = [p.x for p in data.corners] + [s.x for s in data.arcs] + [data.p_star[0]]
    ys = [p.y for p in data.corners] + [s.y for s in data.arcs] + [data.p_star[1]]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    mx, my = 0.05 * max(x1 - x0, span * 1e-3), 0.05 * max(y1 - y0, span * 1e-3)
    x0, x1, y0, y1 = x0 - mx, x1 + mx, y0 - my, y1 + my
    width, height = x1 - x0, y1 - y0
    # The y-flip maps data y to -y, so the visible band is [-y1, -y0].
    view = f"{fmt(x0)} {fmt(-y1)} {fmt(width)} {fmt(height)}"
    px, py = data.p_star
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}">',
        '<g id="data" transform="scale(1,-1)" fill="none" stroke-width="1">',
    ]
    for name, slope in zip(("asymptote-even", "asymptote-odd"), data.slopes):
        out.append(
            f'<line id="{name}" x1="{fmt(x0)}" y1="{fmt(py + slope * (x0 - px))}" '
            f'x2="{fmt(x1)}" y2="{fmt(py + slope * (x1 - px))}" stroke="#999999" '
            'stroke-dasharray="4 4" vector-effect="non-scaling-stroke"/>'
        )
    if data.corners:
        out.append(
            f'<polyline id="spirangle" points="{_svg_points((p.x, p.y) for p in data.corners)}" '
            'stroke="#1f77b4" vector-effect="non-scaling-stroke"/>'
        )
    by_arc: dict[int, list] = {}
    for s in data.arcs:
        by_arc.setdefault(s.n, []).append((s.x, s.y))
    for n, pts in by_arc.items():
        out.append(
            f'<polyline id="arc-{n}" points="{_svg_points(pts)}" stroke="#d62728" '
            'vector-effect="non-scaling-stroke"/>'
        )
    out.append(
        f'<circle id="p-star" cx="{fmt(px)}" cy="{fmt(py)}" r="{fmt(0.01 * max(width, height))}" '
        'fill="#000000" stroke="none"/>'
    )
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"


def cmd_spiral(cfg: RunConfig, params: Params, cf: ClosedForm) -> tuple[str, int]:
    fmt_name = cfg.format or "csv"
    if fmt_name == "svg" and cfg.z_mode != "none":
        raise OptionError("SVG output is planar; drop --z-mode or use csv/json")
    data = _spiral_data(cfg, params, cf)
    if fmt_name == "csv":
        return _spiral_csv(data, cfg.z_mode != "none"), EXIT_OK
    if fmt_name == "svg":
        return _spiral_svg(data), EXIT_OK
    summary = {
        "gamma": data.gamma,
        "winding": data.winding.value,
        "p_star": list(data.p_star),
        "asymptote_slopes": list(data.slopes),
    }
    if fmt_name == "text":
        return "".join(f"{k}: {_json_value(v)}\n" for k, v in summary.items()), EXIT_OK
    summary["corners"] = [[p.n, p.x, p.y] for p in data.corners]
    summary["arcs"] = [list(s) if isinstance(s, tuple) else [s.n, s.i, s.x, s.y, s.z] for s in data.arcs]
    return dumps_json(summary), EXIT_OK


def cmd_curve(cfg: RunConfig, params: Params, cf: ClosedForm) -> tuple[str, int]:
    steps = max(1, round(cfg.t_max / cfg.step))
    rows = []
    for k in range(steps + 1):
        t = cfg.t_max * k / steps
        s = g_continuous(params, cf, t)
        n = round(t)
        if abs(t - n) <= 1e-12 * max(1.0, t):
            rows.append((t, s.re, s.im, n, g_closed(cf, params, n)))
        else:
            rows.append((t, s.re, s.im, None, None))
    header = ("t", "re", "im", "n", "g_n")
    return _table(header, rows, cfg.format or "csv", "samples"), EXIT_OK


def cmd_verify(cfg: RunConfig, params: Params, cf: ClosedForm) -> tuple[str, int]:
    names = list(CASES) if cfg.identity == "all" else [cfg.identity]
    if any(n not in CASES for n in names):
        raise OptionError(f"unknown identity {cfg.identity!r}")
    pinned = params if cfg.fixed_params else None
    reports = [
        fuzz_identity(CASES[n], cfg.fuzz_samples, cfg.seed, cfg.dps, pinned) for n in names
    ]
    ok = all(r.passed(TOLERANCE) for r in reports)
    fmt_name = cfg.format or "text"
    if fmt_name == "text":
        lines = [r.line(TOLERANCE) for r in reports]
        for r in reports:
            if not r.passed(TOLERANCE):
                wp, idx = r.worst_case
                lines.append(f"  worst {r.name}: params={wp.as_tuple()} indices={idx}")
        text = "\n".join(lines) + "\n"
    elif fmt_name == "json":
        text = dumps_json({
            "seed": cfg.seed,
            "samples": cfg.fuzz_samples,
            "tolerance": TOLERANCE,
            "reports": [
                {
                    "name": r.name,
                    "max_rel_residual": r.max_rel_residual,
                    "passed": r.passed(TOLERANCE),
                    "worst_params": list(r.worst_case[0].as_tuple()),
                    "worst_indices": list(r.worst_case[1]),
                }
                for r in reports
            ],
        })
    else:
        raise OptionError(f"format {fmt_name!r} is not available for verify")
    return text, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "seq": cmd_seq,
    "sums": cmd_sums,
    "spiral": cmd_spiral,
    "curve": cmd_curve,
    "verify": cmd_verify,
}


# -- argument parsing ----------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("sequence parameters")
    for flag, dest in (("-a", "a"), ("-b", "b"), ("-c", "c"), ("-d", "d")):
        g.add_argument(flag, dest=dest, type=float, default=None)
    g.add_argument("--g0", type=float, default=None)
    g.add_argument("--g1", type=float, default=None)
    p.add_argument("--config", default=None, help="JSON file with RunConfig fields")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=FORMATS, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exponacci", description="Generalized Fibonacci sequences G_n = aG_{n-1} + bG_{n-2} + c d^n."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="G_n by iteration and closed form")
    _common(p)
    p.add_argument("-n", type=int, default=None, help="last index (default 10)")

    p = sub.add_parser("sums", help="partial sums, alternating sums and Gamma_n")
    _common(p)
    p.add_argument("-n", type=int, default=None, help="last index (default 10)")

    p = sub.add_parser("spiral", help="corner points and arcs of the spiral")
    _common(p)
    p.add_argument("--n-max", type=int, default=None, help="last corner index (default 20)")
    p.add_argument("--n-arcs", type=int, default=None, help="number of arcs (default 8)")
    p.add_argument("--samples", type=int, default=None, help="N, segments per arc (default 24)")
    p.add_argument("--style", choices=("rect", "arch", "both"), default=None)
    p.add_argument("--winding", choices=("auto", "outwinding", "inwinding"), default=None)
    p.add_argument("--z-mode", choices=("none", "linear", "local", "cumulative"), default=None)
    p.add_argument("--amplitude", choices=("c", "p"), default=None)

    p = sub.add_parser("curve", help="samples of the continuation G(t)")
    _common(p)
    p.add_argument("--t-max", type=float, default=None, help="default 10")
    p.add_argument("--step", type=float, default=None, help="default 0.01")

    p = sub.add_parser("verify", help="fuzz the product-difference identities")
    _common(p)
    p.add_argument("--identity", choices=tuple(CASES) + ("all",), default=None)
    p.add_argument("--samples", dest="fuzz_samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help=f"default ${SEED_ENV} or 0")
    p.add_argument("--dps", type=int, default=None, help="mpmath working digits (default 100)")
    p.add_argument(
        "--fixed-params", action="store_true", default=None,
        help="use the given parameters for every sample instead of random draws",
    )
    return parser


def resolve_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    """Defaults, then $EXPONACCI_SEED, then the JSON config, then explicit flags."""
    values = asdict(RunConfig())
    if environ.get(SEED_ENV):
        values["seed"] = int(environ[SEED_ENV])
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        known = {f.name for f in fields(RunConfig)}
        unknown = set(loaded) - known
        if unknown:
            raise OptionError(f"unknown config fields: {sorted(unknown)}")
        values.update(loaded)
    for name, value in vars(args).items():
        if name in values and value is not None:
            values[name] = value
    return RunConfig(**values)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        cfg.check_ranges()
    except OptionError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_OPTIONS
    try:
        params = cfg.params
        cf = solve_closed_form(params)
        text, code = COMMANDS[args.command](cfg, params, cf)
    except OptionError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_OPTIONS
    except ExponacciError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARAMS
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
