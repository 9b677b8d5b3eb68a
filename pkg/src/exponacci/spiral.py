"""Rectangular (spirangle) and arched spiral geometry.

Corner points follow the alternating sums Gamma_n:

    P_n = (Gamma_n, Gamma_{n-1})   n even
    P_n = (Gamma_{n-1}, Gamma_n)   n odd

with Gamma_{-1} = 0 so that P_0 = (G_0, 0).  Arched spirals replace every arm
by a quarter-ellipse centred on a corner point (P_{n-2} when outwinding,
P_{n+4} when inwinding), sampled at angles (n + i/N) pi/2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import Classification, ClosedForm, Params, Winding, classify, g_closed
from .errors import NegativeBase, NotInwinding, NotOutwinding, ZeroDenominator, ZeroGamma
from .sums import EPS_ONE, _check_denominator, gamma_constant, gamma_n, geometric_sum

DEFAULT_SAMPLES = 60


class Point(NamedTuple):
    x: float
    y: float


class SpiralSample(NamedTuple):
    """A planar arc sample tagged with its arc number n and sample index i."""

    n: int
    i: int
    x: float
    y: float


@dataclass(frozen=True)
class CornerPoint:
    n: int
    x: float
    y: float

    @property
    def directional_index(self) -> int:
        return self.n % 4

    @property
    def point(self) -> Point:
        return Point(self.x, self.y)


@dataclass(frozen=True)
class ArcSpec:
    n: int
    center: Point
    center_index: int | None  # None for the first outwinding arc (origin)
    e_x: float
    e_y: float
    phi_range: tuple[float, float]
    samples: int


@dataclass(frozen=True)
class SpiralPoint3:
    n: int
    i: int
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class IntersectionResult:
    p_star: Point
    quadruple: tuple[Point, Point, Point, Point] | None
    converged: bool


class ZMode(enum.Enum):
    LINEAR = "linear"
    LOCAL_INPUT = "local"
    CUMULATIVE = "cumulative"


class AmplitudeMode(enum.Enum):
    USE_C = "c"
    USE_P = "p"


class _Gammas:
    """Memoised Gamma_k lookup with Gamma_{-1} = 0."""

    def __init__(self, params: Params, cf: ClosedForm):
        self.params = params
        self.cf = cf
        self._cache: dict[int, float] = {-1: 0.0}

    def __getitem__(self, k: int) -> float:
        if k < -1:
            raise IndexError(f"Gamma_{k} is not defined")
        if k not in self._cache:
            self._cache[k] = gamma_n(self.params, self.cf, k).value
        return self._cache[k]


def _corner(gammas: _Gammas, n: int) -> Point:
    if n % 2 == 0:
        return Point(gammas[n], gammas[n - 1])
    return Point(gammas[n - 1], gammas[n])


def corner_points(params: Params, cf: ClosedForm, n_max: int) -> list[CornerPoint]:
    """P_0 ... P_{n_max} of the rectangular spiral."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    gammas = _Gammas(params, cf)
    return [CornerPoint(n, *_corner(gammas, n)) for n in range(n_max + 1)]


def segment_lengths(points: Sequence[CornerPoint]) -> list[float]:
    """Euclidean lengths of the arms P_{k-1} P_k."""
    if len(points) < 2:
        raise ValueError("need at least two corner points")
    return [
        math.hypot(q.x - p.x, q.y - p.y) for p, q in zip(points[:-1], points[1:])
    ]


def asymptote_slopes(classification: Classification) -> tuple[Fraction, Fraction]:
    """Slopes (-1/gamma, gamma) of the even and odd directional asymptotes.

    Returned as exact fractions of the floating-point gamma so that their
    product is exactly -1; wrap in ``float`` for plotting.
    """
    gamma = classification.gamma
    if gamma == 0.0:
        raise ZeroGamma("gamma = 0 has no asymptotic slopes")
    odd = Fraction(gamma)
    return -1 / odd, odd


def empirical_slope(points: Sequence[CornerPoint], n: int) -> float:
    """(Y_{n+4} - Y_n) / (X_{n+4} - X_n) from computed corner points."""
    p, q = points[n], points[n + 4]
    return (q.y - p.y) / (q.x - p.x)


def intersection_point(params: Params, cf: ClosedForm) -> Point:
    """Crossing point P* of the two orthogonal asymptotes."""
    return Point(gamma_constant(params, 0), gamma_constant(params, 1))


def _exceeds_one(params: Params, cf: ClosedForm) -> tuple[bool, bool]:
    alpha_big = abs(cf.alpha) > 1.0
    d_big = cf.p != 0.0 and abs(params.d) > 1.0
    return alpha_big, d_big


def star_is_attractor(params: Params, cf: ClosedForm) -> bool:
    """Whether P* is the common crossing of the asymptotes.

    True for inwinding spirals and for outwinding ones where exactly one of
    alpha, d exceeds one; with both above one the crossings drift.
    """
    cls = classify(params, cf)
    if cls.winding is Winding.INWINDING:
        return True
    alpha_big, d_big = _exceeds_one(params, cf)
    return alpha_big != d_big


def _line_crossing(p: Point, s: float, q: Point, t: float) -> Point:
    # y - p.y = s (x - p.x) and y - q.y = t (x - q.x)
    x = (q.y - p.y + s * p.x - t * q.x) / (s - t)
    return Point(x, p.y + s * (x - p.x))


def intersection_quadruple(params: Params, cf: ClosedForm, n: int) -> IntersectionResult:
    """Approximate asymptote crossings built from P_n ... P_{n+4}.

    Entry j intersects the line through P_{n+j} with the line through
    P_{n+j+1}, each drawn with its asymptotic slope (-1/gamma for even
    indices, gamma for odd ones).  Large n (>= 40 or so) is the useful regime.
    """
    cls = classify(params, cf)
    if not cls.gamma > 1.0 or cls.winding is Winding.CYCLIC:
        raise NotOutwinding(f"gamma = {cls.gamma!r} <= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    gamma = cls.gamma
    gammas = _Gammas(params, cf)
    corners = [_corner(gammas, m) for m in range(n, n + 5)]
    slopes = [(-1.0 / gamma if (n + j) % 2 == 0 else gamma) for j in range(5)]
    quad = tuple(
        _line_crossing(corners[j], slopes[j], corners[j + 1], slopes[j + 1])
        for j in range(4)
    )
    alpha_big, d_big = _exceeds_one(params, cf)
    return IntersectionResult(intersection_point(params, cf), quad, alpha_big != d_big)


def total_length_inwinding(params: Params, cf: ClosedForm) -> float:
    """Signed total arm length sum_{k>=0} G_k of an inwinding spiral."""
    cls = classify(params, cf)
    if cls.winding is not Winding.INWINDING:
        raise NotInwinding(f"gamma = {cls.gamma!r} is not below 1")
    a, b, c, d = params.a, params.b, params.c, params.d
    denom = a + b - 1.0
    _check_denominator(denom, params, "a + b - 1")
    value = (a - 1.0) * params.g0 - params.g1
    if cf.p != 0.0:
        value -= c * d * d / (1.0 - d)
    return value / denom


def _quarter_turn(n: int, i: int, samples: int) -> tuple[float, float]:
    """cos and sin of (n + i/N) pi/2, exact at the quadrant boundaries."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    quarter, rest = divmod(n * samples + i, samples)
    theta = rest / samples * (math.pi / 2.0)
    c, s = (1.0, 0.0) if rest == 0 else (math.cos(theta), math.sin(theta))
    q = quarter % 4
    if q == 0:
        return c, s
    if q == 1:
        return -s, c
    if q == 2:
        return -c, -s
    return s, -c


def _resolve_winding(params: Params, cf: ClosedForm, winding: Winding | None) -> Winding:
    if winding is None:
        winding = classify(params, cf).winding
    return Winding.INWINDING if winding is Winding.INWINDING else Winding.OUTWINDING


def arc_spec(
    params: Params,
    cf: ClosedForm,
    n: int,
    winding: Winding | None = None,
    samples: int = DEFAULT_SAMPLES,
) -> ArcSpec:
    """Centre and semi-axes of the n-th quarter-ellipse."""
    if n < 1:
        raise ValueError("arcs are numbered from 1")
    winding = _resolve_winding(params, cf, winding)
    G = lambda k: g_closed(cf, params, k)
    gammas = _Gammas(params, cf)
    phi = (n * math.pi / 2.0, (n + 1) * math.pi / 2.0)
    if winding is Winding.INWINDING:
        long_axis = abs(G(n + 4) - G(n + 2))
        short_axis = G(n + 3)
        e_x, e_y = (long_axis, short_axis) if n % 2 == 0 else (short_axis, long_axis)
        return ArcSpec(n, _corner(gammas, n + 4), n + 4, e_x, e_y, phi, samples)
    if n == 1:
        # Pinned so the arc runs from (0, G_1) to (G_0 - G_2, 0).
        return ArcSpec(1, Point(0.0, 0.0), None, G(2) - G(0), G(1), phi, samples)
    arm = G(n)
    diff = G(n + 1) - G(n - 1)
    e_x, e_y = (arm, diff) if n % 2 == 0 else (diff, arm)
    return ArcSpec(n, _corner(gammas, n - 2), n - 2, e_x, e_y, phi, samples)


def _sample_arc(spec: ArcSpec) -> list[tuple[float, float]]:
    cx, cy = spec.center
    out = []
    for i in range(spec.samples + 1):
        cos_phi, sin_phi = _quarter_turn(spec.n, i, spec.samples)
        out.append((cx + spec.e_x * cos_phi, cy + spec.e_y * sin_phi))
    return out


def arc_points_outwinding(
    params: Params, cf: ClosedForm, n: int, samples: int = DEFAULT_SAMPLES
) -> list[tuple[float, float]]:
    """N + 1 points on the n-th outwinding quarter-ellipse."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    return _sample_arc(arc_spec(params, cf, n, Winding.OUTWINDING, samples))


def arc_points_inwinding(
    params: Params, cf: ClosedForm, n: int, samples: int = DEFAULT_SAMPLES
) -> list[tuple[float, float]]:
    """N + 1 points on the n-th inwinding quarter-ellipse (centre P_{n+4})."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    cls = classify(params, cf)
    if cls.winding is not Winding.INWINDING:
        raise NotInwinding(f"gamma = {cls.gamma!r} is not below 1")
    return _sample_arc(arc_spec(params, cf, n, Winding.INWINDING, samples))


def arched_spiral(
    params: Params,
    cf: ClosedForm,
    n_arcs: int,
    samples: int = DEFAULT_SAMPLES,
    winding: Winding | None = None,
) -> list[SpiralSample]:
    """Arcs 1 ... n_arcs as tagged samples, ordered by (n, i)."""
    winding = _resolve_winding(params, cf, winding)
    out = []
    for n in range(1, n_arcs + 1):
        spec = arc_spec(params, cf, n, winding, samples)
        out.extend(SpiralSample(n, i, x, y) for i, (x, y) in enumerate(_sample_arc(spec)))
    return out


def ellipticity(params: Params, cf: ClosedForm, n: int, winding: Winding | None = None) -> float:
    """1 - (G_{n+1} - G_{n-1}) / G_n outwinding, 1 - G_{n+3} / |G_{n+4} - G_{n+2}| inwinding."""
    winding = _resolve_winding(params, cf, winding)
    G = lambda k: g_closed(cf, params, k)
    if winding is Winding.INWINDING:
        denom = abs(G(n + 4) - G(n + 2))
        if denom == 0.0:
            raise ZeroDenominator(f"G_{n + 4} = G_{n + 2}")
        return 1.0 - G(n + 3) / denom
    denom = G(n)
    if denom == 0.0:
        raise ZeroDenominator(f"G_{n} = 0")
    return 1.0 - (G(n + 1) - G(n - 1)) / denom


def ellipticity_limit(gamma: float, winding: Winding) -> float:
    """Large-n ellipticity when G_{n+1}/G_n tends to gamma.

    Outwinding: 1 - (gamma - 1/gamma).  Inwinding: 1 - gamma / |gamma^2 - 1|.
    """
    if winding is Winding.INWINDING:
        return 1.0 - gamma / abs(gamma * gamma - 1.0)
    return 1.0 - (gamma - 1.0 / gamma)


def arc_points_large_n(
    params: Params,
    cf: ClosedForm,
    n: int,
    samples: int = DEFAULT_SAMPLES,
    gamma: float | None = None,
) -> list[tuple[float, float]]:
    """Geometric-spiral approximation of the n-th outwinding arc.

    Semi-axes gamma^n and gamma^(n+1) replace the exact ones; only the
    growth rate is kept, not the amplitude of the dominant term.
    """
    if n < 3:
        raise ValueError("the large-n approximation needs n >= 3")
    if gamma is None:
        gamma = classify(params, cf).gamma
    gammas = _Gammas(params, cf)
    small, large = gamma**n, gamma ** (n + 1)
    if n % 2 == 0:
        center, e_x, e_y = Point(gammas[n - 2], gammas[n - 3]), small, large
    else:
        center, e_x, e_y = Point(gammas[n - 3], gammas[n - 2]), large, small
    phi = (n * math.pi / 2.0, (n + 1) * math.pi / 2.0)
    return _sample_arc(ArcSpec(n, center, n - 2, e_x, e_y, phi, samples))


def _real_power(base: float, exponent: float) -> float:
    if base < 0.0:
        raise NegativeBase(f"real power of negative base d = {base!r}")
    return base**exponent


def spatial_points(
    params: Params,
    cf: ClosedForm,
    planar: Sequence[SpiralSample],
    samples: int = DEFAULT_SAMPLES,
    z_mode: ZMode = ZMode.CUMULATIVE,
    amplitude_mode: AmplitudeMode = AmplitudeMode.USE_C,
) -> list[SpiralPoint3]:
    """Lift arc samples into space with a height chosen by ``z_mode``.

    LINEAR      z = n + i/N
    LOCAL_INPUT z = amp d^(n + i/N)
    CUMULATIVE  z = amp (d^(n + 1 + i/N) - 1) / (d - 1)   (amp (n + 1 + i/N) at d = 1)

    where amp is c or p according to ``amplitude_mode``.
    """
    z_mode = ZMode(z_mode)
    amplitude_mode = AmplitudeMode(amplitude_mode)
    amp = params.c if amplitude_mode is AmplitudeMode.USE_C else cf.p
    d = params.d
    out = []
    for s in planar:
        t = s.n + s.i / samples
        if z_mode is ZMode.LINEAR:
            z = t
        elif z_mode is ZMode.LOCAL_INPUT:
            z = amp * _real_power(d, t)
        elif abs(d - 1.0) <= EPS_ONE:
            z = amp * (t + 1.0)
        elif s.i == 0:
            z = amp * geometric_sum(d, s.n)
        else:
            z = amp * (_real_power(d, t + 1.0) - 1.0) / (d - 1.0)
        out.append(SpiralPoint3(s.n, s.i, s.x, s.y, z))
    return out
