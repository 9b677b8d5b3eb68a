"""Continuation of G_n to a real argument t >= 0.

With beta = -b/alpha and (-1)^t = exp(i pi t),

    G(t) = A alpha^t + B (b/alpha)^t cos(pi t) + p d^t
           + i B (b/alpha)^t sin(pi t)

so the imaginary part vanishes at every integer and G(n) = G_n there.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import EPS_CYC, ClosedForm, Params
from .errors import NegativeBase


@dataclass(frozen=True)
class ComplexSample:
    t: float
    re: float
    im: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


class CurveKind(enum.Enum):
    OSCILLATORY = "oscillatory"
    SPIRAL = "spiral"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class CurveClass:
    ratio: float
    kind: CurveKind


def _damping_ratio(params: Params, cf: ClosedForm) -> float:
    if not cf.alpha > 0.0:
        raise NegativeBase(f"alpha = {cf.alpha!r} <= 0: alpha^t is not real")
    ratio = params.b / cf.alpha
    if not ratio > 0.0:
        raise NegativeBase(f"b/alpha = {ratio!r} <= 0: (b/alpha)^t is not real")
    return ratio


def _cos_sin_pi(t: float) -> tuple[float, float]:
    # Reduce mod 2 first: fmod is exact, and integers map onto exact values.
    r = math.fmod(t, 2.0)
    if r == 0.0:
        return 1.0, 0.0
    if r == 1.0:
        return -1.0, 0.0
    return math.cos(math.pi * r), math.sin(math.pi * r)


def g_continuous(params: Params, cf: ClosedForm, t: float) -> ComplexSample:
    """Re and Im of G(t) for real t >= 0."""
    if t < 0.0:
        raise ValueError("G(t) is defined here for t >= 0 only")
    ratio = _damping_ratio(params, cf)
    if cf.p != 0.0 and params.d < 0.0:
        raise NegativeBase(f"d = {params.d!r} < 0: d^t is not real")
    cos_pt, sin_pt = _cos_sin_pi(t)
    oscillating = cf.cap_b * ratio**t
    re = cf.cap_a * cf.alpha**t + oscillating * cos_pt
    if cf.p != 0.0:
        re += cf.p * params.d**t
    return ComplexSample(t, re, oscillating * sin_pt)


def classify_curve(params: Params, cf: ClosedForm) -> CurveClass:
    """Oscillatory for 0 < b/alpha < 1, spiral for b/alpha > 1."""
    ratio = _damping_ratio(params, cf)
    if abs(ratio - 1.0) <= EPS_CYC:
        kind = CurveKind.BOUNDARY
    elif ratio < 1.0:
        kind = CurveKind.OSCILLATORY
    else:
        kind = CurveKind.SPIRAL
    return CurveClass(ratio, kind)


def sample_curve(params: Params, cf: ClosedForm, t_max: float, steps: int) -> list[ComplexSample]:
    """steps + 1 samples at t = t_max * k / steps, k = 0 .. steps."""
    if not t_max > 0.0:
        raise ValueError("t_max must be positive")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    return [g_continuous(params, cf, t_max * k / steps) for k in range(steps + 1)]


def winding_angle(samples: list[ComplexSample], center: complex | None = None) -> float:
    """Total signed angle (radians) swept by the sampled curve around ``center``.

    ``center`` defaults to the centroid of the samples.
    """
    if center is None:
        center = sum(s.value for s in samples) / len(samples)
    total = 0.0
    prev = None
    for s in samples:
        z = s.value - center
        if z == 0:
            continue
        angle = math.atan2(z.imag, z.real)
        if prev is not None:
            step = angle - prev
            step = (step + math.pi) % (2.0 * math.pi) - math.pi
            total += step
        prev = angle
    return total
