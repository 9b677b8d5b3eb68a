"""Closed-form solution of G_n = a G_{n-1} + b G_{n-2} + c d^n.

The sequence is fixed by the six numbers ``(a, b, c, d, g0, g1)``.  Its
explicit solution is

    G_n = A alpha^n + B beta^n + p d^n = H_n + p d^n

where alpha > beta are the roots of lambda^2 - a lambda - b = 0, the particular
amplitude is p = c d^2 / (d^2 - a d - b) and H_n are homogeneous (Horadam)
numbers.  :func:`g_iterative` is the brute-force oracle the closed forms are
checked against.

The functions only use arithmetic operators, so a :class:`Params` holding
``mpmath.mpf`` values yields the same closed form at the working precision of
the active mpmath context (see :mod:`exponacci.identities`).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateExponentialBase,
    NonPositiveDiscriminant,
    UndefinedNegativePower,
    ZeroB,
)

EPS_CYC = 1e-12


@dataclass(frozen=True)
class Params:
    """Coefficients and initial values of one sequence instance."""

    a: float
    b: float
    c: float
    d: float
    g0: float
    g1: float

    @property
    def discriminant(self) -> float:
        return self.a * self.a + 4.0 * self.b

    @property
    def input_denominator(self) -> float:
        """d^2 - a d - b, which must stay away from zero (restriction 2)."""
        return self.d * self.d - self.a * self.d - self.b

    def restriction_tolerance(self) -> float:
        return 1e-9 * max(1.0, self.d * self.d, abs(self.a * self.d), abs(self.b))

    @property
    def restriction1_ok(self) -> bool:
        return self.discriminant > 0.0

    @property
    def restriction2_ok(self) -> bool:
        return abs(self.input_denominator) > self.restriction_tolerance()

    def homogeneous(self, h0: float, h1: float) -> "Params":
        """Same (a, b) with the input switched off and new initial values."""
        return replace(self, c=0.0, d=0.0, g0=h0, g1=h1)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.a, self.b, self.c, self.d, self.g0, self.g1)


FIBONACCI = Params(1.0, 1.0, 0.0, 0.0, 0.0, 1.0)
LUCAS = Params(1.0, 1.0, 0.0, 0.0, 2.0, 1.0)


@dataclass(frozen=True)
class ClosedForm:
    alpha: float
    beta: float
    p: float
    cap_a: float
    cap_b: float
    h0: float
    h1: float


class Winding(enum.Enum):
    OUTWINDING = "outwinding"
    INWINDING = "inwinding"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class Classification:
    gamma: float
    winding: Winding
    restriction1_ok: bool
    restriction2_ok: bool
    in_positive_domain: bool


def _sqrt(x):
    if isinstance(x, (float, int)):
        return math.sqrt(x)
    return x**0.5


def characteristic_roots(params: Params) -> tuple[float, float]:
    """Roots alpha > beta of lambda^2 - a lambda - b = 0."""
    disc = params.discriminant
    if not disc > 0.0:
        raise NonPositiveDiscriminant(
            f"restriction 1 violated: a^2 + 4b = {disc!r} must be positive"
        )
    root = _sqrt(disc)
    a = params.a
    # Pick the cancellation-free root first, recover the other from alpha*beta = -b.
    if a >= 0.0:
        alpha = (a + root) / 2.0
        beta = -params.b / alpha if alpha != 0.0 else (a - root) / 2.0
    else:
        beta = (a - root) / 2.0
        alpha = -params.b / beta if beta != 0.0 else (a + root) / 2.0
    return alpha, beta


def particular_amplitude(params: Params) -> float:
    if params.c == 0.0 or params.d == 0.0:
        return 0.0
    if not params.restriction2_ok:
        raise DegenerateExponentialBase(
            "restriction 2 violated: d^2 - a d - b = "
            f"{params.input_denominator!r} is numerically zero (d equals a root)"
        )
    return params.c * params.d * params.d / params.input_denominator


def solve_closed_form(params: Params) -> ClosedForm:
    """Derive alpha, beta, p, A, B and the transformed initial values.

    Raises
    ------
    NonPositiveDiscriminant
        If a^2 + 4b <= 0.
    DegenerateExponentialBase
        If c d^n is present (c, d nonzero) and d^2 - a d - b vanishes within
        the relative restriction tolerance.
    """
    alpha, beta = characteristic_roots(params)
    # Restriction 2 only matters while the input term c d^n is present.
    input_live = params.c != 0.0 and params.d != 0.0
    if input_live and not params.restriction2_ok:
        raise DegenerateExponentialBase(
            "restriction 2 violated: d^2 - a d - b = "
            f"{params.input_denominator!r} is numerically zero (d equals a root)"
        )
    p = particular_amplitude(params)
    h0 = params.g0 - p
    h1 = params.g1 - p * params.d
    gap = alpha - beta
    cap_a = (h1 - h0 * beta) / gap
    cap_b = -(h1 - h0 * alpha) / gap
    return ClosedForm(alpha, beta, p, cap_a, cap_b, h0, h1)


def g_iterative(params: Params, n: int) -> float:
    """G_n by literal forward iteration of the recurrence (the oracle)."""
    if n < 0:
        raise ValueError("g_iterative needs n >= 0")
    if n == 0:
        return params.g0
    a, b, c, d = params.a, params.b, params.c, params.d
    prev, cur = params.g0, params.g1
    dk = d
    for _ in range(2, n + 1):
        dk *= d
        prev, cur = cur, a * cur + b * prev + c * dk
    return cur


def iterate_sequence(params: Params, n_max: int) -> list[float]:
    """[G_0, ..., G_{n_max}] by forward iteration."""
    out = [params.g0, params.g1][: n_max + 1]
    a, b, c, d = params.a, params.b, params.c, params.d
    dk = d
    for _ in range(2, n_max + 1):
        dk *= d
        out.append(a * out[-1] + b * out[-2] + c * dk)
    return out


def _power(x: float, n: int) -> float:
    if n < 0 and x == 0.0:
        raise ZeroDivisionError
    return x**n


def _input_term(cf: ClosedForm, params: Params, n: int) -> float:
    if n < 0 and params.d == 0.0 and params.c != 0.0:
        raise UndefinedNegativePower(
            f"G_{n} needs d^{n} with d = 0 while c = {params.c!r} != 0"
        )
    if cf.p == 0.0:
        return 0.0
    return cf.p * params.d**n


def _homogeneous_term(cf: ClosedForm, params: Params, n: int) -> float:
    if n < 0 and params.b == 0.0:
        raise ZeroB(f"negative index {n} requires b != 0")
    return cf.cap_a * _power(cf.alpha, n) + cf.cap_b * _power(cf.beta, n)


def g_closed(cf: ClosedForm, params: Params, n: int) -> float:
    """G_n = A alpha^n + B beta^n + p d^n for any integer n."""
    return _homogeneous_term(cf, params, n) + _input_term(cf, params, n)


def g_negative_recursion(params: Params) -> tuple[float, float]:
    """(G_{-1}, G_{-2}) from running the recurrence backwards twice."""
    a, b, c, d = params.a, params.b, params.c, params.d
    if b == 0.0:
        raise ZeroB("G_{-1} and G_{-2} require b != 0")
    g0, g1 = params.g0, params.g1
    g_m1 = (g1 - a * g0 - c * d) / b
    g_m2 = ((a * a + b) * g0 - a * g1 + c * (a * d - b)) / (b * b)
    return g_m1, g_m2


def horadam_h(cf: ClosedForm, params: Params, n: int) -> float:
    """Transformed number H_n = G_n - p d^n (homogeneous part only)."""
    return _homogeneous_term(cf, params, n)


def fundamental_h(params: Params, n: int) -> float:
    """h_n = (alpha^n - beta^n) / (alpha - beta), i.e. G_n(a, b, 0, 0; 0, 1)."""
    alpha, beta = characteristic_roots(params)
    if n == 0:
        return 0.0
    if n < 0 and params.b == 0.0:
        raise ZeroB(f"negative index {n} requires b != 0")
    return (_power(alpha, n) - _power(beta, n)) / (alpha - beta)


def base_matrix(params: Params) -> np.ndarray:
    return np.array([[params.a, params.b], [1.0, 0.0]])


def matrix_power(params: Params, n: int) -> np.ndarray:
    """n-th power of [[a, b], [1, 0]] by repeated squaring."""
    if n < 1:
        raise ValueError("matrix_power needs n >= 1")
    result = np.eye(2)
    base = base_matrix(params)
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def decompose(params: Params, cf: ClosedForm, n: int) -> float:
    """G_n written through fundamental numbers h_n, h_{n-1} and the input."""
    if n < 1:
        raise ValueError("decompose needs n >= 1")
    h_n = fundamental_h(params, n)
    h_prev = fundamental_h(params, n - 1)
    b, d = params.b, params.d
    homogeneous = h_n * params.g1 + b * h_prev * params.g0
    if cf.p == 0.0:
        return homogeneous
    return homogeneous + cf.p * (d**n - d * h_n - b * h_prev)


def dominant_magnitude(params: Params, cf: ClosedForm) -> float:
    """gamma = max(|alpha|, |beta|, |d|).

    d only enters when the input term is actually present (p != 0); with
    c = 0 the base d has no influence on the sequence.
    """
    candidates = [abs(cf.alpha), abs(cf.beta)]
    if cf.p != 0.0:
        candidates.append(abs(params.d))
    return max(candidates)


def classify(params: Params, cf: ClosedForm) -> Classification:
    gamma = dominant_magnitude(params, cf)
    if abs(gamma - 1.0) <= EPS_CYC:
        winding = Winding.CYCLIC
    elif gamma > 1.0:
        winding = Winding.OUTWINDING
    else:
        winding = Winding.INWINDING
    in_domain = params.a > 0 and params.b > 0 and params.c >= 0 and params.d >= 0
    return Classification(
        gamma=gamma,
        winding=winding,
        restriction1_ok=params.restriction1_ok,
        restriction2_ok=params.restriction2_ok,
        in_positive_domain=in_domain,
    )


def solve(params: Params) -> tuple[ClosedForm, Classification]:
    """Convenience: closed form and classification in one call."""
    cf = solve_closed_form(params)
    return cf, classify(params, cf)
