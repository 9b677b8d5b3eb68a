"""Closed-form partial sums of the sequence.

``gamma_n`` is the alternating sum of the even-indexed (n even) or odd-indexed
(n odd) terms up to G_n,

    Gamma_n = sum_{k=0}^{(n - nu)/2} (-1)^k G_{2k + nu},    nu = n mod 2,

which supplies the corner-point coordinates of the rectangular spiral.  Two
independent closed-form routes are provided: the unified formula
(:func:`gamma_n`) and the four residue-class formulas (:func:`gamma_by_case`),
plus the substitution route through pure Horadam numbers
(:func:`gamma_substitution`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .core import (
    ClosedForm,
    Params,
    dominant_magnitude,
    g_closed,
    g_negative_recursion,
    horadam_h,
    iterate_sequence,
    solve_closed_form,
)
from .errors import DegenerateDenominator, ZeroB

EPS_ONE = 1e-12


class SumForm(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class GammaValue:
    n: int
    nu: int
    value: float

    def __post_init__(self):
        if self.nu != self.n % 2:
            raise ValueError(f"nu={self.nu} inconsistent with n={self.n}")

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class Divergent:
    """Marker for a non-convergent Gamma_n limit.

    For gamma >= 1, Gamma_n grows like (-1)^((n - nu)/2) gamma^(n + 2).
    """

    gamma: float
    nu: int

    def sign(self, n: int) -> int:
        return -1 if ((n - self.nu) // 2) % 2 else 1

    def growth(self, n: int) -> float:
        return self.sign(n) * self.gamma ** (n + 2)


def geometric_sum(d: float, n: int) -> float:
    """S_n(d) = 1 + d + ... + d^n; S_{-1}(d) is the empty sum 0."""
    if n < -1:
        raise ValueError("geometric_sum needs n >= -1")
    if n == -1:
        return 0.0
    if abs(d - 1.0) <= EPS_ONE:
        return float(n + 1)
    return (d ** (n + 1) - 1.0) / (d - 1.0)


def _check_denominator(value: float, params: Params, what: str) -> None:
    if abs(value) <= params.restriction_tolerance():
        raise DegenerateDenominator(f"{what} = {value!r} vanishes")


def partial_sum(params: Params, cf: ClosedForm, n: int, form: SumForm = SumForm.A) -> float:
    """sum_{k=0}^{n} G_k through one of three equivalent closed forms."""
    if n < 0:
        raise ValueError("partial_sum needs n >= 0")
    a, b, c, d = params.a, params.b, params.c, params.d
    denom = a + b - 1.0
    _check_denominator(denom, params, "a + b - 1")
    form = SumForm(form)
    G = lambda k: g_closed(cf, params, k)
    if form is SumForm.A:
        num = (a - 1.0) * params.g0 - params.g1 + b * G(n) + G(n + 1)
        return (num - c * d * d * geometric_sum(d, n - 1)) / denom
    if form is SumForm.B:
        num = (a - 1.0) * (params.g0 - G(n + 1)) - params.g1 + G(n + 2)
        return (num - c * d * d * geometric_sum(d, n)) / denom
    H = lambda k: horadam_h(cf, params, k)
    num = (a - 1.0) * cf.h0 - cf.h1 + b * H(n) + H(n + 1)
    return num / denom + cf.p * geometric_sum(d, n)


def alternating_sum(params: Params, cf: ClosedForm, n: int, form: SumForm = SumForm.A) -> float:
    """sum_{k=0}^{n} (-1)^k G_k through one of three equivalent closed forms."""
    if n < 0:
        raise ValueError("alternating_sum needs n >= 0")
    a, b, c, d = params.a, params.b, params.c, params.d
    denom = a - b + 1.0
    _check_denominator(denom, params, "a - b + 1")
    form = SumForm(form)
    sign = -1 if n % 2 else 1
    G = lambda k: g_closed(cf, params, k)
    if form is SumForm.A:
        num = (a + 1.0) * params.g0 - params.g1 + sign * (G(n + 1) - b * G(n))
        return (num + c * d * d * geometric_sum(-d, n - 1)) / denom
    if form is SumForm.B:
        num = (a + 1.0) * (params.g0 + sign * G(n + 1)) - params.g1 - sign * G(n + 2)
        return (num + c * d * d * geometric_sum(-d, n)) / denom
    H = lambda k: horadam_h(cf, params, k)
    num = (a + 1.0) * cf.h0 - cf.h1 + sign * (H(n + 1) - b * H(n))
    return num / denom + cf.p * geometric_sum(-d, n)


def _without_dead_input(params: Params) -> Params:
    # With d = 0 the input c d^n vanishes for every n >= 2, so only c = 0 is
    # consistent with the closed form at negative indices.
    if params.d == 0.0 and params.c != 0.0:
        return replace(params, c=0.0)
    return params


def _negative_terms(params: Params) -> tuple[float, float]:
    if params.b == 0.0:
        raise ZeroB("Gamma_n needs G_{-1} and G_{-2}, which require b != 0")
    return g_negative_recursion(_without_dead_input(params))


def _norm(params: Params) -> float:
    return params.a * params.a + (params.b + 1.0) ** 2


def _input_factor(params: Params) -> float:
    """c (d^2 + a d - b) / (d^2 + 1)."""
    d = params.d
    return params.c * (d * d + params.a * d - params.b) / (d * d + 1.0)


def _tail(params: Params, nu: int) -> float:
    """G_nu + b^2 G_{nu-2} - c (d^2 + ad - b)/(d^2 + 1) d^nu, the n-free part."""
    g_m1, g_m2 = _negative_terms(params)
    params = _without_dead_input(params)
    b = params.b
    if nu == 0:
        base = params.g0 + b * b * g_m2
    else:
        base = params.g1 + b * b * g_m1
    return base - _input_factor(params) * params.d**nu


def gamma_constant(params: Params, nu: int) -> float:
    """The n-independent part of Gamma_n for parity nu.

    This is the limit of Gamma_n for inwinding spirals and, as a point with
    nu = 0 and nu = 1 as coordinates, the asymptote crossing P*.
    """
    return _tail(params, nu) / _norm(params)


def gamma_n(params: Params, cf: ClosedForm, n: int) -> GammaValue:
    """Closed form of the alternating even/odd-indexed sum Gamma_n."""
    if n < 0:
        raise ValueError("gamma_n needs n >= 0")
    nu = n % 2
    sign = -1 if ((n - nu) // 2) % 2 else 1
    eff = _without_dead_input(params)
    b = params.b
    head = g_closed(cf, eff, n + 2) + b * b * g_closed(cf, eff, n)
    growing = sign * (head - _input_factor(eff) * eff.d ** (n + 2))
    value = (growing + _tail(params, nu)) / _norm(params)
    return GammaValue(n, nu, value)


def gamma_by_case(params: Params, cf: ClosedForm, n: int) -> float:
    """Gamma_n from the four residue-class (n mod 4) formulas."""
    if n < 0:
        raise ValueError("gamma_by_case needs n >= 0")
    g_m1, g_m2 = _negative_terms(params)
    eff = _without_dead_input(params)
    b, d = eff.b, eff.d
    k = _input_factor(eff)
    head = g_closed(cf, eff, n + 2) + b * b * g_closed(cf, eff, n)
    dn2 = d ** (n + 2)
    r = n % 4
    if r == 0:
        inner = head + eff.g0 + b * b * g_m2 - k * (dn2 + 1.0)
    elif r == 2:
        inner = -head + eff.g0 + b * b * g_m2 - k * (-dn2 + 1.0)
    elif r == 1:
        inner = head + eff.g1 + b * b * g_m1 - k * (dn2 + d)
    else:
        inner = -head + eff.g1 + b * b * g_m1 - k * (-dn2 + d)
    return inner / _norm(eff)


def gamma_horadam(params: Params, n: int) -> float:
    """Gamma_n for pure Horadam numbers (c = 0)."""
    if params.c != 0.0:
        raise ValueError("gamma_horadam needs c = 0; use gamma_n or gamma_substitution")
    if params.b == 0.0:
        raise ZeroB("gamma_horadam needs b != 0")
    cf = solve_closed_form(params)
    nu = n % 2
    sign = -1 if ((n - nu) // 2) % 2 else 1
    a, b = params.a, params.b
    H = lambda k: horadam_h(cf, params, k)
    h_m1 = (params.g1 - a * params.g0) / b
    h_m2 = ((a * a + b) * params.g0 - a * params.g1) / (b * b)
    tail = params.g0 + b * b * h_m2 if nu == 0 else params.g1 + b * b * h_m1
    return (sign * (H(n + 2) + b * b * H(n)) + tail) / _norm(params)


def gamma_substitution(params: Params, cf: ClosedForm, n: int) -> float:
    """Gamma_n via H_n = G_n - p d^n: the Horadam sum plus the input's share.

    sum (-1)^k p d^(2k+nu) = p d^nu ((-1)^((n-nu)/2) d^(n+2-nu) + 1) / (d^2 + 1).
    """
    nu = n % 2
    sign = -1 if ((n - nu) // 2) % 2 else 1
    horadam = gamma_horadam(params.homogeneous(cf.h0, cf.h1), n)
    if cf.p == 0.0:
        return horadam
    d = params.d
    correction = cf.p * (sign * d ** (n + 2) + d**nu) / (d * d + 1.0)
    return horadam + correction


def gamma_limit(params: Params, cf: ClosedForm, nu: int, gamma: float | None = None):
    """Large-n value of Gamma_n for the given parity.

    Returns a float when the spiral is inwinding (gamma < 1) and a
    :class:`Divergent` marker otherwise.
    """
    if nu not in (0, 1):
        raise ValueError("nu must be 0 or 1")
    if gamma is None:
        gamma = dominant_magnitude(params, cf)
    if gamma >= 1.0:
        return Divergent(gamma, nu)
    return gamma_constant(params, nu)


def gamma_brute(params: Params, n: int, values: list[float] | None = None) -> float:
    """Direct summation of (-1)^k G_{2k+nu} from iterated values (oracle)."""
    if values is None:
        values = iterate_sequence(params, n)
    nu = n % 2
    total = 0.0
    for k in range(0, (n - nu) // 2 + 1):
        term = values[2 * k + nu]
        total += -term if k % 2 else term
    return total
