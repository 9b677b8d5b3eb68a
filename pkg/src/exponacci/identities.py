"""Product-difference identities and the substitution method.

Any identity valid for homogeneous (Horadam) numbers also holds for the
transformed numbers H_n = G_n - p d^n.  Identities are written as callables
``identity(seq, indices) -> (lhs, rhs)`` where ``seq`` maps an integer index
to a sequence value and carries the parameter set as ``seq.params``.

The fuzz harness evaluates everything at ``dps`` decimal digits through
mpmath (100 by default, enough for d^-20 with d near 0).  The closed form is unchanged; only the working precision rises.
Both sides of a product difference are differences of products of size
gamma^(2n+u+v), so double precision cannot resolve residuals of 1e-8
relative to the (much smaller) left side.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import mpmath
import numpy as np

from .core import (
    FIBONACCI,
    ClosedForm,
    Params,
    characteristic_roots,
    fundamental_h,
    g_closed,
    horadam_h,
    solve_closed_form,
)
from .sums import gamma_n

TOLERANCE = 1e-8
DEFAULT_DPS = 100
INDEX_CAP = 10


def relative_residual(lhs, rhs) -> float:
    """|lhs - rhs| / max(1, |lhs|) as a float."""
    return float(abs(lhs - rhs) / max(1, abs(lhs)))


class SubstitutedSequence:
    """n -> G_n - p d^n, the substitution that turns G into Horadam numbers."""

    def __init__(self, params: Params, cf: ClosedForm):
        self.params = params
        self.cf = cf

    def __call__(self, n: int):
        g = g_closed(self.cf, self.params, n)
        if self.cf.p == 0:
            return g
        return g - self.cf.p * self.params.d**n


class ClosedSequence:
    """n -> G_n, the plain closed form."""

    def __init__(self, params: Params, cf: ClosedForm):
        self.params = params
        self.cf = cf

    def __call__(self, n: int):
        return g_closed(self.cf, self.params, n)


# -- identities on a sequence evaluator -------------------------------------


def shannon_identity(seq, idx):
    n, u, v = idx
    H, b = seq, seq.params.b
    lhs = H(n + u) * H(n + v) - H(n + u + v) * H(n)
    rhs = (-b) ** n * (H(u) * H(v) - H(u + v) * H(0))
    return lhs, rhs


def catalan_identity(seq, idx):
    n, v = idx
    return shannon_identity(seq, (n, -v, v))


def docagne_identity(seq, idx):
    m, n = idx
    return shannon_identity(seq, (n, m - n, 1))


def tagiuri_identity(seq, idx):
    """F_{n+u} F_{n+v} - F_{n+u+v} F_n = (-1)^n F_u F_v (Fibonacci only)."""
    n, u, v = idx
    F = seq
    lhs = F(n + u) * F(n + v) - F(n + u + v) * F(n)
    rhs = (-1) ** n * F(u) * F(v)
    return lhs, rhs


def perturbed_shannon(seq, idx):
    """Negative control: Shannon with an off-by-one index on the left."""
    n, u, v = idx
    H, b = seq, seq.params.b
    lhs = H(n + u) * H(n + v) - H(n + u + v + 1) * H(n)
    rhs = (-b) ** n * (H(u) * H(v) - H(u + v) * H(0))
    return lhs, rhs


# -- the full product difference on G ----------------------------------------


def product_difference_lhs(params: Params, cf: ClosedForm, n: int, u: int, v: int):
    """G_{n+u} G_{n+v} - G_{n+u+v} G_n."""
    G = lambda k: g_closed(cf, params, k)
    return G(n + u) * G(n + v) - G(n + u + v) * G(n)


def product_difference_first_term(params: Params, cf: ClosedForm, n: int, u: int, v: int):
    """The homogeneous term computed two ways: (AB form, h_u h_v form)."""
    b, alpha, beta = params.b, cf.alpha, cf.beta
    ab_form = (
        (-1) ** (n + 1)
        * b**n
        * cf.cap_a
        * cf.cap_b
        * (alpha**u - beta**u)
        * (alpha**v - beta**v)
    )
    h_form = (
        (-b) ** n
        * (cf.h1 - cf.h0 * alpha)
        * (cf.h1 - cf.h0 * beta)
        * fundamental_h(params, u)
        * fundamental_h(params, v)
    )
    return ab_form, h_form


def product_difference_rhs(
    params: Params, cf: ClosedForm, n: int, u: int, v: int, form: str = "ab"
):
    """Right side of the full product-difference identity for G.

    ``form`` picks how the homogeneous term is computed ("ab" or "h").
    """
    ab_form, h_form = product_difference_first_term(params, cf, n, u, v)
    first = {"ab": ab_form, "h": h_form}[form]
    if cf.p == 0:
        return first
    d = params.d
    G = lambda k: g_closed(cf, params, k)
    braces = G(n + u) * d**-u + G(n + v) * d**-v - G(n + u + v) * d ** (-u - v) - G(n)
    return first + cf.p * d ** (n + u + v) * braces


def product_difference_identity(params: Params, cf: ClosedForm, idx):
    n, u, v = idx
    return product_difference_lhs(params, cf, n, u, v), product_difference_rhs(
        params, cf, n, u, v
    )


def shannon_check(params: Params, cf: ClosedForm, n: int, u: int, v: int) -> float:
    """Relative residual of the Shannon identity with H_n from the closed form."""
    H = lambda k: horadam_h(cf, params, k)
    lhs = H(n + u) * H(n + v) - H(n + u + v) * H(n)
    rhs = (-params.b) ** n * (H(u) * H(v) - H(u + v) * H(0))
    return relative_residual(lhs, rhs)


def substitution_check(identity: Callable, params: Params, cf: ClosedForm, indices) -> float:
    """Residual of a Horadam identity evaluated on G_n - p d^n."""
    lhs, rhs = identity(SubstitutedSequence(params, cf), indices)
    return relative_residual(lhs, rhs)


def gamma_difference(params: Params, cf: ClosedForm, idx):
    """Gamma_n - Gamma_{n-2} = (-1)^((n - nu)/2) G_n."""
    (n,) = idx
    nu = n % 2
    sign = -1 if ((n - nu) // 2) % 2 else 1
    lhs = gamma_n(params, cf, n).value - gamma_n(params, cf, n - 2).value
    return lhs, sign * g_closed(cf, params, n)


# -- fuzzing -------------------------------------------------------------------


def random_params(rng: np.random.Generator, margin: float = 0.05) -> Params:
    """Generic parameters: a, b in (0.1, 2), c in [0, 2], d in (0, 2) away from the roots."""
    while True:
        a = rng.uniform(0.1, 2.0)
        b = rng.uniform(0.1, 2.0)
        c = rng.uniform(0.0, 2.0)
        d = rng.uniform(0.0, 2.0)
        g0, g1 = rng.uniform(-5.0, 5.0, size=2)
        alpha, beta = characteristic_roots(Params(a, b, c, d, 0.0, 0.0))
        if d > 0.0 and abs(d - alpha) > margin and abs(d - beta) > margin:
            return Params(float(a), float(b), float(c), float(d), float(g0), float(g1))


def _indices(rng: np.random.Generator, k: int, lo: int = -INDEX_CAP, hi: int = INDEX_CAP):
    return tuple(int(x) for x in rng.integers(lo, hi + 1, size=k))


@dataclass(frozen=True)
class IdentityCase:
    name: str
    evaluate: Callable  # (params, cf, idx) -> (lhs, rhs)
    draw_indices: Callable  # rng -> idx
    fixed_params: Params | None = None


def _on_substituted(identity):
    return lambda params, cf, idx: identity(SubstitutedSequence(params, cf), idx)


def _on_closed(identity):
    return lambda params, cf, idx: identity(ClosedSequence(params, cf), idx)


CASES: dict[str, IdentityCase] = {
    "shannon": IdentityCase(
        "shannon", _on_substituted(shannon_identity), lambda rng: _indices(rng, 3)
    ),
    "product-difference": IdentityCase(
        "product-difference", product_difference_identity, lambda rng: _indices(rng, 3)
    ),
    "catalan": IdentityCase(
        "catalan", _on_substituted(catalan_identity), lambda rng: _indices(rng, 2)
    ),
    "docagne": IdentityCase(
        "docagne", _on_substituted(docagne_identity), lambda rng: _indices(rng, 2)
    ),
    "tagiuri": IdentityCase(
        "tagiuri",
        _on_closed(tagiuri_identity),
        lambda rng: _indices(rng, 3),
        fixed_params=FIBONACCI,
    ),
    "gamma-diff": IdentityCase(
        "gamma-diff", gamma_difference, lambda rng: _indices(rng, 1, 2, 40)
    ),
}

NEGATIVE_CONTROL = IdentityCase(
    "perturbed-shannon", _on_substituted(perturbed_shannon), lambda rng: _indices(rng, 3)
)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    samples: int
    max_rel_residual: float
    worst_case: tuple[Params, tuple[int, ...]]
    residuals: tuple[float, ...] = field(repr=False, default=())

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("a report needs at least one sample")

    def passed(self, tol: float = TOLERANCE) -> bool:
        return self.max_rel_residual < tol

    def failure_fraction(self, tol: float = TOLERANCE) -> float:
        return sum(r >= tol for r in self.residuals) / len(self.residuals)

    def line(self, tol: float = TOLERANCE) -> str:
        status = "ok" if self.passed(tol) else "FAIL"
        return (
            f"{self.name:<20} samples={self.samples:<6} "
            f"max_rel_residual={self.max_rel_residual:.3e} {status}"
        )


def _to_mp(params: Params) -> Params:
    return Params(*(mpmath.mpf(x) for x in params.as_tuple()))


def evaluate_case(case: IdentityCase, params: Params, idx, dps: int | None = DEFAULT_DPS) -> float:
    """Relative residual of one identity instance, optionally at raised precision."""
    if dps is None:
        lhs, rhs = case.evaluate(params, solve_closed_form(params), idx)
        return relative_residual(lhs, rhs)
    with mpmath.workdps(dps):
        mp_params = _to_mp(params)
        lhs, rhs = case.evaluate(mp_params, solve_closed_form(mp_params), idx)
        return relative_residual(lhs, rhs)


def fuzz_identity(
    case: IdentityCase | str,
    samples: int = 1000,
    seed: int = 0,
    dps: int | None = DEFAULT_DPS,
    params: Params | None = None,
) -> IdentityReport:
    """Evaluate an identity on ``samples`` random (params, indices) draws.

    ``params`` (or the case's fixed parameter set) pins the parameters so that
    only the indices are drawn.  ``dps=None`` evaluates in double precision.
    """
    if isinstance(case, str):
        case = CASES[case]
    rng = np.random.default_rng(seed)
    pinned = params if params is not None else case.fixed_params
    residuals = []
    worst = (-1.0, None, None)
    for _ in range(samples):
        sample_params = pinned if pinned is not None else random_params(rng)
        idx = case.draw_indices(rng)
        r = evaluate_case(case, sample_params, idx, dps)
        residuals.append(r)
        if r > worst[0]:
            worst = (r, sample_params, idx)
    return IdentityReport(
        name=case.name,
        samples=samples,
        max_rel_residual=worst[0],
        worst_case=(worst[1], worst[2]),
        residuals=tuple(residuals),
    )


def fuzz_all(
    names: Sequence[str] | None = None,
    samples: int = 1000,
    seed: int = 0,
    dps: int | None = DEFAULT_DPS,
    params: Params | None = None,
) -> list[IdentityReport]:
    names = list(CASES) if names is None else list(names)
    return [fuzz_identity(CASES[n], samples, seed, dps, params) for n in names]
