"""Generalized Fibonacci (exponacci) numbers G_n = a G_{n-1} + b G_{n-2} + c d^n.

Closed forms, sums, identities, spiral geometry and the real-argument
continuation, each checked against brute-force iteration.
"""
from .core import (
    FIBONACCI,
    LUCAS,
    Classification,
    ClosedForm,
    Params,
    Winding,
    classify,
    g_closed,
    g_iterative,
    iterate_sequence,
    solve,
    solve_closed_form,
)
from .errors import ExponacciError

__all__ = [
    "FIBONACCI",
    "LUCAS",
    "Classification",
    "ClosedForm",
    "ExponacciError",
    "Params",
    "Winding",
    "classify",
    "g_closed",
    "g_iterative",
    "iterate_sequence",
    "solve",
    "solve_closed_form",
]

__version__ = "0.1.0"
