"""Exact sojourn-time distributions of the Hadamard walk over Q(sqrt 2).

Scalars are exact; they cross the boundary as strings such as
"1/2*sqrt(2)" or as ``Qr2`` values.
"""

import json

from . import _core
from ._core import (
    DivisionByZero,
    ParseError,
    Qr2,
    gamma,
    pqrs,
    psi,
    run,
    verify,
)

__all__ = [
    "DivisionByZero",
    "ParseError",
    "Qr2",
    "dp",
    "expand",
    "first_return",
    "gamma",
    "measure",
    "pqrs",
    "psi",
    "run",
    "verify",
]


def expand(theorem, order):
    """Nonzero coefficients of a closed-form generating function."""
    return json.loads(_core.expand_json(theorem, order))


def dp(n_max, start=0):
    return json.loads(_core.dp_json(start, n_max))


def measure(kind, n, state=None):
    """kind is "A", "B", "classical-arcsine" or "classical-uniform".

    state is "a_re,a_im,b_re,b_im"; the default is T[1/sqrt 2, i/sqrt 2].
    """
    return json.loads(_core.measure_json(kind, n, state))


def first_return(n_max):
    return json.loads(_core.first_return_json(n_max))

