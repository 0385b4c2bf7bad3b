"""Exact arithmetic for the Ramanujan vector field in characteristic p.

Thin wrappers over the C++ core: polynomial payloads come back as plain
dicts in the same JSON schema the `rvf` CLI emits.
"""

import json
from fractions import Fraction

from ramanujanvf import _core
from ramanujanvf._core import (
    BoundExceededError,
    InvalidArgumentError,
    NotPrimeError,
    available_checks,
    deuring_bound,
    divisor_sigma,
    iteration_bound,
)

__all__ = [
    "BoundExceededError",
    "InvalidArgumentError",
    "NotPrimeError",
    "ab",
    "available_checks",
    "bernoulli",
    "deuring_bound",
    "divisor_sigma",
    "eisenstein",
    "iteration_bound",
    "rp",
    "ss",
    "verify",
]


def bernoulli(n):
    """n-th Bernoulli number as a Fraction (B_1 = -1/2 convention)."""
    return Fraction(_core.bernoulli(n))


def eisenstein(nu, terms=10):
    """First `terms` q-coefficients of the normalized E_nu, as Fractions."""
    return [Fraction(c) for c in _core.eisenstein(nu, terms)]


def ab(p):
    """The polynomials A, B with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1}."""
    return json.loads(_core.ab_json(p))


def rp(p, method="both"):
    """p-th power of the Ramanujan vector field; method: closed|iterate|both."""
    return json.loads(_core.rp_json(p, method))


def ss(p, method="both"):
    """Supersingular polynomial ss_p(t); method: kaneko-zagier|deuring|both."""
    return json.loads(_core.ss_json(p, method))


def verify(p, checks=()):
    """Run the verification suite for one prime; empty selection runs all."""
    return json.loads(_core.verify_json(p, list(checks)))
