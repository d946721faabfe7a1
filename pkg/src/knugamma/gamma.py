"""The two-parameter deformed Gamma function.

The fast path reduces to the classical function through
``Gamma_{k,nu}(x) = (k/nu)^(x/(k nu) - 1) * Gamma(x/(k nu))``; the
defining limit, integral, and product representations live in
:mod:`knugamma.oracle` as independent cross-checks.
"""

import math
from dataclasses import dataclass

from . import scalar
from .errors import Overflow, PoleHit
from .params import Params

__all__ = [
    "GammaValue",
    "log_gamma_knu",
    "gamma_knu",
    "pochhammer",
    "param_transform",
    "recip_gamma_product",
    "stirling_approx",
]


@dataclass(frozen=True)
class GammaValue:
    """Overflow-safe carrier: ``value`` may be ``inf`` for large
    arguments while ``log_value`` stays finite."""

    log_value: float
    value: float


def log_gamma_knu(p: Params, x: float) -> float:
    """ln Gamma_{k,nu}(x) for x > 0; the workhorse for every product or
    ratio of deformed Gamma values."""
    if not (x > 0.0):
        raise PoleHit(f"Gamma_{{k,nu}} pole set is x <= 0; got x={x}")
    u = x / p.c
    return (u - 1.0) * math.log(p.r) + scalar.ln_gamma(u)


def gamma_knu(p: Params, x: float) -> GammaValue:
    """Gamma_{k,nu}(x) for x > 0, in both linear and log form."""
    log_value = log_gamma_knu(p, x)
    try:
        value = math.exp(log_value)
    except OverflowError:
        value = math.inf
    return GammaValue(log_value=log_value, value=value)


def pochhammer(x: float, n: int, a: float) -> float:
    """Shifted factorial (x)_{n,a} = x (x+a) ... (x+(n-1)a); the empty
    product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"pochhammer requires n >= 0, got {n}")
    result = 1.0
    for j in range(n):
        result *= x + j * a
        if math.isinf(result):
            raise Overflow(f"pochhammer({x}, {n}, {a}) exceeds double range")
    return result


def param_transform(from_p: Params, to_p: Params, x: float) -> float:
    """Gamma_{to}(x) computed by rescaling an evaluation of Gamma_{from}:

        Gamma_{l,mu}(x) = (l*nu/(k*mu))^(x/(l*mu)-1)
                          * Gamma_{k,nu}(k*nu*x/(l*mu))

    with (k, nu) = from and (l, mu) = to.  Agrees with a direct
    evaluation to full precision; useful as a consistency check and to
    reuse tabulated values under parameter changes.
    """
    if not (x > 0.0):
        raise PoleHit(f"param_transform requires x > 0, got x={x}")
    factor = (to_p.k * from_p.nu) / (from_p.k * to_p.nu)
    exponent = x / to_p.c - 1.0
    log_value = exponent * math.log(factor) + log_gamma_knu(from_p, from_p.c * x / to_p.c)
    try:
        return math.exp(log_value)
    except OverflowError:  # saturate like gamma_knu's linear carrier
        return math.inf


def recip_gamma_product(p: Params, x: float, n_terms: int) -> float:
    """Truncated product form of 1/Gamma_{k,nu}(x):

        nu^(x/c-1) k^(-x/c) (x/nu) e^(gamma x/c)
            * prod_{j=1..n} (1 + x/(j c)) e^(-x/(j c))

    Converges like O(1/n_terms).  Accumulated in log space (log1p per
    factor) so long products stay exact.
    """
    if not (x > 0.0):
        raise PoleHit(f"recip_gamma_product requires x > 0, got x={x}")
    if n_terms < 1:
        raise ValueError(f"recip_gamma_product requires n_terms >= 1, got {n_terms}")
    u = x / p.c
    log_pref = (u - 1.0) * math.log(p.nu) - u * math.log(p.k) + math.log(x / p.nu)
    log_pref += scalar.EULER_GAMMA * u
    acc = 0.0
    for j in range(1, n_terms + 1):
        w = x / (j * p.c)
        acc += math.log1p(w) - w
    return math.exp(log_pref + acc)


def stirling_approx(p: Params, x: float) -> float:
    """Leading Stirling-type term for Gamma_{k,nu}(x):

        sqrt(2 pi) (k/nu)^(x/c - 1) (x/c)^(x/c - 1/2) e^(-x/c),  c = k nu.

    No remainder is included; the relative error decays like O(c/x) and
    equals the classical Stirling error at the reduced argument x/c.
    """
    if not (x > 0.0):
        raise PoleHit(f"stirling_approx requires x > 0, got x={x}")
    u = x / p.c
    log_value = (
        0.5 * math.log(2.0 * math.pi)
        + (u - 1.0) * math.log(p.r)
        + (u - 0.5) * math.log(u)
        - u
    )
    try:
        return math.exp(log_value)
    except OverflowError:
        raise Overflow(f"stirling_approx({p.k}, {p.nu}, {x}) exceeds double range") from None
