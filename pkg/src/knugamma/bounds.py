"""Evaluable forms of the Beta-ratio and Beta-Gamma bounds.

All quantities are computed in log space and exponentiated at the end:
the ratio bounds involve powers like (x/c)^(x/c) that overflow in
linear space long before the ratios themselves do.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .beta import log_beta_knu
from .errors import DomainWindow, PoleHit
from .gamma import log_gamma_knu
from .params import Params


def _exp_sat(log_value: float) -> float:
    """exp that saturates to inf instead of raising; a bound that
    overflows double range is still a (useless but valid) bound."""
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf

__all__ = [
    "BoundReport",
    "chebyshev_beta_bound",
    "jensen_beta_bound",
    "ratio_bounds",
    "beta_gamma_upper",
    "novariable_upper",
]


def chebyshev_beta_bound(p: Params, x: float, y: float) -> Tuple[float, str]:
    """The bound k nu^3/(x y) on B_{k,nu}(x, y), with its direction.

    Synchronized arguments, (x - c)(y - c) > 0, give an *upper* bound
    (B <= k nu^3/(x y)); asynchronized ones give a lower bound.  On the
    boundary lines x = c or y = c both directions hold with equality
    (exactly: B(c, y) = nu^2/y = bound).
    """
    if not (x > 0.0 and y > 0.0):
        raise PoleHit(f"chebyshev_beta_bound requires x, y > 0, got ({x}, {y})")
    bound = p.k * p.nu**3 / (x * y)
    if x == p.c or y == p.c:
        direction = "equality"
    elif (x - p.c) * (y - p.c) > 0.0:
        direction = "upper"
    else:
        direction = "lower"
    return bound, direction


def jensen_beta_bound(p: Params, x: float, y: float) -> Optional[Tuple[float, str]]:
    """The bound (nu/k) (1/2)^((x+y)/c - 2) on B_{k,nu}(x, y).

    Lower on (0, c] x [2c, inf) and its mirror (convex integrand),
    upper on [c, 2c]^2 (concave integrand), absent elsewhere.
    """
    if not (x > 0.0 and y > 0.0):
        raise PoleHit(f"jensen_beta_bound requires x, y > 0, got ({x}, {y})")
    a, b = x / p.c, y / p.c
    bound = (p.nu / p.k) * 0.5 ** (a + b - 2.0)
    if (a <= 1.0 and b >= 2.0) or (a >= 2.0 and b <= 1.0):
        return bound, "lower"
    if 1.0 <= a <= 2.0 and 1.0 <= b <= 2.0:
        return bound, "upper"
    return None


@dataclass(frozen=True)
class BoundReport:
    """All five ratio bounds and the actual ratio
    B_{k,nu}(x2, y) / B_{k,nu}(x1, y) at one (x1, x2, y).

    Satisfies lower_T1 < actual_ratio < upper_T1, actual_ratio <
    upper_T2, and lower_T31 <= actual_ratio <= upper_T32.
    """

    lower_T1: float
    upper_T1: float
    upper_T2: float
    lower_T31: float
    upper_T32: float
    actual_ratio: float


def ratio_bounds(p: Params, x1: float, x2: float, y: float) -> BoundReport:
    if not (0.0 < x1 < x2):
        raise ValueError(f"ratio_bounds requires 0 < x1 < x2, got ({x1}, {x2})")
    if not (y > 0.0):
        raise PoleHit(f"ratio_bounds requires y > 0, got {y}")
    c = p.c
    b = y / c
    log_front = math.log((x2 + y) / (x1 + y))
    log_x_ratio = math.log(x1 / x2)

    log_lower_t1 = log_front + (b + 1.0) * log_x_ratio
    log_upper_t1 = log_front + log_x_ratio + b * math.log((x1 + y + c) / (x2 + y + c))
    log_upper_t2 = b * math.log((x1 + y) / (x2 + y))

    a1, a2 = x1 / c, x2 / c
    s1, s2 = (x1 + y) / c, (x2 + y) / c
    log_lower_t31 = (
        (a2 - 1.0) * math.log(a2)
        + (1.0 - a1) * math.log(a1)
        + (1.0 - s2) * math.log(s2)
        + (s1 - 1.0) * math.log(s1)
    )
    log_upper_t32 = (
        a2 * math.log(a2) - a1 * math.log(a1) - s2 * math.log(s2) + s1 * math.log(s1)
    )

    log_actual = log_beta_knu(p, x2, y) - log_beta_knu(p, x1, y)
    return BoundReport(
        lower_T1=_exp_sat(log_lower_t1),
        upper_T1=_exp_sat(log_upper_t1),
        upper_T2=_exp_sat(log_upper_t2),
        lower_T31=_exp_sat(log_lower_t31),
        upper_T32=_exp_sat(log_upper_t32),
        actual_ratio=_exp_sat(log_actual),
    )


def beta_gamma_upper(p: Params, x: float) -> float:
    """sqrt(pi) 2^(1 - 2x/c) (nu/k)^(1/2) G(x)/G(x + c/2): an upper
    bound for B_{k,nu}(x, y) valid for every y > x."""
    if not (x > 0.0):
        raise PoleHit(f"beta_gamma_upper requires x > 0, got {x}")
    c = p.c
    log_value = (
        0.5 * math.log(math.pi)
        + (1.0 - 2.0 * x / c) * math.log(2.0)
        + 0.5 * math.log(p.nu / p.k)
        + log_gamma_knu(p, x)
        - log_gamma_knu(p, x + 0.5 * c)
    )
    return _exp_sat(log_value)


def novariable_upper(p: Params, x: float) -> float:
    """(nu/k) sqrt(pi) 2^(1 - 2x/c): constant upper bound for
    B_{k,nu}(x, y), y > x, valid only on the window 1.5c <= x <= 2c."""
    c = p.c
    if not (1.5 * c <= x <= 2.0 * c):
        raise DomainWindow(
            f"novariable_upper valid only for {1.5 * c} <= x <= {2.0 * c}, got {x}"
        )
    return (p.nu / p.k) * math.sqrt(math.pi) * 2.0 ** (1.0 - 2.0 * x / c)
