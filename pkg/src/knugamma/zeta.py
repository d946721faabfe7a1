"""Deformed Riemann and Hurwitz zeta functions (series fast path).

Domains are strict, with typed errors and no analytic continuation:
the plain zeta needs x > k nu, the Hurwitz form needs x > 0 and
s > k nu.  At s = (m+1) k nu the Hurwitz form bridges to the deformed
polygamma: zeta_{k,nu}(x, (m+1)c) = ((-1)^(m+1)/m!) Psi^(m)_{k,nu}(x).
"""

from . import scalar
from .errors import DivergentSeries, PoleHit
from .params import Params

__all__ = ["zeta_knu", "hurwitz_knu"]


def zeta_knu(p: Params, x: float) -> float:
    """zeta_{k,nu}(x) = sum_{n>=1} (n c)^(-x/c) = c^(-x/c) zeta(x/c)."""
    if not (x > p.c):
        raise DivergentSeries(f"zeta_knu requires x > k*nu = {p.c}, got x={x}")
    s = x / p.c
    return p.c ** (-s) * scalar.riemann_zeta(s)


def hurwitz_knu(p: Params, x: float, s: float) -> float:
    """zeta_{k,nu}(x, s) = sum_{n>=0} (x + n c)^(-s/c)
    = c^(-s/c) zeta(s/c, x/c)."""
    if not (x > 0.0):
        raise PoleHit(f"hurwitz_knu requires x > 0, got x={x}")
    if not (s > p.c):
        raise DivergentSeries(f"hurwitz_knu requires s > k*nu = {p.c}, got s={s}")
    sc = s / p.c
    return p.c ** (-sc) * scalar.hurwitz_zeta(sc, x / p.c)
