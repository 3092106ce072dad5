"""Gamma, Riemann zeta and the fermionic power integrals used by the expansions."""

from __future__ import annotations

import math

from scipy import special as _sp
from scipy.integrate import quad

__all__ = ["gamma_fn", "log_gamma", "riemann_zeta", "lambda_integral"]

# Gamma overflows IEEE doubles just above x = 171.62; beyond that only the log
# is representable.
_GAMMA_OVERFLOW = 171.62


def gamma_fn(x: float) -> float:
    """Gamma(x) for x > 0; +inf when the result exceeds the float range."""
    if not x > 0.0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    if x > _GAMMA_OVERFLOW:
        return math.inf
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def riemann_zeta(s: float) -> float:
    """Riemann zeta on the real axis for s > 1."""
    if not s > 1.0:
        raise ValueError(f"riemann_zeta requires s > 1, got {s}")
    return float(_sp.zeta(s, 1))


def _fermi_integrand(u: float, mu: int, nu: int) -> float:
    # u^mu / (e^u + 1)^nu without overflow: (e^u+1)^nu = e^{nu(u + log1p(e^-u))}
    if u <= 0.0:
        return 0.0
    return math.exp(mu * math.log(u) - nu * (u + math.log1p(math.exp(-u))))


def lambda_integral(mu: int, nu: int) -> float:
    """int_0^infty u^mu / (e^u + 1)^nu du by adaptive quadrature.

    The integrand decays like u^mu e^{-nu u}; the cut U is chosen so the
    analytic tail bound Gamma(mu+1, nu U)/nu^(mu+1) is far below the target
    relative accuracy of 1e-10.
    """
    if not (isinstance(mu, int) and mu >= 0):
        raise ValueError(f"mu must be a nonnegative integer, got {mu!r}")
    if not (isinstance(nu, int) and nu >= 1):
        raise ValueError(f"nu must be a positive integer, got {nu!r}")
    upper = (60.0 + 5.0 * mu) / nu + 60.0
    val, err = quad(
        _fermi_integrand, 0.0, upper, args=(mu, nu), epsabs=0.0, epsrel=1e-13, limit=200
    )
    # Tail: int_U^inf u^mu e^{-nu u} du = Gamma(mu+1, nu U) / nu^(mu+1).
    tail = float(
        _sp.gammaincc(mu + 1, nu * upper) * _sp.gamma(mu + 1) / nu ** (mu + 1)
    )
    if tail + err > 1e-10 * abs(val):
        raise ArithmeticError(
            f"lambda_integral({mu},{nu}) did not reach 1e-10 relative accuracy"
        )
    return val + tail
