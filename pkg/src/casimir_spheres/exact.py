"""Exact interaction free energy of two concentric spheres.

The TE or TM contribution at temperature T is the Matsubara sum

    E = T sum_l d_l(D) [ f_l(0)/2 + sum_{p>=1} f_l(xi_p) ],    xi_p = 2 pi p T,

with f_l(xi) = ln(1 - M_l(xi)) built from Robin combinations of I_nu and
K_nu at the two radii; at T = 0 the sum over p becomes the integral

    E_0 = 1/(2 pi) sum_l d_l(D) int_0^infty f_l(xi) dxi.

Both series converge geometrically in l at rate exp(-2 nu log(a2/a1)); the
stopping rules certify the discarded tails and fold them into the error
estimate.  All reductions run in a fixed order (ascending l, ascending p)
with compensated accumulation, so results are reproducible bit-for-bit.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy import special as _sp
from scipy.integrate import IntegrationWarning, quad

from .bessel import robin_combination
from .errors import NonConvergenceError, PrecisionLossError
from .geometry import EnergyResult, Geometry, TruncationPolicy
from .modes import (BoundaryPair, Channel, bc_coefficients, degeneracy_polynomial,
                    nu as nu_of)
from .signedlog import SignedLog

__all__ = [
    "m_ratio",
    "f_l",
    "classical_term",
    "free_energy",
    "zero_T_energy",
    "thermal_correction",
    "force",
]

_CONSECUTIVE_SMALL = 5  # l-blocks below tolerance required before stopping


class _Kahan:
    __slots__ = ("s", "c")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0

    def add(self, x: float) -> None:
        y = x - self.c
        t = self.s + y
        self.c = (t - self.s) - y
        self.s = t

    @property
    def value(self) -> float:
        return self.s


class _LTerm:
    """Everything needed to evaluate f_l at one angular number."""

    __slots__ = ("nu", "r21", "ab1", "ab2", "pref", "homog", "alpha_log")

    def __init__(self, geometry: Geometry, bc_pair: BoundaryPair,
                 channel: Channel, l: int):
        self.nu = nu_of(l, geometry.dim)
        self.r21 = geometry.a2 / geometry.a1
        a1c = bc_coefficients(channel, bc_pair.inner, geometry.dim)
        a2c = bc_coefficients(channel, bc_pair.outer, geometry.dim)
        self.ab1 = (float(a1c[0]), float(a1c[1]))
        self.ab2 = (float(a2c[0]), float(a2c[1]))
        self.homog = bc_pair.is_homogeneous
        self.alpha_log = geometry.alpha_log
        if self.homog:
            self.pref = 1.0
        else:
            n = Fraction(self.nu)
            self.pref = float((a1c[0] + a1c[1] * n) * (a2c[0] - a2c[1] * n)
                              / ((a1c[0] - a1c[1] * n) * (a2c[0] + a2c[1] * n)))

    def m_signedlog(self, u: float) -> SignedLog:
        """M_l as a SignedLog; u = a1 * xi."""
        u2 = self.r21 * u
        a1, b1 = self.ab1
        a2, b2 = self.ab2
        num = robin_combination(a1, b1, self.nu, u, "I") \
            * robin_combination(a2, b2, self.nu, u2, "K")
        den = robin_combination(a2, b2, self.nu, u2, "I") \
            * robin_combination(a1, b1, self.nu, u, "K")
        return num / den

    def f0(self) -> float:
        s = -2.0 * self.nu * self.alpha_log
        if self.homog:
            return math.log(-math.expm1(s))
        return math.log1p(-self.pref * math.exp(s))

    def f(self, u: float) -> float:
        """f_l at u = a1*xi > 0; the u -> 0 limit is f0."""
        if u <= 0.0:
            return self.f0()
        return _log_one_minus(self.m_signedlog(u))

    def decay_exponent(self, u: float) -> float:
        """g(u) = 2 nu [eta(r21 u/nu) - eta(u/nu)]; |M| ~ exp(-g)."""
        n = self.nu
        return 2.0 * (math.hypot(n, self.r21 * u) - math.hypot(n, u)
                      + n * math.log((self.r21 * u / (n + math.hypot(n, self.r21 * u)))
                                     / (u / (n + math.hypot(n, u)))))

    def decay_rate(self, u: float) -> float:
        """g'(u) = 2 [sqrt(nu^2 + (r21 u)^2) - sqrt(nu^2 + u^2)] / u."""
        n = self.nu
        return 2.0 * (math.hypot(n, self.r21 * u) - math.hypot(n, u)) / u


def _log_one_minus(m: SignedLog) -> float:
    """ln(1 - M) from the SignedLog of M, stable near M = 1 and for M < -1."""
    if m.sign == 0:
        return 0.0
    if m.sign < 0:
        # 1 + |M|: guard exp overflow for large positive logs.
        if m.log > 35.0:
            return m.log + math.log1p(math.exp(-m.log))
        return math.log1p(math.exp(m.log))
    if m.log >= 0.0:
        raise PrecisionLossError(
            f"reflection coefficient reached 1 within float resolution (log={m.log})")
    if m.log > -0.693:
        one_minus = -math.expm1(m.log)
        if one_minus < 1e-12:
            raise PrecisionLossError(
                f"1 - M underflowed the supported relative tolerance ({one_minus})")
        return math.log(one_minus)
    return math.log1p(-math.exp(m.log))


def m_ratio(l: int, geometry: Geometry, bc_pair: BoundaryPair,
            channel: Channel, xi: float) -> float:
    """The reflection-coefficient product M_l at imaginary frequency xi > 0."""
    if not xi > 0.0:
        raise ValueError(f"xi must be positive, got {xi}")
    ctx = _LTerm(geometry, bc_pair, channel, l)
    return ctx.m_signedlog(geometry.a1 * xi).value()


def f_l(l: int, geometry: Geometry, bc_pair: BoundaryPair,
        channel: Channel, xi: float) -> float:
    """ln(1 - M_l(xi)); at xi = 0 the closed small-argument form is used."""
    if xi < 0.0:
        raise ValueError(f"xi must be >= 0, got {xi}")
    ctx = _LTerm(geometry, bc_pair, channel, l)
    if xi == 0.0:
        return ctx.f0()
    return ctx.f(geometry.a1 * xi)


def _l_tail_bound(term: float, nu_val: float, power: float, alpha: float) -> float:
    """Certified bound on sum_{l>L} |t_l| from |t_l| <= K nu^power e^{-2 alpha nu}.

    K is calibrated on the last computed term; the sum is bounded by the
    integral Gamma(power+1, 2 alpha nu_L) / (2 alpha)^(power+1).
    """
    if term == 0.0:
        return 0.0
    k = abs(term) / (nu_val ** power * math.exp(-2.0 * alpha * nu_val))
    a = power + 1.0
    x = 2.0 * alpha * nu_val
    log_tail = math.log(k) + math.lgamma(a) - a * math.log(2.0 * alpha) \
        + math.log(max(float(_sp.gammaincc(a, x)), 1e-300))
    return math.exp(min(log_tail, 700.0))


def _channel_pairs(channel: Optional[Channel]):
    return (channel,) if channel is not None else (Channel.TE, Channel.TM)


def classical_term(geometry: Geometry, bc_pair: BoundaryPair,
                   channel: Optional[Channel] = None,
                   policy: TruncationPolicy = TruncationPolicy()) -> EnergyResult:
    """Zeroth-Matsubara part of the free energy, per unit temperature.

    An elementary series: (1/2) sum_l d_l(D) ln(1 - pref_l (a1/a2)^(2 nu)).
    Multiply by T to obtain the high-temperature (classical) energy.
    """
    alpha = geometry.alpha_log
    dim = geometry.dim
    per_channel: dict[str, float] = {}
    total = _Kahan()
    err = 0.0
    l_used = 0
    block = 65536
    for ch in _channel_pairs(channel):
        dpoly = degeneracy_polynomial(ch, dim)
        ctx1 = _LTerm(geometry, bc_pair, ch, 1)
        acc = _Kahan()
        lo = 1
        while True:
            hi = min(lo + block - 1, policy.l_max_hard)
            lv = np.arange(lo, hi + 1, dtype=np.float64)
            nu_v = lv + (dim - 2) / 2.0
            d_v = dpoly(nu_v)
            if ctx1.homog:
                f0 = np.log(-np.expm1(-2.0 * nu_v * alpha))
            else:
                a1, b1 = ctx1.ab1
                a2, b2 = ctx1.ab2
                pref = ((a1 + b1 * nu_v) * (a2 - b2 * nu_v)
                        / ((a1 - b1 * nu_v) * (a2 + b2 * nu_v)))
                f0 = np.log1p(-pref * np.exp(-2.0 * nu_v * alpha))
            terms = 0.5 * d_v * f0
            contrib = float(np.sum(terms))
            acc.add(contrib)
            significant = np.nonzero(np.abs(terms) > 1e-16 * abs(acc.value))[0]
            if significant.size:
                l_used = max(l_used, lo + int(significant[-1]))
            last_term = 0.5 * d_v[-1] * f0[-1]
            tail = _l_tail_bound(last_term, nu_v[-1], dim - 2, alpha)
            if tail < policy.rel_tol * abs(acc.value) * 0.25 and abs(last_term) \
                    < policy.rel_tol * abs(acc.value):
                err += tail
                break
            if hi >= policy.l_max_hard:
                raise NonConvergenceError(
                    f"classical term hit l_max_hard={policy.l_max_hard} "
                    f"before reaching rel_tol={policy.rel_tol}",
                    partial=acc.value)
            lo = hi + 1
        per_channel[ch.value] = acc.value
        total.add(acc.value)
    value = total.value
    err += 8.0 * np.finfo(float).eps * abs(value)
    return EnergyResult(value=value, per_channel=per_channel, l_used=l_used,
                        p_used=0, error_estimate=err, temperature=None)


def _matsubara_block(ctx: _LTerm, a1T: float, rel_tol: float,
                     p_max: int) -> tuple[float, float, int]:
    """f0/2 + sum_p f(u_p) for one l, with certified p-tail bound."""
    du = 2.0 * math.pi * a1T
    acc = _Kahan()
    acc.add(0.5 * ctx.f0())
    p = 1
    tail = math.inf
    while True:
        u = du * p
        fv = ctx.f(u)
        acc.add(fv)
        rate = ctx.decay_rate(u)
        r = math.exp(-rate * du)
        tail = abs(fv) * r / (1.0 - r) if r < 1.0 else math.inf
        if tail < rel_tol * max(abs(acc.value), 1e-300):
            break
        if p >= p_max:
            raise NonConvergenceError(
                f"Matsubara sum hit p_max_hard={p_max} (l-order nu={ctx.nu})",
                partial=acc.value)
        p += 1
    return acc.value, tail, p


def free_energy(geometry: Geometry, bc_pair: BoundaryPair,
                channel: Optional[Channel], T: float,
                policy: TruncationPolicy = TruncationPolicy()) -> EnergyResult:
    """Interaction free energy at temperature T > 0 (units of 1/a1 natural)."""
    if not T > 0.0:
        raise ValueError(f"free_energy requires T > 0, got {T}; use zero_T_energy at T=0")
    a1T = geometry.a1 * T
    dim = geometry.dim
    alpha = geometry.alpha_log
    per_channel: dict[str, float] = {}
    l_used = p_used = 0
    err_total = 0.0
    for ch in _channel_pairs(channel):
        dpoly = degeneracy_polynomial(ch, dim)
        acc = _Kahan()
        err = 0.0
        small_run = 0
        l = 1
        while True:
            ctx = _LTerm(geometry, bc_pair, ch, l)
            block, ptail, p = _matsubara_block(ctx, a1T, policy.rel_tol / 20.0,
                                               policy.p_max_hard)
            d_l = float(dpoly(ctx.nu))
            term = T * d_l * block
            acc.add(term)
            err += T * d_l * ptail
            p_used = max(p_used, p)
            l_used = max(l_used, l)
            small = abs(term) < policy.rel_tol * abs(acc.value)
            small_run = small_run + 1 if small else 0
            ltail = _l_tail_bound(term, ctx.nu, dim - 2, alpha)
            certified = ltail < policy.rel_tol * abs(acc.value) * 0.5
            if small_run >= _CONSECUTIVE_SMALL and certified:
                err += ltail
                break
            if policy.tail_extrapolation and small_run >= 1 and certified \
                    and ltail + abs(term) < policy.rel_tol * abs(acc.value) * 0.5:
                err += ltail
                break
            if l >= policy.l_max_hard:
                raise NonConvergenceError(
                    f"angular sum hit l_max_hard={policy.l_max_hard}",
                    partial=acc.value)
            l += 1
        per_channel[ch.value] = acc.value
        err_total += err
    value = sum(per_channel.values())
    err_total += 8.0 * np.finfo(float).eps * abs(value)
    if err_total > policy.rel_tol * abs(value):
        raise NonConvergenceError(
            f"free energy error estimate {err_total:.3e} exceeds "
            f"rel_tol * |E| = {policy.rel_tol * abs(value):.3e}", partial=value)
    return EnergyResult(value=value, per_channel=per_channel, l_used=l_used,
                        p_used=p_used, error_estimate=err_total, temperature=T)


def _pick_cut(ctx: _LTerm, ftol: float) -> float:
    """Upper cut X with |f(X)| below ftol, solved from the decay exponent."""
    target = math.log(max(1.0 + abs(ctx.pref), 2.0) / ftol)
    g0 = 2.0 * ctx.nu * math.log(ctx.r21)
    x = max(ctx.nu, (target + g0) / (2.0 * (ctx.r21 - 1.0) / (1.0 + 0.5 * (ctx.r21 - 1.0))))
    for _ in range(8):
        gap = target - (ctx.decay_exponent(x) - g0)
        if gap <= 0.0:
            break
        x += gap / ctx.decay_rate(x) + 1.0
    while abs(ctx.f(x)) > ftol:
        x *= 1.3
    return x


def _zero_t_integral(ctx: _LTerm, epsabs: float, epsrel: float) -> tuple[float, float]:
    """int_0^infty f du with a certified exponential tail bound beyond the cut."""
    kappa_inf = 2.0 * (ctx.r21 - 1.0)
    ftol = max(epsabs * kappa_inf / 4.0, 1e-240)
    x_cut = _pick_cut(ctx, ftol)
    pts = [p for p in (0.5 * ctx.nu, ctx.nu, 2.0 * ctx.nu) if 0.0 < p < x_cut]
    with warnings.catch_warnings():
        # Near machine precision QUADPACK reports the roundoff limit through a
        # warning; the returned error estimate already accounts for it.
        warnings.simplefilter("ignore", IntegrationWarning)
        val, qerr = quad(ctx.f, 0.0, x_cut, points=pts or None, limit=300,
                         epsabs=epsabs, epsrel=epsrel)
    tail = abs(ctx.f(x_cut)) / ctx.decay_rate(x_cut)
    return val, qerr + tail


def zero_T_energy(geometry: Geometry, bc_pair: BoundaryPair,
                  channel: Optional[Channel] = None,
                  policy: TruncationPolicy = TruncationPolicy()) -> EnergyResult:
    """Vacuum (T = 0) interaction energy: (1/2 pi) sum_l d_l int_0^inf f_l."""
    dim = geometry.dim
    alpha = geometry.alpha_log
    inv_2pi_a1 = 1.0 / (2.0 * math.pi * geometry.a1)
    per_channel: dict[str, float] = {}
    l_used = 0
    err_total = 0.0
    for ch in _channel_pairs(channel):
        dpoly = degeneracy_polynomial(ch, dim)
        acc = _Kahan()
        err = 0.0
        small_run = 0
        l = 1
        scale = None
        while True:
            ctx = _LTerm(geometry, bc_pair, ch, l)
            d_l = float(dpoly(ctx.nu))
            if scale is None:
                integral, ierr = _zero_t_integral(ctx, epsabs=0.0,
                                                  epsrel=policy.rel_tol / 10.0)
                scale = abs(d_l * integral)
            else:
                epsabs = max(policy.rel_tol * max(abs(acc.value), scale * inv_2pi_a1)
                             / (40.0 * d_l * inv_2pi_a1), 1e-280)
                integral, ierr = _zero_t_integral(ctx, epsabs=epsabs,
                                                  epsrel=policy.rel_tol / 10.0)
            term = inv_2pi_a1 * d_l * integral
            acc.add(term)
            err += inv_2pi_a1 * d_l * ierr
            l_used = max(l_used, l)
            small = abs(term) < policy.rel_tol * abs(acc.value)
            small_run = small_run + 1 if small else 0
            ltail = _l_tail_bound(term, ctx.nu, dim - 1, alpha)
            certified = ltail < policy.rel_tol * abs(acc.value) * 0.5
            if small_run >= _CONSECUTIVE_SMALL and certified:
                err += ltail
                break
            if policy.tail_extrapolation and small_run >= 1 and certified \
                    and ltail + abs(term) < policy.rel_tol * abs(acc.value) * 0.5:
                err += ltail
                break
            if l >= policy.l_max_hard:
                raise NonConvergenceError(
                    f"angular sum hit l_max_hard={policy.l_max_hard}",
                    partial=acc.value)
            l += 1
        per_channel[ch.value] = acc.value
        err_total += err
    value = sum(per_channel.values())
    err_total += 8.0 * np.finfo(float).eps * abs(value)
    if err_total > policy.rel_tol * abs(value):
        raise NonConvergenceError(
            f"zero-T error estimate {err_total:.3e} exceeds rel_tol * |E|",
            partial=value)
    return EnergyResult(value=value, per_channel=per_channel, l_used=l_used,
                        p_used=0, error_estimate=err_total, temperature=0.0)


def thermal_correction(geometry: Geometry, bc_pair: BoundaryPair,
                       channel: Optional[Channel], T: float,
                       policy: TruncationPolicy = TruncationPolicy()) -> EnergyResult:
    """E(T) - E_0 by per-l subtraction of the two exact routes.

    The Matsubara sum and the frequency integral are evaluated for the same l
    with matched (tight) truncation tolerances and differenced term by term;
    the difference decays like T^(2 nu + 1), so only a handful of l survive.
    A warning is attached when the correction is within a decade of the
    combined error estimate.
    """
    if not T > 0.0:
        raise ValueError(f"thermal_correction requires T > 0, got {T}")
    a1T = geometry.a1 * T
    dim = geometry.dim
    inv_2pi_a1 = 1.0 / (2.0 * math.pi * geometry.a1)
    per_channel: dict[str, float] = {}
    l_used = p_used = 0
    err_total = 0.0
    warn_msgs: list[str] = []
    for ch in _channel_pairs(channel):
        dpoly = degeneracy_polynomial(ch, dim)
        acc = _Kahan()
        err = 0.0
        small_run = 0
        l = 1
        while True:
            ctx = _LTerm(geometry, bc_pair, ch, l)
            d_l = float(dpoly(ctx.nu))
            block, ptail, p = _matsubara_block(ctx, a1T, 1e-14, policy.p_max_hard)
            integral, ierr = _zero_t_integral(ctx, epsabs=0.0, epsrel=2e-14)
            delta = d_l * (T * block - inv_2pi_a1 * integral)
            acc.add(delta)
            err += d_l * (T * ptail + inv_2pi_a1 * ierr)
            err += d_l * 4e-16 * (abs(T * block) + abs(inv_2pi_a1 * integral))
            l_used = max(l_used, l)
            p_used = max(p_used, p)
            small = abs(delta) < max(policy.rel_tol * abs(acc.value), 0.3 * err)
            small_run = small_run + 1 if small else 0
            if small_run >= 2 and l >= 3:
                break
            if l >= policy.l_max_hard:
                raise NonConvergenceError(
                    f"thermal correction hit l_max_hard={policy.l_max_hard}",
                    partial=acc.value)
            l += 1
        per_channel[ch.value] = acc.value
        err_total += err
    value = sum(per_channel.values())
    if abs(value) < 10.0 * err_total:
        msg = (f"thermal correction {value:.3e} is within a decade of its "
               f"combined error estimate {err_total:.3e}; digits are not trustworthy")
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
        warn_msgs.append(msg)
    return EnergyResult(value=value, per_channel=per_channel, l_used=l_used,
                        p_used=p_used, error_estimate=err_total, temperature=T,
                        warnings=tuple(warn_msgs))


def force(geometry: Geometry, bc_pair: BoundaryPair, T: float = 0.0,
          policy: TruncationPolicy = TruncationPolicy()) -> float:
    """-dE/dd at fixed a1: negative = attractive.

    Central differences with one Richardson step; a disagreement above 1%
    between the two stencils triggers an unreliable-derivative warning.
    """
    if T < 0.0:
        raise ValueError(f"temperature must be >= 0, got {T}")
    d0 = geometry.d
    h = max(1e-4 * d0, 1e-6 * geometry.a1)

    def energy_at(dd: float) -> float:
        g = geometry.widened(dd)
        if T == 0.0:
            return zero_T_energy(g, bc_pair, None, policy).value
        return free_energy(g, bc_pair, None, T, policy).value

    d_coarse = (energy_at(d0 + h) - energy_at(d0 - h)) / (2.0 * h)
    d_fine = (energy_at(d0 + 0.5 * h) - energy_at(d0 - 0.5 * h)) / h
    deriv = (4.0 * d_fine - d_coarse) / 3.0
    if abs(d_fine - d_coarse) > 0.01 * max(abs(deriv), 1e-300):
        warnings.warn(
            f"force derivative stencils disagree by "
            f"{abs(d_fine - d_coarse) / max(abs(deriv), 1e-300):.2%}; "
            "the returned force may be unreliable", RuntimeWarning, stacklevel=2)
    return -deriv
