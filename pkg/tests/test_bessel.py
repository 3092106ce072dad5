"""Log-domain Bessel evaluation against frozen arbitrary-precision oracles.

Reference values computed once with mpmath at 40 significant digits.
"""

import math

import pytest

from casimir_spheres import SignedLog, log_bessel_i, log_bessel_k, robin_combination
from casimir_spheres.bessel import _log_i_debye, _log_i_series, _log_k_debye

# (nu, z) -> ln I_nu(z), ln K_nu(z); mpmath besseli/besselk, dps=40
ORACLE = {
    (0.5, 1.0): (-0.06435199107353179875298, -0.7742086473552725676369),
    (500.0, 350.0): (28.96312264202590645202, None),
    (1000.0, 1200.0): (None, -807.0149091626050251069),
    (5000.0, 2500.0): (-1633.240760616078653059, None),
    (10000.0, 10.0): (-66014.54621272363708681, 66004.64272467110120376),
    (10000.0, 30000.0): (None, -28353.23012771181186641),
}


def test_half_integer_closed_forms():
    assert log_bessel_i(0.5, 1.0) == pytest.approx(
        math.log(math.sqrt(2.0 / math.pi) * math.sinh(1.0)), abs=1e-12)
    assert log_bessel_k(0.5, 1.0) == pytest.approx(
        math.log(math.sqrt(math.pi / 2.0)) - 1.0, abs=1e-12)


def test_small_z_limits():
    # I_nu(z) ~ (z/2)^nu / Gamma(nu+1), K_nu(z) ~ (z/2)^-nu Gamma(nu)/2
    nu, z = 1.5, 1e-8
    assert log_bessel_i(nu, z) == pytest.approx(
        nu * math.log(z / 2) - math.lgamma(nu + 1), abs=1e-12)
    assert log_bessel_k(nu, z) == pytest.approx(
        -nu * math.log(z / 2) + math.log(math.gamma(nu) / 2), abs=1e-12)


@pytest.mark.parametrize("nu,z", sorted(ORACLE))
def test_oracle_values(nu, z):
    li, lk = ORACLE[(nu, z)]
    if li is not None:
        assert log_bessel_i(nu, z) == pytest.approx(li, abs=1e-10 * max(1, abs(li)))
    if lk is not None:
        assert log_bessel_k(nu, z) == pytest.approx(lk, abs=1e-10 * max(1, abs(lk)))


def test_domain_errors():
    for fn in (log_bessel_i, log_bessel_k):
        with pytest.raises(ValueError):
            fn(-1.0, 1.0)
        with pytest.raises(ValueError):
            fn(1.0, 0.0)
        with pytest.raises(ValueError):
            fn(1.0, -2.0)
        with pytest.raises(ValueError):
            fn(math.inf, 1.0)


@pytest.mark.parametrize("nu", [0.5, 1.5, 5.0, 50.5, 500.0])
def test_monotonicity(nu):
    zs = [0.01, 0.1, 1.0, 10.0, 100.0, 1000.0]
    li = [log_bessel_i(nu, z) for z in zs]
    lk = [log_bessel_k(nu, z) for z in zs]
    assert all(a < b for a, b in zip(li, li[1:]))
    assert all(a > b for a, b in zip(lk, lk[1:]))


def test_branch_overlap_series_vs_debye():
    worst = 0.0
    for nu in (60.0, 120.0, 400.0, 2000.0):
        for z in (0.1 * nu, 0.25 * nu, min(30.0, 0.9 * nu)):
            worst = max(worst, abs(_log_i_series(nu, z) - _log_i_debye(nu, z)))
    assert worst <= 1e-9


def test_branch_overlap_scipy_vs_debye():
    from scipy import special as sp
    worst = 0.0
    for nu in (60.0, 100.0, 250.0):
        for zb in (0.8, 1.0, 2.0, 10.0, 100.0):
            z = nu * zb
            worst = max(worst, abs(math.log(sp.ive(nu, z)) + z - _log_i_debye(nu, z)))
            worst = max(worst, abs(math.log(sp.kve(nu, z)) - z - _log_k_debye(nu, z)))
    assert worst <= 1e-9


def test_wronskian_grid():
    worst = 0.0
    for nu in (0.5, 1.5, 5.0, 50.5, 500.0):
        for z in (0.01, 1.0, 10.0, 100.0):
            i0 = robin_combination(1.0, 0.0, nu, z, "I")
            k0 = robin_combination(1.0, 0.0, nu, z, "K")
            zi = robin_combination(0.0, 1.0, nu, z, "I")
            zk = robin_combination(0.0, 1.0, nu, z, "K")
            w = (i0 * zk) + (-(zi * k0))  # z (I K' - I' K) = -1
            worst = max(worst, abs(w.value() + 1.0))
    assert worst <= 1e-11


def test_robin_reduces_to_plain_bessel():
    for nu, z in ((1.5, 2.0), (80.0, 10.0)):
        r = robin_combination(1.0, 0.0, nu, z, "I")
        assert r.sign == 1
        assert r.log == pytest.approx(log_bessel_i(nu, z), abs=1e-13)
        r2 = robin_combination(-2.0, 0.0, nu, z, "K")
        assert r2.sign == -1
        assert r2.log == pytest.approx(math.log(2.0) + log_bessel_k(nu, z), abs=1e-13)


def test_robin_k_derivative_always_negative():
    for nu in (0.5, 3.0, 75.0, 600.0):
        for z in (0.05, 1.0, 50.0):
            assert robin_combination(0.0, 1.0, nu, z, "K").sign == -1
            assert robin_combination(0.0, 1.0, nu, z, "I").sign == 1


def test_robin_small_z_sign():
    # alpha = (D-2)/2, beta = 1, nu = l + (D-2)/2: K combination ~ (alpha-nu) K
    for dim, l in ((3, 1), (5, 2), (4, 7)):
        alpha = (dim - 2) / 2.0
        nu = l + (dim - 2) / 2.0
        r = robin_combination(alpha, 1.0, nu, 1e-6, "K")
        assert r.sign == -1


def test_robin_small_z_oracle():
    # frozen mpmath value: alpha=1/2, beta=1, nu=3/2, z=1e-6, kind K
    r = robin_combination(0.5, 1.0, 1.5, 1e-6, "K")
    assert r.sign == -1
    assert r.log == pytest.approx(20.94905718959163858786, abs=1e-10)


def test_robin_derivative_identity_cross_check():
    # alpha I + beta z I' assembled from logs must match the direct \
    # finite-order identity at both small and large order
    for nu in (2.5, 30.0, 90.0):
        z = 3.0
        direct = (0.25 * math.exp(log_bessel_i(nu, z))
                  + 1.0 * (z * math.exp(log_bessel_i(nu + 1.0, z))
                           + nu * math.exp(log_bessel_i(nu, z))))
        r = robin_combination(0.25, 1.0, nu, z, "I")
        assert r.sign == 1
        assert r.value() == pytest.approx(direct, rel=1e-11)


def test_robin_cancellation_fallback():
    # alpha < 0 forces genuine cancellation of the I combination near its
    # zero; the arbitrary-precision fallback must keep the sign exact.
    nu, z = 2.0, 1.0
    # alpha I_2(1) + z I_2'(1) = 0 at alpha* = -z I'/I; probe both sides
    i = math.exp(log_bessel_i(nu, z))
    ip = math.exp(log_bessel_i(nu + 1, z)) + nu / z * i
    alpha_star = -z * ip / i
    for shift, want in ((1e-9, 1), (-1e-9, -1)):
        r = robin_combination(alpha_star + shift, 1.0, nu, z, "I")
        assert r.sign == want


def test_robin_rejects_degenerate_input():
    with pytest.raises(ValueError):
        robin_combination(0.0, 0.0, 1.0, 1.0, "I")
    with pytest.raises(ValueError):
        robin_combination(1.0, 0.0, 1.0, 1.0, "J")


def test_signedlog_type():
    assert isinstance(robin_combination(1.0, 0.0, 1.0, 1.0, "I"), SignedLog)
