import math

import pytest

from casimir_spheres import gamma_fn, lambda_integral, log_gamma, riemann_zeta

# Independent high-precision references: zeta(3) by Euler-Maclaurin with 10
# correction terms (frozen), lambda_22 by arbitrary-precision quadrature.
ZETA3_EULER_MACLAURIN = 1.2020569031595942854
LAMBDA_22_QUAD = 0.1581512878911649916272


def test_gamma_basics():
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gamma_fn(5.0) == 24.0
    assert gamma_fn(171.0) == pytest.approx(math.gamma(171.0), rel=1e-13)
    assert gamma_fn(200.0) == math.inf  # beyond the float range; use log_gamma
    with pytest.raises(ValueError):
        gamma_fn(0.0)
    with pytest.raises(ValueError):
        gamma_fn(-1.0)


def test_log_gamma_values():
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-14)
    assert log_gamma(1.0) == 0.0
    # relative accuracy of Gamma expressed on the log for x up to 200:
    # Stirling with three correction terms as an independent cross-check
    # (its own truncation error is below 1e-15 from x ~ 50 on)
    for x in (50.5, 150.0, 200.0):
        s = (x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi) \
            + 1 / (12 * x) - 1 / (360 * x ** 3) + 1 / (1260 * x ** 5)
        assert log_gamma(x) == pytest.approx(s, rel=1e-13)


def test_zeta_values():
    assert riemann_zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
    assert riemann_zeta(4.0) == pytest.approx(math.pi ** 4 / 90, rel=1e-14)
    assert riemann_zeta(3.0) == pytest.approx(ZETA3_EULER_MACLAURIN, rel=1e-13)
    assert riemann_zeta(60.0) == pytest.approx(1.0, rel=1e-13)
    with pytest.raises(ValueError):
        riemann_zeta(1.0)
    with pytest.raises(ValueError):
        riemann_zeta(0.5)


def test_lambda_trivial_values():
    assert lambda_integral(0, 1) == pytest.approx(math.log(2.0), rel=1e-12)
    assert lambda_integral(1, 1) == pytest.approx(math.pi ** 2 / 12, rel=1e-10)


def test_lambda_quadrature_oracle():
    assert lambda_integral(2, 2) == pytest.approx(LAMBDA_22_QUAD, rel=1e-10)


def test_lambda_fermionic_identity():
    # lambda_{mu,1} = Gamma(mu+1) (1 - 2^-mu) zeta(mu+1) for mu >= 1
    for mu in (1, 2, 3, 5):
        expect = math.gamma(mu + 1) * (1 - 2.0 ** (-mu)) * riemann_zeta(mu + 1)
        assert lambda_integral(mu, 1) == pytest.approx(expect, rel=1e-10)


def test_lambda_domain():
    with pytest.raises(ValueError):
        lambda_integral(-1, 1)
    with pytest.raises(ValueError):
        lambda_integral(0, 0)
