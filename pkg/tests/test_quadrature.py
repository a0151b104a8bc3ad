import cmath
import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate as sp_integrate

from cylrep.errors import DomainError, QuadratureSamplingError
from cylrep.quadrature import (
    Tolerance, closed_form_cosine_integral, closed_form_negative_power_integral, integrate,
    log_kernel_integral,
)


def ref_quad(f, a, b, **kw):
    # epsabs sits at roundoff level for some integrands; scipy's warning is expected then.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sp_integrate.IntegrationWarning)
        re = sp_integrate.quad(lambda t: f(t).real, a, b, limit=400, epsabs=1e-14, **kw)[0]
        im = sp_integrate.quad(lambda t: f(t).imag, a, b, limit=400, epsabs=1e-14, **kw)[0]
    return complex(re, im)


def omc(s):
    # 1 - cos s, i.e. 1 + cos(pi - s), without cancellation near s = 0
    return 2 * np.sin(0.5 * s) ** 2


def test_constant():
    q = integrate(lambda t: np.ones_like(t), 0, math.pi)
    assert q.converged and q.value == pytest.approx(math.pi, rel=1e-14)


def test_cosine_power_examples():
    q = integrate(lambda t: 1 + np.cos(t), 0, math.pi)
    assert q.value == pytest.approx(math.pi)
    mu = 1.3
    q = integrate(lambda t: np.cos(t) * (1 + np.cos(t)) ** 0.3 * np.cos(mu * t), 0, math.pi)
    assert q.value == pytest.approx(math.pi / 2**mu, rel=1e-10)


def test_reversed_interval_and_empty():
    f = lambda t: np.exp(1j * t)
    assert integrate(f, 1, 0).value == pytest.approx(-integrate(f, 0, 1).value)
    assert integrate(f, 2, 2).value == 0


def test_graded_endpoint_singularity():
    q = integrate(lambda t: t ** -0.7, 0, 1, singular_end="a", endpoint_exponent=-0.7)
    assert q.value == pytest.approx(1 / 0.3, rel=1e-9)
    q = integrate(lambda t: np.log(-t), -1, 0, singular_end="b")
    assert q.value == pytest.approx(-1, rel=1e-9)
    q = integrate(lambda t: (-t) ** -0.5, -1, 0, singular_end="b", endpoint_exponent=-0.5)
    assert q.value == pytest.approx(2, rel=1e-9)
    with pytest.raises(DomainError):
        integrate(lambda t: 1 / t, 0, 1, singular_end="a", endpoint_exponent=-1)


def test_non_finite_sample_is_reported():
    with pytest.raises(QuadratureSamplingError) as info, np.errstate(divide="ignore"):
        integrate(lambda t: 1 / (t - 0.5), 0, 1)
    assert 0 <= info.value.abscissa <= 1


def test_budget_exhaustion_reports_not_converged():
    q = integrate(lambda t: np.cos(200 * t), 0, math.pi, Tolerance(1e-300, 1e-15, 100))
    assert not q.converged


@given(st.floats(-0.25, 3), st.floats(-3, 3))
def test_closed_form_cosine_integral(a, b):
    f = lambda t: (1 + math.cos(t)) ** a * math.cos(b * t)
    assert closed_form_cosine_integral(a, b) == pytest.approx(ref_quad(lambda t: complex(f(t)), 0, math.pi),
                                                              rel=1e-8, abs=1e-10)


def test_closed_form_cosine_examples():
    assert closed_form_cosine_integral(0, 0) == pytest.approx(math.pi)
    assert closed_form_cosine_integral(1, 1) == pytest.approx(math.pi / 2)
    q = integrate(lambda s: omc(s) ** 0.25 * np.cos(1.6 * (math.pi - s)), 0, math.pi, singular_end="a",
                  endpoint_exponent=0.5)
    assert abs(closed_form_cosine_integral(0.25, 1.6) - q.value) < 1e-10
    with pytest.raises(DomainError):
        closed_form_cosine_integral(-0.5, 0)


def test_negative_power_integral():
    assert closed_form_negative_power_integral(0, 0) == pytest.approx(math.pi)
    # s = pi - t moves the singular end to 0, where 1 + cos t = 2 sin(s/2)**2
    f = lambda s: np.cos(0.3 * (math.pi - s)) / omc(s) ** 0.3
    q = integrate(f, 0, math.pi, singular_end="a", endpoint_exponent=-0.6)
    assert abs(closed_form_negative_power_integral(0.3, 0.3) - q.value) < 1e-9
    mu = 1 + 1j
    g = lambda s: np.cos(mu * (math.pi - s)) / omc(s) ** 0.49
    q = integrate(g, 0, math.pi, singular_end="a", endpoint_exponent=-0.98)
    assert abs(closed_form_negative_power_integral(mu, 0.49) - q.value) < 1e-6 * abs(q.value)
    with pytest.raises(DomainError):
        closed_form_negative_power_integral(0, 0.5)


def test_log_kernel_integral():
    assert log_kernel_integral(2j) == pytest.approx(0)
    assert log_kernel_integral(2) == pytest.approx(-0.5j * math.pi**2)
    z = 1 + 1j
    ref = integrate(lambda s: np.log(-1j * z * omc(s)), 0, math.pi, singular_end="a")
    assert abs(log_kernel_integral(z) - ref.value) < 1e-10
    with pytest.raises(DomainError):
        log_kernel_integral(-2j)
