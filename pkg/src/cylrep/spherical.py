"""Spherical Bessel functions from Dawson-integral representations, and the
erf/Dawson series that follow from them.

The Dawson integral itself comes from ``scipy.special.dawsn`` (Faddeeva-based,
complex capable).  Spherical functions of small complex argument that feed the
series below are computed by ``spherical_jn_closed``, which never touches the
Dawson integral, so the series checks are not circular.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .branch import HALF_PI, i_pow, on_negative_real_axis, rotated_log
from .config import EvalConfig, EvalResult
from .cylinder import _prepare, bessel_i, bessel_j
from .errors import AccuracyError, DivergenceError, DomainError
from .quadrature import integrate


@dataclass(frozen=True)
class SeriesTruncation:
    max_terms: int = 64
    tail_tol: float = 1e-12

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")


def dawson(w):
    """Dawson's integral ``F(w) = exp(-w**2) int_0^w exp(t**2) dt``; scalar or array."""
    if np.ndim(w) == 0:
        w = complex(w)
        if not cmath.isfinite(w):
            raise DomainError(f"argument must be finite, got {w}")
        return complex(special.dawsn(w))
    return special.dawsn(np.asarray(w, dtype=complex))


def _sqrt_pair(z):
    """``sqrt(z)`` (principal) and the matching ``sqrt(-2iz) = e^{-i pi/4} sqrt(2) sqrt(z)``."""
    root = cmath.sqrt(z)
    return root, cmath.exp(-0.25j * math.pi) * math.sqrt(2.0) * root


def _dawson_cosine_quad(m, arg, cfg):
    """``(1/pi) int_0^pi F(arg cos(th/2)) cos((m+1/2) th) dth``."""

    def f(th):
        return dawson(arg * np.cos(0.5 * th)) * np.cos((m + 0.5) * th)

    q = integrate(f, 0.0, math.pi, cfg.quad_tol, initial_panels=4 + math.ceil(abs(arg) ** 2 / 4 + abs(m) / 2))
    if not q.acceptable:
        raise AccuracyError("Dawson cosine integral did not converge", partial=q.value / math.pi)
    return q.value / math.pi, q.error_estimate / math.pi, q.nodes_used


def spherical_j(m, z, cfg=None):
    """Spherical Bessel function of the first kind ``j_m(z)``, integer m."""
    m = int(m)
    _, z, cfg = _prepare(m + 0.5, z, cfg)
    if z == 0:
        if m == 0:
            return EvalResult(1.0 + 0j, 0.0, "jsph/origin")
        if m > 0:
            return EvalResult(0j, 0.0, "jsph/origin")
        raise DivergenceError(f"j_{m}(z) is divergent at z=0")
    root, rot = _sqrt_pair(z)
    integral, err, nodes = _dawson_cosine_quad(m, -1j * rot, cfg)
    bracket = integral
    trace = "jsph/dawson-integral"
    if m < 0:
        log_rot = rotated_log(z, 2.0)
        acc = 0j
        for j in range(1, -m + 1):
            coef = math.factorial(j - m - 2) / (math.factorial(j - 1) * math.factorial(-j - m))
            acc += coef * cmath.exp((0.5 - j) * log_rot)
        bracket += 1j * (-1) ** m * acc
        trace = "jsph/dawson-integral+sum"
    pref = math.sqrt(2.0) * i_pow(m + 1.5) * cmath.exp(1j * z) / root
    return EvalResult(pref * bracket, abs(pref) * err, trace, nodes)


def spherical_y(m, z, cfg=None):
    """Spherical Bessel function of the second kind ``y_m(z)``, integer m."""
    m = int(m)
    _, z, cfg = _prepare(m + 0.5, z, cfg)
    if z == 0:
        raise DivergenceError(f"y_{m}(z) is divergent at z=0")
    root, rot = _sqrt_pair(z)
    integral, err, nodes = _dawson_cosine_quad(m, -1j * rot, cfg)
    bracket = -integral
    trace = "ysph/dawson-integral"
    if m >= 0:
        log_rot = rotated_log(z, 2.0)
        acc = 0j
        for j in range(m + 1):
            coef = math.factorial(2 * m - j) / (math.factorial(j) * math.factorial(m - j))
            acc += coef * cmath.exp((j - m - 0.5) * log_rot)
        bracket += 1j * (-1) ** m * acc
        trace = "ysph/dawson-integral+sum"
    # sqrt(2i/z) paired with the principal sqrt(z) used inside the integral.
    pref = math.sqrt(2.0) * cmath.exp(0.25j * math.pi) / root * cmath.exp(1j * z) * i_pow(m)
    return EvalResult(pref * bracket, abs(pref) * err, trace, nodes)


def spherical_jn_closed(n, x):
    """``j_n(x)`` for n >= 0 without any integral.

    Power series ``x**n sum_k (-x**2/2)**k / (k! (2n+2k+1)!!)`` when ``n >= |x|``
    (where upward recurrence is unstable); closed ``j_0, j_1`` and upward
    recurrence otherwise.
    """
    n = int(n)
    x = complex(x)
    if n < 0:
        raise DomainError("spherical_jn_closed needs n >= 0")
    if x == 0:
        return 1.0 + 0j if n == 0 else 0j
    if n >= abs(x) or abs(x) < 0.5:
        dfact = 1.0
        for k in range(1, 2 * n + 2, 2):
            dfact *= k
        term = x**n / dfact
        total = term
        h = -0.5 * x * x
        for k in range(1, 200):
            term = term * h / (k * (2 * n + 2 * k + 1))
            total += term
            if abs(term) <= 1e-17 * abs(total):
                break
        return total
    j0 = cmath.sin(x) / x
    if n == 0:
        return j0
    j1 = cmath.sin(x) / (x * x) - cmath.cos(x) / x
    for k in range(1, n):
        j0, j1 = j1, (2 * k + 1) / x * j1 - j0
    return j1


def _sum_series(terms, trunc, what):
    total = 0j
    small = 0
    for count, term in enumerate(terms, start=1):
        total += term
        small = small + 1 if abs(term) <= trunc.tail_tol * abs(total) else 0
        if small >= 2:
            return total, count
        if count >= trunc.max_terms:
            break
    raise AccuracyError(f"{what} series did not converge in {trunc.max_terms} terms", partial=total)


def _modified_half_integer(order, x, cfg):
    # I_nu(x) directly in its sector, otherwise through J_nu(-ix).
    if x == 0:
        return 0j
    arg = cmath.phase(x)
    if -math.pi < arg <= HALF_PI:
        return bessel_i(order, x, cfg).value
    return i_pow(order) * bessel_j(order, -1j * x, cfg).value


def erf_series(w, theta, trunc=None, cfg=None):
    """``erf(w cos(theta/2))`` as ``2 exp(-w**2 cos(theta)/2) sum_m I_{m+1/2}(w**2/2) cos((m+1/2) theta)``.

    The sum depends on ``w`` only through ``w**2`` and reproduces the
    half-plane where ``sqrt(w**2) == w``; other ``w`` use that erf is odd.
    """
    trunc = trunc or SeriesTruncation()
    cfg = cfg or EvalConfig()
    w = complex(w)
    theta = float(theta)
    if w == 0:
        return 0j
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        return -erf_series(-w, theta, trunc, cfg)
    x = 0.5 * w * w

    def terms():
        m = 0
        while True:
            yield _modified_half_integer(m + 0.5, x, cfg) * math.cos((m + 0.5) * theta)
            m += 1

    total, _ = _sum_series(terms(), trunc, "erf")
    return 2 * cmath.exp(-x * math.cos(theta)) * total


def dawson_cosine_coefficient(m, w):
    """``(w exp(-w**2/2) / (2 i**m)) j_m(-i w**2/2)``, the cosine-transform coefficient of ``F(w cos(th/2))``."""
    m = int(m)
    if m < 0:
        raise DomainError("cosine coefficient needs m >= 0")
    w = complex(w)
    if w == 0:
        return 0j
    return w * cmath.exp(-0.5 * w * w) / (2 * i_pow(m)) * spherical_jn_closed(m, -0.5j * w * w)


def dawson_cosine_integral(m, w, cfg=None):
    """Quadrature of ``(1/pi) int_0^pi F(w cos(th/2)) cos((m+1/2) th) dth``."""
    cfg = cfg or EvalConfig()
    value, err, nodes = _dawson_cosine_quad(int(m), complex(w), cfg)
    return EvalResult(value, err, "dawson-cosine/quadrature", nodes)


def dawson_series(w, theta, trunc=None):
    """``F(w cos theta)`` as ``w exp(-w**2/2) sum_m (-i)**m j_m(-i w**2/2) cos((2m+1) theta)``."""
    trunc = trunc or SeriesTruncation()
    w = complex(w)
    theta = float(theta)
    if w == 0:
        return 0j
    x = -0.5j * w * w

    def terms():
        m = 0
        while True:
            yield (-1j) ** m * spherical_jn_closed(m, x) * math.cos((2 * m + 1) * theta)
            m += 1

    total, _ = _sum_series(terms(), trunc, "Dawson")
    return w * cmath.exp(-0.5 * w * w) * total


def dawson_duplication(w, trunc=None):
    """``F(2w)`` from ``F(w)`` and spherical Bessel functions of argument ``-2i w**2``."""
    trunc = trunc or SeriesTruncation()
    w = complex(w)
    if w == 0:
        return 0j
    x = -2j * w * w

    def terms():
        m = 0
        while True:
            yield (-1) ** m * (spherical_jn_closed(6 * m + 4, x) - 1j * spherical_jn_closed(6 * m + 1, x))
            m += 1

    total, _ = _sum_series(terms(), trunc, "duplication")
    return 2 * dawson(w) + 6 * w * cmath.exp(-2 * w * w) * total


__all__ = [
    "SeriesTruncation",
    "dawson",
    "dawson_cosine_coefficient",
    "dawson_cosine_integral",
    "dawson_duplication",
    "dawson_series",
    "erf_series",
    "on_negative_real_axis",
    "spherical_j",
    "spherical_jn_closed",
    "spherical_y",
]
