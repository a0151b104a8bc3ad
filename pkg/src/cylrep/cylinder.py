"""Cylinder functions of arbitrary complex order from one integral plus a finite sum.

All integrals over ``theta in [0, pi]`` are evaluated in the variable
``t = pi - theta``.  With it ``1 + cos(theta) = 2 sin(t/2)**2`` is computed
without cancellation and the algebraic endpoint behaviour of
``P(nu, zeta (1 + cos theta))`` sits at ``t = 0``, where the quadrature grades
its panels.

Powers of rotated arguments such as ``(-2iz)**p`` follow the continued branch
described in :mod:`cylrep.branch`.
"""

import cmath
import math

import numpy as np

from .branch import (
    cospi,
    i_pow,
    in_slit_plane,
    is_integer,
    on_negative_real_axis,
    rotated_log,
    sinpi,
)
from .config import EvalConfig, EvalResult
from .errors import AccuracyError, BranchCutError, DivergenceError, DomainError
from .gammatools import (
    P_RELATIVE_ACCURACY, GammaRatioRequest, gamma_ratio, reciprocal_gamma, regularized_p, regularized_p_split,
    upper_gamma_zero,
)
from .orderdecomp import OrderKind, decompose, sign_of_real_part
from .quadrature import integrate

_SQRT_PI = math.sqrt(math.pi)
_LOG2 = math.log(2.0)
_EPS = np.finfo(float).eps


# -- argument handling -------------------------------------------------------

def _finite(x, name):
    x = complex(x)
    if not cmath.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


def _prepare(mu, z, cfg, *, entire=False):
    """Validate an (order, argument) pair; ``entire`` skips the cut check."""
    cfg = cfg or EvalConfig()
    mu = _finite(mu, "order")
    z = _finite(z, "argument")
    if abs(z) > cfg.max_abs_z:
        raise DomainError(
            f"|z| = {abs(z):g} exceeds the cap {cfg.max_abs_z:g} "
            "(raise max_abs_z or set CYLREP_MAX_ABS_Z)"
        )
    if abs(mu.real) > cfg.max_order:
        raise DomainError(f"|Re mu| = {abs(mu.real):g} exceeds the order cap {cfg.max_order}")
    if cfg.branch_check and not entire and z != 0 and on_negative_real_axis(z):
        raise BranchCutError(
            f"z = {z} lies on the cut (-inf, 0]; non-integer orders are defined only off it"
        )
    return mu, z, cfg


def _quad_failure(what, q, prefactor):
    return AccuracyError(
        f"{what}: quadrature did not converge (estimate {abs(prefactor) * q.error_estimate:.3g}, "
        f"{q.nodes_used} nodes)",
        partial=EvalResult(prefactor * q.value, abs(prefactor) * q.error_estimate, "partial", q.nodes_used),
    )


def _panels(zeta, mu):
    return 4 + math.ceil(0.5 * (abs(zeta) + abs(mu)))


def _half_angle(t):
    s = np.sin(0.5 * t)
    return 2.0 * s * s, _LOG2 + 2.0 * np.log(s)


def _endpoint_exponent(orders):
    """Most singular ``2 nu`` among the P orders, or None when all are smooth in t."""
    worst = None
    for nu in orders:
        a = 2 * complex(nu)
        if is_integer(a) and a.real >= 0:
            continue
        if worst is None or a.real < worst.real:
            worst = a
    return worst


def _mixed_quad(mu, zeta, log_zeta, terms, cfg, power_n=0):
    """``int_0^pi exp(zeta cos th) sum_k c_k P(nu_k, zeta(1+cos th)) cos(th)**n cos(mu th) dth``.

    ``terms`` is a list of ``(c_k, nu_k)``; ``log_zeta`` fixes the branch of
    ``zeta**nu``.
    """
    terms = [(complex(c), complex(nu)) for c, nu in terms if c != 0]

    def f(t):
        opc, log_opc = _half_angle(t)
        w = zeta * opc
        lw = log_zeta + log_opc
        # Leads and remainders are summed apart: for H1 the leads cancel exactly.
        lead = rem = 0j
        for c, nu in terms:
            ld, rm = regularized_p_split(nu, w, log_w=lw, check_branch=False)
            lead = lead + c * ld
            rem = rem + c * rm
        acc = lead - rem
        cos_t = np.cos(t)
        out = np.exp(-zeta * cos_t) * np.cos(mu * (np.pi - t)) * acc
        if power_n:
            out = out * (-cos_t) ** power_n
        return out

    alpha = _endpoint_exponent(nu for _, nu in terms)
    return integrate(
        f, 0.0, math.pi, cfg.quad_tol,
        singular_end=None if alpha is None else "a",
        endpoint_exponent=0.0 if alpha is None else alpha,
        initial_panels=_panels(zeta, mu), noise=P_RELATIVE_ACCURACY,
    )


def _value_at_origin(mu):
    """Limit at z = 0 of J_mu and I_mu."""
    if mu == 0:
        return 1.0 + 0j
    if is_integer(mu) or mu.real > 0:
        return 0j
    raise DivergenceError(f"order {mu} has no finite limit at z = 0")


def _stable_split(d):
    """``(n, frac)`` with ``mu = n + frac`` and ``Re frac`` in (-1/4, 3/4].

    As ``Re frac`` nears -1/2 the integrand gets an almost non-integrable ``t**(2 frac)``
    endpoint, and near half-integers the integral and the finite sum also cancel
    ``1/(mu - half-integer)`` terms. The evaluators therefore move such orders one step
    down; the public ``b_integral``/``corrective_chi`` keep the rounded split.
    """
    n, frac = d.integral_part, d.fractional_part
    if frac.real < -0.25:
        return n - 1, frac + 1
    return n, frac


def _split(d, stable):
    return _stable_split(d) if stable else (d.integral_part, d.fractional_part)


def _chi_ratio(mu, n, j):
    """``Gamma(j + mu - 1/2) / Gamma(j + 2 mu)`` with both arguments formed as integer + offset.

    Near a half-integer both arguments sit next to poles, so they must not carry the
    rounding of ``j + mu``.
    """
    delta = mu - (n + 0.5)
    return gamma_ratio(GammaRatioRequest((j + n) + delta, (j + 2 * n + 1) + 2 * delta))


def _order_kind_label(kind):
    return {
        OrderKind.INTEGER: "integer",
        OrderKind.HALF_INTEGER: "half-integer",
        OrderKind.NEAR_INTEGER: "near-integer",
        OrderKind.NEAR_HALF_INTEGER: "near-half-integer",
        OrderKind.GENERIC: "generic",
    }[kind]


# -- first kind --------------------------------------------------------------

def b_integral(mu, z, cfg=None, *, _stable=False):
    """Integral part ``B_mu(z)`` of the first-kind representation."""
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg, entire=d.is_integer)
    label = _order_kind_label(d.kind)
    n, frac = _split(d, _stable)
    if z == 0:
        if frac == 0:
            value = 1.0 + 0j if n == 0 else 0j
        elif frac.real > 0:
            value = 0j
        else:
            raise DivergenceError(f"B_mu(0) diverges for Re {{mu}} = {frac.real:g} <= 0")
        return EvalResult(value, 0.0, f"B/origin/{label}")
    pref = i_pow(mu) / math.pi
    q = _mixed_quad(mu, -1j * z, rotated_log(z), [(1.0, frac)], cfg)
    if not q.acceptable:
        raise _quad_failure("B_mu", q, pref)
    return EvalResult(pref * q.value, abs(pref) * q.error_estimate, f"B/integral/{label}", q.nodes_used)


def _half_integer_chi_coefficients(m):
    """Integer coefficients of the exact half-integer sum, order m + 1/2 with m <= -1."""
    out = []
    for j in range(1, -m + 1):
        num = math.factorial(j - m - 2)
        den = math.factorial(j - 1) * math.factorial(-j - m)
        out.append(num / den)
    return out


def corrective_chi(mu, z, cfg=None, *, _stable=False):
    """Finite sum ``chi_mu(z)``; exactly zero for Re mu > -1/2 and integer mu."""
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg, entire=True)
    n = _split(d, _stable)[0]
    if n >= 0 or d.is_integer:
        return EvalResult(0j, 0.0, "chi/zero")
    if z == 0:
        raise DivergenceError(f"chi_mu diverges at z = 0 for Re mu = {mu.real:g}")
    if cfg.branch_check and on_negative_real_axis(z):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, 0]")
    log_rot = rotated_log(z, 2.0)
    if d.kind is OrderKind.HALF_INTEGER:
        m = d.integral_part
        pref = 2 / _SQRT_PI * i_pow(-(m + 1.5)) * cmath.exp(1j * z)
        terms = [c * cmath.exp((0.5 - j) * log_rot)
                 for j, c in enumerate(_half_integer_chi_coefficients(m), start=1)]
        trace = "chi/half-integer-limit"
    else:
        pref = i_pow(mu) / _SQRT_PI * cmath.exp(1j * z)
        terms = []
        for j in range(1, -n + 1):
            ratio = _chi_ratio(mu, n, j)
            terms.append(ratio * reciprocal_gamma(j) * cmath.exp((j + mu - 1) * log_rot))
        trace = "chi/near-half-integer" if d.kind is OrderKind.NEAR_HALF_INTEGER else "chi/sum"
    value = pref * sum(terms)
    err = 10 * _EPS * abs(pref) * sum(abs(t) for t in terms)
    return EvalResult(value, err, trace)


def bessel_j(mu, z, cfg=None):
    """``J_mu(z) = B_mu(z) + chi_mu(z)`` for any complex order."""
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg, entire=d.is_integer)
    label = _order_kind_label(d.kind)
    if z == 0:
        return EvalResult(_value_at_origin(mu), 0.0, f"J/origin/{label}")
    b = b_integral(mu, z, cfg, _stable=True)
    chi = corrective_chi(mu, z, cfg, _stable=True)
    if d.is_integer:
        trace = "J/jacobi-anger/integer"
    elif chi.trace == "chi/zero":
        trace = f"J/integral/{label}"
    else:
        trace = f"J/integral+sum/{label}"
    return EvalResult(b.value + chi.value, b.error_estimate + chi.error_estimate, trace, b.nodes)


def _check_i_sector(z):
    if z != 0:
        arg = cmath.phase(z)
        if not (-math.pi < arg <= 0.5 * math.pi):
            raise DomainError(f"I_mu(z) needs -pi < arg z <= pi/2, got arg z = {arg:.6g}")


def bessel_i(mu, z, cfg=None):
    """Modified Bessel function of the first kind for ``-pi < arg z <= pi/2``."""
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg, entire=True)
    _check_i_sector(z)
    label = _order_kind_label(d.kind)
    if z == 0:
        return EvalResult(_value_at_origin(mu), 0.0, f"I/origin/{label}")
    log_z = cmath.log(z)
    n, frac = _stable_split(d)
    q = _mixed_quad(mu, z, log_z, [(1.0, frac)], cfg)
    if not q.acceptable:
        raise _quad_failure("I_mu", q, 1 / math.pi)
    value = q.value / math.pi
    err = q.error_estimate / math.pi
    trace = f"I/integral/{label}"
    if n < 0 and not d.is_integer:
        pref = cmath.exp(-z) / _SQRT_PI
        log_2z = log_z + _LOG2
        terms = []
        for j in range(1, -n + 1):
            # Exact half-integers take the pole/pole limit of the ratio.
            ratio = _chi_ratio(mu, n, j)
            terms.append(ratio * reciprocal_gamma(j) * cmath.exp((j + mu - 1) * log_2z))
        value += pref * sum(terms)
        err += 10 * _EPS * abs(pref) * sum(abs(t) for t in terms)
        trace = f"I/integral+sum/{label}"
    return EvalResult(value, err, trace, q.nodes_used)


# -- second and third kind ---------------------------------------------------

# For each function: (coefficient of P({mu}), coefficient of P({-mu})) of the
# combined integral, the factor in front of chi/sin(mu pi) for Re mu < 0 and
# for Re mu >= 0, and the overall factor.
def _second_kind_setup(which, mu):
    c, ip, im = cospi(mu), i_pow(mu), i_pow(-mu)
    negative = mu.real < 0
    if which == "Y":
        return (c * ip, -im), (c if negative else -1.0), 1.0
    if which == "H1":
        e = cmath.exp(-1j * math.pi * mu)
        return (im, -im), (e if negative else -1.0), 1j
    if which == "H2":
        e = cmath.exp(1j * math.pi * mu)
        return (e * ip, -im), (e if negative else -1.0), -1j
    raise ValueError(f"unknown second-kind function {which!r}")


def _second_kind_generic(which, mu, z, cfg, d):
    (c_plus, c_minus), sum_factor, outer = _second_kind_setup(which, mu)
    s = sinpi(mu)
    frac_minus = _stable_split(decompose(-mu, cfg))[1]
    q = _mixed_quad(mu, -1j * z, rotated_log(z), [(c_plus, _stable_split(d)[1]), (c_minus, frac_minus)], cfg)
    pref = outer / (math.pi * s)
    if not q.acceptable:
        raise _quad_failure(which, q, pref)
    chi = corrective_chi(-mu * sign_of_real_part(mu), z, cfg, _stable=True)
    value = pref * q.value + outer * sum_factor * chi.value / s
    err = abs(pref) * q.error_estimate + abs(outer * sum_factor / s) * chi.error_estimate
    label = _order_kind_label(d.kind)
    part = "integral" if chi.trace == "chi/zero" else "integral+sum"
    return EvalResult(value, err, f"{which}/{part}/{label}", q.nodes_used)


def sigma_sum(m, z):
    """Finite sum ``sigma_m(z)`` of the integer-order second-kind representation."""
    m = int(m)
    z = _finite(z, "argument")
    n = abs(m)
    if n == 0:
        return 0j
    if z == 0:
        raise DivergenceError("sigma_m(z) has a pole at z = 0")
    acc = 0j
    for j in range(1, n + 1):
        coef = math.gamma(0.5 - j) * math.gamma(j + n) / math.gamma(n - j + 1)
        acc += coef * (2j * z) ** (-j)
    return (-1) ** m / _SQRT_PI * cmath.exp(1j * z) * acc


_INTEGER_SHIFT = {"Y": 0.5j * math.pi, "H1": 0j, "H2": 1j * math.pi}


def _second_kind_integer(which, m, z, cfg):
    shift = _INTEGER_SHIFT[which]
    log_rot = rotated_log(z)
    zeta = -1j * z

    def f(t):
        opc, log_opc = _half_angle(t)
        g = upper_gamma_zero(zeta * opc, log_w=log_rot + log_opc)
        return np.exp(-zeta * np.cos(t)) * np.cos(m * (np.pi - t)) * (g - shift)

    q = integrate(f, 0.0, math.pi, cfg.quad_tol, singular_end="a", endpoint_exponent=0.0,
                  initial_panels=_panels(zeta, m))
    if which == "Y":
        outer = -2 * i_pow(m) / math.pi
    elif which == "H1":
        outer = 2 * i_pow(m - 1) / math.pi
    else:
        outer = -2 * i_pow(m - 1) / math.pi
    if not q.acceptable:
        raise _quad_failure(which, q, outer / math.pi)
    sigma = sigma_sum(m, z)
    value = outer * (q.value / math.pi + sigma)
    err = abs(outer) * (q.error_estimate / math.pi + 10 * _EPS * abs(sigma))
    return value, err, q.nodes_used


# Outside switch_epsilon but close to an integer, the direct route divides a cancelling
# integral by sin(mu pi) and loses about eps/|mu - m| relative accuracy. There the
# value is interpolated from a ring of orders around m (the functions are entire in mu).
CONTOUR_BAND = 1e-2
CONTOUR_RADIUS = 0.2
CONTOUR_NODES = 12


def _second_kind_contour(which, mu, z, cfg, m):
    delta = mu - m
    vals, errs, weights, nodes = [], [], [], 0
    for k in range(CONTOUR_NODES):
        step = CONTOUR_RADIUS * cmath.exp(2j * math.pi * (k + 0.5) / CONTOUR_NODES)
        zeta = m + step
        r = _second_kind_generic(which, zeta, z, cfg, decompose(zeta, cfg))
        vals.append(r.value)
        errs.append(r.error_estimate)
        weights.append(step / (step - delta) / CONTOUR_NODES)
        nodes += r.nodes
    value = sum(w * v for w, v in zip(weights, vals))
    truncation = 2 * (abs(delta) / CONTOUR_RADIUS) ** CONTOUR_NODES * max(abs(v) for v in vals)
    err = sum(abs(w) * e for w, e in zip(weights, errs)) + truncation + 10 * _EPS * abs(value)
    return EvalResult(value, float(err), f"{which}/contour/generic", nodes)


def _second_kind(which, mu, z, cfg):
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg)
    if z == 0:
        raise DivergenceError(f"{which}_mu is divergent at z=0")
    if d.kind in (OrderKind.INTEGER, OrderKind.NEAR_INTEGER):
        m = d.nearest_integer
        value, err, nodes = _second_kind_integer(which, m, z, cfg)
        if d.kind is OrderKind.NEAR_INTEGER:
            # Model error of evaluating at the neighbouring integer.
            err += abs(mu - m) * 10 * max(1.0, abs(value))
        return EvalResult(value, err, f"{which}/incomplete-gamma/{_order_kind_label(d.kind)}", nodes)
    m = d.nearest_integer
    if abs(mu - m) < CONTOUR_BAND:
        return _second_kind_contour(which, mu, z, cfg, m)
    return _second_kind_generic(which, mu, z, cfg, d)


def bessel_y(mu, z, cfg=None):
    """Neumann function ``Y_mu(z)``; integer and near-integer orders use the incomplete-gamma form."""
    return _second_kind("Y", mu, z, cfg)


def bessel_y_integer(m, z, cfg=None):
    if not is_integer(m):
        raise DomainError(f"integer order required, got {m}")
    return _second_kind("Y", int(complex(m).real), z, cfg)


def hankel1(mu, z, cfg=None):
    return _second_kind("H1", mu, z, cfg)


def hankel2(mu, z, cfg=None):
    return _second_kind("H2", mu, z, cfg)


def bessel_k(mu, z, cfg=None, via=None):
    """Modified Bessel function of the second kind through a Hankel function.

    ``via=1`` uses ``H1(iz)`` (needs ``-pi < arg z <= pi/2``), ``via=2`` uses
    ``H2(-iz)`` (needs ``-pi/2 < arg z <= pi``); by default the first
    applicable one is taken.
    """
    mu = _finite(mu, "order")
    z = _finite(z, "argument")
    if z == 0:
        raise DivergenceError("K_mu is divergent at z=0")
    arg = cmath.phase(z)
    ok1 = -math.pi < arg <= 0.5 * math.pi
    ok2 = -0.5 * math.pi < arg <= math.pi
    if via is None:
        via = 1 if ok1 else 2
    if via == 1 and ok1:
        inner = hankel1(mu, 1j * z, cfg)
        factor = 0.5 * math.pi * i_pow(mu + 1)
    elif via == 2 and ok2:
        inner = hankel2(mu, -1j * z, cfg)
        factor = 0.5 * math.pi * i_pow(-(mu + 1))
    else:
        raise DomainError(f"arg z = {arg:.6g} is outside the sector of the H{via} route for K")
    return EvalResult(factor * inner.value, abs(factor) * inner.error_estimate,
                      f"K/via-H{via}:{inner.trace}", inner.nodes)


# -- derivatives -------------------------------------------------------------

def bessel_j_derivative(mu, z, n=1, cfg=None):
    """n-th derivative of ``J_mu`` in z."""
    n = int(n)
    if n < 0:
        raise DomainError("derivative order must be nonnegative")
    if n == 0:
        return bessel_j(mu, z, cfg)
    d = decompose(mu, cfg)
    mu, z, cfg = _prepare(mu, z, cfg, entire=d.is_integer)
    label = _order_kind_label(d.kind)
    if z == 0:
        value = sum((-1) ** j * math.comb(n, j) * _value_at_origin(mu - n + 2 * j) for j in range(n + 1))
        return EvalResult(value / 2**n, 0.0, f"dJ/origin/{label}")
    pref = i_pow(mu - n) / math.pi
    q = _mixed_quad(mu, -1j * z, rotated_log(z), [(1.0, _stable_split(d)[1])], cfg, power_n=n)
    if not q.acceptable:
        raise _quad_failure("J derivative", q, pref)
    value = pref * q.value
    err = abs(pref) * q.error_estimate
    has_sum = False
    for j in range(n + 1):
        chi = corrective_chi(mu - n + 2 * j, z, cfg, _stable=True)
        if chi.trace != "chi/zero":
            has_sum = True
            coef = (-1) ** j * math.comb(n, j) / 2**n
            value += coef * chi.value
            err += abs(coef) * chi.error_estimate
    part = "integral+sum" if has_sum else "integral"
    return EvalResult(value, err, f"dJ/{part}/{label}", q.nodes_used)


# -- Fourier coefficients of the generating kernel ---------------------------

def fourier_coefficient(nu, ell, z, cfg=None):
    """``int_{-pi}^{pi} K_nu(th; z) exp(i ell th) dth`` for the kernel

    ``K_nu(th; z) = i**nu / (2 pi) exp(i nu (th - pi sgn th)) exp(i z cos th) P(nu, -iz(1 - cos th))``.

    For ``ell >= 0`` the result equals ``i**ell J_{nu+ell}(z)``.
    """
    nu = _finite(nu, "order")
    ell = int(ell)
    nu_, z, cfg = _prepare(nu, z, cfg, entire=is_integer(nu))
    if (2 * nu).real <= -1 and not (is_integer(nu) and nu.real <= 0):
        raise DomainError("kernel is not integrable for Re nu <= -1/2")
    if z == 0:
        raise DomainError("coefficients are evaluated for z != 0")
    log_rot = rotated_log(z)
    zeta = -1j * z
    pref = i_pow(nu) / (2 * math.pi)

    def kernel(theta, sign):
        s = np.sin(0.5 * theta)
        omc = 2.0 * s * s
        lw = log_rot + _LOG2 + 2.0 * np.log(np.abs(s))
        p = regularized_p(nu, zeta * omc, log_w=lw, check_branch=False)
        phase = np.exp(1j * nu * (theta - sign * math.pi) + 1j * ell * theta)
        return phase * np.exp(1j * z * np.cos(theta)) * p

    alpha = _endpoint_exponent([nu])
    common = dict(endpoint_exponent=0.0 if alpha is None else alpha,
                  initial_panels=_panels(zeta, abs(nu) + abs(ell)))
    right = integrate(lambda th: kernel(th, 1), 0.0, math.pi, cfg.quad_tol,
                      singular_end=None if alpha is None else "a", **common)
    left = integrate(lambda th: kernel(th, -1), -math.pi, 0.0, cfg.quad_tol,
                     singular_end=None if alpha is None else "b", **common)
    if not (right.acceptable and left.acceptable):
        raise AccuracyError("Fourier coefficient quadrature did not converge",
                            partial=pref * (right.value + left.value))
    return EvalResult(pref * (right.value + left.value),
                      abs(pref) * (right.error_estimate + left.error_estimate),
                      "fourier/kernel", right.nodes_used + left.nodes_used)


# -- auxiliary normalisation integral ----------------------------------------

def c_mu_integral(mu, cfg=None):
    """Quadrature of ``int_0^pi cos(th)**<Re mu> (1+cos th)**{mu} cos(mu th) dth`` for ``<Re mu> >= 0``.

    Its closed form is ``pi / 2**mu``.
    """
    cfg = cfg or EvalConfig()
    d = decompose(mu, cfg)
    if d.integral_part < 0:
        raise DomainError("the normalisation integral needs <Re mu> >= 0")
    n, frac, mu = d.integral_part, d.fractional_part, d.mu

    def f(t):
        opc, log_opc = _half_angle(t)
        return (-np.cos(t)) ** n * np.exp(frac * log_opc) * np.cos(mu * (np.pi - t))

    alpha = _endpoint_exponent([frac])
    q = integrate(f, 0.0, math.pi, cfg.quad_tol,
                  singular_end=None if alpha is None else "a",
                  endpoint_exponent=0.0 if alpha is None else alpha,
                  initial_panels=_panels(0, mu))
    return EvalResult(q.value, q.error_estimate, "c_mu/quadrature", q.nodes_used)


__all__ = [
    "b_integral",
    "bessel_i",
    "bessel_j",
    "bessel_j_derivative",
    "bessel_k",
    "bessel_y",
    "bessel_y_integer",
    "c_mu_integral",
    "corrective_chi",
    "fourier_coefficient",
    "hankel1",
    "hankel2",
    "in_slit_plane",
    "sigma_sum",
]
