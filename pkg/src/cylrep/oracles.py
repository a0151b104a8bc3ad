"""Independent reference evaluators for tests and the ``compare`` command.

None of these touch the production integral representations.  They use
classical power series, Bessel's and Schläfli's integrals through
``scipy.integrate.quad``, and the limit definition of integer-order
second-kind functions.  The only shared code is the scalar gamma kernel.
"""

import cmath
import math
from dataclasses import dataclass

from scipy import integrate as sp_integrate

from .branch import is_integer, on_negative_real_axis, sinpi, cospi
from .errors import AccuracyError, BranchCutError, DivergenceError, DomainError
from .gammatools import EULER_GAMMA, reciprocal_gamma

DEFAULT_SERIES_TERMS = 400
RICHARDSON_STEPS = (1e-4, 5e-5, 2.5e-5)


@dataclass(frozen=True)
class OracleResult:
    value: complex
    terms_or_nodes: int
    tail_bound: float


def _power(z, p):
    """Principal ``z**p``; integer ``p`` needs no branch."""
    if is_integer(p):
        return z ** int(complex(p).real)
    return cmath.exp(p * cmath.log(z))


def _check_cut(mu, z):
    if z != 0 and on_negative_real_axis(z) and not is_integer(mu):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, 0]")


def _ascending_series(mu, z, sign, max_terms):
    """``sum_k sign**k (z/2)**(mu+2k) / (k! Gamma(mu+k+1))`` with a geometric tail bound."""
    mu = complex(mu)
    z = complex(z)
    _check_cut(mu, z)
    if z == 0:
        if mu == 0:
            return OracleResult(1.0 + 0j, 1, 0.0)
        if mu.real > 0 or is_integer(mu):
            return OracleResult(0j, 1, 0.0)
        raise DivergenceError(f"series for order {mu} diverges at z = 0")
    half = 0.5 * z
    lead = _power(half, mu)
    q = sign * half * half
    total = 0j
    qk = 1.0 + 0j
    kfact = 1.0
    for k in range(max_terms):
        term = qk / kfact * reciprocal_gamma(mu + k + 1)
        total += term
        # Once k + 1 > |q|, successive term ratios are bounded by r < 1.
        if k + 1 > 2 * abs(q) and k > 2:
            r = abs(q) / ((k + 1) * max(abs(mu + k + 2), 1e-300))
            nxt = abs(term) * r
            if r < 1 and nxt / (1 - r) <= 1e-17 * abs(total):
                return OracleResult(lead * total, k + 1, abs(lead) * nxt / (1 - r))
        qk *= q
        kfact *= k + 1
    raise AccuracyError(f"power series did not settle in {max_terms} terms", partial=lead * total)


def series_j(mu, z, max_terms=DEFAULT_SERIES_TERMS):
    """Ascending series of ``J_mu(z)``."""
    return _ascending_series(mu, z, -1, max_terms)


def series_i(mu, z, max_terms=DEFAULT_SERIES_TERMS):
    """Ascending series of ``I_mu(z)``."""
    return _ascending_series(mu, z, 1, max_terms)


def _complex_quad(f, a, b, **kw):
    opts = dict(epsabs=1e-15, epsrel=1e-13, limit=400)
    opts.update(kw)
    re, e1, info1 = sp_integrate.quad(lambda t: f(t).real, a, b, full_output=1, **opts)[:3]
    im, e2, info2 = sp_integrate.quad(lambda t: f(t).imag, a, b, full_output=1, **opts)[:3]
    return complex(re, im), e1 + e2, info1["neval"] + info2["neval"]


def classical_integral_j(m, z):
    """Bessel's integral ``(1/pi) int_0^pi cos(z sin t - m t) dt`` for integer m."""
    if not is_integer(m):
        raise DomainError("Bessel's integral needs an integer order")
    m = int(complex(m).real)
    z = complex(z)
    val, err, n = _complex_quad(lambda t: cmath.cos(z * math.sin(t) - m * t), 0.0, math.pi)
    return OracleResult(val / math.pi, n, err / math.pi)


def _schlafli_cutoff(mu, z):
    re_z = z.real
    t = math.asinh(max(5.0, 40.0 / re_z))
    for _ in range(2):
        t = math.asinh(max(5.0, (40.0 + abs(mu.real) * t) / re_z))
    return t


def schlafli_j(mu, z):
    """Schläfli's integral for ``J_mu(z)``, ``Re z > 0``."""
    mu = complex(mu)
    z = complex(z)
    if not (z.real > 0 or (z.real == 0 and z != 0 and mu.real > 0)):
        raise DomainError("Schläfli's integral needs Re z > 0")
    first, e1, n1 = _complex_quad(lambda t: cmath.cos(z * math.sin(t) - mu * t), 0.0, math.pi)
    value = first / math.pi
    err = e1 / math.pi
    nodes = n1
    s = sinpi(mu)
    if s != 0:
        cap = _schlafli_cutoff(mu, z)
        second, e2, n2 = _complex_quad(lambda t: cmath.exp(-(z * math.sinh(t) + mu * t)), 0.0, cap, limit=4000)
        remainder = math.exp(-z.real * math.sinh(cap) + abs(mu.real) * cap) / (z.real * math.cosh(cap))
        value -= s / math.pi * second
        err += abs(s) / math.pi * (e2 + remainder)
        nodes += n2
    return OracleResult(value, nodes, err)


def _richardson(values):
    """Two levels of Richardson extrapolation for steps in ratio 2 with error O(eps)."""
    y1, y2, y3 = values
    r1, r2 = 2 * y2 - y1, 2 * y3 - y2
    best = (4 * r2 - r1) / 3
    return best, abs(best - r2)


def _integer_limit(fn, m, z):
    vals = [fn(m + eps, z) for eps in RICHARDSON_STEPS]
    best, spread = _richardson([v.value for v in vals])
    return OracleResult(best, sum(v.terms_or_nodes for v in vals), spread + max(v.tail_bound for v in vals))


def _y_combination(mu, z):
    a = series_j(mu, z)
    b = series_j(-mu, z)
    s = sinpi(mu)
    value = (a.value * cospi(mu) - b.value) / s
    return OracleResult(value, a.terms_or_nodes + b.terms_or_nodes, (a.tail_bound + b.tail_bound) / abs(s))


def oracle_y(mu, z):
    """``Y_mu(z)`` from the series of ``J_{+-mu}``; integer orders by extrapolated limit."""
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        raise DivergenceError("Y_mu is divergent at z=0")
    if on_negative_real_axis(z):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, 0]")
    if is_integer(mu):
        return _integer_limit(_y_combination, mu.real, z)
    return _y_combination(mu, z)


def oracle_h(kind, mu, z):
    """Hankel functions from the series of ``J_{+-mu}`` (integer orders via ``J +- iY``)."""
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    mu = complex(mu)
    z = complex(z)
    if is_integer(mu):
        j = series_j(mu, z)
        y = oracle_y(mu, z)
        sign = 1j if kind == 1 else -1j
        return OracleResult(j.value + sign * y.value, j.terms_or_nodes + y.terms_or_nodes,
                            j.tail_bound + y.tail_bound)
    if z == 0:
        raise DivergenceError("Hankel functions are divergent at z=0")
    if on_negative_real_axis(z):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, 0]")
    a = series_j(mu, z)
    b = series_j(-mu, z)
    s = sinpi(mu)
    if kind == 1:
        value = (b.value - cmath.exp(-1j * math.pi * mu) * a.value) / (1j * s)
    else:
        value = (b.value - cmath.exp(1j * math.pi * mu) * a.value) / (-1j * s)
    return OracleResult(value, a.terms_or_nodes + b.terms_or_nodes, (a.tail_bound + b.tail_bound) / abs(s))


def _k_combination(mu, z):
    a = series_i(mu, z)
    b = series_i(-mu, z)
    s = sinpi(mu)
    value = 0.5 * math.pi * (b.value - a.value) / s
    return OracleResult(value, a.terms_or_nodes + b.terms_or_nodes,
                        0.5 * math.pi * (a.tail_bound + b.tail_bound) / abs(s))


def oracle_k(mu, z):
    """``K_mu(z) = (pi/2)(I_{-mu} - I_mu)/sin(mu pi)``, integer orders by extrapolated limit."""
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        raise DivergenceError("K_mu is divergent at z=0")
    if on_negative_real_axis(z):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, 0]")
    if is_integer(mu):
        return _integer_limit(_k_combination, mu.real, z)
    return _k_combination(mu, z)


def erf_maclaurin(w, max_terms=DEFAULT_SERIES_TERMS):
    """``erf(w) = (2/sqrt(pi)) sum_n (-1)**n w**(2n+1) / (n! (2n+1))``."""
    w = complex(w)
    q = -w * w
    power = w
    total = 0j
    for n in range(max_terms):
        term = power / (2 * n + 1)
        total += term
        if n > abs(q) and abs(term) <= 1e-17 * abs(total):
            return OracleResult(2 / math.sqrt(math.pi) * total, n + 1, 2 / math.sqrt(math.pi) * abs(term))
        power *= q / (n + 1)
    if w == 0:
        return OracleResult(0j, 1, 0.0)
    raise AccuracyError("erf series did not settle", partial=2 / math.sqrt(math.pi) * total)


def dawson_quadrature(w):
    """Dawson's integral along the segment: ``F(w) = w int_0^1 exp((s**2 - 1) w**2) ds``."""
    w = complex(w)
    if w == 0:
        return OracleResult(0j, 0, 0.0)
    w2 = w * w
    val, err, n = _complex_quad(lambda s: cmath.exp((s * s - 1) * w2), 0.0, 1.0)
    return OracleResult(w * val, n, abs(w) * err)


def y0_small_z_series(z, terms=30):
    """``(2/pi)[ln(z/2) + gamma] + (4/pi) sum_k (iz/2)**k Gamma(2k) / (k!)**3``."""
    z = complex(z)
    acc = 0j
    for k in range(1, terms + 1):
        acc += (0.5j * z) ** k * math.gamma(2 * k) / math.factorial(k) ** 3
    return 2 / math.pi * (cmath.log(0.5 * z) + EULER_GAMMA) + 4 / math.pi * acc


_FD_STENCILS = {
    1: ((1, 1.0), (-1, -1.0)),
    2: ((1, 1.0), (0, -2.0), (-1, 1.0)),
    3: ((2, 1.0), (1, -2.0), (-1, 2.0), (-2, -1.0)),
}
_FD_SCALE = {1: 2.0, 2: 1.0, 3: 2.0}


def central_difference(f, z, n, h, levels=2):
    """n-th derivative (n = 1, 2, 3) of analytic ``f`` by central differences along the real direction,
    improved by ``levels`` Richardson steps (steps h, h/2, ...; error even in h).
    """
    if n not in _FD_STENCILS:
        raise ValueError("central_difference supports n = 1, 2, 3")
    z = complex(z)

    def d(step):
        acc = sum(c * f(z + k * step) for k, c in _FD_STENCILS[n])
        return acc / (_FD_SCALE[n] * step**n)

    table = [d(h / 2**i) for i in range(levels + 1)]
    for lev in range(1, levels + 1):
        factor = 4.0**lev
        table = [(factor * table[i + 1] - table[i]) / (factor - 1) for i in range(len(table) - 1)]
    return table[0]


__all__ = [
    "OracleResult",
    "central_difference",
    "classical_integral_j",
    "dawson_quadrature",
    "erf_maclaurin",
    "oracle_h",
    "oracle_k",
    "oracle_y",
    "schlafli_j",
    "series_i",
    "series_j",
    "y0_small_z_series",
]
