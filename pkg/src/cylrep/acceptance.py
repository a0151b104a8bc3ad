"""Acceptance criteria 1-10 as callable checks, shared by ``selftest`` and the test suite."""

import cmath
import math
from dataclasses import dataclass

from . import oracles
from .config import EvalConfig
from .cylinder import (
    bessel_j,
    bessel_j_derivative,
    bessel_y,
    c_mu_integral,
    corrective_chi,
    fourier_coefficient,
    hankel1,
    hankel2,
)
from .gammatools import p_recurrence_check, regularized_p
from .limits import LimitApproximant, SPECS, approx, full_value, ratio_convergence_test
from .quadrature import Tolerance
from .report import ACCEPTANCE_MU, ACCEPTANCE_Z
from .spherical import dawson_duplication, erf_series, spherical_j, spherical_y

# Finite-difference steps per derivative order.  Rounding noise grows like
# eps/h**n, so higher orders need wider steps.
FD_STEPS = {1: 1e-4, 2: 1e-2, 3: 5e-2}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    worst: float
    limit: float
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number:>2}: {self.name} (worst {self.worst:.3g}, limit {self.limit:.3g})"
        return text + (f" {self.detail}" if self.detail else "")


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


class _Worst:
    def __init__(self):
        self.value = 0.0
        self.where = ""

    def add(self, err, where):
        if not err <= self.value:  # nan counts as worst
            self.value = err if math.isfinite(err) else math.inf
            self.where = where


def criterion_1(cfg=None):
    w = _Worst()
    for mu in ACCEPTANCE_MU:
        for z in ACCEPTANCE_Z:
            w.add(_rel(bessel_j(mu, z, cfg).value, oracles.series_j(mu, z).value), f"mu={mu} z={z:.4g}")
    return CriterionResult(1, "J vs power series on the acceptance grid", w.value <= 1e-8, w.value, 1e-8, w.where)


def criterion_2(cfg=None):
    w = _Worst()
    for mu in ACCEPTANCE_MU:
        for z in ACCEPTANCE_Z:
            z = complex(z)
            if z.real > 0:
                s = oracles.series_j(mu, z).value
                w.add(_rel(oracles.schlafli_j(mu, z).value, s), f"mu={mu} z={z:.4g}")
    return CriterionResult(2, "power series vs Schlafli integral (Re z > 0)", w.value <= 1e-9, w.value, 1e-9, w.where)


def criterion_3(cfg=None):
    nonzero = [(m, z) for m in range(-5, 6) for z in (0.5, 2, 1 + 1j, -3j, 4 - 2j)
               if corrective_chi(m, z, cfg).value != 0]
    w = _Worst()
    for m in range(6):
        for z in (1, 2j, 3 + 1j):
            w.add(_rel(bessel_j(m, z, cfg).value, oracles.classical_integral_j(m, z).value), f"m={m} z={z}")
    ok = not nonzero and w.value <= 1e-10
    detail = w.where if not nonzero else f"nonzero chi at {nonzero[:3]}"
    return CriterionResult(3, "integer orders: chi == 0 and Bessel's integral", ok, w.value, 1e-10, detail)


def criterion_4(cfg=None):
    w = _Worst()
    for mu in (0.4, 1.3, 2.7, 1.1 + 0.6j):
        w.add(abs(c_mu_integral(mu, cfg).value - math.pi / 2**mu), f"mu={mu}")
    return CriterionResult(4, "normalisation integral equals pi/2**mu", w.value <= 1e-10, w.value, 1e-10, w.where)


def criterion_5(cfg=None):
    w = _Worst()
    for xi in (0.3, -0.2, 0.5j):
        for n in (1, 2, 5):
            for arg in (1, 2j, 3 - 1j):
                target = regularized_p(xi + n, arg)
                w.add(abs(p_recurrence_check(xi, n, arg) - target) / max(1.0, abs(target)),
                      f"xi={xi} n={n} w={arg}")
    return CriterionResult(5, "incomplete-gamma recurrence residual", w.value <= 1e-10, w.value, 1e-10, w.where)


def criterion_6(cfg=None):
    generic, integer, ident = _Worst(), _Worst(), _Worst()
    for mu in ACCEPTANCE_MU:
        if complex(mu).imag == 0 and complex(mu).real == int(complex(mu).real):
            continue
        for z in ACCEPTANCE_Z:
            y, h1, h2 = bessel_y(mu, z, cfg).value, hankel1(mu, z, cfg).value, hankel2(mu, z, cfg).value
            where = f"mu={mu} z={z:.4g}"
            generic.add(_rel(y, oracles.oracle_y(mu, z).value), "Y " + where)
            generic.add(_rel(h1, oracles.oracle_h(1, mu, z).value), "H1 " + where)
            generic.add(_rel(h2, oracles.oracle_h(2, mu, z).value), "H2 " + where)
            j = bessel_j(mu, z, cfg).value
            ident.add(_rel(h1 + h2, 2 * j), "H1+H2 " + where)
            ident.add(_rel(h1 - h2, 2j * y), "H1-H2 " + where)
    for m in range(-3, 4):
        for z in ACCEPTANCE_Z:
            y, h1, h2 = bessel_y(m, z, cfg).value, hankel1(m, z, cfg).value, hankel2(m, z, cfg).value
            where = f"m={m} z={z:.4g}"
            integer.add(_rel(y, oracles.oracle_y(m, z).value), "Y " + where)
            integer.add(_rel(h1, oracles.oracle_h(1, m, z).value), "H1 " + where)
            integer.add(_rel(h2, oracles.oracle_h(2, m, z).value), "H2 " + where)
            j = bessel_j(m, z, cfg).value
            ident.add(_rel(h1 + h2, 2 * j), "H1+H2 " + where)
            ident.add(_rel(h1 - h2, 2j * y), "H1-H2 " + where)
    ok = generic.value <= 1e-8 and integer.value <= 1e-6 and ident.value <= 1e-9
    scaled = max(generic.value / 1e-8, integer.value / 1e-6, ident.value / 1e-9)
    detail = (f"generic {generic.value:.2g} (<=1e-8), integer {integer.value:.2g} (<=1e-6), "
              f"identities {ident.value:.2g} (<=1e-9)")
    return CriterionResult(6, "Y/H1/H2 vs oracles and cross identities", ok, scaled, 1.0, detail)


def fourier_symmetry_pairs():
    """``(nu, ell, partner, sign)`` with coefficient(nu, ell) == sign * coefficient(nu, partner)."""
    pairs = []
    for n in (0, 1, 2):
        for ell in range(-4, 5):
            pairs.append((float(n), ell, -ell - 2 * n, 1))
            pairs.append((n + 0.5, ell, -ell - 2 * n - 1, -1))
    return pairs


def criterion_7(cfg=None):
    cfg = cfg or EvalConfig()
    tol = cfg.quad_tol
    w = _Worst()
    for z in (1, 2 + 1j):
        cache = {}

        def coef(nu, ell):
            if (nu, ell) not in cache:
                cache[(nu, ell)] = fourier_coefficient(nu, ell, z, cfg).value
            return cache[(nu, ell)]

        for nu, ell, partner, sign in fourier_symmetry_pairs():
            a, b = coef(nu, ell), sign * coef(nu, partner)
            allowed = 10 * max(tol.abs_tol, tol.rel_tol * max(abs(a), abs(b)))
            w.add(abs(a - b) / allowed, f"nu={nu} l={ell} z={z}")
    return CriterionResult(7, "Fourier-coefficient index symmetries (units of 10x quad tol)",
                           w.value <= 1.0, w.value, 1.0, w.where)


def criterion_8(cfg=None):
    sph, dup, erf = _Worst(), _Worst(), _Worst()
    for m in range(-3, 4):
        for z in ACCEPTANCE_Z:
            factor = cmath.sqrt(math.pi / (2 * complex(z)))
            where = f"m={m} z={z:.4g}"
            sph.add(_rel(spherical_j(m, z, cfg).value, factor * oracles.series_j(m + 0.5, z).value), "j " + where)
            sph.add(_rel(spherical_y(m, z, cfg).value, factor * oracles.oracle_y(m + 0.5, z).value), "y " + where)
    for w in (0.25, 0.5, 1.0, 1.5, 0.5 + 0.3j):
        dup.add(abs(dawson_duplication(w) - oracles.dawson_quadrature(2 * w).value), f"w={w}")
    for w in (0.1, 0.5, 1.0, 1.7, 2.5, -2.0, 1 + 1j, 1.5 - 1j, 0.5 + 2j, -1.2 + 0.8j):
        erf.add(abs(erf_series(w, 0.0, cfg=cfg) - oracles.erf_maclaurin(w).value), f"w={w}")
    worst = max(sph.value, dup.value, erf.value)
    detail = f"spherical {sph.value:.2g}, duplication {dup.value:.2g}, erf {erf.value:.2g}"
    return CriterionResult(8, "spherical functions, Dawson duplication, erf series", worst <= 1e-8, worst, 1e-8,
                           detail)


def criterion_9(cfg=None):
    fd_cfg = (cfg or EvalConfig()).with_(quad_tol=Tolerance(abs_tol=1e-15, rel_tol=1e-14, max_nodes=8192))
    w = _Worst()
    for mu in (0, -0.8, -2.3):
        for z in (1.5, 2 + 0.5j):
            for n in (1, 2, 3):
                fd = oracles.central_difference(lambda x: bessel_j(mu, x, fd_cfg).value, z, n, FD_STEPS[n])
                w.add(_rel(bessel_j_derivative(mu, z, n, cfg).value, fd), f"mu={mu} z={z} n={n}")
    return CriterionResult(9, "derivatives vs Richardson central differences", w.value <= 1e-6, w.value, 1e-6,
                           w.where)


# (approximant, order, corrected) combinations gated by criterion 10.
LIMIT_CASES = [
    (LimitApproximant.CHI_SMALL_Z, -1.7, False),
    (LimitApproximant.CHI_SMALL_Z, -2.3 + 0.5j, False),
    (LimitApproximant.Y_SMALL_Z_GENERIC, 0.3, False),
    (LimitApproximant.Y_SMALL_Z_GENERIC, -1.7, False),
    (LimitApproximant.Y_SMALL_Z_INTEGER, 2, False),
    (LimitApproximant.Y_SMALL_Z_INTEGER, -3, False),
    (LimitApproximant.Y0_SMALL_Z, 0, True),
    (LimitApproximant.CHI_LARGE_Z, -2.3, False),
]


def _monotone(devs):
    tail = devs[1:]
    return all(b <= a * (1 + 1e-9) for a, b in zip(tail, tail[1:]))


def criterion_10(cfg=None):
    worst = 0.0
    problems = []
    for fid, mu, corrected in LIMIT_CASES:
        spec = SPECS[fid]
        rows = ratio_convergence_test(fid, mu, cfg=cfg, corrected=corrected)
        devs = [abs(r[3] - 1) for r in rows]
        if spec.direction == "large":
            extreme = abs(full_value(fid, mu, 50.0, cfg) / approx(fid, mu, 50.0) - 1)
        else:
            extreme = abs(full_value(fid, mu, 1e-3, cfg) / approx(fid, mu, 1e-3, corrected=corrected) - 1)
        worst = max(worst, extreme / spec.threshold)
        if extreme > spec.threshold:
            problems.append(f"{fid.value}(mu={mu}) |ratio-1|={extreme:.3g}")
        if not _monotone(devs):
            problems.append(f"{fid.value}(mu={mu}) not monotone: {devs}")
    return CriterionResult(10, "limiting forms (ratio units of the per-formula threshold)", not problems,
                           worst, 1.0, "; ".join(problems))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(cfg=None, only=None, report=None):
    results = []
    for check in CRITERIA:
        number = int(check.__name__.split("_")[1])
        if only and number not in only:
            continue
        try:
            res = check(cfg)
        except Exception as exc:  # a crash is a failed criterion, not a crashed run
            res = CriterionResult(number, check.__doc__ or check.__name__, False, math.inf, 0.0,
                                  f"raised {type(exc).__name__}: {exc}")
        results.append(res)
        if report is not None:
            report(res.line())
    return results
