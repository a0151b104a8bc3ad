"""Adaptive Gauss-Kronrod quadrature for complex-valued integrands on a real interval.

The engine works on 15-point Kronrod panels with an embedded 7-point Gauss
rule for the error estimate, and refines by bisecting the worst panels.
Integrands are vectorized: they receive a 1-D float array of abscissae and
return an array of complex values of the same length.

An integrable algebraic or logarithmic singularity at one endpoint is handled
by grading: the panels shrink geometrically (ratio 4) toward that endpoint
down to a width ``t0`` of about 1e-18, and the remaining sliver is added as
``f(t0) * t0 / (alpha + 1)`` for an endpoint behaviour ``t**alpha``.  Put the
singular point at 0 so that abscissae near it are represented exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .branch import principal_log
from .errors import DomainError, QuadratureSamplingError
from .gammatools import reciprocal_gamma, gamma

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[1:7:2] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[9:15:2] = _WG[2::-1]

_EPS = np.finfo(float).eps
GRADING_RATIO = 4.0
GRADING_FLOOR = 1e-18


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_nodes: int = 4096

    def target(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass
class QuadratureResult:
    value: complex
    error_estimate: float
    nodes_used: int
    converged: bool
    # True when the remaining error is dominated by rounding in the samples,
    # so refinement cannot reach the requested tolerance.
    roundoff_limited: bool = False

    @property
    def acceptable(self):
        return self.converged or self.roundoff_limited


def _evaluate_panels(f, left, right, noise=0.0):
    mid = 0.5 * (left + right)
    half = 0.5 * (right - left)
    x = (mid[:, None] + half[:, None] * NODES[None, :]).ravel()
    fx = np.asarray(f(x), dtype=complex)
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape).astype(complex)
    bad = ~np.isfinite(fx)
    if bad.any():
        where = float(x[np.argmax(bad)])
        raise QuadratureSamplingError(f"integrand is not finite at {where!r}", where)
    fx = fx.reshape(len(left), 15)
    kron = half * (fx @ KRONROD_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    absf = np.abs(fx)
    resabs = np.abs(half) * (absf @ KRONROD_WEIGHTS)
    mean = kron / np.where(half == 0, 1, 2 * half)
    resasc = np.abs(half) * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    err = np.abs(kron - gauss)
    scaled = np.where(resasc > 0, resasc * np.minimum(1.0, (200 * err / np.where(resasc > 0, resasc, 1)) ** 1.5), err)
    floor = max(50 * _EPS, noise) * resabs
    return kron, np.maximum(scaled, floor), floor


def _graded_partition(a, b, n_regular, anchor):
    """Panels shrinking geometrically toward ``a``."""
    length = b - a
    zone = 0.25 * length
    # Stop grading where the offset would vanish next to the singular point.
    depth = max(GRADING_FLOOR * max(1.0, zone), 64 * _EPS * anchor)
    levels = max(1, math.ceil(math.log(zone / depth) / math.log(GRADING_RATIO)))
    edges_graded = zone * GRADING_RATIO ** -np.arange(levels + 1)
    t0 = float(edges_graded[-1])
    regular = np.linspace(zone, length, n_regular + 1)
    offsets = np.concatenate([edges_graded[::-1], regular[1:]])
    return a + offsets, t0


def integrate(f, a, b, tol=None, *, singular_end=None, endpoint_exponent=0.0, initial_panels=4,
              noise=0.0, _anchor=None):
    """Integrate ``f`` over ``[a, b]`` adaptively.

    ``singular_end`` may be ``"a"`` or ``"b"`` to grade panels toward an
    endpoint where ``f`` behaves like ``|x - end|**endpoint_exponent`` (or a
    logarithm, for exponent 0); ``Re(endpoint_exponent) > -1`` is required.
    ``noise`` is the relative accuracy of the samples themselves when it is worse
    than rounding; it sets the floor below which refinement stops.
    Accuracy is best when the singular endpoint is 0, since ``f`` is sampled
    at absolute abscissas.
    """
    tol = tol or Tolerance()
    a = float(a)
    b = float(b)
    if a == b:
        return QuadratureResult(0j, 0.0, 0, True)
    if b < a:
        res = integrate(f, b, a, tol, singular_end={"a": "b", "b": "a"}.get(singular_end),
                        endpoint_exponent=endpoint_exponent, initial_panels=initial_panels, noise=noise)
        return QuadratureResult(-res.value, res.error_estimate, res.nodes_used, res.converged, res.roundoff_limited)

    if singular_end == "b":
        # Grade toward 0 in the offset from b so small panel widths stay exact.
        return integrate(lambda s: f(b - s), 0.0, b - a, tol, singular_end="a",
                         endpoint_exponent=endpoint_exponent, initial_panels=initial_panels, noise=noise,
                         _anchor=abs(b))

    tail = 0j
    tail_nodes = 0
    if singular_end == "a":
        alpha = complex(endpoint_exponent)
        if alpha.real <= -1:
            raise DomainError("endpoint singularity is not integrable")
        edges, t0 = _graded_partition(a, b, max(1, initial_panels), abs(a) if _anchor is None else _anchor)
        x0 = a + t0
        f0 = complex(np.asarray(f(np.array([x0])), dtype=complex).ravel()[0])
        if not np.isfinite(f0):
            raise QuadratureSamplingError(f"integrand is not finite at {x0!r}", x0)
        tail = f0 * t0 / (alpha + 1)
        tail_nodes = 1
    elif singular_end is None:
        edges = np.linspace(a, b, max(1, initial_panels) + 1)
    else:
        raise ValueError(f"singular_end must be 'a', 'b' or None, not {singular_end!r}")

    left = edges[:-1].copy()
    right = edges[1:].copy()
    vals, errs, floors = _evaluate_panels(f, left, right, noise)
    nodes = 15 * len(left) + tail_nodes

    while True:
        total = vals.sum() + tail
        err_total = float(errs.sum()) + 1e-12 * abs(tail)
        target = tol.target(total)
        if err_total <= target:
            return QuadratureResult(complex(total), err_total, nodes, True)
        if err_total <= 2 * float(floors.sum()):
            return QuadratureResult(complex(total), err_total, nodes, False, roundoff_limited=True)
        splittable = (right - left) > 64 * _EPS * np.maximum(np.abs(left), np.abs(right))
        order = np.argsort(-np.where(splittable, errs, -1.0))
        order = order[splittable[order]]
        if len(order) == 0:
            return QuadratureResult(complex(total), err_total, nodes, False)
        cum = np.cumsum(errs[order])
        n_pick = int(np.searchsorted(cum, 0.5 * (err_total - 0.5 * target))) + 1
        n_pick = min(n_pick, len(order), (tol.max_nodes - nodes) // 30)
        if n_pick <= 0:
            return QuadratureResult(complex(total), err_total, nodes, False)
        pick = order[:n_pick]
        mid = 0.5 * (left[pick] + right[pick])
        new_left = np.concatenate([left[pick], mid])
        new_right = np.concatenate([mid, right[pick]])
        new_vals, new_errs, new_floors = _evaluate_panels(f, new_left, new_right, noise)
        nodes += 15 * len(new_left)
        keep = np.ones(len(left), dtype=bool)
        keep[pick] = False
        left = np.concatenate([left[keep], new_left])
        right = np.concatenate([right[keep], new_right])
        vals = np.concatenate([vals[keep], new_vals])
        errs = np.concatenate([errs[keep], new_errs])
        floors = np.concatenate([floors[keep], new_floors])


def closed_form_cosine_integral(a, b):
    """``int_0^pi (1 + cos t)**a cos(b t) dt`` in closed form, for ``Re a > -1/2``."""
    a = complex(a)
    b = complex(b)
    if a.real <= -0.5:
        raise DomainError("cosine-power integral needs Re a > -1/2")
    return (math.pi * 2.0 ** (-a) * gamma(1 + 2 * a)
            * reciprocal_gamma(1 + a - b) * reciprocal_gamma(1 + a + b))


def closed_form_negative_power_integral(mu, frac):
    """``int_0^pi cos(mu t) / (1 + cos t)**frac dt`` in closed form, for ``Re frac < 1/2``."""
    mu = complex(mu)
    frac = complex(frac)
    if frac.real >= 0.5:
        raise DomainError("negative-power integral needs Re frac < 1/2")
    return (2.0 ** frac * math.pi * gamma(1 - 2 * frac)
            * reciprocal_gamma(1 - mu - frac) * reciprocal_gamma(1 + mu - frac))


def log_kernel_integral(z):
    """``int_0^pi Log(-i z (1 + cos t)) dt = pi Log(-i z / 2)`` (principal logarithms)."""
    z = complex(z)
    w = -0.5j * z
    if w.imag == 0 and w.real <= 0:
        raise DomainError("log-kernel integral needs -i z off the cut (-inf, 0]")
    return math.pi * principal_log(w)
