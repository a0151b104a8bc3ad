"""Leading-order behaviour near z = 0 and for large |z|, as standalone approximants."""

import cmath
import enum
import math
from dataclasses import dataclass

from .branch import i_pow, is_integer, is_nonpositive_integer
from .config import EvalConfig
from .cylinder import bessel_j, bessel_y, corrective_chi
from .errors import DomainError
from .gammatools import EULER_GAMMA, gamma, reciprocal_gamma
from .orderdecomp import OrderKind, decompose, sign_of_real_part


class LimitApproximant(enum.Enum):
    CHI_SMALL_Z = "ChiSmallZ"
    CHI_LARGE_Z = "ChiLargeZ"
    J_SMALL_Z = "JSmallZ"
    Y_SMALL_Z_GENERIC = "YSmallZGeneric"
    Y_SMALL_Z_INTEGER = "YSmallZInteger"
    Y0_SMALL_Z = "Y0SmallZ"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        for member in cls:
            if member.value.lower() == str(name).lower() or member.name.lower() == str(name).lower():
                return member
        raise DomainError(f"unknown approximant {name!r}; choose from {[m.value for m in cls]}")


@dataclass(frozen=True)
class LimitSpec:
    validity: str
    direction: str          # "small" or "large"
    threshold: float        # |ratio - 1| allowed at the extreme point of the default sequence
    default_order: complex


SPECS = {
    LimitApproximant.CHI_SMALL_Z: LimitSpec("Re mu <= -1/2, mu not an integer", "small", 0.02, -1.7),
    LimitApproximant.CHI_LARGE_Z: LimitSpec(
        "Re mu <= -1/2, mu neither integer nor half-integer", "large", 0.10, -2.3),
    LimitApproximant.J_SMALL_Z: LimitSpec("mu not a negative integer", "small", 0.02, 0.3),
    LimitApproximant.Y_SMALL_Z_GENERIC: LimitSpec("mu not an integer, Re mu != 0", "small", 0.02, 0.3),
    LimitApproximant.Y_SMALL_Z_INTEGER: LimitSpec("integer m != 0", "small", 0.02, 2),
    LimitApproximant.Y0_SMALL_Z: LimitSpec("order 0 only", "small", 0.01, 0),
}


def _regime_error(fid, mu):
    return DomainError(f"{fid.value} is outside its regime ({SPECS[fid].validity}) for mu = {mu}")


def _pow(base, p):
    return cmath.exp(complex(p) * cmath.log(base))


def approx(formula_id, mu, z, corrected=False):
    """Closed-form leading behaviour.  ``corrected`` adds the series correction to Y0SmallZ."""
    fid = LimitApproximant.parse(formula_id)
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        raise DomainError("approximants are evaluated at z != 0")
    d = decompose(mu)
    if fid is LimitApproximant.CHI_SMALL_Z:
        if mu.real > -0.5 or d.is_integer:
            raise _regime_error(fid, mu)
        return _pow(z / 2, mu) * reciprocal_gamma(1 + mu)
    if fid is LimitApproximant.CHI_LARGE_Z:
        if mu.real > -0.5 or d.is_integer or d.kind is OrderKind.HALF_INTEGER:
            raise _regime_error(fid, mu)
        n, frac = d.integral_part, d.fractional_part
        # n <= -1 here, so Gamma(-n) is finite.
        assert n <= -1
        coef = gamma(frac - 0.5) * reciprocal_gamma(-n) * reciprocal_gamma(mu + frac)
        return i_pow(1 + n) / math.sqrt(math.pi) * coef * _pow(2 * z, frac - 1) * cmath.exp(1j * z)
    if fid is LimitApproximant.J_SMALL_Z:
        if is_nonpositive_integer(mu) and mu != 0:
            raise _regime_error(fid, mu)
        if mu.real > -0.5:
            return _pow(z / 2, mu) * reciprocal_gamma(1 + d.integral_part) * reciprocal_gamma(1 + d.fractional_part)
        return _pow(z / 2, mu) * reciprocal_gamma(1 + mu)
    if fid is LimitApproximant.Y_SMALL_Z_GENERIC:
        if is_integer(mu) or mu.real == 0:
            raise _regime_error(fid, mu)
        sgn = sign_of_real_part(mu)
        s_mu = cmath.cos(math.pi * mu) if mu.real < 0 else -1.0
        return sgn * s_mu / math.pi * gamma(mu * sgn) * _pow(2 / z, mu * sgn)
    if fid is LimitApproximant.Y_SMALL_Z_INTEGER:
        if not is_integer(mu) or mu == 0:
            raise _regime_error(fid, mu)
        m = int(mu.real)
        return -i_pow(m - abs(m)) / math.pi * math.gamma(abs(m)) * (2 / z) ** abs(m)
    if fid is LimitApproximant.Y0_SMALL_Z:
        if mu != 0:
            raise _regime_error(fid, mu)
        value = 2 / math.pi * (cmath.log(z / 2) + EULER_GAMMA)
        if corrected:
            acc = 0j
            for k in range(1, 30):
                acc += (0.5j * z) ** k * math.gamma(2 * k) / math.factorial(k) ** 3
            value += 4 / math.pi * acc
        return value
    raise AssertionError(fid)


def full_value(formula_id, mu, z, cfg=None):
    """The function an approximant stands for, from the production evaluators."""
    fid = LimitApproximant.parse(formula_id)
    if fid in (LimitApproximant.CHI_SMALL_Z, LimitApproximant.CHI_LARGE_Z):
        if fid is LimitApproximant.CHI_LARGE_Z:
            cfg = cfg or EvalConfig()
            if abs(z) > cfg.max_abs_z:
                cfg = cfg.with_(max_abs_z=abs(z))
        return corrective_chi(mu, z, cfg).value
    if fid is LimitApproximant.J_SMALL_Z:
        return bessel_j(mu, z, cfg).value
    return bessel_y(mu, z, cfg).value


def default_sequence(formula_id):
    fid = LimitApproximant.parse(formula_id)
    if SPECS[fid].direction == "large":
        return [10.0 * 2**k for k in range(1, 4)]
    return [10.0 ** -k for k in range(1, 5)]


def ratio_convergence_test(formula_id, mu, z_sequence=None, cfg=None, corrected=False):
    """Rows ``(z, approximant, full value, full/approximant)`` along the sequence."""
    fid = LimitApproximant.parse(formula_id)
    zs = default_sequence(fid) if z_sequence is None else list(z_sequence)
    rows = []
    for z in zs:
        a = approx(fid, mu, z, corrected=corrected)
        f = full_value(fid, mu, z, cfg)
        rows.append((complex(z), a, f, f / a))
    return rows


__all__ = [
    "LimitApproximant",
    "SPECS",
    "approx",
    "default_sequence",
    "full_value",
    "ratio_convergence_test",
]
