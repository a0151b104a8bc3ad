"""Integral/fractional split of a complex order.

``mu = integral_part + fractional_part`` where ``integral_part`` is the
nearest integer to ``Re mu`` with ties rounded down, so the fractional part
satisfies ``-1/2 < Re(fractional_part) <= 1/2``.
"""

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class OrderKind(enum.Enum):
    INTEGER = "Integer"
    HALF_INTEGER = "HalfInteger"
    NEAR_INTEGER = "NearInteger"
    NEAR_HALF_INTEGER = "NearHalfInteger"
    GENERIC = "Generic"


class SignRegime(enum.Enum):
    NEGATIVE = "Negative"
    NON_NEGATIVE = "NonNegative"


@dataclass(frozen=True)
class OrderDecomposition:
    mu: complex
    integral_part: int
    fractional_part: complex
    kind: OrderKind

    @property
    def is_integer(self):
        return self.kind is OrderKind.INTEGER

    @property
    def nearest_integer(self):
        return round(self.mu.real)


DEFAULT_SWITCH_EPSILON = 1e-6


def decompose(mu, config=None):
    mu = complex(mu)
    if not (math.isfinite(mu.real) and math.isfinite(mu.imag)):
        raise DomainError(f"order must be finite, got {mu}")
    eps = config.switch_epsilon if config is not None else DEFAULT_SWITCH_EPSILON
    n = math.ceil(mu.real - 0.5)
    frac = complex(mu.real - n, mu.imag)
    if frac == 0:
        kind = OrderKind.INTEGER
    elif frac == 0.5:
        kind = OrderKind.HALF_INTEGER
    elif abs(mu - round(mu.real)) < eps:
        kind = OrderKind.NEAR_INTEGER
    elif abs(mu - (math.floor(mu.real) + 0.5)) < eps:
        kind = OrderKind.NEAR_HALF_INTEGER
    else:
        kind = OrderKind.GENERIC
    return OrderDecomposition(mu, n, frac, kind)


def sign_regime(mu):
    mu = complex(mu)
    if not cmath.isfinite(mu):
        raise DomainError(f"order must be finite, got {mu}")
    return SignRegime.NEGATIVE if mu.real < 0 else SignRegime.NON_NEGATIVE


def sign_of_real_part(mu):
    """sgn(Re mu) with sgn(0) = +1."""
    return -1 if complex(mu).real < 0 else 1
