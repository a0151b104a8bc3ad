"""Branch conventions for complex logarithms and powers.

Everything uses the principal logarithm, ``Log w`` with imaginary part in
(-pi, pi], and ``w**p == exp(p * Log w)``.

The cylinder-function formulas contain powers of rotated arguments such as
``(-i z)**p`` and ``(-2 i z)**p``.  Taking the principal branch of the rotated
quantity would put a spurious cut on the negative imaginary z axis, inside the
slit plane where the functions are analytic.  ``rotated_log`` instead returns
``Log z - i pi/2``, the continuation that agrees with the principal branch of
``Log(-i z)`` whenever ``-pi/2 < arg z <= pi`` and stays continuous across the
whole slit plane.
"""

import cmath
import math

import numpy as np

HALF_PI = 0.5 * math.pi


def principal_log(w):
    """Principal logarithm; accepts scalars or arrays."""
    if np.ndim(w) == 0:
        return cmath.log(complex(w))
    return np.log(np.asarray(w, dtype=complex))


def principal_pow(w, p):
    """``w**p`` on the principal branch, with ``0**p`` handled for integer ``p >= 0``."""
    w = complex(w)
    p = complex(p)
    if w == 0:
        if p == 0:
            return 1.0 + 0j
        if p.real > 0:
            return 0j
        raise ZeroDivisionError("0 raised to a power with nonpositive real part")
    if p.imag == 0 and p.real == int(p.real) and abs(p.real) < 64:
        return w ** int(p.real)
    return cmath.exp(p * cmath.log(w))


def i_pow(p):
    """``i**p = exp(i pi p / 2)``."""
    return cmath.exp(1j * HALF_PI * complex(p))


def rotated_log(z, scale=1.0):
    """Continued logarithm of ``-i * scale * z`` for ``scale > 0``."""
    return principal_log(z) + math.log(scale) - 1j * HALF_PI


def rotated_pow(z, p, scale=1.0):
    """``(-i * scale * z)**p`` continued through the slit z plane."""
    return cmath.exp(complex(p) * rotated_log(complex(z), scale))


def on_negative_real_axis(z):
    z = complex(z)
    return z.imag == 0 and z.real <= 0


def in_slit_plane(z):
    """True when z is off the closed ray (-inf, 0]."""
    return not on_negative_real_axis(z)


def sinpi(x):
    """``sin(pi x)`` with exact zeros at the integers (real part reduced first)."""
    x = complex(x)
    n = round(x.real)
    r = complex(x.real - n, x.imag)
    s = cmath.sin(math.pi * r)
    return -s if n % 2 else s


def cospi(x):
    """``cos(pi x)`` with exact zeros at the half-integers."""
    x = complex(x)
    if x.imag == 0 and (x.real - 0.5) == math.floor(x.real - 0.5):
        return 0j
    n = round(x.real)
    r = complex(x.real - n, x.imag)
    c = cmath.cos(math.pi * r)
    return -c if n % 2 else c


def is_integer(x):
    x = complex(x)
    return x.imag == 0 and math.isfinite(x.real) and x.real == math.floor(x.real)


def is_nonpositive_integer(x):
    x = complex(x)
    return is_integer(x) and x.real <= 0
