"""Cylinder functions of complex order and argument from integral-plus-finite-sum representations."""

from .config import EvalConfig, EvalResult
from .cylinder import (
    b_integral,
    bessel_i,
    bessel_j,
    bessel_j_derivative,
    bessel_k,
    bessel_y,
    bessel_y_integer,
    c_mu_integral,
    corrective_chi,
    fourier_coefficient,
    hankel1,
    hankel2,
    sigma_sum,
)
from .errors import (
    AccuracyError,
    BranchCutError,
    CylrepError,
    DivergenceError,
    DomainError,
    PoleAtNonpositiveInteger,
    QuadratureSamplingError,
    TruePole,
)
from .gammatools import gamma, gamma_ratio, loggamma, reciprocal_gamma, regularized_p, regularized_p_split, upper_gamma_zero
from .limits import LimitApproximant, approx, ratio_convergence_test
from .orderdecomp import OrderDecomposition, OrderKind, decompose
from .quadrature import Tolerance, integrate
from .spherical import (
    SeriesTruncation,
    dawson,
    dawson_cosine_coefficient,
    dawson_duplication,
    dawson_series,
    erf_series,
    spherical_j,
    spherical_y,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
