"""Evaluation settings and the result record returned by every evaluator."""

import math
import os
from dataclasses import dataclass, field, fields, replace

from .quadrature import Tolerance

MAX_ABS_Z_ENV = "CYLREP_MAX_ABS_Z"
DEFAULT_MAX_ABS_Z = 30.0


def _default_max_abs_z():
    raw = os.environ.get(MAX_ABS_Z_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ABS_Z
    return float(raw)


@dataclass(frozen=True)
class EvalConfig:
    """Immutable knobs for one evaluation.

    ``switch_epsilon`` is the half-width of the band around integers and
    half-integers where the limit formulas replace the generic ones.
    ``max_abs_z`` caps the argument (oscillatory integrands get expensive);
    the ``CYLREP_MAX_ABS_Z`` environment variable overrides the default.
    """

    quad_tol: Tolerance = field(default_factory=Tolerance)
    switch_epsilon: float = 1e-6
    max_abs_z: float = field(default_factory=_default_max_abs_z)
    branch_check: bool = True
    max_order: int = 30

    def __post_init__(self):
        if not 0 < self.switch_epsilon < 0.1:
            raise ValueError("switch_epsilon must lie in (0, 0.1)")
        if not (self.max_abs_z > 0 and math.isfinite(self.max_abs_z)):
            raise ValueError("max_abs_z must be a positive finite number")
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")

    def with_(self, **changes):
        return replace(self, **changes)

    @classmethod
    def from_mapping(cls, values, base=None):
        """Build a config from string key/value pairs (config file or CLI flags)."""
        base = base or cls()
        tol = base.quad_tol
        tol_changes = {}
        changes = {}
        for key, raw in values.items():
            key = key.strip()
            raw = str(raw).strip()
            if key in ("abs_tol", "rel_tol"):
                tol_changes[key] = float(raw)
            elif key == "max_nodes":
                tol_changes[key] = int(raw)
            elif key in ("switch_epsilon", "max_abs_z"):
                changes[key] = float(raw)
            elif key == "max_order":
                changes[key] = int(raw)
            elif key == "branch_check":
                changes[key] = raw.lower() in ("1", "true", "yes", "on")
            else:
                known = [f.name for f in fields(cls)] + ["abs_tol", "rel_tol", "max_nodes"]
                raise KeyError(f"unknown config key {key!r}; expected one of {known}")
        if tol_changes:
            changes["quad_tol"] = replace(tol, **tol_changes)
        return replace(base, **changes)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    error_estimate: float
    trace: str
    nodes: int = 0
