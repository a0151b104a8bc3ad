"""Function registry, grid sweeps against the oracles, and CSV/JSON emission."""

import cmath
import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from . import oracles
from .branch import is_integer
from .config import EvalConfig, EvalResult
from .cylinder import (
    bessel_i,
    bessel_j,
    bessel_j_derivative,
    bessel_k,
    bessel_y,
    hankel1,
    hankel2,
)
from .errors import CylrepError, DomainError
from .spherical import dawson, erf_series, spherical_j, spherical_y

CSV_HEADER = [
    "mu_re", "mu_im", "z_re", "z_im", "fn", "val_re", "val_im",
    "oracle_re", "oracle_im", "abs_err", "rel_err", "trace", "nodes",
]

ACCEPTANCE_MU = [0, 0.3, -0.3, 0.7, -0.7, 1.5, -1.3, -2.5, -3.5, -4.2, 3 + 3j, -2.5 + 0.4j, -0.3 - 1.1j]
ACCEPTANCE_Z = [0.5, 1, 2, 5, 10, 2 * cmath.exp(0.25j * math.pi), 1.5 * cmath.exp(-0.4j * math.pi), 0.1 + 3j]


def _integer_order(mu):
    if not is_integer(mu):
        raise DomainError(f"spherical functions need an integer order, got {mu}")
    return int(complex(mu).real)


def _sph_factor(z):
    return cmath.sqrt(math.pi / (2 * complex(z)))


@dataclass(frozen=True)
class FunctionEntry:
    evaluate: object   # (mu, z, cfg, n) -> EvalResult
    oracle: object     # (mu, z, n) -> complex
    uses_order: bool = True


FUNCTIONS = {
    "J": FunctionEntry(lambda mu, z, cfg, n: bessel_j(mu, z, cfg),
                       lambda mu, z, n: oracles.series_j(mu, z).value),
    "I": FunctionEntry(lambda mu, z, cfg, n: bessel_i(mu, z, cfg),
                       lambda mu, z, n: oracles.series_i(mu, z).value),
    "Y": FunctionEntry(lambda mu, z, cfg, n: bessel_y(mu, z, cfg),
                       lambda mu, z, n: oracles.oracle_y(mu, z).value),
    "H1": FunctionEntry(lambda mu, z, cfg, n: hankel1(mu, z, cfg),
                        lambda mu, z, n: oracles.oracle_h(1, mu, z).value),
    "H2": FunctionEntry(lambda mu, z, cfg, n: hankel2(mu, z, cfg),
                        lambda mu, z, n: oracles.oracle_h(2, mu, z).value),
    "K": FunctionEntry(lambda mu, z, cfg, n: bessel_k(mu, z, cfg),
                       lambda mu, z, n: oracles.oracle_k(mu, z).value),
    "jsph": FunctionEntry(
        lambda mu, z, cfg, n: spherical_j(_integer_order(mu), z, cfg),
        lambda mu, z, n: _sph_factor(z) * oracles.series_j(_integer_order(mu) + 0.5, z).value),
    "ysph": FunctionEntry(
        lambda mu, z, cfg, n: spherical_y(_integer_order(mu), z, cfg),
        lambda mu, z, n: _sph_factor(z) * oracles.oracle_y(_integer_order(mu) + 0.5, z).value),
    "dJ": FunctionEntry(
        lambda mu, z, cfg, n: bessel_j_derivative(mu, z, n, cfg),
        # Classical identity: J^(n) = 2^-n sum_j (-1)^j C(n, j) J_{mu-n+2j}.
        lambda mu, z, n: sum((-1) ** j * math.comb(n, j) * oracles.series_j(mu - n + 2 * j, z).value
                             for j in range(n + 1)) / 2**n),
    "dawson": FunctionEntry(lambda mu, z, cfg, n: EvalResult(dawson(z), 0.0, "dawson/faddeeva"),
                            lambda mu, z, n: oracles.dawson_quadrature(z).value, uses_order=False),
    "erf": FunctionEntry(lambda mu, z, cfg, n: EvalResult(erf_series(z, 0.0, cfg=cfg), 0.0, "erf/half-integer-I-series"),
                         lambda mu, z, n: oracles.erf_maclaurin(z).value, uses_order=False),
}


def lookup(name):
    key = {k.lower(): k for k in FUNCTIONS}.get(str(name).lower())
    if key is None:
        raise DomainError(f"unknown function {name!r}; choose from {sorted(FUNCTIONS)}")
    return key, FUNCTIONS[key]


def evaluate(name, mu, z, cfg=None, n=1):
    _, entry = lookup(name)
    return entry.evaluate(complex(mu), complex(z), cfg or EvalConfig(), int(n))


@dataclass
class GridRow:
    mu: complex
    z: complex
    function: str
    value: complex
    oracle: complex
    abs_err: float
    rel_err: float
    trace: str
    nodes: int

    @property
    def failed(self):
        return self.trace.startswith("error:")


def _nan_row(name, mu, z, trace):
    nan = complex(math.nan, math.nan)
    return GridRow(complex(mu), complex(z), name, nan, nan, math.nan, math.nan, trace, 0)


def compare_point(name, mu, z, cfg=None, n=1):
    key, entry = lookup(name)
    mu = complex(mu)
    z = complex(z)
    try:
        res = entry.evaluate(mu, z, cfg or EvalConfig(), int(n))
        ref = complex(entry.oracle(mu, z, int(n)))
    except (CylrepError, ValueError, ArithmeticError) as exc:
        msg = " ".join(str(exc).split())
        return _nan_row(key, mu, z, f"error:{type(exc).__name__}: {msg}")
    abs_err = abs(res.value - ref)
    return GridRow(mu, z, key, res.value, ref, abs_err, abs_err / max(1.0, abs(ref)), res.trace, res.nodes)


@dataclass
class GridReport:
    rows: list = field(default_factory=list)

    def summary(self):
        ok = [r for r in self.rows if not r.failed]
        max_rel = max((r.rel_err for r in ok), default=0.0)
        mean_nodes = sum(r.nodes for r in ok) / len(ok) if ok else 0.0
        return {"points": len(self.rows), "failed": len(self.rows) - len(ok),
                "max_rel_err": max_rel, "mean_nodes": mean_nodes}

    def to_csv(self, stream=None):
        # csv cannot quote NUL; it is dropped from traces, which never carry one themselves.
        out = stream or io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow([
                _fmt(r.mu.real), _fmt(r.mu.imag), _fmt(r.z.real), _fmt(r.z.imag), r.function,
                _fmt(r.value.real), _fmt(r.value.imag), _fmt(r.oracle.real), _fmt(r.oracle.imag),
                _fmt(r.abs_err), _fmt(r.rel_err), r.trace.replace("\0", ""), str(r.nodes),
            ])
        return out.getvalue() if stream is None else None

    @classmethod
    def from_csv(cls, text):
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        rows = []
        for rec in reader:
            if not rec:
                continue
            f = [float(x) for x in rec[:4]]
            v = [float(x) for x in rec[5:11]]
            rows.append(GridRow(complex(f[0], f[1]), complex(f[2], f[3]), rec[4],
                                complex(v[0], v[1]), complex(v[2], v[3]), v[4], v[5], rec[11], int(rec[12])))
        return cls(rows)

    def to_json(self):
        def enc(r):
            d = asdict(r)
            for key in ("mu", "z", "value", "oracle"):
                d[key] = [_json_float(d[key].real), _json_float(d[key].imag)]
            d["abs_err"] = _json_float(d["abs_err"])
            d["rel_err"] = _json_float(d["rel_err"])
            return d
        return json.dumps({"rows": [enc(r) for r in self.rows], "summary": self.summary()}, indent=2)


def _fmt(x):
    return "%.17g" % x


def _json_float(x):
    return x if math.isfinite(x) else None


def run_grid(name, mus, zs, cfg=None, n=1, workers=1):
    """Evaluate every (mu, z) pair; rows come back in grid order whatever the scheduling."""
    key, entry = lookup(name)
    if not entry.uses_order:
        mus = [0.0]
    points = [(complex(mu), complex(z)) for mu in mus for z in zs]
    cfg = cfg or EvalConfig()
    if workers <= 1 or len(points) <= 1:
        rows = [compare_point(key, mu, z, cfg, n) for mu, z in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda p: compare_point(key, p[0], p[1], cfg, n), points))
    return GridReport(rows)


__all__ = [
    "ACCEPTANCE_MU",
    "ACCEPTANCE_Z",
    "CSV_HEADER",
    "FUNCTIONS",
    "GridReport",
    "GridRow",
    "compare_point",
    "evaluate",
    "lookup",
    "run_grid",
]
