"""Command-line interface: ``eval``, ``compare``, ``limits`` and ``selftest``.

Exit codes: 0 success, 1 usage, 2 domain, 3 accuracy not met.
"""

import argparse
import json
import sys

from .acceptance import run_all
from .config import EvalConfig
from .errors import AccuracyError, DomainError
from .limits import LimitApproximant, SPECS, default_sequence, ratio_convergence_test
from .report import ACCEPTANCE_MU, ACCEPTANCE_Z, evaluate, lookup, run_grid

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_ACCURACY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text):
    """``"re,im"`` or a bare real ``"re"``."""
    parts = str(text).strip().split(",")
    if len(parts) not in (1, 2) or not all(p.strip() for p in parts):
        raise UsageError(f"expected a complex number as 're,im', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"expected a complex number as 're,im', got {text!r}") from None
    return complex(values[0], values[1] if len(values) == 2 else 0.0)


def parse_grid(text):
    """Semicolon-separated complex values; the empty string is an empty grid."""
    return [parse_complex(item) for item in text.split(";") if item.strip()]


def read_config_file(path):
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, value = line.split("=", 1)
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    return values


def build_config(args):
    values = read_config_file(args.config) if args.config else {}
    if args.tol is not None:
        values["rel_tol"] = args.tol
    try:
        return EvalConfig.from_mapping(values)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad configuration: {exc}") from None


def _complex_json(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _emit(text, out_path):
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}") from None
    else:
        sys.stdout.write(text)


def _function(name):
    try:
        return lookup(name)[0]
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args, cfg):
    key = _function(args.function)
    mu = parse_complex(args.mu)
    z = parse_complex(args.z)
    res = evaluate(key, mu, z, cfg, args.n)
    if args.json:
        payload = {"function": key, "mu": _complex_json(mu), "z": _complex_json(z),
                   "value": _complex_json(res.value), "error_estimate": res.error_estimate,
                   "trace": res.trace, "nodes": res.nodes}
        if key == "dJ":
            payload["n"] = args.n
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        v = complex(res.value)
        _emit(f"value = {v.real:.17g} {'+' if v.imag >= 0 else '-'} {abs(v.imag):.17g}i\n"
              f"error_estimate = {res.error_estimate:.3g}\n"
              f"trace = {res.trace}\n"
              f"nodes = {res.nodes}\n", args.out)
    return EXIT_OK


def cmd_compare(args, cfg):
    key = _function(args.function)
    mus = ACCEPTANCE_MU if args.grid_mu is None else parse_grid(args.grid_mu)
    zs = ACCEPTANCE_Z if args.grid_z is None else parse_grid(args.grid_z)
    report = run_grid(key, mus, zs, cfg, n=args.n, workers=args.workers)
    _emit(report.to_json() + "\n" if args.json else report.to_csv(), args.out)
    s = report.summary()
    print(f"{key}: {s['points']} points, {s['failed']} failed, max rel_err {s['max_rel_err']:.3g}, "
          f"mean nodes {s['mean_nodes']:.1f}", file=sys.stderr)
    return EXIT_OK


def cmd_limits(args, cfg):
    try:
        fid = LimitApproximant.parse(args.formula)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    spec = SPECS[fid]
    mu = parse_complex(args.mu) if args.mu is not None else complex(spec.default_order)
    zs = parse_grid(args.grid_z) if args.grid_z is not None else default_sequence(fid)
    rows = ratio_convergence_test(fid, mu, zs, cfg, corrected=args.corrected)
    if args.json:
        payload = {"formula": fid.value, "mu": _complex_json(mu), "corrected": args.corrected,
                   "threshold": spec.threshold,
                   "rows": [{"z": _complex_json(z), "approx": _complex_json(a), "full": _complex_json(f),
                             "ratio": _complex_json(r)} for z, a, f, r in rows]}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"{fid.value} mu={mu} threshold={spec.threshold:g}",
                 f"{'z':>24} {'|ratio-1|':>12} {'ratio':>44}"]
        for z, _, _, r in rows:
            lines.append(f"{str(complex(z)):>24} {abs(r - 1):12.4e} {str(complex(r)):>44}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_selftest(args, cfg):
    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",") if x.strip()}
        except ValueError:
            raise UsageError("--only expects comma-separated criterion numbers") from None
    results = run_all(cfg, only=only, report=print)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_ACCURACY if failed else EXIT_OK


_VALUE_FLAGS = ("--mu", "--z", "--grid-mu", "--grid-z", "--tol")


def _attach_values(argv):
    # argparse mistakes "-1.3,0" for an option; bind such values to their flag.
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="relative quadrature tolerance")
    common.add_argument("--config", default=None, help="file of key=value lines overriding defaults")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    parser = _Parser(prog="cylrep", description="Cylinder functions of complex order and argument.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate one function at one point")
    p.add_argument("function")
    p.add_argument("--mu", default="0,0")
    p.add_argument("--z", required=True)
    p.add_argument("--n", type=int, default=1, help="derivative order for dJ")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("compare", parents=[common], help="sweep a grid against the oracle")
    p.add_argument("function")
    p.add_argument("--grid-mu", default=None, help="'re,im;re,im;...' (default: acceptance grid)")
    p.add_argument("--grid-z", default=None, help="'re,im;re,im;...' (default: acceptance grid)")
    p.add_argument("--n", type=int, default=1, help="derivative order for dJ")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("limits", parents=[common], help="ratio test of a limiting form")
    p.add_argument("formula", help=", ".join(f.value for f in LimitApproximant))
    p.add_argument("--mu", default=None)
    p.add_argument("--grid-z", default=None, help="override the default z sequence")
    p.add_argument("--corrected", action="store_true", help="include the series correction (Y0SmallZ)")
    p.set_defaults(handler=cmd_limits)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")
    p.set_defaults(handler=cmd_selftest)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(_attach_values(sys.argv[1:] if argv is None else list(argv)))
        cfg = build_config(args)
        return args.handler(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        print(f"accuracy not met: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except ArithmeticError as exc:
        print(f"accuracy not met: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
