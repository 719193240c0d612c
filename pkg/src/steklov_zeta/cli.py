"""Command-line surface.

Every run prints a header line to stderr with the library version, scalar
backend, seed (when one is involved), and a digest of the effective
configuration, so saved reports are self-describing.  Data goes to stdout
or to --out.  Exit codes: 0 success / all checks pass, 1 check failure,
2 usage error.

An optional config file (--config PATH, "key = value" lines) supplies
defaults for any long flag of the chosen command; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .conformal import (MoebiusParam, mu_matrix, pullback_direct,
                        suggest_out_degree)
from .errors import SteklovZetaError
from .explorer import CampaignConfig, z2_nonneg_campaign
from .fourier import TrigSeries, load_series
from .invariants import (brute_n, coeff_bound_check, symmetrize_z, z1_closed,
                         z2_closed, z2_coeff_closed, z_coeff,
                         zero_sum_multisets, zeta_invariant)
from .lie import (GENERATORS, bracket_check, generator_relation_check,
                  raising_relation_check)
from .scalars import RationalComplex
from .trace import stabilization_sweep, trace_difference

_SUBPARSERS: dict[str, argparse.ArgumentParser] = {}


def _digest(args: argparse.Namespace) -> str:
    payload = {k: v for k, v in sorted(vars(args).items())
               if k not in ("func", "config")}
    blob = json.dumps(payload, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _header(args, backend: str, seed=None) -> None:
    bits = [f"steklov-zeta {__version__}", f"backend={backend}"]
    if seed is not None:
        bits.append(f"seed={seed}")
    bits.append(f"config={_digest(args)}")
    print(" | ".join(bits), file=sys.stderr)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_indices(text: str) -> tuple:
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p)


def _fmt_scalar(value) -> str:
    if isinstance(value, RationalComplex):
        if value.im == 0:
            return str(value.re)
        return f"{value.re}{'+' if value.im >= 0 else ''}{value.im}i"
    if isinstance(value, Fraction):
        return str(value)
    z = complex(value)
    if z.imag == 0:
        return repr(z.real)
    return repr(z)


def _z_of(a: TrigSeries, k: int):
    if k == 1:
        return z1_closed(a)
    if k == 2:
        return z2_closed(a)
    return zeta_invariant(a, k)


# command handlers ----------------------------------------------------------


def cmd_compute_z(args) -> int:
    _header(args, args.backend)
    a = load_series(args.series, args.backend)
    if args.method == "closed" and args.k > 2:
        print("closed forms exist for k in {1, 2} only", file=sys.stderr)
        return 2
    if args.method == "brute":
        value = zeta_invariant(a, args.k)
    else:
        value = _z_of(a, args.k)
    _emit(_fmt_scalar(value) + "\n", args.out)
    return 0


def cmd_brute_n(args) -> int:
    _header(args, "exact")
    if args.indices:
        idx = _parse_indices(args.indices)
        if args.coeff == "n":
            _emit(f"{brute_n(idx)}\n", args.out)
        else:
            _emit(_fmt_scalar(symmetrize_z(idx)) + "\n", args.out)
        return 0
    if args.k is None or args.radius is None:
        print("need either --indices or both --k and --radius", file=sys.stderr)
        return 2
    buf = io.StringIO()
    writer = csv.writer(buf)
    slots = 2 * args.k
    writer.writerow([f"j{i+1}" for i in range(slots)]
                    + ["numerator", "denominator"])
    for ms in zero_sum_multisets(range(-args.radius, args.radius + 1), slots):
        v = Fraction(brute_n(ms)) if args.coeff == "n" else z_coeff(ms)
        writer.writerow(list(ms) + [v.numerator, v.denominator])
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_z2_coeff(args) -> int:
    _header(args, "exact")
    idx = _parse_indices(args.indices)
    if len(idx) != 4:
        print("z2-coeff needs exactly four indices", file=sys.stderr)
        return 2
    closed = z2_coeff_closed(*idx)
    lines = [f"closed: {closed}"]
    code = 0
    if args.verify:
        brute = z_coeff(idx)
        lines.append(f"brute: {brute}")
        lines.append(f"match: {closed == brute}")
        if sum(idx) == 0:
            lines.append(f"bound: {coeff_bound_check(idx)}")
        if closed != brute:
            code = 1
    _emit("\n".join(lines) + "\n", args.out)
    return code


def cmd_mu_matrix(args) -> int:
    param = MoebiusParam.parse(args.rho)
    _header(args, "exact" if param.exact else "float")
    M = mu_matrix(param, args.half_width)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "value"])
        for n, k, v in M.iter_entries():
            writer.writerow([n, k, str(v) if M.exact else repr(float(v))])
        _emit(buf.getvalue(), args.out)
    else:
        obj = {
            "half_width": M.half_width,
            "rho": str(param.rho),
            "exact": M.exact,
            "entries": [[str(v) if M.exact else float(v) for v in row]
                        for row in M.entries],
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    return 0


def cmd_check_invariance(args) -> int:
    param = MoebiusParam.parse(args.rho)
    _header(args, "float")
    a = load_series(args.series, "float")
    out_degree = args.out_degree
    if out_degree is None:
        out_degree = suggest_out_degree(a.degree, param, 1e-9)
    b = pullback_direct(a, param, args.grid, out_degree)
    za = complex(_z_of(a, args.k)).real
    zb = complex(_z_of(b, args.k)).real
    dev = abs(za - zb)
    limit = args.tol * (1.0 + abs(za))
    ok = dev <= limit
    report = {
        "k": args.k, "rho": str(param.rho), "grid": args.grid,
        "out_degree": out_degree, "z_original": za, "z_pullback": zb,
        "deviation": dev, "tolerance": limit, "pass": ok,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if ok else 1


def _plane_tuples(k: int, radius: int, plane: int, stride: int):
    hits = 0
    for idx in itertools.product(range(-radius, radius + 1), repeat=2 * k):
        if sum(idx) != plane:
            continue
        if hits % stride == 0:
            yield idx
        hits += 1


def _relation_task(payload):
    # module-level so ProcessPoolExecutor can pickle it
    variant, idx = payload
    if variant.startswith("reduced-"):
        return idx, raising_relation_check(idx, variant.split("-", 1)[1])
    return idx, generator_relation_check(idx, variant)


def cmd_check_relations(args) -> int:
    _header(args, "exact")
    if args.variant == "reduced":
        tag = f"reduced-{args.source}"
        tasks = [(tag, idx)
                 for idx in _plane_tuples(args.k, args.radius, -1, args.stride)]
    else:
        tasks = [(args.variant, idx)
                 for plane in (-1, 1)
                 for idx in _plane_tuples(args.k, args.radius, plane, args.stride)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_relation_task, tasks, chunksize=64))
    else:
        results = [_relation_task(t) for t in tasks]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([f"j{i+1}" for i in range(2 * args.k)]
                    + ["numerator", "denominator", "pass"])
    all_ok = True
    for idx, value in results:
        ok = value == 0
        all_ok = all_ok and ok
        writer.writerow(list(idx) + [value.numerator, value.denominator, int(ok)])
    _emit(buf.getvalue(), args.out)
    print(f"checked {len(results)} tuples, all_zero={all_ok}", file=sys.stderr)
    return 0 if all_ok else 1


def cmd_trace_check(args) -> int:
    _header(args, "exact")
    a = load_series(args.series, "exact")
    k = args.k
    if args.half_width == "auto":
        N = 4 * k * a.degree if a.degree else 4 * k
    else:
        N = int(args.half_width)
    tdiff = trace_difference(a, k, N)
    zval = zeta_invariant(a, k)
    equal = tdiff == zval
    sweep = stabilization_sweep(a, k)
    report = {
        "k": k, "degree": a.degree, "half_width": N,
        "trace_difference": _fmt_scalar(tdiff),
        "zeta_invariant": _fmt_scalar(zval),
        "equal": equal,
        "stabilized_at": sweep[-3][0],
        "stabilization_bound": 4 * k * a.degree,
        "stabilization_sweep": [[n, _fmt_scalar(v)] for n, v in sweep],
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if equal else 1


def cmd_explore(args) -> int:
    _header(args, "float", seed=args.seed)
    cfg = CampaignConfig(seed=args.seed, count=args.count,
                         max_degree=args.n0, coeff_scale=args.scale,
                         kappas=tuple(args.kappa or ()))
    report = z2_nonneg_campaign(cfg)
    if args.format == "json":
        text = json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        csv.writer(buf).writerows(report.to_csv_rows())
        text = buf.getvalue()
    _emit(text, args.out)
    n_fail = len(report.failures)
    print(f"samples={args.count} min_z2={report.min_z2!r} failures={n_fail}",
          file=sys.stderr)
    return 0 if n_fail == 0 else 1


def cmd_bracket_check(args) -> int:
    _header(args, "exact")
    if args.series:
        a = load_series(args.series, "exact")
    else:
        a = TrigSeries.exact({-2: (1, 1), 0: 3, 1: (0, 1), 3: 2})
    dev = bracket_check(args.g, args.h, a)
    _emit(f"{dev}\n", args.out)
    return 0 if dev == 0 else 1


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steklov-zeta",
        description="Zeta-invariants of the disc Steklov spectrum: "
                    "exact coefficients, closed forms, conformal checks.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="key=value defaults file")
    sub = parser.add_subparsers(dest="command", required=True)

    def register(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _SUBPARSERS[name] = p
        return p

    p = register("compute-z", help="evaluate Z_k of a series file")
    p.add_argument("--series", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--backend", choices=["exact", "float"], default="exact")
    p.add_argument("--method", choices=["auto", "brute", "closed"],
                   default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute_z)

    p = register("brute-n", help="N/Z coefficients, single or CSV table")
    p.add_argument("--indices",
                   help="comma separated; use --indices=-3,2,2,-1 when the "
                        "first index is negative")
    p.add_argument("--k", type=int, help="order for table dumps")
    p.add_argument("--radius", type=int, help="index bound for table dumps")
    p.add_argument("--coeff", choices=["n", "z"], default="z")
    p.add_argument("--out")
    p.set_defaults(func=cmd_brute_n)

    p = register("z2-coeff", help="closed-form quadruple coefficient")
    p.add_argument("--indices", required=True,
                   help="comma separated; use --indices=-3,2,2,-1 when the "
                        "first index is negative")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the brute coefficient")
    p.add_argument("--out")
    p.set_defaults(func=cmd_z2_coeff)

    p = register("mu-matrix", help="export the truncated action matrix")
    p.add_argument("--rho", required=True, help='"p/q" exact or decimal float')
    p.add_argument("--half-width", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mu_matrix)

    p = register("check-invariance",
                 help="compare Z_k before/after boundary pullback")
    p.add_argument("--series", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--grid", type=int, default=8192)
    p.add_argument("--out-degree", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_invariance)

    p = register("check-relations",
                 help="exact sweep of the invariance relations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--variant",
                   choices=["reduced", "D", "E", "Dplus", "Dminus"],
                   default="reduced")
    p.add_argument("--source", choices=["brute", "closed"], default="brute")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_relations)

    p = register("trace-check",
                 help="operator-trace oracle vs the combinatorial sum")
    p.add_argument("--series", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", dest="half_width", default="auto",
                   help='truncation half-width or "auto" (= 4k deg)')
    p.add_argument("--out")
    p.set_defaults(func=cmd_trace_check)

    p = register("explore", help="random Z_2 nonnegativity campaign")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--n0", type=int, default=5)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--kappa", type=float, action="append")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_explore)

    p = register("bracket-check", help="generator bracket identities")
    p.add_argument("--g", choices=list(GENERATORS), required=True)
    p.add_argument("--h", choices=list(GENERATORS), required=True)
    p.add_argument("--series")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bracket_check)

    return parser


def _load_config(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if "--config" in argv and argv.index("--config") + 1 < len(argv):
        cfg_path = argv[argv.index("--config") + 1]
        raw = _load_config(cfg_path)
        command = next((tok for tok in argv
                        if not tok.startswith("-") and tok != cfg_path), None)
        subparser = _SUBPARSERS.get(command)
        if subparser is not None:
            for action in subparser._actions:
                if action.dest in raw:
                    value = raw[action.dest]
                    if action.type is not None:
                        value = action.type(value)
                    subparser.set_defaults(**{action.dest: value})
                    action.required = False
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SteklovZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
