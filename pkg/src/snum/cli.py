"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (non-compact,
hypothesis violated, regime not covered).  Payload goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import __version__
from .alloc import REPRESENTATIVES, Scheme, audit
from .analysis import check_axioms, eigen_bound_report, fit_rate, local_slopes
from .errors import SnumError
from .lpnum import hilbert_snumbers
from .params import (
    INF,
    EmbeddingParams,
    RegionTag,
    TargetKind,
    classify_point,
    classify_region,
    exponent,
    fmt_exponent,
    on_zone_boundary,
    rational,
    zones_containing,
)
from .rates import (
    RateResult,
    SNumberKind,
    compare_entropy_weyl,
    formula_for_region,
    frac_str,
    isotropic_weyl_rate,
    rate_for,
)
from .seqmodel import BlockModel, dyadic_ns, spectrum_samples

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# flag types


def _exponent_arg(s: str):
    try:
        return exponent(s)
    except (ValueError, ZeroDivisionError, SnumError) as e:
        raise argparse.ArgumentTypeError(f"invalid exponent {s!r}: {e}")


def _rational_arg(s: str) -> Fraction:
    try:
        return rational(Fraction(s))
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"invalid rational {s!r}: {e}")


def _grid_arg(s: str) -> dict[str, list]:
    """'p1=a..b:step,p2=a..b:step' -> {'p1': [...], 'p2': [...]}."""
    out = {}
    try:
        for part in s.split(","):
            key, spec = part.split("=", 1)
            key = key.strip()
            if key not in ("p1", "p2"):
                raise ValueError(f"unknown axis {key!r}")
            rng, step = spec.split(":")
            lo, hi = (Fraction(v) for v in rng.split(".."))
            step = Fraction(step)
            if step <= 0 or hi < lo:
                raise ValueError("need step > 0 and a <= b")
            vals = []
            v = lo
            while v <= hi:
                vals.append(v)
                v += step
            out[key] = vals
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid grid {s!r}: {e}")
    if set(out) != {"p1", "p2"}:
        raise argparse.ArgumentTypeError(f"grid {s!r} must give both p1 and p2")
    return out


def _default_seed() -> int:
    raw = os.environ.get("SNUM_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SNUM_SEED must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# output


def _num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _params_block(p: EmbeddingParams) -> dict:
    return {
        "t": frac_str(p.t),
        "p_src": fmt_exponent(p.p_src),
        "p_tgt": fmt_exponent(p.p_tgt),
        "d": p.d,
        "target": p.target.value,
        "s": frac_str(p.s) if p.s is not None else None,
    }


def _params_from(args) -> EmbeddingParams:
    if args.target == "lp" and args.p2 is None:
        raise UsageError("--p2 is required for the lp target")
    return EmbeddingParams.make(args.t, args.p1, args.p2, d=args.d, target=args.target, s=args.s)


def _add_param_flags(p: argparse.ArgumentParser, need_p2: bool = False):
    p.add_argument("--t", type=_rational_arg, required=True, help="smoothness")
    p.add_argument("--p1", type=_exponent_arg, required=True, help="source integrability (number or inf)")
    p.add_argument("--p2", type=_exponent_arg, required=need_p2, help="target integrability")
    p.add_argument("--d", type=int, default=1, help="dimension")
    p.add_argument("--target", choices=[k.value for k in TargetKind], default="lp")
    p.add_argument("--s", type=_rational_arg, default=None, help="Zygmund target smoothness")


def _add_format(p: argparse.ArgumentParser, default="text"):
    p.add_argument("--format", choices=FORMATS, default=default)


# ---------------------------------------------------------------------------
# commands


def _rate_text(r: RateResult) -> str:
    if r.kind.value == "Exact":
        body = f"Exact  alpha={r.lower.alpha}  gamma={r.lower.gamma}"
    elif r.kind.value == "Unknown":
        body = "Unknown"
    else:
        body = (
            f"{r.kind.value}  lower=(alpha={r.lower.alpha}, gamma={r.lower.gamma})"
            f"  upper=(alpha={r.upper.alpha}, gamma={r.upper.gamma})"
        )
        if r.loglog_gamma is not None:
            body += f"  loglog={r.loglog_gamma}"
    lines = [body, f"region: {r.region}", f"source: {r.source}"]
    lines += [f"note: {n}" for n in r.notes]
    return "\n".join(lines) + "\n"


def cmd_rate(args) -> str:
    if args.isotropic:
        if args.p2 is None:
            raise UsageError("--p2 is required with --isotropic")
        result = isotropic_weyl_rate(args.t, args.p1, args.p2)
        params = None
    else:
        params = _params_from(args)
        result = rate_for(params, args.kind)
    if args.format == "json":
        out = result.to_json()
        out["params"] = _params_block(params) if params else {
            "t": frac_str(args.t), "p_src": fmt_exponent(args.p1), "p_tgt": fmt_exponent(args.p2),
            "d": 1, "target": "isotropic", "s": None,
        }
        out["snumber"] = args.kind
        return _json(out)
    if args.format == "csv":
        upper = result.upper if result.kind.value in ("Bracket", "BracketLogLog") else None
        return _csv(
            ["kind", "alpha", "gamma", "upper_alpha", "upper_gamma", "loglog_gamma", "region", "source", "notes"],
            [[
                result.kind.value,
                result.lower.alpha if result.lower else None,
                result.lower.gamma if result.lower else None,
                upper.alpha if upper else None,
                upper.gamma if upper else None,
                result.loglog_gamma,
                result.region,
                result.source,
                "; ".join(result.notes),
            ]],
        )
    return _rate_text(result)


def _grid_row(t, d, p1, p2, include_boundaries):
    """One regions-table row, or None if the point is skipped."""
    params = EmbeddingParams(t, p1, p2, d)
    region = classify_region(params)
    boundary = on_zone_boundary(p1, p2) or region.tag is RegionTag.BOUNDARY_T
    if boundary and not include_boundaries:
        return None
    alpha = beta = None
    comparison = ""
    agree = ""
    if region.tag is RegionTag.NON_COMPACT:
        label = region.tag.value
    else:
        label = str(region)
        if region.tag is not RegionTag.BOUNDARY_T:
            alpha, beta = formula_for_region(region.tag, t, p1, p2)
        comparison = compare_entropy_weyl(params).value
        if on_zone_boundary(p1, p2):
            # alpha of the row owning each adjacent zone at this point
            alphas = set()
            for z in zones_containing(p1, p2):
                tag = classify_point(t, p1, p2, zone=z).tag
                if tag is not RegionTag.BOUNDARY_T:
                    alphas.add(formula_for_region(tag, t, p1, p2)[0])
            agree = "yes" if len(alphas) <= 1 else "no"
    return [fmt_exponent(p1), fmt_exponent(p2), label, alpha, beta, comparison, "yes" if boundary else "no", agree]


REGION_HEADER = ["p1", "p2", "region", "alpha", "beta", "comparison", "boundary", "adjacent_agree"]


def cmd_regions(args) -> str:
    rows = []
    for p1 in args.grid["p1"]:
        for p2 in args.grid["p2"]:
            if not (1 < p2 < INF) or p1 <= 0:
                raise SnumError(f"grid point p1={p1}, p2={p2} outside 0 < p1, 1 < p2 < inf")
            row = _grid_row(args.t, args.d, p1, p2, args.include_boundaries)
            if row is not None:
                rows.append(row)
    if args.format == "json":
        return _json([dict(zip(REGION_HEADER, [_num(v) for v in r])) for r in rows])
    if args.format == "csv":
        return _csv(REGION_HEADER, rows)
    lines = ["| " + " | ".join(REGION_HEADER) + " |", "|" + "---|" * len(REGION_HEADER)]
    for r in rows:
        lines.append("| " + " | ".join(_num(v) for v in r) + " |")
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> str:
    params = _params_from(args)
    c = compare_entropy_weyl(params)
    if args.format == "json":
        return _json({
            "comparison": c.value,
            "weyl": rate_for(params, SNumberKind.WEYL).to_json(),
            "entropy": rate_for(params, SNumberKind.ENTROPY).to_json(),
            "params": _params_block(params),
        })
    if args.format == "csv":
        return _csv(["comparison"], [[c.value]])
    return c.value + "\n"


def _read_numeric_csv(path: str, min_cols: int) -> np.ndarray:
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")
    data = []
    for i, r in enumerate(rows):
        try:
            data.append([float(c) for c in r])
        except ValueError:
            if i == 0:
                continue  # header
            raise SnumError(f"{path}: row {i + 1} is not numeric: {r}")
    if not data or any(len(r) != len(data[0]) for r in data) or len(data[0]) < min_cols:
        raise SnumError(f"{path}: expected a rectangular numeric table with >= {min_cols} columns")
    return np.array(data)


def cmd_eigen(args) -> str:
    a = _read_numeric_csv(args.matrix, 1)
    if a.shape[0] != a.shape[1]:
        raise SnumError(f"eigenvalues need a square matrix, got {a.shape}")
    x = hilbert_snumbers(a)
    lam = np.linalg.eigvals(a)
    ns = [args.n] if args.n else range(1, len(x) + 1)
    reports = [eigen_bound_report(x, lam, n, args.tol) for n in ns]
    header = ["n", "bound", "observed", "product", "holds"]
    rows = [[r.n, r.bound, r.observed, r.product_lhs, "yes" if r.holds else "no"] for r in reports]
    if args.format == "json":
        return _json({
            "singular_values": [float(v) for v in x],
            "reports": [dict(zip(header, r[:4] + [r[4] == "yes"])) for r in rows],
        })
    if args.format == "csv":
        return _csv(header, rows)
    return "".join(
        f"n={r.n}  bound={r.bound:.12g}  |lambda_(2n-1)|={_num(r.observed) or '-'}  holds={r.holds}\n"
        for r in reports
    )


def _fit_json(rep) -> dict:
    return rep.to_json()


def cmd_fit(args) -> str:
    data = _read_numeric_csv(args.samples, 2)
    samples = [(int(n), float(v)) for n, v in data[:, :2]]
    rep = fit_rate(samples, fixed_gamma=args.fixed_gamma)
    if args.format == "json":
        return _json(_fit_json(rep))
    if args.format == "csv":
        return _csv(list(rep.to_json()), [list(rep.to_json().values())])
    return (
        f"alpha_hat={rep.alpha_hat:.12g}  gamma_hat={rep.gamma_hat:.12g}"
        f"{' (fixed)' if rep.gamma_fixed else ''}\n"
        f"n in [{rep.n_min}, {rep.n_max}], {rep.samples} samples, residual rms {rep.residual_rms:.3g}\n"
    )


def cmd_verify_diagonal(args) -> str:
    model = BlockModel(args.d, args.t, args.c)
    samples = spectrum_samples(model, dyadic_ns(args.kmin, args.kmax))
    slopes = local_slopes(samples)
    gamma = (args.d - 1) * args.t if args.fixed_gamma is None else args.fixed_gamma
    rows = [[n, v, s] for (n, v), s in zip(samples, slopes)]
    if args.format == "json":
        rep = fit_rate(samples, fixed_gamma=gamma)
        return _json({
            "samples": [{"n": n, "value": v, "slope": s} for n, v, s in rows],
            "fit": _fit_json(rep),
        })
    if args.format == "csv":
        return _csv(["n", "value", "slope"], rows)
    rep = fit_rate(samples, fixed_gamma=gamma)
    return _csv(["n", "value", "slope"], rows) + (
        f"# alpha_hat={rep.alpha_hat:.12g} with gamma fixed to {gamma}\n"
    )


def _alloc_params(args):
    scheme = Scheme(args.scheme)
    if args.t is None and args.p1 is None and args.p2 is None:
        for s, p in REPRESENTATIVES.values():
            if s is scheme:
                return scheme, p
        raise UsageError(f"scheme {scheme.value} has no representative set; pass --t --p1 --p2")
    if None in (args.t, args.p1, args.p2):
        raise UsageError("pass all of --t, --p1, --p2 or none")
    return scheme, EmbeddingParams(args.t, args.p1, args.p2, args.d)


ALLOC_HEADER = ["J", "L", "K", "n", "S", "predicted", "ratio"]


def cmd_verify_allocation(args) -> str:
    scheme, params = _alloc_params(args)
    ev = audit(scheme, params, args.jmin, args.jmax)
    rows = [[r.J, r.L, r.K, r.n, r.bound, r.predicted, r.ratio] for r in ev.rows]
    if args.format == "json":
        return _json({
            "scheme": scheme.value,
            "params": _params_block(params),
            "predicted_rate": ev.predicted.to_json(),
            "rows": [dict(zip(ALLOC_HEADER, r)) for r in rows],
            "spread": ev.spread(),
        })
    return _csv(ALLOC_HEADER, rows)


def cmd_verify_axioms(args) -> str:
    rep = check_axioms(trials=args.trials, seed=args.seed, max_dim=args.max_dim)
    if args.format == "json":
        return _json(rep.to_json())
    if args.format == "csv":
        return _csv(["trial", "check", "witness"], [[v.trial, v.check, v.witness] for v in rep.violations])
    return f"axioms: {rep.checks} checks over {rep.trials} trials (seed {rep.seed}), {len(rep.violations)} violations\n" + "".join(
        f"  trial {v.trial} ({v.check}): {v.witness}\n" for v in rep.violations
    )


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="snum", description="Weyl-number rates, block-model oracles and inequality checks.")
    ap.add_argument("--version", action="version", version=f"snum {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", help="rate exponents for one parameter set")
    _add_param_flags(p)
    p.add_argument("--kind", choices=[k.value for k in SNumberKind], default="weyl")
    p.add_argument("--isotropic", action="store_true", help="isotropic d = 1 table")
    _add_format(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("regions", help="region table over a (p1, p2) grid")
    p.add_argument("--t", type=_rational_arg, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--grid", type=_grid_arg, required=True, help="p1=a..b:step,p2=a..b:step")
    p.add_argument("--include-boundaries", action="store_true")
    _add_format(p, "csv")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("compare", help="entropy versus Weyl order")
    _add_param_flags(p)
    _add_format(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("eigen", help="Weyl eigenvalue bound for a matrix")
    p.add_argument("--matrix", required=True, help="CSV file with a square matrix")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_format(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("fit", help="fit n^-alpha (log n)^gamma to samples")
    p.add_argument("--samples", required=True, help="CSV file with columns n,value")
    p.add_argument("--fixed-gamma", type=_rational_arg, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_fit)

    v = sub.add_parser("verify", help="numerical checks")
    vsub = v.add_subparsers(dest="check", required=True)

    p = vsub.add_parser("diagonal", help="block-model spectrum with local slopes")
    p.add_argument("--t", type=_rational_arg, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--c", type=int, default=0, help="per-axis overlap constant")
    p.add_argument("--kmin", type=int, default=8)
    p.add_argument("--kmax", type=int, default=24)
    p.add_argument("--fixed-gamma", type=_rational_arg, default=None)
    _add_format(p, "csv")
    p.set_defaults(func=cmd_verify_diagonal)

    p = vsub.add_parser("allocation", help="audit a budget-allocation scheme")
    p.add_argument("--scheme", choices=[s.value for s in Scheme], required=True)
    p.add_argument("--t", type=_rational_arg, default=None)
    p.add_argument("--p1", type=_exponent_arg, default=None)
    p.add_argument("--p2", type=_exponent_arg, default=None)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--jmin", type=int, default=6)
    p.add_argument("--jmax", type=int, default=16)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_verify_allocation)

    p = vsub.add_parser("axioms", help="randomized s-number axiom checks")
    p.add_argument("--seed", type=int, default=None, help="default: $SNUM_SEED or 0")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=16)
    _add_format(p)
    p.set_defaults(func=cmd_verify_axioms)
    return ap


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        text = args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 1
    except SnumError as e:
        print(f"error: {e}", file=err)
        return 2
    out.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
