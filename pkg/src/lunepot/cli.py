"""Command-line interface: point evaluation, grid sweeps, self-validation,
and band-profile diagnostics, all emitting plot-ready CSV.

Exit codes: 0 on success, 1 when a validation check fails, 2 on usage,
domain, or I/O errors.  Floats are serialised with 17 significant digits
so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import checks as _checks
from ._backend import backend_name
from .asymptotic import BandPoint, band_profile, from_band, lune_potential_stable, profile_value
from .closed_form import lune_potential
from .errors import DomainError
from .geometry import OverlapQuery, classify_regime
from .quadrature import MIN_TOL, quad_lune

MODES = ("exact", "stable", "asymptotic", "oracle")


@dataclass(frozen=True)
class SweepSpec:
    """Parameters of one sweep: radius, distance range, grid size, and the
    evaluation mode (tolerance applies to the oracle mode only)."""

    eps: float
    a_min: float
    a_max: float
    n: int
    mode: str = "exact"
    tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.a_min > self.a_max:
            raise DomainError(f"a_min {self.a_min} exceeds a_max {self.a_max}")
        if self.n < 2:
            raise DomainError(f"sweep needs n >= 2, got {self.n}")
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.mode == "oracle" and not self.tol >= MIN_TOL:
            raise DomainError(f"oracle tolerance must be >= {MIN_TOL}, got {self.tol}")


def _fmt(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalise -0.0 so output is reproducible across paths
    return format(x, ".17g")


def _evaluate(q: OverlapQuery, mode: str, tol: float) -> tuple[float, float | None]:
    if mode == "exact":
        return lune_potential(q), None
    if mode == "stable":
        return lune_potential_stable(q), None
    if mode == "asymptotic":
        return lune_potential_stable(q, threshold=math.inf), None
    res = quad_lune(q, tol)
    return res.value, res.err_estimate


def cmd_eval(args) -> int:
    q = OverlapQuery(args.a, args.eps)
    value, err = _evaluate(q, args.mode, args.tol)
    row = [_fmt(args.a), _fmt(args.eps), classify_regime(q).value, _fmt(value)]
    if err is not None:
        row.append(_fmt(err))
    print(",".join(row))
    return 0


def _sweep_rows(spec: SweepSpec, grid, scaled: bool, band_profile_scaling: bool):
    scale = spec.eps * spec.eps * math.log(spec.eps * spec.eps)
    for a in grid:
        q = OverlapQuery(float(a), spec.eps)
        value, _ = _evaluate(q, spec.mode, spec.tol)
        row = [_fmt(a), _fmt(spec.eps), classify_regime(q).value, _fmt(value)]
        if scaled:
            if band_profile_scaling:
                row.append(_fmt(profile_value(float(a), spec.eps) / scale))
            else:
                row.append(_fmt(value / scale))
        yield ",".join(row)


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        eps=args.eps, a_min=args.a_min, a_max=args.a_max, n=args.n, mode=args.mode, tol=args.tol
    )
    if args.lambda_grid:
        grid = [from_band(BandPoint(float(l), spec.eps)) for l in np.linspace(0.0, 1.0, spec.n)]
    else:
        grid = np.linspace(spec.a_min, spec.a_max, spec.n)
    header = "a,eps,regime,value" + (",scaled" if args.scaled else "")
    lines = [header]
    lines.extend(_sweep_rows(spec, grid, args.scaled, args.lambda_grid))
    text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    return 0


def cmd_validate(args) -> int:
    eps_list = tuple(args.eps) if args.eps else (0.5, 0.1, 0.01)
    results = [
        _checks.check_oracle_agreement(eps_list, args.grid_n, args.tol),
        _checks.check_branch_continuity(eps_list),
        _checks.check_representation_equivalence(eps_list),
        _checks.check_global_bound(eps_list),
        _checks.check_golden_tables(),
        _checks.check_dilog_identities(),
    ]
    if args.asymptotic:
        results.append(_checks.check_series_accuracy())
        results.append(_checks.check_unit_cubic_slope())
        results.append(_checks.check_angle_series())
        results.append(_checks.check_stability())
    if args.eta:
        eta_eps = (1e-2, 1e-3, 1e-4)
        print("eps,eta")
        from .asymptotic import band_profile as _profile

        etas = []
        for e in eta_eps:
            eta = _profile(e, 201)[2]
            etas.append(eta)
            print(f"{_fmt(e)},{_fmt(eta)}")
        slope, logc = np.polyfit(np.log(eta_eps), np.log(etas), 1)
        print(f"# eta fit: slope={slope:.4f} prefactor={math.exp(logc):.4e}")
        results.append(_checks.check_asymmetry())
    failed = 0
    for r in results:
        print(r.line())
        if not r.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed (backend: {backend_name()})")
    return 1 if failed else 0


def cmd_diagnostics(args) -> int:
    lams, scaled, eta = band_profile(args.eps, args.n)
    header = "lam,a,scaled"
    lines = [header]
    for lam, j in zip(lams, scaled):
        a = from_band(BandPoint(float(lam), args.eps))
        lines.append(f"{_fmt(lam)},{_fmt(a)},{_fmt(j)}")
    text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
        print(f"# eta = {_fmt(eta)}", file=sys.stderr)
    else:
        try:
            with open(args.out, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
        print(f"eta = {_fmt(eta)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lunepot",
        description="Potential of the overlap of a unit disc with a small disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one point, print a CSV row")
    p_eval.add_argument("--a", type=float, required=True, help="centre distance")
    p_eval.add_argument("--eps", type=float, required=True, help="small-disc radius")
    p_eval.add_argument("--mode", choices=MODES, default="exact")
    p_eval.add_argument("--tol", type=float, default=1e-12, help="oracle tolerance")
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = sub.add_parser("sweep", help="evaluate a grid, write CSV")
    p_sweep.add_argument("--eps", type=float, required=True)
    p_sweep.add_argument("--a-min", type=float, default=0.0)
    p_sweep.add_argument("--a-max", type=float, default=2.0)
    p_sweep.add_argument("--n", type=int, default=101)
    p_sweep.add_argument("--mode", choices=MODES, default="exact")
    p_sweep.add_argument("--tol", type=float, default=1e-12)
    p_sweep.add_argument(
        "--scaled",
        action="store_true",
        help="append value/(eps^2 log eps^2); on a band grid the column"
        " holds the scaled wedge branch-value profile instead",
    )
    p_sweep.add_argument(
        "--lambda-grid",
        action="store_true",
        help="sweep the overlap band on a uniform band-coordinate grid instead of [a-min, a-max]",
    )
    p_sweep.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", help="run the self-validation checks")
    p_val.add_argument("--eps", type=float, action="append", help="repeatable; default 0.5 0.1 0.01")
    p_val.add_argument("--grid-n", type=int, default=200)
    p_val.add_argument("--tol", type=float, default=1e-12, help="oracle tolerance")
    p_val.add_argument("--asymptotic", action="store_true", help="include the series checks")
    p_val.add_argument("--eta", action="store_true", help="print the asymmetry table and fit")
    p_val.set_defaults(func=cmd_validate)

    p_diag = sub.add_parser("diagnostics", help="scaled band profile and asymmetry index")
    p_diag.add_argument("--eps", type=float, required=True)
    p_diag.add_argument("--n", type=int, default=201)
    p_diag.add_argument("--out", default="-")
    p_diag.set_defaults(func=cmd_diagnostics)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
