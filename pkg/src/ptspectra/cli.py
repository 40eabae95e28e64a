"""Command-line front end.

Four subcommands: `spectrum` prints closed-form level tables, `verify`
runs the finite-difference check of a family and sets the exit code,
`sample` tabulates a contour and potential (optionally one eigenfunction),
and `transform` compares the coordinate-transformed parent potential
against the closed form along the arch.

All output is CSV with 12-significant-digit scientific notation, '.'
decimal point and ',' separators, deterministic row order. Exit codes:
0 = pass, 1 = verification failure, 2 = invalid input.
"""

import argparse
import math
import re
import sys

import numpy as np

from .contour import (
    ArchContour,
    ShiftedLine,
    arch_liouville_map,
    identity_liouville_map,
    liouville_potential,
)
from .errors import SpectraError
from .numeric import Grid, verify_family
from .potentials import (
    EckartParams,
    HulthenParams,
    PoschlTellerParams,
    eval_eckart,
    eval_hulthen,
    eval_rpt,
)
from .spectra import (
    eckart_spectrum,
    eckart_wavefunction,
    hulthen_spectrum,
    hulthen_wavefunction,
    rpt_spectrum,
    rpt_wavefunction,
)

_FAMILY_DEFAULTS = {
    "eckart": dict(A=3.0, beta=1.0, epsilon=0.5, xmin=-18.0, xmax=18.0, n=4001,
                   tol_energy=1e-5),
    "rpt": dict(alpha=3.5, beta=1.5, epsilon=0.3, xmin=-12.0, xmax=12.0, n=3001,
                tol_energy=1e-6),
    "hulthen": dict(alpha=2.0, C=2.0, epsilon=math.pi / 6, xmin=-12.0, xmax=12.0,
                    n=12001, tol_energy=1e-4),
}

_ANGLE_RE = re.compile(r"^\s*(?:(?P<coef>[+-]?\d+(?:\.\d+)?)\s*\*\s*)?pi\s*(?:/\s*(?P<den>\d+(?:\.\d+)?))?\s*$")


def parse_angle(text: str) -> float:
    """Radians from a plain float or a 'pi/6'-style fraction literal."""
    m = _ANGLE_RE.match(text)
    if m:
        value = math.pi * float(m.group("coef") or 1.0)
        if m.group("den"):
            value /= float(m.group("den"))
        return value
    return float(text)


def _fmt(x) -> str:
    return f"{float(x):.11e}"


def _emit(header, rows, out_path) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_params(args):
    d = _FAMILY_DEFAULTS[args.family]
    eps = parse_angle(args.epsilon) if args.epsilon is not None else d["epsilon"]
    if args.family == "eckart":
        A = args.A if args.A is not None else d["A"]
        beta = args.beta if args.beta is not None else d["beta"]
        return EckartParams(A, beta, eps), eps
    if args.family == "rpt":
        alpha = args.alpha if args.alpha is not None else d["alpha"]
        beta = args.beta if args.beta is not None else d["beta"]
        return PoschlTellerParams(alpha, beta, eps), eps
    alpha = args.alpha if args.alpha is not None else d["alpha"]
    C = args.C if args.C is not None else d["C"]
    return HulthenParams(alpha, C), eps


def _grid_spec(args):
    d = _FAMILY_DEFAULTS[args.family]
    xmin = args.xmin if args.xmin is not None else d["xmin"]
    xmax = args.xmax if args.xmax is not None else d["xmax"]
    n = args.n if args.n is not None else d["n"]
    return xmin, xmax, n


def _contour_for(args, params, eps):
    if args.family == "hulthen":
        return ArchContour(eps)
    return ShiftedLine(eps)


def cmd_spectrum(args) -> int:
    params, _ = _family_params(args)
    if args.family == "eckart":
        levels = eckart_spectrum(params)
        header = ["family", "sigma", "tau", "N", "E", "kappa", "u_re", "u_im", "v_re", "v_im"]
        rows = [
            ["eckart", str(l.qn.sigma), str(l.qn.tau), str(l.qn.N), _fmt(l.energy), "",
             _fmt(l.aux["u"].real), _fmt(l.aux["u"].imag),
             _fmt(l.aux["v"].real), _fmt(l.aux["v"].imag)]
            for l in levels
        ]
    elif args.family == "rpt":
        levels = rpt_spectrum(params)
        header = ["family", "sigma", "tau", "N", "E", "kappa"]
        rows = [
            ["rpt", str(l.qn.sigma), str(l.qn.tau), str(l.qn.N), _fmt(l.energy),
             _fmt(l.aux["kappa"])]
            for l in levels
        ]
    else:
        levels = hulthen_spectrum(params)
        header = ["family", "sigma", "tau", "N", "E", "kappa", "s", "tau_beta"]
        rows = [
            ["hulthen", str(l.qn.sigma), str(l.qn.tau), str(l.qn.N), _fmt(l.energy),
             _fmt(l.aux["kappa"]), _fmt(l.aux["s"]), _fmt(l.aux["tau_beta"])]
            for l in levels
        ]
    _emit(header, rows, args.out)
    return 0


def cmd_verify(args) -> int:
    params, eps = _family_params(args)
    contour = _contour_for(args, params, eps)
    xmin, xmax, n = _grid_spec(args)
    grid = Grid(xmin, xmax, n, contour)
    report = verify_family(params, contour, grid,
                           tol_energy=args.tol_energy, tol_residual=args.tol_residual,
                           seed=args.seed)
    header = ["N", "sigma", "tau", "E_analytic", "lambda_re", "lambda_im",
              "abs_err", "residual", "converged"]
    rows = [
        [str(e.N), str(e.sigma), str(e.tau), _fmt(e.E_analytic),
         _fmt(e.eigenvalue.real), _fmt(e.eigenvalue.imag),
         _fmt(e.abs_err), _fmt(e.residual), str(int(e.converged))]
        for e in report.entries
    ]
    _emit(header, rows, args.out)
    return 0 if report.passed else 1


def cmd_sample(args) -> int:
    params, eps = _family_params(args)
    contour = _contour_for(args, params, eps)
    xmin, xmax, n = _grid_spec(args)
    x = np.linspace(xmin, xmax, n)
    xi = contour.point(x)
    if args.family == "eckart":
        V = eval_eckart(params, xi)
    elif args.family == "rpt":
        V = eval_rpt(params, xi)
    else:
        V = eval_hulthen(params, xi)
    header = ["x", "xi_re", "xi_im", "V_re", "V_im"]
    cols = [x, xi.real, xi.imag, V.real, V.imag]
    if args.N is not None:
        level = _select_level(args, params)
        if level is None:
            sys.stderr.write("ptspectra: invalid level for psi sampling\n")
            return 2
        if args.family == "eckart":
            psi = eckart_wavefunction(params, level, xi)
        elif args.family == "rpt":
            psi = rpt_wavefunction(params, level, xi)
        else:
            psi = hulthen_wavefunction(params, level, contour, x)
        header += ["psi_re", "psi_im"]
        cols += [psi.real, psi.imag]
    rows = [[_fmt(c[i]) for c in cols] for i in range(len(x))]
    _emit(header, rows, args.out)
    return 0


def _select_level(args, params):
    if args.family == "eckart":
        levels = eckart_spectrum(params)
        match = [l for l in levels if l.qn.N == args.N]
    elif args.family == "rpt":
        levels = rpt_spectrum(params)
        match = [l for l in levels
                 if l.qn.N == args.N and l.qn.sigma == args.sigma and l.qn.tau == args.tau]
    else:
        levels = hulthen_spectrum(params)
        match = [l for l in levels if l.qn.N == args.N and l.qn.sigma == args.sigma]
    return match[0] if match else None


def cmd_transform(args) -> int:
    if args.family != "hulthen":
        sys.stderr.write("ptspectra: transform requires --family hulthen\n")
        return 2
    params, eps = _family_params(args)
    level = _select_level(args, params)
    if level is None:
        sys.stderr.write("ptspectra: invalid level (not an accepted bound state)\n")
        return 2
    kappa = level.aux["kappa"]
    tb = level.aux["tau_beta"]
    alpha = params.alpha

    def W(r):
        return (tb * tb - 0.25) / np.sinh(r) ** 2 - (alpha * alpha - 0.25) / np.cosh(r) ** 2

    xmin, xmax, n = _grid_spec(args)
    if args.xmin is None and args.xmax is None:
        xmin, xmax = -3.0, 3.0
    if args.n is None:
        n = 101
    x = np.linspace(xmin, xmax, n)
    xi = ArchContour(eps).point(x)
    if args.identity_selftest:
        lmap = identity_liouville_map(kappa)
        v_liou = liouville_potential(W, lmap, xi)
        v_closed = W(xi) + kappa ** 2
    else:
        lmap = arch_liouville_map(kappa)
        v_liou = liouville_potential(W, lmap, xi)
        # closed form of the same V - E object: Hulthen potential minus E = kappa^2
        v_closed = eval_hulthen(params, xi) - kappa ** 2
    diff = np.abs(v_liou - v_closed)
    header = ["x", "xi_re", "xi_im", "V_liouville_re", "V_liouville_im",
              "V_closed_re", "V_closed_im", "abs_diff"]
    rows = [
        [_fmt(x[i]), _fmt(xi[i].real), _fmt(xi[i].imag),
         _fmt(v_liou[i].real), _fmt(v_liou[i].imag),
         _fmt(v_closed[i].real), _fmt(v_closed[i].imag), _fmt(diff[i])]
        for i in range(len(x))
    ]
    _emit(header, rows, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptspectra",
        description="Closed-form spectra of complex-contour potentials, "
                    "finite-difference verification, and contour tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("spectrum", cmd_spectrum), ("verify", cmd_verify),
                     ("sample", cmd_sample), ("transform", cmd_transform)):
        p = sub.add_parser(name)
        p.set_defaults(func=fn)
        p.add_argument("--family", choices=("eckart", "rpt", "hulthen"), required=True)
        p.add_argument("--A", type=float, default=None)
        p.add_argument("--beta", type=float, default=None)
        p.add_argument("--alpha", type=float, default=None)
        p.add_argument("--C", type=float, default=None)
        p.add_argument("--epsilon", type=str, default=None,
                       help="contour shift in radians; 'pi/6'-style literals accepted")
        p.add_argument("--xmin", type=float, default=None)
        p.add_argument("--xmax", type=float, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--tol-energy", dest="tol_energy", type=float, default=None)
        p.add_argument("--tol-residual", dest="tol_residual", type=float, default=None)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--N", type=int, default=None, help="level selector")
        p.add_argument("--sigma", type=int, choices=(-1, 1), default=-1)
        p.add_argument("--tau", type=int, choices=(-1, 1), default=-1)
        if name == "transform":
            p.add_argument("--identity-selftest", dest="identity_selftest",
                           action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "transform" and args.N is None:
        args.N = 0
    try:
        return args.func(args)
    except (SpectraError, ValueError) as exc:
        sys.stderr.write(f"ptspectra: {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"ptspectra: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
