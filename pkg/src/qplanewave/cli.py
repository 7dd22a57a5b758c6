"""Command-line front end.

  qplanewave eval jackson3-bessel --nu 0.5 --x 0.125 --q 0.5
  qplanewave check plane-wave --beta 0.75 --q 0.5 --N 14
  qplanewave expand --alpha 0.3 --beta 0.7 --N 16 --seed 1 --out coeffs.csv
  qplanewave transform dunkl --input f.csv --alpha 0.3 --kmin -5 --kmax 20

Throughout, --q is the q of the base q^2 used by the Bessel-type functions.
Exit codes: 0 success / all cases pass, 1 numeric failure, 2 usage or
parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

import mpmath as mp

from . import __version__
from .context import QContext, TruncationPolicy, to_rational, working
from .errors import ParameterError, QNumericsError
from .lattice import LatticeFunction, LatticePoint
from .qbessel import dunkl_kernel, jackson3_bessel, q_trig, rubin_exp
from .qcore import qpochhammer, qpochhammer_inf
from .qexpansion import (NeumannSystem, PWSpec, hankel_kernel_partial, i_minus, i_plus, kernel_expansion_partial,
                         neumann_fn, neumann_reconstruct, plane_wave_partial, pw_synthesize)
from .qortho import PolyParams, gegenbauer_gen, little_q_jacobi
from .qtransform import dunkl_transform, hankel_transform
from .report import fmt
from .suites import SUITE_NAMES, SuiteConfig, random_spectrum, run_suite


class UsageError(Exception):
    pass


def _rat(text: str, name: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ParameterError, ZeroDivisionError) as exc:
        raise UsageError(f"--{name}: cannot read {text!r} as a number") from exc


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + m for m in missing))


def _context(args, lattice_flags: bool = True) -> QContext:
    """Context from --q/--precision; --kmin/--kmax set the truncation window unless
    the subcommand uses them for something else."""
    window = (-40, 60)
    if lattice_flags:
        window = (args.kmin if args.kmin is not None else -40, args.kmax if args.kmax is not None else 60)
    return QContext(_rat(args.q, "q"), args.precision, TruncationPolicy(lattice_window=window))


def to_lattice(x: Fraction, q: Fraction, name: str = "x") -> LatticePoint:
    """The lattice point +-q^k equal to x exactly, or a usage error."""
    if x == 0:
        raise UsageError(f"--{name} must be nonzero")
    sign, ax = (1 if x > 0 else -1), abs(x)
    k, v = 0, Fraction(1)
    if ax <= 1:
        while v > ax:
            v *= q
            k += 1
    else:
        while v < ax:
            v /= q
            k -= 1
    if v != ax:
        raise UsageError(f"--{name} = {x} is not on the lattice +-q^k")
    return LatticePoint(sign, k)


# ------------------------------------------------------------------- eval


def _ev_qpochhammer(args, ctx):
    _need(args, "a")
    a, q = _rat(args.a, "a"), ctx.q
    if args.n is None:
        return qpochhammer_inf(a, q, ctx)
    with working(ctx):
        return qpochhammer(mp.mpf(a.numerator) / a.denominator, mp.mpf(q.numerator) / q.denominator, args.n)


def _ev_bessel(args, ctx):
    _need(args, "nu", "x")
    return jackson3_bessel(_rat(args.nu, "nu"), _rat(args.x, "x"), ctx.q ** 2, ctx)


def _ev_dunkl(args, ctx):
    _need(args, "alpha", "x")
    return dunkl_kernel(_rat(args.alpha, "alpha"), _rat(args.x, "x"), ctx.q, ctx)


def _ev_rubin(args, ctx):
    _need(args, "x")
    x = _rat(args.x, "x")
    with working(ctx):
        return rubin_exp(1j * mp.mpf(x.numerator) / x.denominator, ctx.q, ctx)


def _ev_qcos(args, ctx):
    _need(args, "x")
    return q_trig(_rat(args.x, "x"), ctx.q, ctx)[0]


def _ev_qsin(args, ctx):
    _need(args, "x")
    return q_trig(_rat(args.x, "x"), ctx.q, ctx)[1]


def _ev_jacobi(args, ctx):
    _need(args, "n", "x", "alpha", "beta")
    p = PolyParams(_rat(args.alpha, "alpha"), _rat(args.beta, "beta"))
    return little_q_jacobi(args.n, _rat(args.x, "x"), p, ctx.q, True, ctx)


def _ev_gegenbauer(args, ctx):
    _need(args, "n", "t", "alpha", "beta")
    p = PolyParams(_rat(args.alpha, "alpha"), _rat(args.beta, "beta"))
    return gegenbauer_gen(args.n, _rat(args.t, "t"), p, ctx.q, ctx)


def _ev_neumann(args, ctx):
    _need(args, "n", "x", "alpha")
    sys_ = NeumannSystem(_rat(args.alpha, "alpha"), ctx.q, max(args.n, 0))
    return neumann_fn(sys_, args.n, _rat(args.x, "x"), ctx)


def _ev_i_minus(args, ctx):
    _need(args, "n", "t", "alpha", "beta")
    t = to_lattice(_rat(args.t, "t"), ctx.q, "t")
    return i_minus(_rat(args.alpha, "alpha"), _rat(args.beta, "beta"), args.n, t, ctx.q, ctx)


def _ev_i_plus(args, ctx):
    _need(args, "n", "t", "alpha", "beta")
    t = to_lattice(_rat(args.t, "t"), ctx.q, "t")
    return i_plus(_rat(args.alpha, "alpha"), _rat(args.beta, "beta"), args.n, t, ctx.q, ctx)


def _ev_kernel_expansion(args, ctx):
    _need(args, "N", "x", "t", "alpha", "beta")
    x = to_lattice(_rat(args.x, "x"), ctx.q)
    return kernel_expansion_partial(x, _rat(args.t, "t"), _rat(args.alpha, "alpha"), _rat(args.beta, "beta"),
                                    ctx.q, args.N, ctx)


def _ev_plane_wave(args, ctx):
    _need(args, "N", "x", "t", "beta")
    x = to_lattice(_rat(args.x, "x"), ctx.q)
    return plane_wave_partial(x, _rat(args.t, "t"), _rat(args.beta, "beta"), ctx.q, args.N, ctx)


def _ev_hankel_kernel(args, ctx):
    _need(args, "N", "x", "t", "alpha", "beta")
    x = to_lattice(_rat(args.x, "x"), ctx.q)
    return hankel_kernel_partial(x, _rat(args.t, "t"), _rat(args.alpha, "alpha"), _rat(args.beta, "beta"),
                                 ctx.q, args.N, ctx)


EVALUATORS = {
    "qpochhammer": _ev_qpochhammer,
    "jackson3-bessel": _ev_bessel,
    "dunkl-kernel": _ev_dunkl,
    "rubin-exp": _ev_rubin,
    "q-cos": _ev_qcos,
    "q-sin": _ev_qsin,
    "little-q-jacobi": _ev_jacobi,
    "gegenbauer": _ev_gegenbauer,
    "neumann": _ev_neumann,
    "i-minus": _ev_i_minus,
    "i-plus": _ev_i_plus,
    "kernel-expansion": _ev_kernel_expansion,
    "plane-wave": _ev_plane_wave,
    "hankel-kernel": _ev_hankel_kernel,
}


def _split(v):
    v = mp.mpmathify(v)
    if isinstance(v, mp.mpc):
        return v.real, v.imag
    return v, mp.mpf(0)


def _emit_value(name, result, args, out):
    if hasattr(result, "value"):
        value, err, terms = result.value, result.err_estimate, result.terms_used
    else:
        value, err, terms = result, None, None
    re_, im_ = _split(value)
    row = {"function": name, "re": fmt(re_), "im": fmt(im_),
           "err_estimate": "" if err is None else fmt(err), "terms_used": "" if terms is None else terms}
    if args.format == "json":
        out.write(json.dumps(row, indent=2) + "\n")
    else:
        w = csv.DictWriter(out, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)


# ----------------------------------------------------------- subcommands


def cmd_eval(args, out) -> int:
    ctx = _context(args)
    result = EVALUATORS[args.function](args, ctx)
    _emit_value(args.function, result, args, out)
    return 0


def _suite_config(args) -> SuiteConfig:
    kw = {}
    for name in ("q", "alpha", "beta"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = _rat(v, name)
    window = (args.kmin if args.kmin is not None else -40, args.kmax if args.kmax is not None else 60)
    extra = {}
    if args.draws is not None:
        extra["draws"] = args.draws
    return SuiteConfig(args.suite, N=args.N, window=window, precision_digits=args.precision,
                       tolerance=args.tol, seed=args.seed, fmt=args.format, extra=extra, **kw)


def cmd_check(args, out) -> int:
    cfg = _suite_config(args)
    rep = run_suite(cfg)
    text = rep.to_json() if args.format == "json" else rep.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(rep.summary_line(), file=sys.stderr)
    return 0 if rep.all_pass else 1


def _read_lattice(path: str) -> LatticeFunction:
    try:
        with open(path) as fh:
            return LatticeFunction.from_csv(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(text: str, path: str | None, out):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_expand(args, out) -> int:
    _need(args, "alpha", "beta", "N")
    ctx = _context(args)
    a, b = _rat(args.alpha, "alpha"), _rat(args.beta, "beta")
    if args.input:
        u = _read_lattice(args.input)
    else:
        u = random_spectrum(random.Random(args.seed))
    f = pw_synthesize(PWSpec(u, a, ctx.q), ctx)
    coef, _ = neumann_reconstruct(f, a, b, ctx.q, args.N, ctx)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "re", "im"])
    for n, c in enumerate(coef.coeffs):
        re_, im_ = _split(c)
        w.writerow([n, fmt(re_), fmt(im_)])
    _write(buf.getvalue(), args.out, out)
    print(f"sup_error={mp.nstr(coef.sup_error, 5)} on +-q^k, k in {list(coef.window)}", file=sys.stderr)
    return 0 if coef.sup_error < args.tol else 1


def cmd_transform(args, out) -> int:
    _need(args, "alpha")
    if not args.input:
        raise UsageError("transform needs --input (CSV with columns sign, k, re, im)")
    # here --kmin/--kmax choose the output window
    ctx = _context(args, lattice_flags=False)
    f = _read_lattice(args.input)
    a = _rat(args.alpha, "alpha")
    window = None
    if args.kmin is not None or args.kmax is not None:
        window = (args.kmin if args.kmin is not None else f.window[0],
                  args.kmax if args.kmax is not None else f.window[1])
    if args.kind == "hankel":
        g = hankel_transform(f, a, ctx.q, ctx, window)
    else:
        g = dunkl_transform(f, a, ctx.q, args.kind == "dunkl-inverse", ctx, window)
    _write(g.to_csv(), args.out, out)
    if g.flagged:
        print(f"warning: {len(g.flagged)} output points depend on data at the input window edge", file=sys.stderr)
    return 0


# ---------------------------------------------------------------- parser


def _common(p: argparse.ArgumentParser, q_default: str | None = "0.5"):
    p.add_argument("--q", default=q_default, help="q in (0, 1); Bessel-type functions use base q^2")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--nu")
    p.add_argument("--a", help="q-Pochhammer argument")
    p.add_argument("--n", type=int, help="index or degree")
    p.add_argument("--N", type=int, help="truncation order")
    p.add_argument("--x")
    p.add_argument("--t")
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--precision", type=int, default=40, help="working digits (>= 30)")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qplanewave", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function")
    p.add_argument("function", choices=sorted(EVALUATORS))
    _common(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="run a named identity suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    _common(p, None)
    p.add_argument("--draws", type=int, help="number of seeded random draws, where the suite uses them")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("expand", help="Neumann coefficients a_n of a Paley-Wiener function")
    _common(p)
    p.add_argument("--input", help="spectrum u as lattice CSV; default is a seeded random 4-point spectrum")
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("transform", help="apply a q-Hankel or q-Dunkl transform to a tabulated function")
    p.add_argument("kind", choices=("hankel", "dunkl", "dunkl-inverse"))
    _common(p)
    p.add_argument("--input")
    p.set_defaults(run=cmd_transform)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QNumericsError as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
