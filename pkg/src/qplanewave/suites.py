"""Named identity suites.  Each suite takes a SuiteConfig and returns a Report
whose cases compare a computed value with an independent reference."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath as mp

from .context import QContext, TruncationPolicy, to_mp, to_rational, working
from .errors import ParameterError
from .lattice import LatticeFunction, LatticePoint
from .measure import half_line_integral, line_integral, mu_constant
from .qcore import hypergeometric_transform_check
from .qexpansion import (PWSpec, biorthogonality_matrix, coefficient_consistency, hankel_kernel_partial,
                         hankel_kernel_residuals, i_minus, i_minus_direct, i_plus, i_plus_direct,
                         kernel_expansion_partial, kernel_expansion_residuals, lemma_qFPQ_check,
                         neumann_reconstruct, plane_wave_partial, plane_wave_residuals, pw_synthesize,
                         biorthogonal_Q)
from .qbessel import rubin_exp
from .qortho import PolyParams, gegenbauer_norm, gegenbauer_norm_direct, jacobi_gram
from .qtransform import (WeberParams, bessel_lemma_gram, dunkl_decomposed_at, dunkl_transform_at,
                         dunkl_transform_fn, hankel_transform_at, hankel_transform_fn,
                         qbessel_orthogonality_suite, weber_branch_validity, weber_schafheitlin_closed,
                         weber_schafheitlin_oracle)
from .report import Case, Report

SUITE_NAMES = (
    "jacobi-gram",
    "gegenbauer-norms",
    "weber-schafheitlin",
    "bessel-orthogonality",
    "neumann-orthogonality",
    "i-minus-plus",
    "lemma-qfpq",
    "kernel-expansion",
    "plane-wave",
    "hankel-kernel",
    "pw-reconstruct",
    "transforms-roundtrip",
    "hypergeometric-transforms",
)


@dataclass
class SuiteConfig:
    suite_name: str
    q: Fraction = Fraction(1, 2)
    alpha: Fraction = Fraction(3, 10)
    beta: Fraction = Fraction(7, 10)
    N: int | None = None
    window: tuple[int, int] = (-40, 60)
    precision_digits: int = 40
    tolerance: float = 1e-12
    seed: int = 0
    fmt: str = "json"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.suite_name not in SUITE_NAMES:
            raise ParameterError(f"unknown suite {self.suite_name!r}; choose from {', '.join(SUITE_NAMES)}")
        self.q = to_rational(self.q)
        self.alpha = to_rational(self.alpha)
        self.beta = to_rational(self.beta)
        if not 0 < self.q < 1:
            raise ParameterError(f"q must lie in (0, 1), got {self.q}")
        if not self.tolerance > 0:
            raise ParameterError("tolerance must be positive")
        if self.N is not None and self.N < 0:
            raise ParameterError("N must be >= 0")
        if self.fmt not in ("json", "csv"):
            raise ParameterError("format must be json or csv")
        self.context()  # window and precision checks

    def context(self) -> QContext:
        return QContext(self.q, self.precision_digits, TruncationPolicy(lattice_window=tuple(self.window)))

    def n_or(self, default: int) -> int:
        return default if self.N is None else self.N

    def get(self, key, default):
        v = self.extra.get(key)
        return default if v is None else v


def _new_report(cfg: SuiteConfig, **params) -> Report:
    p = {"q": f"{cfg.q} ({float(cfg.q)!r})", "alpha": f"{cfg.alpha} ({float(cfg.alpha)!r})",
         "beta": f"{cfg.beta} ({float(cfg.beta)!r})", "tolerance": cfg.tolerance}
    p.update(params)
    prov = {"precision_digits": cfg.precision_digits, "window": list(cfg.window), "seed": cfg.seed,
            "neumann_shift": "floor(n/2)"}
    return Report(cfg.suite_name, p, [], prov)


def _merge(dst: Report, src: Report, prefix: str):
    for c in src.cases:
        c.case_id = f"{prefix}/{c.case_id}"
        dst.add(c)


def _gram_cases(rep: Report, g, tol, prefix: str):
    for i in range(g.size):
        for j in range(g.size):
            if i == j:
                rep.add(Case.make(f"{prefix}/diag/{i:02d}", g.matrix[i][i], g.diag_reference[i], tol))
            elif i < j:
                rep.add(Case.make(f"{prefix}/off/{i:02d}-{j:02d}", g.entries[i][j], 0, tol, scale=1,
                                  note="relative to sqrt(G_ii G_jj)"))


def _ratio(rng: random.Random, lo, hi, den=1000) -> Fraction:
    return Fraction(int(round(rng.uniform(lo, hi) * den)), den)


# ------------------------------------------------------------------ suites


def suite_jacobi_gram(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(8)
    rep = _new_report(cfg, N=N)
    g = jacobi_gram(PolyParams(cfg.alpha, cfg.beta), cfg.q, N, ctx)
    _gram_cases(rep, g, cfg.tolerance, "gram")
    rep.provenance["offdiag_max"] = mp.nstr(g.offdiag_max, 5)
    return rep


def suite_gegenbauer_norms(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(8)
    p = PolyParams(cfg.alpha, cfg.beta).require_sum()
    rep = _new_report(cfg, N=N)
    for n in range(N + 1):
        rep.add(Case.make(f"norm/{n:02d}", gegenbauer_norm(n, p, cfg.q, ctx),
                          gegenbauer_norm_direct(n, p, cfg.q, ctx), cfg.tolerance))
    M = biorthogonality_matrix(cfg.alpha, cfg.beta, cfg.q, N, ctx)
    for n in range(N + 1):
        for m in range(N + 1):
            rep.add(Case.make(f"biorth/{n:02d}-{m:02d}", M[n][m], 1 if n == m else 0, cfg.tolerance, scale=1))
    return rep


def _exceptional_cases(rng: random.Random, count: int) -> list:
    """Parameter sets where exactly one closed form is valid.

    lam = -b, mu = a, nu = a + b + 2n + 1, m <= -1 makes only the second form
    valid (the first terminates to a wrong value); swapping gives the mirror.
    """
    out = []
    while len(out) < count:
        a = _ratio(rng, -0.5, 1.5)
        n = rng.randint(0, 2)
        m = -rng.randint(1, 2)
        b = _ratio(rng, 0.1, min(1.9, -m - 0.1))
        w = WeberParams(-b, a, a + b + 2 * n + 1, m, n)
        out.append(w if len(out) % 2 == 0 else w.swapped())
    return out


def weber_draws(rng: random.Random, count: int) -> list:
    """Non-exceptional draws for which both closed-form series converge."""
    out = []
    while len(out) < count:
        lam = _ratio(rng, -0.9, 1.5)
        mu, nu = _ratio(rng, -0.9, 2.5), _ratio(rng, -0.9, 2.5)
        m, n = rng.randint(-2, 2), rng.randint(-2, 2)
        if not lam < mu + nu + 1:
            continue
        w = WeberParams(lam, mu, nu, m, n)
        if weber_branch_validity(w)["exceptional"]:
            continue
        e1 = 2 * m - 2 * n + 1 + lam + nu - mu
        e2 = 2 * n - 2 * m + 1 + lam + mu - nu
        if e1 > 0 and e2 > 0:
            out.append(w)
    return out


def suite_weber(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    draws = int(cfg.get("draws", 10))
    rng = random.Random(cfg.seed)
    rep = _new_report(cfg, draws=draws)
    for i, w in enumerate(weber_draws(rng, draws)):
        tag = f"draw/{i:02d}"
        oracle = weber_schafheitlin_oracle(w, cfg.q, ctx).value
        b1 = weber_schafheitlin_closed(w, cfg.q, "first", ctx).value
        b2 = weber_schafheitlin_closed(w, cfg.q, "second", ctx).value
        note = f"lam={w.lam} mu={w.mu} nu={w.nu} m={w.m} n={w.n}"
        rep.add(Case.make(f"{tag}/first", b1, oracle, cfg.tolerance, note=note))
        rep.add(Case.make(f"{tag}/second", b2, oracle, cfg.tolerance, note=note))
    for i, w in enumerate(_exceptional_cases(rng, int(cfg.get("exceptional", 4)))):
        tag = f"exceptional/{i:02d}"
        valid = weber_branch_validity(w)
        good, bad = ("first", "second") if valid["first"] else ("second", "first")
        oracle = weber_schafheitlin_oracle(w, cfg.q, ctx).value
        note = f"lam={w.lam} mu={w.mu} nu={w.nu} m={w.m} n={w.n}"
        rep.add(Case.make(f"{tag}/{good}", weber_schafheitlin_closed(w, cfg.q, good, ctx).value, oracle,
                          cfg.tolerance, note=note + " valid branch"))
        try:
            wrong = weber_schafheitlin_closed(w, cfg.q, bad, ctx).value
            rep.add(Case.make(f"{tag}/{bad}-excluded", wrong, oracle, cfg.tolerance, expect_match=False,
                              note=note + " excluded branch must disagree"))
        except Exception as exc:  # the excluded series may also diverge
            rep.notes.append(f"{tag}: excluded {bad} branch not evaluable ({type(exc).__name__})")
    return rep


def suite_bessel_orthogonality(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(6)
    rep = _new_report(cfg, N=N)
    _gram_cases(rep, bessel_lemma_gram(cfg.alpha, cfg.q, N, ctx), cfg.tolerance, "lemma")
    return rep


def suite_neumann_orthogonality(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(6)
    base = cfg.alpha + cfg.beta
    rep = _new_report(cfg, N=N, base_order=str(base))
    _gram_cases(rep, qbessel_orthogonality_suite(base, cfg.q, N, ctx), cfg.tolerance, "neumann")
    return rep


def suite_i_minus_plus(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(4)
    j_max = int(cfg.get("j_max", 12))
    a, b, q = cfg.alpha, cfg.beta, cfg.q
    rep = _new_report(cfg, N=N, j_max=j_max)
    for n in range(N + 1):
        scale = mp.mpf(0)
        for j in range(j_max + 1):
            t = LatticePoint(1, j)
            cm = i_minus(a, b, n, t, q, ctx)
            scale = max(scale, abs(cm))
            rep.add(Case.make(f"minus/n{n}/j{j:02d}", cm, i_minus_direct(a, b, n, t, q, ctx).value, cfg.tolerance))
            rep.add(Case.make(f"plus/n{n}/j{j:02d}", i_plus(a, b, n, t, q, ctx),
                              i_plus_direct(a, b, n, t, q, ctx).value, cfg.tolerance,
                              note="exponent 2a+2n+2"))
        for j in (-1, -2):
            t = LatticePoint(1, j)
            rep.add(Case.make(f"minus/n{n}/j{j}", i_minus_direct(a, b, n, t, q, ctx).value,
                              i_minus(a, b, n, t, q, ctx), cfg.tolerance, scale=scale,
                              note="t > 1: closed form is zero"))
    return rep


def suite_lemma_qfpq(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(6)
    tw = tuple(cfg.get("t_window", (-2, 10)))
    rep = _new_report(cfg, N=N, t_window=list(tw))
    for k in range(N + 1):
        _merge(rep, lemma_qFPQ_check(k, cfg.alpha, cfg.beta, cfg.q, tw, ctx, cfg.tolerance), f"k{k}")
    return rep


def _residual_cases(rep: Report, tag: str, res: list, tol, floor):
    """Final residual below tol and no increase above the precision floor."""
    N = len(res) - 1
    rep.add(Case.make(f"{tag}/residual/N{N:02d}", res[-1], 0, tol, scale=1, note="absolute L2 residual"))
    worst = mp.mpf(0)
    for n in range(1, len(res)):
        if res[n - 1] > floor:
            worst = max(worst, (res[n] - res[n - 1]) / res[n - 1])
    rep.add(Case.make(f"{tag}/monotone", max(worst, 0), 0, tol, scale=1,
                      note="largest relative increase between consecutive N"))
    rep.notes.append(f"{tag}: " + " ".join(mp.nstr(r, 3) for r in res))


def _floor(ctx: QContext):
    return mp.mpf(10) ** (-(ctx.precision_digits - 10))


def _x_list(cfg: SuiteConfig, default) -> list:
    return list(cfg.get("x_exponents", default))


def suite_kernel_expansion(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(20)
    rep = _new_report(cfg, N=N)
    for kx in _x_list(cfg, (3, 0, -2)):
        x = LatticePoint(1, kx)
        r = kernel_expansion_residuals(x, cfg.alpha, cfg.beta, cfg.q, N, ctx)
        _residual_cases(rep, f"x{kx:+d}", r["residuals"], cfg.tolerance, _floor(ctx))
        t = LatticePoint(1, 2)
        v1 = kernel_expansion_partial(x, t, cfg.alpha, cfg.beta, cfg.q, min(N, 8), ctx).value
        v2 = kernel_expansion_partial(x, -t, cfg.alpha, cfg.beta, cfg.q, min(N, 8), ctx).value
        rep.add(Case.make(f"x{kx:+d}/conjugate", v2, mp.conj(v1), cfg.tolerance))
    return rep


def suite_plane_wave(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(20)
    b, q = cfg.beta, cfg.q
    rep = _new_report(cfg, N=N)
    for kx in _x_list(cfg, (3, 0, -2)):
        r = plane_wave_residuals(LatticePoint(1, kx), b, q, N, ctx)
        _residual_cases(rep, f"x{kx:+d}", r["residuals"], cfg.tolerance, _floor(ctx))
    with working(ctx):
        qm = to_mp(q)
        for k in (-1, 0, 2):
            for j in (0, 1, 3):
                x, t = LatticePoint(1, k), LatticePoint(1, j)
                v = plane_wave_partial(x, t, b, q, N, ctx).value
                ref = rubin_exp(1j * qm ** (k + j), q, ctx).value
                rep.add(Case.make(f"point/k{k:+d}/j{j}", v, ref, cfg.tolerance))
        x, t = LatticePoint(1, 1), LatticePoint(-1, 2)
        rep.add(Case.make("specialization", plane_wave_partial(x, t, b, q, min(N, 8), ctx).value,
                          kernel_expansion_partial(x, t, Fraction(-1, 2), b - Fraction(1, 2), q,
                                                   min(N, 8), ctx).value, cfg.tolerance))
    return rep


def suite_hankel_kernel(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(10)
    a, b, q = cfg.alpha, cfg.beta, cfg.q
    rep = _new_report(cfg, N=N)
    for kx in _x_list(cfg, (0,)):
        x = LatticePoint(1, kx)
        r = hankel_kernel_residuals(x, a, b, q, N, ctx)
        _residual_cases(rep, f"x{kx:+d}", r["residuals"], cfg.tolerance, _floor(ctx))
        t = LatticePoint(1, 2)
        n_half = min(N, 5)
        h = hankel_kernel_partial(x, t, a, b, q, n_half, ctx).value
        rep.add(Case.make(f"x{kx:+d}/even-t", hankel_kernel_partial(x, -t, a, b, q, n_half, ctx).value, h,
                          cfg.tolerance))
        with working(ctx):
            ke = (kernel_expansion_partial(x, t, a, b, q, 2 * n_half + 1, ctx).value
                  + kernel_expansion_partial(x, -t, a, b, q, 2 * n_half + 1, ctx).value) / 2
            rep.add(Case.make(f"x{kx:+d}/even-half", h, ke * mu_constant(a, q, ctx), cfg.tolerance,
                              note="even part of the Dunkl-kernel expansion"))
    return rep


def random_spectrum(rng: random.Random, points: int = 4, k_max: int = 5) -> LatticeFunction:
    pts = rng.sample([LatticePoint(s, k) for k in range(k_max + 1) for s in (1, -1)], points)
    vals = {p: mp.mpf(_ratio(rng, -1, 1).numerator) / 1000 for p in pts}
    return LatticeFunction((0, k_max), vals, True)


def suite_pw_reconstruct(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    N = cfg.n_or(16)
    draws = int(cfg.get("draws", 5))
    a, b, q = cfg.alpha, cfg.beta, cfg.q
    rng = random.Random(cfg.seed)
    rep = _new_report(cfg, N=N, draws=draws)
    window = tuple(cfg.get("x_window", (0, 10)))
    f0 = None
    for i in range(draws):
        u = random_spectrum(rng)
        f = pw_synthesize(PWSpec(u, a, q), ctx)
        f0 = f0 or (u, f)
        coef, _ = neumann_reconstruct(f, a, b, q, N, ctx, window)
        scale = max(abs(f(p)) for p in (LatticePoint(s, k) for k in range(window[0], window[1] + 1)
                                         for s in (1, -1)))
        rep.add(Case.make(f"draw/{i}/sup", coef.sup_error, 0, cfg.tolerance, scale=1,
                          note=f"sup over window, max|f| = {mp.nstr(scale, 5)}"))
        rep.notes.append(f"draw {i}: |a_n| = " + " ".join(mp.nstr(abs(c), 3) for c in coef.coeffs))
    zero = LatticeFunction((0, 5), {}, True)
    fz = pw_synthesize(PWSpec(zero, a, q), ctx, window=(-5, 10))
    cz, _ = neumann_reconstruct(fz, a, b, q, min(N, 4), ctx, window)
    rep.add(Case.make("zero/coeffs", max(abs(c) for c in cz.coeffs), 0, cfg.tolerance, scale=1))
    k_top = int(cfg.get("q0_kmax", 60))
    uq = LatticeFunction((0, k_top), {LatticePoint(s, k): biorthogonal_Q(0, LatticePoint(s, k), a, b, q, ctx)
                                      for k in range(k_top + 1) for s in (1, -1)}, True)
    fq = pw_synthesize(PWSpec(uq, a, q), ctx)
    cq, _ = neumann_reconstruct(fq, a, b, q, 0, ctx, window)
    rep.add(Case.make("single-mode/sup", cq.sup_error, 0, cfg.tolerance, scale=1,
                      note="u = Q_0 gives one Neumann mode"))
    if f0 is not None:
        _merge(rep, coefficient_consistency(PWSpec(f0[0], a, q), b, min(N, 3), ctx, f=f0[1],
                                            tol=cfg.tolerance), "consistency")
    return rep


def random_lattice_function(rng: random.Random, window=(0, 6), signed=True, points=5,
                            complex_values=False) -> LatticeFunction:
    signs = (1, -1) if signed else (1,)
    pts = rng.sample([LatticePoint(s, k) for k in range(window[0], window[1] + 1) for s in signs], points)
    vals = {}
    for p in pts:
        re_ = mp.mpf(_ratio(rng, -1, 1).numerator) / 1000
        im_ = mp.mpf(_ratio(rng, -1, 1).numerator) / 1000 if complex_values else 0
        vals[p] = mp.mpc(re_, im_) if complex_values else re_
    return LatticeFunction(tuple(window), vals, signed)


def _memo(fn: Callable) -> Callable:
    cache = {}

    def g(p):
        if p not in cache:
            cache[p] = fn(p)
        return cache[p]
    return g


def _table_norm2(f: LatticeFunction, a, q, ctx, dunkl: bool):
    qm = to_mp(q)
    total = sum(abs(v) ** 2 * qm ** ((2 * a + 2) * p.k) for p, v in f.values.items())
    return total * mu_constant(a, q, ctx) / 2 if dunkl else total


def _table_pair(f: LatticeFunction, g: Callable, a, q, ctx):
    """Integral of f g against d mu_{q,a} for finitely supported f."""
    qm = to_mp(q)
    total = sum(v * g(p) * qm ** ((2 * a + 2) * p.k) for p, v in f.values.items())
    return total * mu_constant(a, q, ctx) / 2


def suite_transforms_roundtrip(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    draws = int(cfg.get("draws", 5))
    a, q = cfg.alpha, cfg.q
    rng = random.Random(cfg.seed)
    rep = _new_report(cfg, draws=draws)
    with working(ctx):
        for i in range(draws):
            f = random_lattice_function(rng, signed=False)
            hf = _memo(lambda p, f=f: hankel_transform_at(f, a, q, p.k, ctx)[0] if p.sign > 0 else 0)
            scale = max(abs(v) for v in f.values.values())
            err = mp.mpf(0)
            for p in f.points():
                back = hankel_transform_fn(hf, a, q, p.k, ctx).value
                err = max(err, abs(back - f(p)))
            rep.add(Case.make(f"hankel/{i}/HH", err, 0, cfg.tolerance, scale=scale))
            n1 = _table_norm2(f, a, q, ctx, False)
            n2 = half_line_integral(lambda p: abs(hf(p)) ** 2, a, q, ctx).value
            rep.add(Case.make(f"hankel/{i}/parseval", n2, n1, cfg.tolerance))

            g = random_lattice_function(rng, complex_values=True)
            fg = _memo(lambda p, g=g: dunkl_transform_at(g, a, q, p, False, ctx)[0])
            scale = max(abs(v) for v in g.values.values())
            err = mp.mpf(0)
            for p in g.points():
                back = dunkl_transform_fn(fg, a, q, -p, ctx).value
                err = max(err, abs(back - g(p)))
            rep.add(Case.make(f"dunkl/{i}/FinvF", err, 0, cfg.tolerance, scale=scale))
            n1 = _table_norm2(g, a, q, ctx, True)
            n2 = line_integral(lambda p: abs(fg(p)) ** 2, a, q, ctx).value
            rep.add(Case.make(f"dunkl/{i}/parseval", n2, n1, cfg.tolerance))

            u = random_lattice_function(rng, complex_values=True)
            v = random_lattice_function(rng, complex_values=True)
            lhs = _table_pair(u, lambda p, v=v: dunkl_transform_at(v, a, q, p, False, ctx)[0], a, q, ctx)
            rhs = _table_pair(v, lambda p, u=u: dunkl_transform_at(u, a, q, p, False, ctx)[0], a, q, ctx)
            rep.add(Case.make(f"dunkl/{i}/multiplication", lhs, rhs, cfg.tolerance))
            y = LatticePoint(-1, 2)
            direct, _ = dunkl_transform_at(g, a, q, y, False, ctx)
            decomposed, _ = dunkl_decomposed_at(g, a, q, y, ctx)
            rep.add(Case.make(f"dunkl/{i}/decomposed", direct, decomposed, cfg.tolerance))
    return rep


def suite_hypergeometric(cfg: SuiteConfig) -> Report:
    ctx = cfg.context()
    draws = int(cfg.get("draws", 5))
    rng = random.Random(cfg.seed)
    rep = _new_report(cfg, draws=draws)
    points = [(Fraction(3, 10), Fraction(2, 5), Fraction(3, 5), Fraction(1, 5))]
    while len(points) < draws + 1:
        a, b, c = _ratio(rng, 0.05, 0.95), _ratio(rng, 0.05, 0.95), _ratio(rng, 0.05, 0.95)
        z = _ratio(rng, -0.5, 0.5)
        if z == 0 or abs(a * b * z / c) >= 1 or abs(a * z) >= 1:
            continue
        points.append((a, b, c, z))
    for i, (a, b, c, z) in enumerate(points):
        sub = hypergeometric_transform_check(a, b, c, z, cfg.q, ctx, cfg.tolerance)
        for case in sub.cases:
            case.note = f"a={a} b={b} c={c} z={z}"
        _merge(rep, sub, f"p{i}")
    return rep


SUITES: dict[str, Callable[[SuiteConfig], Report]] = {
    "jacobi-gram": suite_jacobi_gram,
    "gegenbauer-norms": suite_gegenbauer_norms,
    "weber-schafheitlin": suite_weber,
    "bessel-orthogonality": suite_bessel_orthogonality,
    "neumann-orthogonality": suite_neumann_orthogonality,
    "i-minus-plus": suite_i_minus_plus,
    "lemma-qfpq": suite_lemma_qfpq,
    "kernel-expansion": suite_kernel_expansion,
    "plane-wave": suite_plane_wave,
    "hankel-kernel": suite_hankel_kernel,
    "pw-reconstruct": suite_pw_reconstruct,
    "transforms-roundtrip": suite_transforms_roundtrip,
    "hypergeometric-transforms": suite_hypergeometric,
}


def run_suite(cfg: SuiteConfig) -> Report:
    return SUITES[cfg.suite_name](cfg)
