import random
from fractions import Fraction

import mpmath as mp
import pytest

from qplanewave.context import to_mp
from qplanewave.errors import ConvergenceViolation, DivergentSeries, ParameterError
from qplanewave.lattice import LatticeFunction, LatticePoint
from qplanewave.measure import half_line_integral, mu_constant
from qplanewave.qtransform import (WeberParams, bessel_lemma_gram, dunkl_decomposed_at, dunkl_transform,
                                   dunkl_transform_at, dunkl_transform_fn, hankel_transform, hankel_transform_at,
                                   hankel_transform_fn, odd_part_constant, qbessel_orthogonality_suite,
                                   weber_branch_validity, weber_schafheitlin_closed, weber_schafheitlin_oracle)
from qplanewave.suites import _exceptional_cases, random_lattice_function, weber_draws

from conftest import ALPHA, Q, close

TOL = mp.mpf(10) ** -28


def _memo(fn):
    cache = {}

    def g(p):
        if p not in cache:
            cache[p] = fn(p)
        return cache[p]
    return g


def test_hankel_twice_is_identity(ctx):
    f = LatticeFunction((-5, 5), {LatticePoint(1, 0): mp.mpf(1)}, False)
    hf = _memo(lambda p: hankel_transform_at(f, ALPHA, Q, p.k, ctx)[0])
    for k in range(-5, 6):
        back = hankel_transform_fn(hf, ALPHA, Q, k, ctx).value
        assert close(back, 1 if k == 0 else 0, TOL, scale=1)


def test_hankel_isometry(ctx):
    f = random_lattice_function(random.Random(3), window=(-2, 4), signed=False)
    hf = _memo(lambda p: hankel_transform_at(f, ALPHA, Q, p.k, ctx)[0])
    q = to_mp(Q)
    lhs = mp.fsum(abs(v) ** 2 * q ** ((2 * to_mp(ALPHA) + 2) * p.k) for p, v in f.values.items())
    rhs = half_line_integral(lambda p: abs(hf(p)) ** 2, ALPHA, Q, ctx).value
    assert close(rhs, lhs, TOL)


def test_zero_maps_to_zero(ctx):
    z = LatticeFunction((0, 3), {}, True)
    assert dunkl_transform(z, ALPHA, Q, ctx=ctx).values == {}
    assert hankel_transform(z.restrict_positive(), ALPHA, Q, ctx).values == {}


def test_dunkl_on_even_function_is_hankel(ctx):
    vals = {}
    for k, v in ((0, "0.5"), (2, "-0.25"), (3, "0.125")):
        vals[LatticePoint(1, k)] = vals[LatticePoint(-1, k)] = mp.mpf(v)
    f = LatticeFunction((0, 3), vals, True)
    y = LatticePoint(1, 2)
    d, _ = dunkl_transform_at(f, ALPHA, Q, y, False, ctx)
    h, _ = hankel_transform_at(f.restrict_positive(), ALPHA, Q, 2, ctx)
    assert close(d, h, TOL)


def test_dunkl_inversion(ctx):
    g = random_lattice_function(random.Random(5), window=(0, 4), complex_values=True)
    fg = _memo(lambda p: dunkl_transform_at(g, ALPHA, Q, p, False, ctx)[0])
    for p in g.points():
        back = dunkl_transform_fn(fg, ALPHA, Q, -p, ctx).value
        assert close(back, g(p), TOL, scale=1)


def test_dunkl_multiplication_formula(ctx):
    rng = random.Random(11)
    u = random_lattice_function(rng, window=(0, 4), complex_values=True)
    v = random_lattice_function(rng, window=(0, 4), complex_values=True)
    q = to_mp(Q)
    c = mu_constant(ALPHA, Q, ctx) / 2

    def pair(f, h):
        return mp.fsum(val * h(p) * c * q ** ((2 * to_mp(ALPHA) + 2) * p.k) for p, val in f.values.items())

    lhs = pair(u, lambda p: dunkl_transform_at(v, ALPHA, Q, p, False, ctx)[0])
    rhs = pair(v, lambda p: dunkl_transform_at(u, ALPHA, Q, p, False, ctx)[0])
    assert close(lhs, rhs, TOL)


def test_dunkl_window_and_inverse_sign(ctx):
    g = random_lattice_function(random.Random(2), window=(0, 3), complex_values=True)
    fwd = dunkl_transform(g, ALPHA, Q, False, ctx, window=(0, 1))
    inv = dunkl_transform(g, ALPHA, Q, True, ctx, window=(0, 1))
    for p in fwd.points():
        assert inv(p) == fwd(-p)
    with pytest.raises(ParameterError):
        dunkl_transform(g.restrict_positive(), ALPHA, Q, ctx=ctx)


def test_odd_part_constant_is_minus_i_y(ctx):
    g = random_lattice_function(random.Random(7), window=(0, 4), complex_values=True)
    for y in (LatticePoint(1, 1), LatticePoint(-1, 2)):
        c = odd_part_constant(g, ALPHA, Q, y, ctx)
        assert close(c, -1j * y.value(to_mp(Q)), TOL)
        direct, _ = dunkl_transform_at(g, ALPHA, Q, y, False, ctx)
        dec, _ = dunkl_decomposed_at(g, ALPHA, Q, y, ctx)
        assert close(direct, dec, TOL)


def test_weber_convergence_condition():
    with pytest.raises(ConvergenceViolation):
        WeberParams(3, Fraction(1, 2), Fraction(1, 2), 0, 0)


def test_weber_branches_agree(ctx):
    w = WeberParams(Fraction(1, 5), Fraction(4, 5), Fraction(11, 10), 0, 0)
    b1 = weber_schafheitlin_closed(w, Q, "first", ctx).value
    b2 = weber_schafheitlin_closed(w, Q, "second", ctx).value
    assert close(b1, b2, TOL)
    assert close(weber_schafheitlin_oracle(w, Q, ctx).value, b1, TOL)


def test_weber_divergent_branch_is_reported(ctx):
    # m = 1 makes the second closed form's 2phi1 argument exceed 1
    w = WeberParams(Fraction(1, 5), Fraction(4, 5), Fraction(11, 10), 1, 0)
    with pytest.raises(DivergentSeries):
        weber_schafheitlin_closed(w, Q, "second", ctx)
    assert close(weber_schafheitlin_closed(w, Q, "auto", ctx).value, weber_schafheitlin_oracle(w, Q, ctx).value, TOL)


def test_weber_lemma_zero(ctx):
    a = ALPHA
    w = WeberParams(1, a + 1, a + 3, 0, 1)
    assert abs(weber_schafheitlin_closed(w, Q, "auto", ctx).value) < TOL
    assert abs(weber_schafheitlin_oracle(w, Q, ctx).value) < TOL


def test_weber_random_draws(ctx):
    for w in weber_draws(random.Random(1), 4):
        o = weber_schafheitlin_oracle(w, Q, ctx).value
        assert close(weber_schafheitlin_closed(w, Q, "first", ctx).value, o, mp.mpf(10) ** -25)
        assert close(weber_schafheitlin_closed(w, Q, "second", ctx).value, o, mp.mpf(10) ** -25)


def test_weber_exceptional_case(ctx):
    for w in _exceptional_cases(random.Random(0), 2):
        valid = weber_branch_validity(w)
        assert valid["exceptional"] and valid["first"] != valid["second"]
        good = "first" if valid["first"] else "second"
        o = weber_schafheitlin_oracle(w, Q, ctx).value
        assert close(weber_schafheitlin_closed(w, Q, good, ctx).value, o, TOL)
        assert close(weber_schafheitlin_closed(w, Q, "auto", ctx).value, o, TOL)


def test_weber_validity_flags_exact(ctx):
    # n - m + (1+lam+mu-nu)/2 = 0 and (1-lam+nu-mu)/2 = 0: only the first form holds
    w = WeberParams(0, Fraction(3, 2), Fraction(1, 2), 1, 0)
    assert weber_branch_validity(w) == {"first": True, "second": False, "exceptional": True}
    assert weber_branch_validity(w.swapped()) == {"first": False, "second": True, "exceptional": True}
    # this integral vanishes, so compare on an absolute scale
    o = weber_schafheitlin_oracle(w, Q, ctx).value
    assert close(weber_schafheitlin_closed(w, Q, "auto", ctx).value, o, TOL, scale=1)
    assert close(weber_schafheitlin_closed(w.swapped(), Q, "auto", ctx).value, o, TOL, scale=1)


def test_bessel_lemma_gram(ctx):
    g = bessel_lemma_gram(ALPHA, Q, 3, ctx)
    assert g.passed(TOL)


def test_neumann_gram(ctx):
    g = qbessel_orthogonality_suite(ALPHA, Q, 3, ctx)
    assert g.passed(TOL)
    for n in range(4):
        for m in range(4):
            if (n + m) % 2:
                assert abs(g.matrix[n][m]) < TOL


def test_neumann_gram_single_entry(ctx):
    g = qbessel_orthogonality_suite(ALPHA, Q, 0, ctx)
    q = to_mp(Q)
    ref = mu_constant(ALPHA, Q, ctx) / (1 - q ** (2 * to_mp(ALPHA) + 2))
    assert close(g.matrix[0][0], ref, TOL)
