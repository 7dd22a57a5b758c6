from fractions import Fraction

import mpmath as mp
import pytest

from qplanewave.context import QContext, TruncationPolicy, working
from qplanewave.errors import DivergentSeries, ParameterError, PoleInParameters, WindowTooSmall
from qplanewave.qcore import (basic_hypergeometric, hypergeometric_transform_check, lattice_sum, q_integral,
                              qpochhammer, qpochhammer_inf, qpochhammer_inf_pow)

from conftest import Q, close


def test_qpochhammer_finite_values():
    assert qpochhammer(0.5, 0.5, 0) == 1
    assert qpochhammer(1, 0.5, 3) == 0
    assert qpochhammer(mp.mpf("0.5"), mp.mpf("0.5"), 2) == mp.mpf("0.375")


def test_qpochhammer_inf_values(ctx):
    assert qpochhammer_inf(0, Q, ctx).value == 1
    with working(ctx):
        brute = mp.mpf(1)
        for k in range(200):
            brute *= 1 - mp.mpf("0.5") ** (k + 1)
        v = qpochhammer_inf(mp.mpf("0.5"), Q, ctx)
        assert close(v.value, brute, mp.mpf(10) ** -34)
        assert abs(v.value - brute) <= 2 * v.err_estimate
        assert mp.nstr(v.value, 9) == "0.288788095"
        assert v.err_estimate < mp.mpf(10) ** -34


def test_qpochhammer_inf_splits(ctx):
    with working(ctx):
        a, q = mp.mpf("0.3"), mp.mpf("0.5")
        lhs = qpochhammer_inf(a, q, ctx).value
        rhs = qpochhammer(a, q, 4) * qpochhammer_inf(a * q**4, q, ctx).value
        assert close(lhs, rhs, mp.mpf(10) ** -35)


def test_qpochhammer_inf_exact_zero_factor(ctx):
    assert qpochhammer_inf(4, Q, ctx).value == 0
    assert qpochhammer_inf_pow(-2, Q, ctx) == 0


def test_cached_products_are_bit_identical(ctx):
    a = qpochhammer_inf_pow(Fraction(13, 5), Q, ctx)
    with working(ctx, 25):
        b = qpochhammer_inf_pow(Fraction(13, 5), Q, ctx)
    assert a == b
    with working(ctx, 10, pin=True):
        fresh = qpochhammer_inf(mp.power(mp.mpf(1) / 2, mp.mpf(13) / 5), mp.mpf(1) / 4, ctx).value
    assert fresh == a


def test_basic_hypergeometric_simple_cases(ctx):
    assert basic_hypergeometric([0.3, 0.2], [0.5], Q, 0, ctx).value == 1
    assert basic_hypergeometric([0], [0.25], 0.25, 0, ctx).value == 1
    v = basic_hypergeometric([0.3, 2], [0.2], Q, 0.5, ctx).value
    assert close(v, mp.mpf("0.125"), mp.mpf(10) ** -35)


def test_basic_hypergeometric_matches_mpmath_qhyper(ctx):
    with working(ctx):
        ours = basic_hypergeometric([0.3, 0.4], [0.6], Q, 0.2, ctx).value
        ref = mp.qhyper([mp.mpf("0.3"), mp.mpf("0.4")], [mp.mpf("0.6")], mp.mpf("0.5"), mp.mpf("0.2"))
        assert close(ours, ref, mp.mpf(10) ** -30)
        ours = basic_hypergeometric([0], [mp.mpf("0.3")], Q, mp.mpf("0.7"), ctx).value
        ref = mp.qhyper([0], [mp.mpf("0.3")], mp.mpf("0.5"), mp.mpf("0.7"))
        assert close(ours, ref, mp.mpf(10) ** -30)


def test_basic_hypergeometric_errors(ctx):
    with pytest.raises(DivergentSeries):
        basic_hypergeometric([0.3, 0.4], [0.6], Q, 1.5, ctx)
    with pytest.raises(DivergentSeries):
        basic_hypergeometric([0.3, 0.4, 0.5], [0.6], Q, 0.1, ctx)
    with pytest.raises(PoleInParameters):
        basic_hypergeometric([0.3, 0.4], [2], Q, 0.1, ctx)
    with pytest.raises(ParameterError):
        basic_hypergeometric([0.3], [0.6], 1.5, 0.1, ctx)


def test_terminating_series_sums_exactly(ctx):
    # 2phi1(q^-2, b; c | q; z) has three terms
    with working(ctx):
        q = mp.mpf("0.5")
        b, c, z = mp.mpf("0.3"), mp.mpf("0.7"), mp.mpf("3")
        v = basic_hypergeometric([q**-2, b], [c], q, z, ctx)
        brute = sum(qpochhammer(q**-2, q, n) * qpochhammer(b, q, n) / (qpochhammer(q, q, n) * qpochhammer(c, q, n))
                    * z**n for n in range(3))
        assert v.terms_used == 3
        assert close(v.value, brute, mp.mpf(10) ** -35)


def test_q_integral_examples(ctx):
    assert close(q_integral(lambda x: 1, "(0,a]", Q, ctx).value, 1, mp.mpf(10) ** -34)
    assert close(q_integral(lambda x: x, "(0,a]", Q, ctx).value, mp.mpf(2) / 3, mp.mpf(10) ** -34)
    odd = q_integral(lambda x: x**3 * mp.exp(-x * x), "R", Q, ctx)
    assert abs(odd.value) < mp.mpf(10) ** -35
    with pytest.raises(ParameterError):
        q_integral(lambda x: 1, "[0,1]", Q, ctx)


def test_q_integral_half_line_against_closed_form(ctx):
    # int_0^inf x^{s-1} / (-x; q)_inf-type sums are awkward; use a lattice-exact geometric case
    wide = QContext(Q, trunc=TruncationPolicy(lattice_window=(-20, 200)))
    v = q_integral(lambda x: x * mp.exp(-x), "(0,inf)", Q, wide).value
    with working(wide):
        q = mp.mpf("0.5")
        brute = (1 - q) * mp.fsum(q ** (2 * k) * mp.exp(-(q**k)) for k in range(-20, 200))
    assert close(v, brute, mp.mpf(10) ** -33)


def test_lattice_sum_reports_small_window(ctx):
    with pytest.raises(WindowTooSmall):
        lattice_sum(lambda k: (mp.mpf(1), mp.mpf(1)), Q, ctx, (-3, 3))


def test_hypergeometric_transforms(ctx):
    rep = hypergeometric_transform_check(0.3, 0.4, 0.6, 0.2, Q, ctx)
    assert rep.all_pass
    assert rep.max_rel_err < mp.mpf(10) ** -30
    assert hypergeometric_transform_check(0.6, 0.4, 0.6, 0.2, Q, ctx).max_rel_err < mp.mpf(10) ** -30
