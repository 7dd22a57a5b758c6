from fractions import Fraction

import mpmath as mp
import pytest

from qplanewave.context import to_mp, working
from qplanewave.errors import BranchCut, ParameterError, ZeroArgument
from qplanewave.lattice import LatticePoint
from qplanewave.qbessel import (BesselOrder, KernelParams, bessel_kernel_lattice, bessel_lattice, dunkl_kernel,
                                dunkl_kernel_bessel, dunkl_kernel_lattice, jackson3_bessel,
                                jackson3_bessel_explicit, q_trig, rubin_exp)
from qplanewave.qtransform import WeberParams, weber_schafheitlin_oracle

from conftest import Q, close

QQ = Q * Q


def test_orders_are_validated():
    with pytest.raises(ParameterError):
        BesselOrder(-1)
    with pytest.raises(ParameterError):
        KernelParams(Fraction(-3, 2))
    with pytest.raises(ParameterError):
        jackson3_bessel(-2, 0.5, QQ)


def test_bessel_at_zero(ctx):
    assert jackson3_bessel(1, 0, Q, ctx).value == 0
    assert jackson3_bessel(0, 0, Q, ctx).value == 1
    with pytest.raises(ZeroArgument):
        jackson3_bessel(Fraction(-1, 2), 0, Q, ctx)


def test_branch_cut_for_fractional_order(ctx):
    with pytest.raises(BranchCut):
        jackson3_bessel(Fraction(1, 2), -0.25, Q, ctx)
    # integer order is fine on the negative axis and has parity (-1)^nu
    a = jackson3_bessel(1, -0.25, Q, ctx).value
    b = jackson3_bessel(1, 0.25, Q, ctx).value
    assert close(a, -b, mp.mpf(10) ** -35)


@pytest.mark.parametrize("nu", [Fraction(-1, 2), Fraction(1, 2), Fraction(3, 10), Fraction(17, 10)])
@pytest.mark.parametrize("q", [Fraction(3, 10), Fraction(1, 2), Fraction(4, 5)])
def test_phi11_form_matches_explicit_series(nu, q, ctx):
    for k in (-5, -2, 0, 3, 8):
        # large x cancels heavily, so the inputs are rounded far below the target
        with mp.workdps(200):
            x, qq = to_mp(q) ** k, to_mp(q) ** 2
        a = bessel_lattice(nu, k, q, ctx)
        b = jackson3_bessel_explicit(nu, x, qq, ctx)
        assert close(a, b, mp.mpf(10) ** -32), (nu, q, k)


def test_explicit_spot_value(ctx):
    x = mp.mpf(1) / 8
    a = jackson3_bessel(Fraction(1, 2), x, Q, ctx).value
    b = jackson3_bessel_explicit(Fraction(1, 2), x, Q, ctx)
    assert close(a, b, mp.mpf(10) ** -35)


def test_lattice_point_argument_uses_base(ctx):
    a = jackson3_bessel(Fraction(3, 10), LatticePoint(1, 3), QQ, ctx).value
    b = jackson3_bessel(Fraction(3, 10), mp.mpf(1) / 64, QQ, ctx).value
    assert close(a, b, mp.mpf(10) ** -35)


def test_kernel_lattice_is_quotient(ctx):
    with working(ctx):
        for e in (-3, 0, 4):
            k = bessel_kernel_lattice(Fraction(3, 10), e, Q, ctx)
            x = to_mp(Q) ** e
            ref = jackson3_bessel(Fraction(3, 10), x, QQ, ctx).value / mp.power(x, mp.mpf(3) / 10)
            assert close(k, ref, mp.mpf(10) ** -33)


def test_squared_bessel_norm_spot_value(ctx):
    w = WeberParams(1, Fraction(13, 10), Fraction(13, 10), 0, 0)
    v = weber_schafheitlin_oracle(w, Q, ctx).value
    q = to_mp(Q)
    assert close(v, (1 - q) / (1 - q ** (mp.mpf(13) / 5)), mp.mpf(10) ** -32)


def _trig_from_bessel(z, p, ctx):
    # cos, sin(z; p^2) = (p^2;p^2)/(p;p^2) z^{1/2} J_{-+1/2}(z; p^2)
    pm = to_mp(p)
    qq = pm * pm
    c = mp.qp(qq, qq) / mp.qp(pm, qq)
    half = Fraction(1, 2)
    return (c * mp.sqrt(z) * jackson3_bessel_explicit(-half, z, qq, ctx),
            c * mp.sqrt(z) * jackson3_bessel_explicit(half, z, qq, ctx))


@pytest.mark.parametrize("z", ["0.3", "1.7", "6.5"])
def test_q_trig_against_half_order_bessel(z, ctx):
    z = mp.mpf(z)
    c, s = q_trig(z, Q, ctx)
    rc, rs = _trig_from_bessel(z, Q, ctx)
    assert close(c.value, rc, mp.mpf(10) ** -30)
    assert close(s.value, rs, mp.mpf(10) ** -30)


def test_q_trig_at_base_q4(ctx):
    # sin(q^2; q^4) at q = 0.7
    p = Fraction(49, 100)
    z = to_mp(p)
    c, s = q_trig(z, p, ctx)
    rc, rs = _trig_from_bessel(z, p, ctx)
    assert close(c.value, rc, mp.mpf(10) ** -33)
    assert close(s.value, rs, mp.mpf(10) ** -33)


def test_q_trig_simple_values(ctx):
    c, s = q_trig(0, Q, ctx)
    assert c.value == 1 and s.value == 0
    z = mp.mpf(10) ** -8
    _, s = q_trig(z, Q, ctx)
    assert close(s.value / z, 1 / (1 - to_mp(Q)), mp.mpf(10) ** -15)


def test_rubin_exp_values(ctx):
    assert rubin_exp(0, Q, ctx).value == 1
    x = mp.mpf(1) / 8
    e = rubin_exp(1j * x, Q, ctx).value
    c, s = q_trig(x, Q, ctx)
    assert close(e.real, c.value, mp.mpf(10) ** -35)
    assert close(e.imag, s.value, mp.mpf(10) ** -35)


def test_dunkl_kernel_values(ctx):
    a = Fraction(3, 10)
    assert dunkl_kernel(a, 0, Q, ctx).value == 1
    x = mp.mpf(1) / 4
    e1 = dunkl_kernel(a, x, Q, ctx).value
    e2 = dunkl_kernel(a, -x, Q, ctx).value
    assert close(e2, mp.conj(e1), mp.mpf(10) ** -35)
    assert close(e1, dunkl_kernel_bessel(a, x, Q, ctx), mp.mpf(10) ** -33)
    assert close(dunkl_kernel(a, LatticePoint(-1, 2), Q, ctx).value, e2, mp.mpf(10) ** -35)


def test_dunkl_kernel_reduces_to_rubin_exp(ctx):
    for k in (-2, 0, 2, 5):
        e = dunkl_kernel_lattice(Fraction(-1, 2), 1, k, Q, ctx).value
        r = rubin_exp(1j * to_mp(Q) ** k, Q, ctx).value
        assert close(e, r, mp.mpf(10) ** -33)
