from fractions import Fraction

import mpmath as mp
import pytest

from qplanewave.context import to_mp
from qplanewave.errors import ParameterError
from qplanewave.lattice import LatticePoint
from qplanewave.qortho import (PolyParams, classical_jacobi_oracle, gegenbauer_gen, gegenbauer_norm,
                               gegenbauer_norm_direct, jacobi_gram, little_q_gegenbauer, little_q_jacobi)

from conftest import ALPHA, BETA, Q, close

P = PolyParams(ALPHA, BETA)


def test_params_validated():
    with pytest.raises(ParameterError):
        PolyParams(-1, 0)
    with pytest.raises(ParameterError):
        PolyParams(Fraction(-9, 10), Fraction(-1, 2)).require_sum()
    with pytest.raises(ParameterError):
        little_q_jacobi(-1, 0.1, P, Q)


def test_little_jacobi_low_degrees(ctx):
    for x in (0, 0.4, 0.9):
        assert little_q_jacobi(0, x, P, Q, False, ctx) == 1
        assert little_q_jacobi(0, x, P, Q, True, ctx) == 1
    assert little_q_jacobi(1, 0, P, Q, False, ctx) == 1
    q, x = to_mp(Q), mp.mpf("0.4")
    a, b = to_mp(ALPHA), to_mp(BETA)
    # (1 - q^-1) q x / (1 - q) = -x
    ref = 1 - (1 - q ** (a + b + 2)) / (1 - q ** (a + 1)) * x
    assert close(little_q_jacobi(1, x, P, Q, False, ctx), ref, mp.mpf(10) ** -35)


def test_little_jacobi_against_explicit_sum(ctx):
    # p_n(x) = sum_k (q^-n, q^{a+b+n+1}; q)_k / (q^{a+1}, q; q)_k (qx)^k
    q, x = to_mp(Q), mp.mpf("0.37")
    a, b = to_mp(ALPHA), to_mp(BETA)
    for n in range(1, 6):
        ref = mp.fsum(mp.qp(q ** -n, q, k) * mp.qp(q ** (a + b + n + 1), q, k)
                      / (mp.qp(q ** (a + 1), q, k) * mp.qp(q, q, k)) * (q * x) ** k for k in range(n + 1))
        assert close(little_q_jacobi(n, x, P, Q, False, ctx), ref, mp.mpf(10) ** -30)


def test_gegenbauer_low_degrees(ctx):
    assert gegenbauer_gen(0, 0.7, P, Q, ctx) == 1
    q, t = to_mp(Q), mp.mpf("0.4")
    a, b = to_mp(ALPHA), to_mp(BETA)
    ref = (1 - q ** (2 * a + 2 * b + 2)) / (1 - q ** (2 * a + 2)) * t
    assert close(gegenbauer_gen(1, t, P, Q, ctx), ref, mp.mpf(10) ** -35)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gegenbauer_parity(n, ctx):
    a = gegenbauer_gen(n, LatticePoint(1, 1), P, Q, ctx)
    b = gegenbauer_gen(n, LatticePoint(-1, 1), P, Q, ctx)
    assert close(b, (-1) ** n * a, mp.mpf(10) ** -35)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_gegenbauer_exact_degree(n, ctx):
    nodes = [mp.mpf(k) / 7 - mp.mpf(1) / 3 for k in range(n + 2)]
    vals = [gegenbauer_gen(n, t, P, Q, ctx) for t in nodes]

    def divided(xs, ys):
        ys = list(ys)
        for level in range(1, len(xs)):
            ys = [(ys[i + 1] - ys[i]) / (xs[i + level] - xs[i]) for i in range(len(ys) - 1)]
        return ys[0]

    lead = divided(nodes[: n + 1], vals[: n + 1])
    assert abs(lead) > mp.mpf(10) ** -5
    assert abs(divided(nodes, vals)) < mp.mpf(10) ** -25 * abs(lead)


def test_little_gegenbauer_is_special_case(ctx):
    b = Fraction(3, 4)
    for n in range(5):
        assert little_q_gegenbauer(n, 0.3, b, Q, ctx) == gegenbauer_gen(
            n, 0.3, PolyParams(Fraction(-1, 2), b - Fraction(1, 2)), Q, ctx)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_norm_closed_form_matches_direct_sum(n, ctx):
    assert close(gegenbauer_norm(n, P, Q, ctx), gegenbauer_norm_direct(n, P, Q, ctx), mp.mpf(10) ** -30)


def test_even_norms_positive(ctx):
    for n in range(0, 13, 2):
        assert gegenbauer_norm(n, P, Q, ctx) > 0


def test_jacobi_gram_spec_example(ctx):
    g = jacobi_gram(P, Q, 8, ctx)
    assert g.offdiag_max < mp.mpf(10) ** -30
    assert g.diag_rel_err_max < mp.mpf(10) ** -30
    for n in range(9):
        for m in range(9):
            assert g.matrix[n][m] == g.matrix[m][n]


def test_jacobi_gram_single_entry(ctx):
    g = jacobi_gram(P, Q, 0, ctx)
    q = to_mp(Q)
    a, b = to_mp(ALPHA), to_mp(BETA)
    qq = q * q
    ref = ((1 - q) / (1 - q ** (2 * a + 2 * b + 2)) * mp.qp(qq, qq) * mp.qp(q ** (2 * a + 2 * b + 2), qq)
           / (mp.qp(q ** (2 * a + 2), qq) * mp.qp(q ** (2 * b + 2), qq)))
    assert g.size == 1
    assert close(g.matrix[0][0], ref, mp.mpf(10) ** -30)


def test_classical_oracle():
    assert classical_jacobi_oracle(0, 0.3, 0.3, 0.7) == 1
    a, b, y = mp.mpf("0.3"), mp.mpf("0.7"), mp.mpf("0.2")
    assert close(classical_jacobi_oracle(1, y, a, b), (a + 1) + (a + b + 2) * (y - 1) / 2, mp.mpf(10) ** -40)
    assert close(classical_jacobi_oracle(3, 1, a, b), mp.rf(a + 1, 3) / 6, mp.mpf(10) ** -40)
    # agrees with mpmath's hypergeometric Jacobi
    assert close(classical_jacobi_oracle(5, y, a, b), mp.jacobi(5, a, b, y), mp.mpf(10) ** -40)


def test_classical_limit():
    q = Fraction(999, 1000)
    for n in range(6):
        for x in ("0.1", "0.3", "0.5", "0.7", "0.9"):
            v = little_q_jacobi(n, mp.mpf(x), P, q, True)
            ref = classical_jacobi_oracle(n, 1 - 2 * mp.mpf(x), 0.3, 0.7)
            assert abs(v - ref) < 0.05, (n, x)
