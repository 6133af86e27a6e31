from hypothesis import given, strategies as st

from markoff_forge.chebyshev import (A_half_closed_form, A_half_int, A_poly, ChebEvaluator, T_closed_form,
                                     T_int, U_closed_form, U_int, U_poly, identity_suite, ip_eval, transfer)
from markoff_forge.ff import field

P = 65537
F = field(P)
ms = st.integers(min_value=1, max_value=30)
xs = st.integers(min_value=0, max_value=P - 1)


def test_identity_suite_passes():
    rep = identity_suite(m_max=12)
    assert rep.ok, rep.failures[:5]
    assert rep.checks > 1000


def test_small_polynomials():
    assert T_int(3) == (0, -3, 0, 4)
    assert U_int(2) == (-1, 0, 4)
    assert A_half_int(2) == (-1, 1, 1)
    for m in range(1, 15):
        assert T_closed_form(m) == T_int(m) and U_closed_form(m) == U_int(m)
    for m in range(1, 15):
        assert A_half_closed_form(m) == A_half_int(m)


@given(ms, ms, xs)
def test_T_composition(m, n, x):
    ev = ChebEvaluator(F)
    assert ev.T(m, ev.T(n, x)) == ev.T(m * n, x)


@given(ms, xs)
def test_evaluator_matches_integer_polynomials(m, x):
    ev = ChebEvaluator(F)
    assert ev.T(m, x) == ip_eval(T_int(m), x) % P
    assert ev.U(m, F.half(x)) == U_poly(m, F)(x)
    assert A_poly(m, F)(x) == ev.A(m, F.half(x))


@given(ms, xs)
def test_transfer_determinants(m, x):
    assert transfer("F", m, x, F).det == 1
    assert transfer("G", m, x, F).det == P - 1
    assert transfer("G'", m, x, F).det == 1
    s = ChebEvaluator(F).U(2 * m, F.half(x))
    assert transfer("G''", m, x, F).det == s * s * (4 - x * x) % P
