import pytest
from hypothesis import assume, given, strategies as st

from markoff_forge.elimination import (CONSTRUCTS, DegenerateParameters, build_elimination_basis,
                                       closed_form, compute_B, degeneracy, divides_pattern, eta,
                                       poly_identity_check, xi)
from markoff_forge.ff import field
from markoff_forge.poly import roots
from markoff_forge.subdivision import direct_pairs, elimination_pairs

PRIMES = [101, 211, 1009, 65537]


@pytest.mark.parametrize("construct", CONSTRUCTS)
def test_closed_forms_by_identity_testing(construct):
    rep = poly_identity_check(4, construct, kappa_samples=6)
    assert rep.ok, rep.mismatches[:3]
    assert rep.samples > 0


def test_divisibility_pattern():
    assert divides_pattern(1, 1) and divides_pattern(1, 4) and divides_pattern(2, 7)
    assert not divides_pattern(1, 2) and not divides_pattern(2, 3)


def test_small_fixtures():
    F = field(19)
    B = compute_B(2, 0, F)
    assert B.degree == 4
    assert [r for r, _ in roots(B)] == [7, 18]
    assert closed_form("B", 2, 0, F) == B
    assert xi(2, 3, F) == 0 and eta(2, 3, F) == 0


def test_degenerate_parameters_raise():
    F = field(13)
    assert degeneracy(1, 4, F) == "kappa = 4"
    with pytest.raises(DegenerateParameters):
        build_elimination_basis(1, 4, F)
    assert degeneracy(6, 0, F) == "2n+1 = 0"


@given(st.integers(1, 4), st.integers(-20, 20), st.sampled_from(PRIMES))
def test_elimination_agrees_with_direct_roots(n, kappa, p):
    F = field(p)
    assume(degeneracy(n, kappa % p, F) is None)
    try:
        via_basis = elimination_pairs(n, kappa % p, F)
    except DegenerateParameters:
        assume(False)
    direct = [pr for pr in direct_pairs(n, kappa % p, F)]
    assert via_basis == direct


@given(st.integers(1, 4), st.integers(-20, 20), st.sampled_from(PRIMES))
def test_B_has_degree_2n_and_C_is_a_section(n, kappa, p):
    F = field(p)
    assume(degeneracy(n, kappa % p, F) is None)
    try:
        basis = build_elimination_basis(n, kappa % p, F)
    except DegenerateParameters:
        assume(False)
    assert basis.B.degree == 2 * n
    assert basis.C.degree < basis.B.degree
