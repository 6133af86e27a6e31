import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from markoff_forge.ff import field
from markoff_forge.poly import (Poly, discriminant, gcd, interpolate, invmod, resultant, roots,
                                sylvester_resultant, xgcd)

P = 10007
F = field(P)
coeffs = st.lists(st.integers(0, P - 1), min_size=0, max_size=9)


@given(coeffs, coeffs)
def test_division_identity(a, b):
    f, g = Poly(a, F), Poly(b, F)
    if g.is_zero():
        with pytest.raises(ZeroDivisionError):
            f.divmod(g)
        return
    q, r = f.divmod(g)
    assert q * g + r == f and r.degree < g.degree


@given(coeffs, coeffs)
def test_resultant_matches_sylvester_determinant(a, b):
    f, g = Poly(a, F), Poly(b, F)
    if f.is_zero() and g.is_zero():
        return
    if f.degree < 1 and g.degree < 1:
        return
    assert resultant(f, g) == sylvester_resultant(f, g)


@given(st.lists(st.integers(0, P - 1), min_size=1, max_size=5), st.lists(st.integers(0, P - 1), min_size=1, max_size=5))
def test_resultant_of_split_polys_is_product_of_differences(ra, rb):
    f, g = Poly.from_roots(ra, F), Poly.from_roots(rb, F)
    want = 1
    for a in ra:
        for b in rb:
            want = want * (a - b) % P
    assert resultant(f, g) == want


@given(coeffs, coeffs)
def test_xgcd_bezout(a, b):
    f, g = Poly(a, F), Poly(b, F)
    d, s, t = xgcd(f, g)
    assert s * f + t * g == d
    if not d.is_zero():
        assert (f % d).is_zero() and (g % d).is_zero()
        assert d == gcd(f, g)


def test_invmod():
    m = Poly((1, 0, 1), F)
    f = Poly((3, 5), F)
    assert (invmod(f, m) * f % m) == Poly.const(1, F)
    with pytest.raises(ZeroDivisionError):
        invmod(Poly((1, 1), F), Poly.from_roots([P - 1, 2], F))


@pytest.mark.parametrize("p", [13, 10007, 1000003, (1 << 61) - 1])
def test_roots_of_products_with_multiplicity(p):
    G = field(p)
    rng = random.Random(p)
    rts = [rng.randrange(p) for _ in range(5)] + [7 % p]
    # an irreducible quadratic factor contributes no roots
    nonres = next(a for a in range(2, 100) if G.legendre(a) == -1)
    f = Poly.from_roots(rts, G) * Poly((-nonres, 0, 1), G)
    assert roots(f) == sorted(Counter(rts).items())


def test_roots_brute_small_prime():
    G = field(31)
    rng = random.Random(0)
    for _ in range(50):
        f = Poly([rng.randrange(31) for _ in range(6)], G)
        if f.degree < 1:
            continue
        brute = [x for x in range(31) if f(x) == 0]
        assert [r for r, _ in roots(f)] == brute


def test_discriminant_of_quadratic_and_interpolation():
    a, b, c = 3, 7, 11
    assert discriminant(Poly((c, b, a), F)) == (b * b - 4 * a * c) % P
    xs, ys = [1, 2, 3, 4], [5, 1, 9, 2]
    f = interpolate(xs, ys, F)
    assert [f(x) for x in xs] == ys and f.degree <= 3


def test_compose_powmod_derivative():
    f = Poly((1, 2, 3), F)
    g = Poly((0, 1, 1), F)
    x = 123
    assert f.compose(g)(x) == f(g(x))
    m = Poly((5, 0, 0, 1), F)
    assert f.powmod(10, m) == (f ** 10) % m
    assert f.derivative() == Poly((2, 6), F)
