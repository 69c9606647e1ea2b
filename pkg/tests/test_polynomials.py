"""Exact polynomial arithmetic: ring laws, division, GCD, squarefree
decomposition, and Sturm root counting."""

import random
from fractions import Fraction

import pytest

from conftest import random_poly
from telescopic import Poly, poly_gcd, poly_lcm, squarefree_decomposition, sturm_root_count


def test_construction_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]) == Poly.zero()
    assert Poly.zero().degree() == -1
    assert Poly([0, 0, 5]).degree() == 2


def test_coefficients_become_fractions():
    p = Poly([1, 2])
    assert all(isinstance(c, Fraction) for c in p.coeffs)
    assert Poly(["1/2"])[0] == Fraction(1, 2)


def test_indexing_beyond_degree_is_zero():
    p = Poly([3, 1])
    assert p[0] == 3 and p[1] == 1 and p[7] == 0


def test_basic_constructors():
    x = Poly.x()
    assert x == Poly([0, 1])
    assert Poly.monomial(2, 3) == Poly([0, 0, 0, 2])
    assert Poly.from_roots([1, 2]) == Poly([2, -3, 1])
    assert Poly.constant(5)(123) == 5


def test_evaluation_horner():
    p = Poly([1, -3, 2])  # 2x^2 - 3x + 1 = (2x-1)(x-1)
    assert p(1) == 0
    assert p(Fraction(1, 2)) == 0
    assert p(0) == 1


def test_ring_laws_randomized():
    rng = random.Random(101)
    for _ in range(300):
        p = random_poly(rng)
        q = random_poly(rng)
        r = random_poly(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + Poly.zero() == p
        assert p * Poly.one() == p
        assert p - p == Poly.zero()


def test_divmod_invariant_randomized():
    rng = random.Random(102)
    for _ in range(300):
        p = random_poly(rng, max_degree=6)
        d = random_poly(rng, max_degree=3, nonzero=True)
        q, r = divmod(p, d)
        assert q * d + r == p
        assert r.degree() < d.degree()


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        divmod(Poly([1, 1]), Poly.zero())


def test_exact_div_on_true_factors():
    p = Poly([1, 2]) * Poly([-3, 0, 1])
    assert p.exact_div(Poly([1, 2])) == Poly([-3, 0, 1])
    with pytest.raises(ValueError):
        (p + Poly.one()).exact_div(Poly([1, 2]))


def test_power_by_squaring():
    p = Poly([1, 1])
    assert p**0 == Poly.one()
    assert p**3 == Poly([1, 3, 3, 1])
    rng = random.Random(103)
    for _ in range(50):
        q = random_poly(rng, max_degree=2)
        assert q**4 == q * q * q * q


def test_derivative_product_rule_randomized():
    rng = random.Random(104)
    for _ in range(300):
        p = random_poly(rng)
        q = random_poly(rng)
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_compose_and_shift():
    p = Poly([0, 0, 1])  # x^2
    assert p.compose(Poly([1, 1])) == Poly([1, 2, 1])
    assert p.shift(Fraction(1)) == Poly([1, 2, 1])  # p(x+1)
    rng = random.Random(105)
    for _ in range(100):
        q = random_poly(rng)
        t = Fraction(rng.randint(-5, 5))
        x0 = Fraction(rng.randint(-5, 5))
        assert q.shift(t)(x0) == q(x0 + t)


def test_content_and_primitive():
    p = Poly([Fraction(2, 3), Fraction(4, 3)])
    assert p.content() == Fraction(2, 3)
    assert p.primitive() == Poly([1, 2])
    assert Poly.zero().content() == 0


def test_gcd_canonical_monic_randomized():
    rng = random.Random(106)
    for _ in range(300):
        g = random_poly(rng, max_degree=2, nonzero=True)
        a = g * random_poly(rng, max_degree=2, nonzero=True)
        b = g * random_poly(rng, max_degree=2, nonzero=True)
        d = poly_gcd(a, b)
        # gcd divides both and is divisible by the planted factor
        assert a % d == Poly.zero()
        assert b % d == Poly.zero()
        assert d % poly_gcd(d, g.monic()) == Poly.zero()
        assert d.leading_coefficient() == 1


def test_gcd_edge_cases():
    p = Poly([2, 4, 2])
    assert poly_gcd(p, Poly.zero()) == p.monic()
    assert poly_gcd(Poly([2]), Poly([0, 3])) == Poly.one()
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(), Poly.zero())


def test_lcm_times_gcd_is_product():
    rng = random.Random(107)
    for _ in range(100):
        a = random_poly(rng, max_degree=3, nonzero=True)
        b = random_poly(rng, max_degree=3, nonzero=True)
        g = poly_gcd(a, b)
        m = poly_lcm(a, b)
        assert m % a == Poly.zero() and m % b == Poly.zero()
        assert (g * m).monic() == (a * b).monic()


def test_squarefree_decomposition_reassembles():
    rng = random.Random(108)
    for _ in range(100):
        base = [random_poly(rng, max_degree=1, nonzero=True) for _ in range(3)]
        p = base[0] * base[1] ** 2 * base[2] ** 3
        if p.degree() < 1:
            continue
        parts = squarefree_decomposition(p)
        rebuilt = Poly.constant(p.leading_coefficient())
        for factor, mult in parts:
            assert factor.leading_coefficient() == 1
            rebuilt = rebuilt * factor**mult
        assert rebuilt == p
        # factors are pairwise coprime and squarefree
        for i, (f, _) in enumerate(parts):
            assert poly_gcd(f, f.derivative()).degree() == 0
            for g, _ in parts[i + 1:]:
                assert poly_gcd(f, g).degree() == 0


def test_sturm_count_known_roots():
    # (x-1/4)(x-1/2)(x-3/4) has three roots in (0, 1]
    p = Poly.from_roots([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    assert sturm_root_count(p, 0, 1) == 3
    assert sturm_root_count(p, Fraction(1, 2), 1) == 1  # (1/2, 1] excludes 1/2
    assert sturm_root_count(p, 0, Fraction(1, 2)) == 2
    assert sturm_root_count(Poly([2, 0, 1]), -10, 10) == 0  # x^2 + 2


def test_sturm_counts_distinct_roots_of_repeated_factor():
    p = Poly.from_roots([Fraction(1, 2)]) ** 3
    assert sturm_root_count(p, 0, 1) == 1


def test_sturm_random_linear_products():
    rng = random.Random(109)
    for _ in range(200):
        roots = sorted(
            Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(3)
        )
        p = Poly.from_roots(roots)
        lo, hi = Fraction(-25), Fraction(25)
        assert sturm_root_count(p, lo, hi) == len(set(roots))
        inside = len({r for r in roots if 0 < r <= 1})
        assert sturm_root_count(p, 0, 1) == inside


def test_to_str_readable():
    assert Poly([1, -2, 3]).to_str() == "3*x^2 - 2*x + 1"
    assert Poly.zero().to_str() == "0"
    assert str(Poly([0, 1])) == "x"
