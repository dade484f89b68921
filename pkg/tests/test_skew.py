import random

import pytest

from skewmds.errors import (
    CharacteristicDividesLength,
    DivisionByZero,
    DuplicateRoot,
    NonUnitLeadingCoefficient,
)
from skewmds.galois_ring import make_ring
from skewmds.skew import (
    SkewPoly,
    build_w_poly,
    right_roots_of_unity,
    sigma_norm,
    sigma_norm_table,
    splitting_degree,
)


def _random_poly(ring, rng, max_deg=5):
    d = rng.randrange(max_deg + 1)
    return SkewPoly(ring, [ring.random_element(rng) for _ in range(d + 1)])


def test_twist_rule():
    r = make_ring(2, 2, 4, sigma_exponent=1)
    rng = random.Random(0)
    a, b = r.random_element(rng), r.random_element(rng)
    i, j = 2, 3
    lhs = SkewPoly(r, [r.zero] * i + [a]) * SkewPoly(r, [r.zero] * j + [b])
    rhs = SkewPoly(r, [r.zero] * (i + j) + [a * r.sigma(b, i)])
    assert lhs == rhs


def test_multiplication_associative_not_commutative():
    r = make_ring(3, 1, 2, sigma_exponent=1)
    rng = random.Random(1)
    seen_noncommutative = False
    for _ in range(100):
        f, g, h = (_random_poly(r, rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        if f * g != g * f:
            seen_noncommutative = True
    assert seen_noncommutative


def test_right_division_identity_and_uniqueness():
    rng = random.Random(2)
    r = make_ring(2, 2, 3, sigma_exponent=1)
    for _ in range(200):
        f = _random_poly(r, rng, 6)
        g = _random_poly(r, rng, 3)
        if g.degree < 0 or not g.leading.is_unit():
            continue
        q, rem = f.right_divmod(g)
        assert q * g + rem == f
        assert rem.degree < g.degree


def test_division_errors():
    r = make_ring(2, 2, 2)
    f = SkewPoly(r, [r.one, r.one])
    with pytest.raises(DivisionByZero):
        f.right_divmod(SkewPoly.zero(r))
    g = SkewPoly(r, [r.one, r.from_int(2)])  # nilpotent leading coefficient
    with pytest.raises(NonUnitLeadingCoefficient):
        f.right_divmod(g)


def test_right_eval_equals_remainder():
    rng = random.Random(3)
    r = make_ring(5, 2, 2, sigma_exponent=1)
    for _ in range(200):
        f = _random_poly(r, rng, 6)
        beta = r.random_element(rng)
        lin = SkewPoly(r, [-beta, r.one])
        _, rem = f.right_divmod(lin)
        expect = rem.coeff(0) if rem.degree >= 0 else r.zero
        assert f.right_eval(beta) == expect


def test_sigma_norm_recurrence_and_multiplicativity():
    rng = random.Random(4)
    r = make_ring(2, 2, 4, sigma_exponent=1)
    for _ in range(100):
        a, b = r.random_element(rng), r.random_element(rng)
        norms = sigma_norm_table(a, 5)
        for i in range(5):
            assert norms[i + 1] == r.sigma(norms[i]) * a
            assert sigma_norm(a, i) == norms[i]
        for i in range(5):
            assert sigma_norm(a * b, i) == sigma_norm(a, i) * sigma_norm(b, i)


def test_w_poly_roots():
    r = make_ring(2, 2, 8, modulus=[1, 1, 0, 0, 0, 0, 1, 1, 1], sigma_exponent=0)
    xi = r.zeta
    roots = [r.one, xi, xi**2]
    g = build_w_poly(roots)
    assert g.degree == 3 and g.is_monic()
    for a in roots:
        assert g.is_right_root(a)
    with pytest.raises(DuplicateRoot):
        build_w_poly([xi, xi])


def test_central_polynomials():
    r = make_ring(3, 1, 2, sigma_exponent=1)  # order(sigma) = 2
    assert SkewPoly.x_pow_minus_one(r, 4).is_central()
    assert not SkewPoly.x_pow_minus_one(r, 3).is_central()


def test_splitting_degree():
    r0 = make_ring(3, 1, 2, sigma_exponent=0)
    # untwisted: lcm(m, multiplicative order of p mod n)
    assert splitting_degree(r0, 4) == 2
    r1 = make_ring(3, 1, 2, sigma_exponent=1)
    assert splitting_degree(r1, 4) == 4


def test_right_roots_of_unity_counts():
    r0 = make_ring(3, 1, 2, sigma_exponent=0)
    ext, emb, roots = right_roots_of_unity(r0, 4)
    assert ext is r0 and len(roots) == 4
    xn1 = SkewPoly.x_pow_minus_one(ext, 4)
    assert all(xn1.is_right_root(a) for a in roots)

    r1 = make_ring(3, 1, 2, sigma_exponent=1)
    ext, emb, roots = right_roots_of_unity(r1, 4)
    assert ext.m == 4
    assert len(roots) == 40  # (q0^n - 1)/(q0 - 1) distinct quotients sigma(b)/b
    xn1 = SkewPoly.x_pow_minus_one(ext, 4)
    assert all(xn1.is_right_root(a) for a in roots)


def test_right_roots_require_coprime_length():
    r = make_ring(3, 1, 2, sigma_exponent=1)
    with pytest.raises(CharacteristicDividesLength):
        right_roots_of_unity(r, 6)
