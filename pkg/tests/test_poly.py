import random

import pytest

from negacyclic.cosets import build_cosets
from negacyclic.ff import make_field, root_of_unity
from negacyclic.poly import NEG_INF, Poly, PolyError, minimal_polynomial

GF3 = make_field(3, 1)


def P(*scalars):
    return Poly.from_scalars(GF3, scalars)


def euclid_gcd(a, b):
    """Independent Euclidean oracle."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def test_gcd_known_value():
    # (x^2+1)(x^2+2) = x^4+2 over GF(3), so gcd(x^2+1, x^4+2) = x^2+1
    assert P(1, 0, 1) * P(2, 0, 1) == P(2, 0, 0, 0, 1)
    g = P(1, 0, 1).gcd(P(2, 0, 0, 0, 1))
    assert g == P(1, 0, 1)


def test_gcd_matches_euclid_oracle():
    rng = random.Random(3)
    for _ in range(200):
        a = Poly.from_scalars(GF3, [rng.randrange(3) for _ in range(rng.randrange(1, 8))])
        b = Poly.from_scalars(GF3, [rng.randrange(3) for _ in range(rng.randrange(1, 8))])
        if b.is_zero():
            continue
        assert a.gcd(b) == euclid_gcd(a, b)


def test_divmod_reconstruction():
    rng = random.Random(5)
    f9 = make_field(3, 2)
    for field in (GF3, f9):
        for _ in range(200):
            a = Poly.from_ints(field, [rng.randrange(field.order)
                                       for _ in range(rng.randrange(0, 9))])
            b = Poly.from_ints(field, [rng.randrange(field.order)
                                       for _ in range(rng.randrange(1, 6))])
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero() or r.degree < b.degree


def test_division_by_zero():
    with pytest.raises(PolyError):
        divmod(P(1, 1), Poly.zero(GF3))


def test_zero_degree_sentinel():
    assert Poly.zero(GF3).degree == NEG_INF
    assert Poly.zero(GF3).degree < 0
    assert P(5).degree == 0  # 5 = 2 mod 3


def test_reciprocal_known_values():
    assert P(1, 2).reciprocal() == P(2, 1)          # 1+2x -> 2+x
    assert P(1, 0, 1).reciprocal() == P(1, 0, 1)    # palindrome
    with pytest.raises(PolyError):
        P(0, 1).reciprocal()


def test_reciprocal_involution_on_monic():
    rng = random.Random(9)
    for _ in range(100):
        coeffs = [rng.randrange(3) for _ in range(rng.randrange(1, 7))] + [1]
        if coeffs[0] == 0:
            coeffs[0] = 1
        f = Poly.from_scalars(GF3, coeffs)
        assert f.reciprocal().reciprocal() == f
        assert f.reciprocal().degree == f.degree


def test_reciprocal_inverts_roots():
    f81 = make_field(3, 4)
    beta = root_of_unity(f81, 20)
    m = minimal_polynomial(beta, build_cosets(3, 20).coset_of(1), GF3)
    recip = m.reciprocal()
    assert recip(beta.inverse()).is_zero()


def test_minimal_polynomial_of_beta_rho():
    f81 = make_field(3, 4, [1, 2, 0, 1, 1])
    beta = root_of_unity(f81, 20)
    table = build_cosets(3, 20)
    m5 = minimal_polynomial(beta, table.coset_of(5), GF3)
    assert m5 == P(1, 0, 1)  # x^2 + 1


def test_minimal_polynomial_of_one():
    m = minimal_polynomial(GF3.one(), [0], GF3)
    assert m == P(2, 1)  # x - 1


def test_odd_leader_product_is_xn_plus_1():
    f81 = make_field(3, 4)
    beta = root_of_unity(f81, 20)
    table = build_cosets(3, 20)
    prod = Poly.one(GF3)
    for l in table.odd_leaders:
        prod = prod * minimal_polynomial(beta, table.cosets[l], GF3)
    assert prod == Poly.x_pow_minus(GF3, 10, -GF3.one())


def test_minimal_polynomials_divide_and_are_irreducible():
    f = make_field(3, 4)
    beta = root_of_unity(f, 20)
    table = build_cosets(3, 20)
    x20_1 = Poly.x_pow_minus(GF3, 20, GF3.one())
    for l in table.leaders:
        m = minimal_polynomial(beta, table.cosets[l], GF3)
        assert (x20_1 % m).is_zero()
        # irreducible: gcd(m, x^(3^j) - x) trivial below its degree
        for j in range(1, int(m.degree)):
            frob = Poly.x(GF3)
            for _ in range(j):
                q, r = divmod(frob * frob * frob, m)
                frob = r
            probe = frob - Poly.x(GF3)
            g = m.gcd(probe) if not probe.is_zero() else m
            assert g.degree in (0, m.degree) and g == Poly.one(GF3)


def test_lcm_of_disjoint_cosets_is_product():
    # the two check cosets at m=3, n=13: leaders 1 and 17 mod 26
    f27 = make_field(3, 3)
    beta = root_of_unity(f27, 26)
    table = build_cosets(3, 26)
    m1 = minimal_polynomial(beta, table.coset_of(1), GF3)
    m2 = minimal_polynomial(beta, table.coset_of(25), GF3)
    assert m1.lcm(m2) == (m1 * m2).monic()


def test_non_closed_coset_rejected():
    f81 = make_field(3, 4)
    beta = root_of_unity(f81, 20)
    with pytest.raises(PolyError, match="not closed"):
        minimal_polynomial(beta, [1, 2], GF3)


def test_text_round_trip():
    f = P(1, 2, 0, 1, 1)
    assert f.to_text() == "1,2,0,1,1"
    assert Poly.from_text(GF3, "1,2,0,1,1") == f
    assert Poly.from_text(GF3, "") == Poly.zero(GF3)


def test_substitute_neg_x():
    f = P(1, 1, 1)  # 1 + x + x^2
    assert f.substitute_neg_x() == P(1, 2, 1)


def test_eval_in_extension_via_embedding():
    f81 = make_field(3, 4)
    beta = root_of_unity(f81, 20)
    m = minimal_polynomial(beta, build_cosets(3, 20).coset_of(1), GF3)
    assert m(beta).is_zero()
    assert not m(f81.one()).is_zero()
