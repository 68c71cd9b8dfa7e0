import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmjac.errors import DivisionByZero, NotSquarefree, Unsupported
from rmjac.ffield import (
    ExtField,
    PolyRing,
    PrimeField,
    QQ,
    bareiss_det,
    discriminant,
    distinct_degree_pattern,
    factor_squarefree,
    is_prime,
    poly_gcd,
    poly_mod,
    poly_pow_mod,
    poly_sqrt_monic,
    poly_to_str,
    resultant,
)

PRIMES = [3, 5, 7, 11]


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_prime_field_rejects_bad_p():
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(Unsupported):
        PrimeField(2)


@given(st.sampled_from(PRIMES), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_prime_field_axioms(p, a, b, c):
    K = PrimeField(p)
    a, b, c = K.from_int(a), K.from_int(b), K.from_int(c)
    assert K.add(a, K.add(b, c)) == K.add(K.add(a, b), c)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.sub(a, b) == K.add(a, K.neg(b))
    if not K.is_zero(a):
        assert K.mul(a, K.inv(a)) == K.one


def test_prime_field_inv_zero():
    with pytest.raises(DivisionByZero):
        PrimeField(5).inv(0)


def coeff_lists(p, max_deg=6):
    return st.lists(st.integers(0, p - 1), min_size=0, max_size=max_deg + 1)


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=60)
def test_poly_ring_axioms(p, data):
    K = PrimeField(p)
    R = PolyRing(K)
    f = R.normalize(data.draw(coeff_lists(p)))
    g = R.normalize(data.draw(coeff_lists(p)))
    h = R.normalize(data.draw(coeff_lists(p)))
    assert R.eq(R.mul(f, R.mul(g, h)), R.mul(R.mul(f, g), h))
    assert R.eq(R.mul(f, R.add(g, h)), R.add(R.mul(f, g), R.mul(f, h)))
    assert R.eq(R.add(f, g), R.add(g, f))
    assert R.is_zero(R.sub(f, f))


def test_poly_pow_identity_and_frobenius_examples():
    F3 = PrimeField(3)
    R = PolyRing(F3)
    f = [1, 1, 0, 0, 0, 0, 1]  # x^6 + x + 1
    assert R.pow(f, 1) == f
    assert R.pow([1, 1], 3) == [1, 0, 0, 1]  # (x+1)^3 = x^3 + 1
    # reduction mod 3 of the (b,c,d)=(0,1,2) family member, exponent (p-1)/2 = 1
    g = [1, 2, 1, 1, 2, 2, 1]
    h = R.pow(g, 1)
    assert h == g and h[2] == 1


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=100)
def test_poly_pow_p_is_frobenius(p, data):
    # f(x)^p = f(x^p) over F_p: same coefficients spread at stride p
    K = PrimeField(p)
    R = PolyRing(K)
    f = R.normalize(data.draw(coeff_lists(p, 4)))
    lhs = R.pow(f, p)
    rhs = [0] * (p * max(len(f) - 1, 0) + 1) if f else []
    for i, c in enumerate(f):
        rhs[p * i] = c
    assert R.eq(lhs, R.normalize(rhs))


def test_distinct_degree_pattern_oracles():
    assert distinct_degree_pattern(PolyRing(PrimeField(3)), [1, 0, 1]) == (2,)
    assert distinct_degree_pattern(PolyRing(PrimeField(5)), [1, 0, 1]) == (1, 1)


def test_distinct_degree_pattern_not_squarefree():
    R = PolyRing(PrimeField(5))
    with pytest.raises(NotSquarefree):
        distinct_degree_pattern(R, R.mul([1, 1], [1, 1]))


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=80)
def test_pattern_sums_to_degree_and_matches_factorization(p, data):
    K = PrimeField(p)
    R = PolyRing(K)
    f = R.normalize(data.draw(coeff_lists(p)))
    if R.degree(f) < 1:
        return
    try:
        pat = distinct_degree_pattern(R, f)
    except NotSquarefree:
        return
    assert sum(pat) == R.degree(f)
    # cross-check against the full (seeded) factorization
    factors = factor_squarefree(R, f, random.Random(0x5EED))
    assert tuple(sorted(R.degree(u) for u in factors)) == pat
    prod = R.one
    for u in factors:
        prod = R.mul(prod, u)
    assert R.eq(prod, R.monic(f))


def test_gcd_monic_and_common_factor():
    R = PolyRing(PrimeField(7))
    f = R.mul([1, 1], [3, 1, 1])
    g = R.mul([1, 1], [5, 1])
    d = poly_gcd(R, f, g)
    assert d == [1, 1]


def test_discriminant_oracles():
    assert discriminant(PolyRing(PrimeField(5)), [4, 0, 1]) == 4
    assert discriminant(PolyRing(QQ), [Fraction(-1), 0, Fraction(1)]) == 4
    # char 3, f = x^6 + a3 x^3 + a0 has f' = 0, hence disc 0
    R3 = PolyRing(PrimeField(3))
    assert R3.dom.is_zero(discriminant(R3, [1, 0, 0, 1, 0, 0, 1]))


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=60)
def test_disc_zero_iff_not_squarefree(p, data):
    K = PrimeField(p)
    R = PolyRing(K)
    f = R.normalize(data.draw(coeff_lists(p)))
    if R.degree(f) < 1:
        return
    disc = discriminant(R, f)
    df = R.deriv(f)
    repeated = R.is_zero(df) or R.degree(poly_gcd(R, f, df)) > 0
    assert K.is_zero(disc) == repeated


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=40)
def test_bareiss_matches_expansion(p, data):
    K = PrimeField(p)
    n = data.draw(st.integers(1, 4))
    M = [[K.from_int(data.draw(st.integers(0, p - 1))) for _ in range(n)] for _ in range(n)]

    def det_minor(rows):
        if len(rows) == 1:
            return rows[0][0]
        acc = K.zero
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = K.mul(rows[0][j], det_minor(minor))
            acc = K.add(acc, term) if j % 2 == 0 else K.sub(acc, term)
        return acc

    assert bareiss_det(K, M) == det_minor(M)


def test_resultant_over_polynomial_coefficients():
    # disc of x^2 - T over F_5[T] is 4T (res(f, f') = -4T, n(n-1)/2 = 1)
    F5 = PrimeField(5)
    RT = PolyRing(F5, "T")
    RX = PolyRing(RT, "x")
    f = [RT.neg([0, 1]), RT.zero, RT.one]
    assert poly_to_str(RT, discriminant(RX, f)) == "4T"
    # and the resultant of coprime linears (x - T, x - T - 1) is the constant difference
    g = [[0, 4], [1]]  # x - T over F5 written low-to-high: (-T) + x
    h = [[4, 4], [1]]  # x - T - 1
    r = resultant(RX, g, h)
    assert RT.eq(r, [4])  # (T) - (T+1) = -1


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=60)
def test_exact_div_roundtrip(p, data):
    K = PrimeField(p)
    R = PolyRing(K)
    f = R.normalize(data.draw(coeff_lists(p, 4)))
    g = R.normalize(data.draw(coeff_lists(p, 3)))
    if R.is_zero(g):
        return
    assert R.eq(R.exact_div(R.mul(f, g), g), f)


def test_exact_div_inexact_raises():
    R = PolyRing(PrimeField(5))
    with pytest.raises(DivisionByZero):
        R.exact_div([1, 0, 1], [1, 1])


@given(st.sampled_from(PRIMES), st.data())
@settings(max_examples=60)
def test_poly_sqrt_monic_roundtrip(p, data):
    K = PrimeField(p)
    R = PolyRing(K, "T")
    r = R.normalize(data.draw(coeff_lists(p, 3)) + [1])  # force monic
    assert poly_sqrt_monic(R, R.mul(r, r)) == r


def test_poly_sqrt_monic_rejects():
    R = PolyRing(PrimeField(5), "T")
    assert poly_sqrt_monic(R, [0, 1]) is None  # odd degree
    assert poly_sqrt_monic(R, [1, 1, 1]) is None  # T^2+T+1 is not a square
    assert poly_sqrt_monic(R, [0, 0, 2]) is None  # not monic


class TestExtField:
    def test_f9_structure(self):
        F9 = ExtField(3, 2)
        assert F9.modulus == (1, 0, 1)  # g^2 + 1, lexicographically first
        s = F9.gen()
        assert F9.mul(s, s) == F9.from_int(-1)
        assert sorted(F9.elements()) == sorted(
            set(F9.elements())
        ) and len(list(F9.elements())) == 9

    def test_simultaneous_root_pair_in_f9(self):
        # z^4 + 1 = 0 and z^3 + z - 1 = 0 have exactly the two roots -1 +/- s
        F9 = ExtField(3, 2)
        s = F9.gen()
        hits = set()
        for z in F9.elements():
            quartic = F9.add(F9.pow(z, 4), F9.one)
            cubic = F9.sub(F9.add(F9.pow(z, 3), z), F9.one)
            if F9.is_zero(quartic) and F9.is_zero(cubic):
                hits.add(z)
        minus_one = F9.from_int(-1)
        assert hits == {F9.add(minus_one, s), F9.sub(minus_one, s)}

    @given(st.sampled_from([(3, 2), (5, 2), (3, 3), (7, 2)]), st.data())
    @settings(max_examples=40)
    def test_inverse_and_frobenius(self, pk, data):
        p, k = pk
        F = ExtField(p, k)
        a = tuple(data.draw(st.integers(0, p - 1)) for _ in range(k))
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one
        b = tuple(data.draw(st.integers(0, p - 1)) for _ in range(k))
        # Frobenius is additive and multiplicative
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))

    def test_frobenius_fixes_exactly_base(self):
        F = ExtField(3, 2)
        fixed = [a for a in F.elements() if F.frobenius(a) == a]
        assert sorted(fixed) == sorted(F.from_int(n) for n in range(3))

    def test_is_square_matches_enumeration(self):
        F = ExtField(3, 2)
        squares = {F.mul(a, a) for a in F.elements()}
        for a in F.elements():
            assert F.is_square(a) == (a in squares)

    def test_ddf_over_extension_field(self):
        F9 = ExtField(3, 2)
        R = PolyRing(F9)
        # x^2 + 1 splits over F9
        f = [F9.one, F9.zero, F9.one]
        assert distinct_degree_pattern(R, f) == (1, 1)


def test_poly_pow_mod_agrees_with_pow():
    R = PolyRing(PrimeField(7))
    f = [3, 1, 2]
    m = [1, 0, 0, 1, 1]
    assert poly_pow_mod(R, f, 12, m) == poly_mod(R, R.pow(f, 12), m)


def test_json_roundtrip():
    F5 = PrimeField(5)
    RT = PolyRing(F5, "T")
    RX = PolyRing(RT, "x")
    f = [[1], [3], [], [1, 1], [], [2], [1]]
    assert RX.from_json(RX.to_json(f)) == f
    RQ = PolyRing(QQ)
    g = [Fraction(1), Fraction(-4), Fraction(3, 2)]
    assert RQ.from_json(RQ.to_json(g)) == g


def test_poly_to_str_nested():
    F3 = PrimeField(3)
    RT = PolyRing(F3, "T")
    RX = PolyRing(RT, "x")
    f = [[2], [2], [1], [0, 2], [2], [2], [1]]
    assert poly_to_str(RX, f) == "x^6 + 2x^5 + 2x^4 + 2Tx^3 + x^2 + 2x + 2"
