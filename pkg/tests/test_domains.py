"""Exact arithmetic kernel: extended gcd, lcm, stripping, localization."""

import random
from fractions import Fraction

import pytest

from genfree import (GF, QQ, ZZ, DomainError, ext_gcd, lcm, localize,
                     localized_elem, loc_parts, poly_domain, strip_witness)

GF2T = poly_domain(GF(2), "t")
QQX = poly_domain(QQ, "x")


def test_ext_gcd_integers():
    g, u, v = ext_gcd(ZZ.elem(2), ZZ.elem(3))
    assert (g, u, v) == (ZZ.elem(1), ZZ.elem(-1), ZZ.elem(1))
    assert u * 2 + v * 3 == g


def test_ext_gcd_poly_divisible():
    a = QQX.elem([1, 1])             # x + 1
    b = QQX.elem([-1, 0, 1])         # x^2 - 1
    g, u, v = ext_gcd(a, b)
    assert g == a
    assert (u, v) == (QQX.one, QQX.zero)


def test_ext_gcd_with_zero():
    g, u, v = ext_gcd(ZZ.elem(0), ZZ.elem(5))
    assert (g, u, v) == (ZZ.elem(5), ZZ.elem(0), ZZ.elem(1))


def test_ext_gcd_both_zero_rejected():
    with pytest.raises(DomainError):
        ext_gcd(ZZ.zero, ZZ.zero)


def test_ext_gcd_domain_mismatch():
    with pytest.raises(DomainError):
        ext_gcd(ZZ.elem(2), GF(5).elem(2))


def test_lcm_basics():
    assert lcm(ZZ.elem(4), ZZ.elem(6)) == ZZ.elem(12)
    t = GF2T.gen
    assert lcm(t, t + GF2T.one) == t * t + t
    assert lcm(ZZ.elem(-7), ZZ.one) == ZZ.elem(7)


def test_lcm_zero_rejected():
    with pytest.raises(DomainError):
        lcm(ZZ.zero, ZZ.elem(3))


def test_strip_witness():
    core, k = strip_witness(ZZ.elem(12), ZZ.elem(3))
    assert core == ZZ.elem(4) and k == 1
    core, k = strip_witness(ZZ.elem(8), ZZ.elem(6))
    assert core == ZZ.one            # 8 = 2^3 divides a power of 6
    t = GF2T.gen
    core, k = strip_witness(t * t + t, t)
    assert core == t + GF2T.one
    assert strip_witness(ZZ.zero, ZZ.elem(6)) == (ZZ.zero, 0)


def test_ext_gcd_bezout_random():
    rng = random.Random(1)
    doms = [ZZ, GF(7), GF2T, QQX]
    from support import random_coeff
    for _ in range(400):
        dom = rng.choice(doms)
        x = random_coeff(dom, rng, zero_ok=True)
        y = random_coeff(dom, rng)
        g, u, v = ext_gcd(x, y)
        assert u * x + v * y == g
        if x:
            assert g.divides(x)
        assert g.divides(y)
        if x and y:
            m = lcm(x, y)
            prod = (x * y).unit_normalized()
            assert (g * m).unit_normalized() == prod


def test_prime_field_normalization():
    F = GF(5)
    assert F.elem(7) == F.elem(2)
    assert F.elem(3) * F.elem(2) == F.one
    g, u, v = ext_gcd(F.elem(3), F.elem(4))
    assert g == F.one and u * 3 + v * 4 == F.one


def test_localize_unit_returns_base():
    assert localize(ZZ, ZZ.one) is ZZ
    assert localize(QQ, QQ.elem(Fraction(2, 3))) is QQ


def test_localized_canonical_form():
    L = localize(ZZ, ZZ.elem(6))
    x = localized_elem(L, 12, 1)     # 12/6 -> 2
    num, power = loc_parts(x)
    assert (num.value, power) == (2, 0)
    y = localized_elem(L, 2, 1)      # 2/6 cannot drop the denominator
    num, power = loc_parts(y)
    assert (num.value, power) == (2, 1)


def test_localized_units_and_division():
    L = localize(ZZ, ZZ.elem(6))
    four = L.elem(4)                 # 4 = 2^2 divides 6^2, a unit
    assert four.is_unit
    inv = L.one.exact_div(four)
    assert four * inv == L.one
    five = L.elem(5)
    assert not five.is_unit
    assert L.elem(10).exact_div(five) == L.elem(2)
    assert five.exact_div(L.elem(7)) is None


def test_localized_ext_gcd():
    L = localize(ZZ, ZZ.elem(6))
    a = localized_elem(L, 10, 1)
    b = localized_elem(L, 15, 2)
    g, u, v = ext_gcd(a, b)
    assert u * a + v * b == g
    assert g == L.elem(5)            # cores 5 and 5


def test_localized_arithmetic_vs_fractions():
    # brute-force fraction oracle: num / a**k as a Fraction
    rng = random.Random(2)
    L = localize(ZZ, ZZ.elem(6))

    def as_fraction(e):
        num, power = loc_parts(e)
        return Fraction(num.value, 6 ** power)

    for _ in range(1000):
        x = localized_elem(L, rng.randint(-30, 30), rng.randint(0, 3))
        y = localized_elem(L, rng.randint(-30, 30), rng.randint(0, 3))
        assert as_fraction(x + y) == as_fraction(x) + as_fraction(y)
        assert as_fraction(x * y) == as_fraction(x) * as_fraction(y)
        assert as_fraction(-x) == -as_fraction(x)
        if y:
            q = x.exact_div(y)
            ratio = as_fraction(x) / as_fraction(y)
            # divisibility in ZZ[1/6]: denominator supported on 2 and 3
            d = ratio.denominator
            for p in (2, 3):
                while d % p == 0:
                    d //= p
            if q is not None:
                assert as_fraction(q) == ratio
                assert d == 1
            else:
                assert d != 1


def test_localized_arithmetic_vs_fractions_polydomain():
    rng = random.Random(3)
    t = GF2T.gen
    a = t * t + t                    # t(t+1)
    L = localize(GF2T, a)
    from support import random_coeff

    for _ in range(1000):
        nx = random_coeff(GF2T, rng, zero_ok=True)
        ny = random_coeff(GF2T, rng)
        x = localized_elem(L, nx, rng.randint(0, 2))
        y = localized_elem(L, ny, rng.randint(0, 2))
        # cross-multiplied equality of sums against direct arithmetic
        s = x + y
        ns, ks = loc_parts(s)
        nxv, kx = loc_parts(x)
        nyv, ky = loc_parts(y)
        lhs = ns * (a ** (kx + ky))
        rhs = (nxv * (a ** (ks + ky)) + nyv * (a ** (ks + kx)))
        assert lhs == rhs
        p = x * y
        np_, kp = loc_parts(p)
        assert np_ * (a ** (kx + ky)) == nxv * nyv * (a ** kp)


def test_poly_domain_formatting_parses_back():
    t = GF2T.gen
    e = t * t + GF2T.one
    assert GF2T.pformat(e.value) == "{t^2 + 1}"
    q = QQX.elem([Fraction(1, 2), 0, 3])
    assert QQX.pformat(q.value) == "{3*x^2 + 1/2}"


def test_contains_field_flags():
    assert not ZZ.contains_field
    assert QQ.contains_field
    assert GF(7).contains_field
    assert GF2T.contains_field
    assert QQX.contains_field
    assert localize(ZZ, ZZ.elem(6)).contains_field is False
