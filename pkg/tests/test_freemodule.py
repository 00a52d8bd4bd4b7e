"""Free module elements: canonical form, arithmetic, leading terms."""

import random

import pytest

from genfree import (GF, ZZ, DomainError, FreeModule, OrderSpec, Term,
                     format_elem, leading_term, poly_domain)
from support import random_coeff, random_elem, random_mono


def lex_module(dom=ZZ, nvars=2, rank=1, names=("x", "y")):
    return FreeModule(dom, nvars, rank, OrderSpec("lex", nvars), names[:nvars])


def test_canonicalization_combines_and_drops():
    m = lex_module()
    w = m.elem([(2, (1, 0), 1), (3, (1, 0), 1), (1, (0, 1), 1),
                (-1, (0, 1), 1)])
    assert [t.mono for t in w.terms] == [(1, 0)]
    assert w.terms[0].coeff == ZZ.elem(5)


def test_leading_term_examples():
    m = lex_module()
    w = m.elem([(2, (1, 0), 1), (1, (0, 1), 1)])    # 2x + y
    assert leading_term(w) == Term(ZZ.elem(2), (1, 0), 1)
    m2 = FreeModule(ZZ, 2, 2, OrderSpec("lex", 2), ("x", "y"))
    w2 = m2.elem([(3, (0, 1), 1), (1, (9, 0), 2)])  # 3y e1 + x^9 e2
    assert leading_term(w2) == Term(ZZ.elem(3), (0, 1), 1)


def test_leading_term_of_zero():
    m = lex_module()
    with pytest.raises(ValueError):
        leading_term(m.zero)


def test_leading_term_multiplicative():
    # in(f w) = in(f) in(w) over a domain
    rng = random.Random(8)
    doms = [ZZ, GF(5), poly_domain(GF(2), "t")]
    for _ in range(300):
        dom = rng.choice(doms)
        nvars = rng.randint(1, 3)
        m = FreeModule(dom, nvars, rng.randint(1, 2),
                       OrderSpec(rng.choice(("lex", "grlex", "grevlex")),
                                 nvars))
        w = random_elem(m, rng)
        if not w:
            continue
        c = random_coeff(dom, rng)
        mono = random_mono(nvars, rng.randint(0, 3), rng)
        fw = w.scale(c, mono)
        lt, lw = fw.leading_term, w.leading_term
        assert lt.coeff == c * lw.coeff
        assert lt.mono == tuple(a + b for a, b in zip(mono, lw.mono))
        assert lt.basis == lw.basis


def test_arithmetic_matches_naive_maps():
    rng = random.Random(9)
    doms = [ZZ, GF(5), poly_domain(GF(2), "t")]

    def as_map(w):
        return {(t.mono, t.basis): t.coeff for t in w.terms}

    for _ in range(1000):
        dom = rng.choice(doms)
        nvars = rng.randint(1, 3)
        m = FreeModule(dom, nvars, rng.randint(1, 2),
                       OrderSpec(rng.choice(("lex", "grlex", "grevlex")),
                                 nvars))
        a = random_elem(m, rng)
        b = random_elem(m, rng)
        def combine(x, y, sign):
            out = dict(as_map(x))
            for key, c in as_map(y).items():
                tot = out.get(key, dom.zero) + (c if sign > 0 else -c)
                if tot:
                    out[key] = tot
                elif key in out:
                    del out[key]
            return out

        assert as_map(a + b) == combine(a, b, 1)
        assert as_map(a - b) == combine(a, b, -1)
        c = random_coeff(dom, rng)
        mono = random_mono(nvars, rng.randint(0, 2), rng)
        scaled = {(tuple(x + y for x, y in zip(mono, k[0])), k[1]): v * c
                  for k, v in as_map(a).items()}
        assert as_map(a.scale(c, mono)) == scaled


def test_terms_sorted_strictly_descending():
    rng = random.Random(10)
    for _ in range(200):
        nvars = rng.randint(1, 3)
        m = FreeModule(ZZ, nvars, rng.randint(1, 2),
                       OrderSpec(rng.choice(("lex", "grlex", "grevlex")),
                                 nvars))
        w = random_elem(m, rng)
        keys = [m.order.term_key(t.mono, t.basis) for t in w.terms]
        assert keys == sorted(keys, reverse=True)
        assert all(t.coeff for t in w.terms)


def test_module_mismatch_rejected():
    a = lex_module().elem([(1, (1, 0), 1)])
    b = FreeModule(ZZ, 2, 1, OrderSpec("grlex", 2), ("x", "y")) \
        .elem([(1, (1, 0), 1)])
    with pytest.raises(DomainError):
        a + b


def test_elem_validation():
    m = lex_module()
    with pytest.raises(ValueError):
        m.elem([(1, (1,), 1)])          # wrong exponent length
    with pytest.raises(ValueError):
        m.elem([(1, (1, 0), 3)])        # basis out of range


def test_format_elem():
    m = lex_module()
    w = m.elem([(2, (1, 0), 1), (-1, (0, 1), 1)])
    assert format_elem(w) == "2*x - y"
    assert format_elem(m.zero) == "0"
    m2 = FreeModule(ZZ, 2, 2, OrderSpec("lex", 2), ("x", "y"))
    w2 = m2.elem([(1, (0, 0), 2), (1, (2, 1), 1)])
    assert format_elem(w2) == "x^2*y*e1 + e2"
