"""Monomial orders: spec comparisons, multiplicativity, gradings."""

import random

import pytest

from genfree import QQ, ZZ, FreeModule, Grading, OrderSpec, Term, compare, graded_degree
from support import random_mono


def T(mono, basis=1, coeff=ZZ.one):
    return Term(coeff, tuple(mono), basis)


def test_lex_basic():
    order = OrderSpec("lex", 2)
    assert compare(order, T((2, 1)), T((1, 2))) == 1      # x^2 y > x y^2


def test_pot_dominates_monomial():
    order = OrderSpec("lex", 1)
    assert compare(order, T((1,), basis=2), T((5,), basis=1)) == -1


def test_grevlex_tiebreak():
    order = OrderSpec("grevlex", 3)
    # same degree: y^2 beats xz
    assert compare(order, T((1, 0, 1)), T((0, 2, 0))) == -1


def test_coefficients_ignored():
    order = OrderSpec("lex", 1)
    assert compare(order, T((1,), coeff=ZZ.elem(100)),
                   T((1,), coeff=ZZ.elem(-2))) == 0


def test_dimension_mismatch():
    order = OrderSpec("lex", 2)
    with pytest.raises(ValueError):
        compare(order, T((1,)), T((1, 0)))


def test_permutation_reorders_significance():
    order = OrderSpec("lex", 2, permutation=(1, 0))   # y > x
    assert compare(order, T((3, 0)), T((0, 1))) == -1


def test_weight_refinement_first():
    order = OrderSpec("lex", 2, weights=(1, 3))
    # weight of y is 3: y > x^2
    assert compare(order, T((2, 0)), T((0, 1))) == -1


def test_one_is_minimal():
    rng = random.Random(5)
    for base in ("lex", "grlex", "grevlex"):
        order = OrderSpec(base, 3, weights=(2, 1, 1))
        one = T((0, 0, 0))
        for _ in range(100):
            m = random_mono(3, rng.randint(1, 5), rng)
            assert compare(order, T(m), one) == 1


def test_multiplicativity_random():
    rng = random.Random(6)
    for _ in range(500):
        base = rng.choice(("lex", "grlex", "grevlex"))
        nvars = rng.randint(1, 4)
        weights = None
        if rng.random() < 0.4:
            weights = tuple(rng.randint(1, 3) for _ in range(nvars))
        order = OrderSpec(base, nvars, weights=weights)
        m1 = random_mono(nvars, rng.randint(0, 4), rng)
        m2 = random_mono(nvars, rng.randint(0, 4), rng)
        n = random_mono(nvars, rng.randint(1, 3), rng)
        c = compare(order, T(m1), T(m2))
        prod1 = tuple(a + b for a, b in zip(n, m1))
        prod2 = tuple(a + b for a, b in zip(n, m2))
        assert compare(order, T(prod1), T(prod2)) == c
        if c == 1:
            # n m1 > n m2 > m2 for n != 1
            assert compare(order, T(prod2), T(m2)) == 1


def test_graded_degree():
    g = Grading((1, 1), (0,))
    assert graded_degree(T((2, 1)), g) == 3
    g2 = Grading((2, 1), (5,))
    assert graded_degree(T((1, 0)), g2) == 7
    assert graded_degree(T((0, 0)), Grading((1, 1), (0,))) == 0


def test_grading_rejects_nonpositive_weights():
    with pytest.raises(ValueError):
        Grading((1, 0), (0,))


def test_order_validation():
    with pytest.raises(ValueError):
        OrderSpec("lexico", 2)
    with pytest.raises(ValueError):
        OrderSpec("lex", 2, permutation=(0, 0))
    with pytest.raises(ValueError):
        OrderSpec("lex", 2, weights=(1, 0))
