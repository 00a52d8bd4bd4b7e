"""Reduction, syzygies, Buchberger completion, and the matrix oracle
cross-checks on the worked examples."""

import random

import pytest

from genfree import (GF, QQ, ZZ, FreeModule, FuelExhausted, OrderSpec,
                     buchberger, build_instance, groebner_certificate,
                     initial_module, is_groebner, poly_domain, reduce,
                     term_syzygies)
from genfree.hermite import EchelonForm, SliceOracle
from support import (FUZZ_DOMAINS, random_coeff, random_elem,
                     random_instance, random_member, random_mono)


def lex_zz(names=("x", "y")):
    return FreeModule(ZZ, len(names), 1, OrderSpec("lex", len(names)), names)


def E(module, *terms):
    return module.elem(list(terms))


# -- reduce -------------------------------------------------------------------


def test_reduce_single_step():
    m = lex_zz()
    w = E(m, (2, (1, 0), 1), (1, (0, 1), 1))       # 2x + y
    g = E(m, (1, (1, 0), 1), (-1, (0, 1), 1))      # x - y
    tr = reduce(w, [g])
    assert tr.remainder == E(m, (3, (0, 1), 1))    # 3y
    assert tr.verify(w, [g])


def test_reduce_bezout_cascade():
    m = lex_zz()
    w = E(m, (6, (1, 0), 1))
    g1 = E(m, (2, (1, 0), 1))
    g2 = E(m, (3, (1, 0), 1))
    tr = reduce(w, [g1, g2])
    assert not tr.remainder
    assert tr.verify(w, [g1, g2])
    # lowest-index single divisor wins: 6 = 3 * 2
    assert tr.quotients == ((0, ((ZZ.elem(3), (0, 0)),)),)


def test_reduce_coefficient_nonmembership():
    m = lex_zz()
    w = E(m, (1, (1, 0), 1))
    g = E(m, (2, (1, 0), 1))
    tr = reduce(w, [g])
    assert tr.remainder == w


def test_reduce_order_mismatch():
    m = lex_zz()
    other = FreeModule(ZZ, 2, 1, OrderSpec("grlex", 2), ("x", "y"))
    from genfree import DomainError
    with pytest.raises(DomainError):
        reduce(E(m, (1, (1, 0), 1)), [E(other, (1, (1, 0), 1))])


def test_reduce_identity_on_fuzz():
    rng = random.Random(11)
    for _ in range(150):
        dom = rng.choice(FUZZ_DOMAINS)
        module, gens = random_instance(dom, rng)
        w = random_elem(module, rng, maxdeg=4)
        tr = reduce(w, gens)
        assert tr.verify(w, gens)
        # every remainder term is irreducible: reducing again is a no-op
        again = reduce(tr.remainder, gens)
        assert again.remainder == tr.remainder
        assert not again.quotients


# -- term syzygies ------------------------------------------------------------


def test_syzygy_pair():
    from genfree import Term
    s = term_syzygies([Term(ZZ.elem(2), (1,), 1), Term(ZZ.elem(3), (1,), 1)])
    assert len(s) == 1
    (i, ci, mi), (j, cj, mj) = s[0]
    assert (i, j) == (0, 1)
    assert ci == ZZ.elem(3) and cj == ZZ.elem(-2)
    assert mi == (0,) and mj == (0,)


def test_syzygy_distinct_basis_empty():
    from genfree import Term
    assert term_syzygies([Term(ZZ.one, (1, 0), 1),
                          Term(ZZ.one, (0, 1), 2)]) == []


def test_syzygy_zero_term_rejected():
    from genfree import Term
    with pytest.raises(ValueError):
        term_syzygies([Term(ZZ.zero, (1,), 1)])


def test_syzygies_span_all_term_syzygies():
    """(2x^2, 3xy, 5y^2): every term syzygy with multipliers up to degree 3
    lies in the span of the pairwise vectors (checked by the matrix
    oracle on the rank-3 syzygy module)."""
    monos = [(2, 0), (1, 1), (0, 2)]
    coeffs = [2, 3, 5]
    m3 = FreeModule(ZZ, 2, 3, OrderSpec("lex", 2), ("x", "y"))
    from genfree import Term
    terms = [Term(ZZ.elem(c), mono, 1) for c, mono in zip(coeffs, monos)]
    pairwise = []
    for (i, ci, mi), (j, cj, mj) in term_syzygies(terms):
        pairwise.append(E(m3, (ci, mi, i + 1), (cj, mj, j + 1)))
    oracle = SliceOracle(pairwise, 5)
    # brute force: common product monomial of degree <= 5, kernel vectors
    # of the applicable coefficients with small entries
    from genfree.orders import mono_divides, mono_div
    from itertools import product as iproduct
    checked = 0
    for d in range(2, 6):
        for prod in set(random_mono(2, d, random.Random(d * 17 + k))
                        for k in range(40)):
            idx = [i for i, mono in enumerate(monos)
                   if mono_divides(mono, prod)]
            if len(idx) < 2:
                continue
            for vec in iproduct(range(-6, 7), repeat=len(idx)):
                if all(v == 0 for v in vec):
                    continue
                if sum(v * coeffs[i] for v, i in zip(vec, idx)) != 0:
                    continue
                syz = E(m3, *[(v, mono_div(prod, monos[i]), i + 1)
                              for v, i in zip(vec, idx) if v])
                assert oracle.contains(syz), (prod, vec)
                checked += 1
    assert checked > 50


# -- buchberger ---------------------------------------------------------------


def test_worked_example_over_zz():
    m = lex_zz()
    g1 = E(m, (2, (1, 0), 1), (1, (0, 1), 1))
    g2 = E(m, (3, (1, 0), 1))
    G = buchberger([g1, g2])
    assert G.certified
    assert set(str(g) for g in G.gens) == {"x - y", "3*y"}
    initials = {(t.coeff.value, t.mono) for t in initial_module(G)}
    assert initials == {(1, (1, 0)), (3, (0, 1))}


def test_worked_example_hermite_oracle():
    """Both containments, and the degree-1 initial span, via matrices."""
    m = lex_zz()
    g1 = E(m, (2, (1, 0), 1), (1, (0, 1), 1))
    g2 = E(m, (3, (1, 0), 1))
    G = buchberger([g1, g2])
    inputs = SliceOracle([g1, g2], 3)
    outputs = SliceOracle(list(G.gens), 3)
    assert all(inputs.contains(g) for g in G.gens)
    assert all(outputs.contains(g) for g in [g1, g2])
    # brute-force initial terms of the degree-1 slice a(2x+y) + b(3x)
    leads = set()
    for a in range(-9, 10):
        for b in range(-9, 10):
            xc, yc = 2 * a + 3 * b, a
            if xc:
                leads.add((xc, (1, 0)))
            elif yc:
                leads.add((yc, (0, 1)))
    ech = EchelonForm(ZZ, 2)
    for xc_yc in leads:
        coeff, mono = xc_yc
        ech.add_row([coeff, 0] if mono == (1, 0) else [0, coeff])
    expect = EchelonForm(ZZ, 2)
    expect.add_row([1, 0])
    expect.add_row([0, 3])
    assert ech.rows == expect.rows


def test_gcd_interreduction_of_proportional_leads():
    m = lex_zz(("x",))
    G = buchberger([E(m, (2, (1,), 1)), E(m, (3, (1,), 1))])
    assert [str(g) for g in G.gens] == ["x"]
    assert G.certified


def test_principal_is_its_own_basis():
    inst, gens = build_instance(2, 2, 2)
    G = buchberger(gens)
    assert G.certified and len(G.gens) == 1
    assert G.gens[0] == gens[0]


def test_empty_and_zero_inputs():
    m = lex_zz()
    G = buchberger([], module=m)
    assert G.certified and G.gens == ()
    assert initial_module(G) == ()
    with pytest.raises(ValueError):
        buchberger([m.zero])


def test_fuel_exhaustion():
    m = FreeModule(QQ, 3, 1, OrderSpec("grevlex", 3), ("x", "y", "z"))
    gens = [E(m, (1, (2, 0, 0), 1), (1, (0, 1, 1), 1)),
            (E(m, (1, (0, 2, 0), 1), (1, (1, 0, 1), 1))),
            (E(m, (1, (0, 0, 2), 1), (1, (1, 1, 0), 1)))]
    with pytest.raises(FuelExhausted):
        buchberger(gens, fuel=1)


def test_is_groebner_examples():
    m = lex_zz()
    good = [E(m, (1, (1, 0), 1), (-1, (0, 1), 1)), E(m, (3, (0, 1), 1))]
    assert is_groebner(good)
    bad = [E(m, (2, (1, 0), 1), (1, (0, 1), 1)), E(m, (3, (1, 0), 1))]
    ok, failures = groebner_certificate(bad)
    assert not ok
    assert failures[0][:2] == (0, 1)
    single = [E(m, (7, (3, 2), 1), (5, (1, 1), 1))]
    assert is_groebner(single)


def test_initial_module_requires_certified():
    m = lex_zz()
    from genfree import GroebnerBasis
    fake = GroebnerBasis((E(m, (1, (1, 0), 1)),), m.order, (), False, m)
    with pytest.raises(ValueError):
        initial_module(fake)


def test_buchberger_idempotent_on_fuzz():
    rng = random.Random(12)
    for _ in range(60):
        dom = rng.choice(FUZZ_DOMAINS)
        module, gens = random_instance(dom, rng)
        G = buchberger(gens)
        assert G.certified
        again = buchberger(list(G.gens))
        assert is_groebner(again)
        # members reduce to zero
        w = random_member(gens, rng)
        assert not reduce(w, G).remainder


def test_membership_oracle_equivalence_homogeneous_fuzz():
    rng = random.Random(13)
    for _ in range(40):
        dom = rng.choice(FUZZ_DOMAINS)
        module, gens = random_instance(dom, rng, homogeneous=True)
        G = buchberger(gens)
        oracle = SliceOracle(gens, 4)
        for _ in range(6):
            w = random_member(gens, rng, mult_deg=1)
            cand = [w, random_elem(module, rng, maxdeg=4)]
            for v in cand:
                if not v or any(sum(t.mono) > 4 for t in v.terms):
                    continue
                assert (not reduce(v, G).remainder) == oracle.contains(v)
