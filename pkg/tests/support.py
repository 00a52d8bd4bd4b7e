"""Shared random-instance generators for the test suite.

Everything is seeded; the acceptance suite and the unit tests draw
from the same generators so the fuzz corpora are reproducible.
"""

from fractions import Fraction

from genfree import GF, QQ, ZZ, FreeModule, OrderSpec, poly_domain
from genfree.domains import (IntegerDomain, PolynomialDomain,
                             PrimeFieldDomain, RationalDomain)

FUZZ_DOMAINS = (ZZ, GF(5), poly_domain(GF(2), "t"))
ORDER_BASES = ("lex", "grlex", "grevlex")


def random_coeff(dom, rng, zero_ok=False):
    if isinstance(dom, IntegerDomain):
        lo = 0 if zero_ok else 1
        v = rng.randint(lo, 6) * rng.choice((-1, 1))
        return dom.elem(v)
    if isinstance(dom, RationalDomain):
        num = rng.randint(0 if zero_ok else 1, 6) * rng.choice((-1, 1))
        return dom.elem(Fraction(num, rng.randint(1, 4)))
    if isinstance(dom, PrimeFieldDomain):
        lo = 0 if zero_ok else 1
        return dom.elem(rng.randint(lo, dom.p - 1))
    if isinstance(dom, PolynomialDomain):
        while True:
            degree = rng.randint(0, 2)
            if isinstance(dom.base, PrimeFieldDomain):
                coeffs = [rng.randrange(dom.base.p) for _ in range(degree + 1)]
            else:
                coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(degree + 1)]
            e = dom.elem(coeffs)
            if e or zero_ok:
                return e
    raise TypeError(f"no random elements for {dom!r}")


def random_mono(nvars, degree, rng):
    mono = [0] * nvars
    for _ in range(degree):
        mono[rng.randrange(nvars)] += 1
    return tuple(mono)


def random_elem(module, rng, maxterms=4, maxdeg=3, homogeneous=False):
    """A random element; may be zero when terms cancel."""
    nterms = rng.randint(1, maxterms)
    degree = rng.randint(0, maxdeg)
    terms = []
    for _ in range(nterms):
        d = degree if homogeneous else rng.randint(0, maxdeg)
        terms.append((random_coeff(module.domain, rng),
                      random_mono(module.nvars, d, rng),
                      rng.randint(1, module.rank)))
    return module.elem(terms)


def random_module(dom, rng, max_vars=3, max_rank=2, bases=ORDER_BASES):
    nvars = rng.randint(1, max_vars)
    rank = rng.randint(1, max_rank)
    return FreeModule(dom, nvars, rank, OrderSpec(rng.choice(bases), nvars))


def random_instance(dom, rng, max_gens=4, homogeneous=False, max_vars=3,
                    max_rank=2, maxdeg=3):
    """(module, nonzero generators), at least one generator."""
    module = random_module(dom, rng, max_vars, max_rank)
    gens = []
    while not gens:
        gens = [g for g in (random_elem(module, rng, maxdeg=maxdeg,
                                        homogeneous=homogeneous)
                            for _ in range(rng.randint(1, max_gens))) if g]
    return module, gens


def random_member(gens, rng, mult_deg=2, parts=2):
    """A random element of the module generated by gens."""
    module = gens[0].module
    w = module.zero
    for g in gens:
        poly = [(random_coeff(module.domain, rng),
                 random_mono(module.nvars, rng.randint(0, mult_deg), rng))
                for _ in range(parts)]
        w = w + g.mul_poly(poly)
    return w
