"""Frobenius-power checks and square-free degeneration reports.

In characteristic p the p-th power map is additive, so powering the
generators of a certified basis termwise (coefficients included,
exponents multiplied) generates the bracket power of the module, and
the initial module of the bracket power agrees with the bracket power
of the initial module once the freeness witness is inverted.  The
check here recomputes a basis of the powered generators from scratch
and compares both sides as localized term modules; an observed
inequality is reported, never asserted away.

The square-free report checks the hypothesis that every initial
monomial is square-free; together with a coefficient domain containing
a field this makes every local cohomology module of the quotient free
after inverting the witness (reported as a conclusion, not computed).
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import DomainError, RingElem, gcd, strip_witness
from .freemodule import Term
from .freeness import Witness, is_homogeneous, witness
from .groebner import DEFAULT_FUEL, GroebnerBasis, buchberger, _common_module
from .orders import mono_divides


def frobenius_power(gens, e, module=None):
    """Componentwise p**e-th powers of the generators.

    Additivity of the Frobenius makes (sum r_i w_i)^q = sum r_i^q w_i^q,
    so the powers of module generators generate the bracket power.
    Requires positive characteristic.
    """
    gens = list(gens)
    if module is None:
        module = _common_module(gens)
        if module is None:
            raise ValueError("no generators and no module given")
    dom = module.domain
    p = dom.characteristic
    if p == 0:
        raise DomainError("Frobenius powers need positive characteristic")
    if e < 0:
        raise ValueError("negative Frobenius exponent")
    if e == 0:
        return gens
    q = p ** e
    out = []
    for g in gens:
        powered = module.elem(
            [(RingElem(dom, dom.ppow(t.coeff.value, q)),
              tuple(n * q for n in t.mono), t.basis) for t in g.terms])
        if g:
            old = g.leading_term
            new = powered.leading_term
            assert new.mono == tuple(n * q for n in old.mono) \
                and new.basis == old.basis, "power broke the leading term"
        out.append(powered)
    return out


def localized_term_module(terms, wit):
    """Canonical form of the term module generated by `terms` over the
    witness localization: per (monomial, basis) the gcd of the
    witness-stripped coefficient cores, with entries implied by the
    remaining ones removed."""
    per = {}
    for t in terms:
        core, _ = strip_witness(t.coeff, wit.value)
        core = core.unit_normalized()
        key = (t.mono, t.basis)
        per[key] = gcd(per[key], core) if key in per else core
    changed = True
    while changed:
        changed = False
        for key in sorted(per):
            mono, basis = key
            others = [c for (m2, b2), c in per.items()
                      if (m2, b2) != key and b2 == basis
                      and mono_divides(m2, mono)]
            if not others:
                continue
            g = others[0]
            for c in others[1:]:
                g = gcd(g, c)
            if g.divides(per[key]):
                del per[key]
                changed = True
                break
    return tuple(sorted(((m, b, c.value) for (m, b), c in per.items())))


@dataclass
class FrobeniusReport:
    p: int
    e: int
    initial_of_power: tuple
    power_of_initial: tuple
    equal_after_localization: bool
    witness_used: Witness


def frobenius_initial_check(G, e, *, fuel=DEFAULT_FUEL):
    """Compare in(M^[p^e]) with in(M)^[p^e] over the witness localization.

    A fresh basis of the powered generators is computed; both sides are
    compared as localized term modules (witness-stripped coefficient
    cores, exact monomials).
    """
    if not isinstance(G, GroebnerBasis) or not G.certified:
        raise ValueError("a certified basis is required")
    dom = G.module.domain
    p = dom.characteristic
    if p == 0:
        raise DomainError("Frobenius powers need positive characteristic")
    wit = witness(G)
    powered = frobenius_power(G.gens, e, module=G.module)
    fresh = buchberger(powered, fuel=fuel, module=G.module)
    q = p ** e
    power_of_initial = tuple(
        Term(RingElem(dom, dom.ppow(t.coeff.value, q)),
             tuple(n * q for n in t.mono), t.basis)
        for t in G.initial_terms)
    lhs = localized_term_module(fresh.initial_terms, wit)
    rhs = localized_term_module(power_of_initial, wit)
    return FrobeniusReport(p, e, fresh.initial_terms, power_of_initial,
                           lhs == rhs, wit)


@dataclass
class SquarefreeReport:
    squarefree: bool
    offending: tuple       # non-square-free initial monomials
    witness: Witness
    contains_field: bool   # supplied by the coefficient domain

    @property
    def conclusion_applies(self):
        """Whether the square-free degeneration theorem applies: all
        graded local cohomology of the quotient is free over the
        witness localization."""
        return self.squarefree and self.contains_field


def squarefree_report(G, grading):
    """Check every initial monomial for exponents <= 1 (ideal case).

    Requires rank 1 and generators homogeneous for the given positive
    grading.  When the domain does not contain a field the conclusion
    is withheld even for a square-free initial ideal.
    """
    if not isinstance(G, GroebnerBasis) or not G.certified:
        raise ValueError("a certified basis is required")
    if G.module is not None and G.module.rank != 1:
        raise ValueError("square-free reports apply to ideals (rank 1)")
    for g in G.gens:
        if not is_homogeneous(g, grading):
            raise ValueError(f"inhomogeneous generator {g!r}")
    offending = []
    for t in G.initial_terms:
        if any(n >= 2 for n in t.mono) and t.mono not in offending:
            offending.append(t.mono)
    return SquarefreeReport(not offending, tuple(sorted(offending)),
                            witness(G), G.module.domain.contains_field)
