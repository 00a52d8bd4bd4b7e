"""Freeness witnesses, standard monomials, Hilbert tables and fiber
comparisons.

The witness of a certified basis is the lcm of the leading coefficients
of its generators: after inverting it, the initial module is generated
by plain monomials and the quotient becomes free with the standard
monomials (the monomials outside the initial module) as a basis.
Constancy of fiber Hilbert tables at specializations that keep the
witness nonzero is the computable face of that freeness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import (DomainError, LocalizedDomain, PolynomialDomain,
                      PrimeFieldDomain, IntegerDomain, RationalDomain,
                      RingElem, is_prime, lcm, strip_witness)
from .freemodule import FreeModule, Term, format_mono
from .groebner import GroebnerBasis, buchberger, _common_module
from .orders import Grading, graded_degree, mono_divides


class WitnessMismatch(ValueError):
    """An initial coefficient stays non-invertible after localization."""


@dataclass(frozen=True)
class Witness:
    """A nonzero element whose inversion makes the quotient free."""

    value: RingElem
    factors: tuple  # ((leading coefficient, generator index), ...)

    def __repr__(self):
        return f"Witness({self.value!r})"


@dataclass
class HilbertTable:
    """Graded ranks (standard-monomial counts) per degree."""

    ranks: dict
    grading: Grading

    def as_tuple(self, lo, hi):
        return tuple(self.ranks.get(v, 0) for v in range(lo, hi + 1))

    def __eq__(self, other):
        return isinstance(other, HilbertTable) and self.ranks == other.ranks


def witness(G, refine=False):
    """The freeness witness of a certified basis (Vasconcelos recipe).

    Default: unit-normalized lcm of the distinct non-unit leading
    coefficients.  With refine=True each initial term first contributes
    only the gcd of the leading coefficients at monomials dividing its
    own, which can shrink the witness when, say, 2x and 3x together
    already generate (x).
    """
    if not isinstance(G, GroebnerBasis) or not G.certified:
        raise ValueError("a certified basis is required")
    if G.module is None:
        raise ValueError("empty basis without ambient module")
    dom = G.module.domain
    terms = list(G.initial_terms)
    if refine:
        contributions = []
        for i, t in enumerate(terms):
            cs = [s.coeff for s in terms
                  if s.basis == t.basis and mono_divides(s.mono, t.mono)]
            g = cs[0]
            for c in cs[1:]:
                gg, _, _ = dom.pext_gcd(g.value, c.value)
                g = RingElem(dom, gg)
            contributions.append((g, i))
    else:
        contributions = [(t.coeff, i) for i, t in enumerate(terms)]
    factors = tuple((c.unit_normalized(), i) for c, i in contributions
                    if not c.is_unit)
    value = dom.one
    seen = set()
    for c, _ in factors:
        if c.value in seen:
            continue
        seen.add(c.value)
        value = lcm(value, c)
    return Witness(value, factors)


def _weighted_monomials(weights, budget):
    """(exponents, weighted degree) for all monomials of degree <= budget."""
    stack = [((), 0)]
    for w in weights:
        nxt = []
        for mono, used in stack:
            e = 0
            while used + e * w <= budget:
                nxt.append((mono + (e,), used + e * w))
                e += 1
        stack = nxt
    return stack


def _minimal_divisors(monos):
    out = []
    for m in sorted(set(monos)):
        if not any(mono_divides(o, m) for o in out):
            out = [o for o in out if not mono_divides(m, o)]
            out.append(m)
    return out


def _grading_rank(grading):
    return len(grading.basis_shifts) if grading.basis_shifts else 1


def standard_monomials(initials, wit, bound, grading, order=None):
    """Monomials of graded degree <= bound outside the initial module.

    After inverting the witness every initial coefficient must be a
    unit (each must divide a power of the witness); the standard
    monomials then form a basis of the localized quotient up to the
    degree bound.  Sorted by (degree, order); pass an order for a
    deterministic tie-break other than exponent tuples.
    """
    initials = list(initials)
    for t in initials:
        core, _ = strip_witness(t.coeff, wit.value)
        if not core.is_unit:
            raise WitnessMismatch(
                f"coefficient {t.coeff!r} not invertible after localizing "
                f"at {wit.value!r}")
    rank = _grading_rank(grading)
    divisors = {}
    for t in initials:
        divisors.setdefault(t.basis, []).append(t.mono)
    divisors = {b: _minimal_divisors(ms) for b, ms in divisors.items()}
    out = []
    for basis in range(1, rank + 1):
        shift = grading.basis_shifts[basis - 1] if grading.basis_shifts else 0
        budget = bound - shift
        if budget < 0:
            continue
        divs = divisors.get(basis, ())
        for mono, wdeg in _weighted_monomials(grading.var_weights, budget):
            if any(mono_divides(d, mono) for d in divs):
                continue
            out.append((wdeg + shift, mono, basis))
    if order is not None:
        out.sort(key=lambda x: (x[0], order.term_key(x[1], x[2])))
    else:
        out.sort(key=lambda x: (x[0], x[2], x[1]))
    return [(mono, basis) for _, mono, basis in out]


def hilbert_function(initials, grading, span):
    """Standard-monomial counts per graded degree over span=(lo, hi).

    The coefficients of the initial terms are ignored; callers localize
    first (the table is the generic one of the witness-localized
    module).
    """
    lo, hi = span
    table = {v: 0 for v in range(lo, hi + 1)}
    rank = _grading_rank(grading)
    divisors = {}
    for t in initials:
        divisors.setdefault(t.basis, []).append(t.mono)
    divisors = {b: _minimal_divisors(ms) for b, ms in divisors.items()}
    for basis in range(1, rank + 1):
        shift = grading.basis_shifts[basis - 1] if grading.basis_shifts else 0
        budget = hi - shift
        if budget < 0:
            continue
        divs = divisors.get(basis, ())
        for mono, wdeg in _weighted_monomials(grading.var_weights, budget):
            v = wdeg + shift
            if v < lo:
                continue
            if any(mono_divides(d, mono) for d in divs):
                continue
            table[v] += 1
    return HilbertTable(table, grading)


# -- specialization ----------------------------------------------------------


@dataclass
class Specialization:
    """Generators pushed to a residue field; vanished ones are dropped."""

    gens: tuple
    vanished: tuple  # indices of generators that mapped to zero
    module: FreeModule
    point: object


def _residue_map(dom, point):
    """(residue field, payload map) realizing the evaluation at point."""
    if isinstance(dom, IntegerDomain):
        if not isinstance(point, int) or not is_prime(point):
            raise DomainError(f"{point!r} is not a prime modulus")
        from .domains import GF
        target = GF(point)
        return target, lambda v: v % point
    if isinstance(dom, PolynomialDomain):
        if point is None:
            raise DomainError("an evaluation point for the coefficient "
                              "variable is required")
        base = dom.base
        scalar = base.pconvert(point)

        def ev(v):
            acc = base.pzero()
            for c in reversed(v):
                acc = base.padd(base.pmul(acc, scalar), c)
            return acc

        return base, ev
    if isinstance(dom, (RationalDomain, PrimeFieldDomain)):
        return dom, lambda v: v
    raise DomainError(f"cannot specialize {dom!r}")


def specialize(gens, point=None, module=None):
    """Apply the coefficientwise residue map; drop zero images.

    For A = ZZ the point is a prime q (reduction mod q); for A = k[t] a
    scalar value of t; field coefficients pass through unchanged.
    """
    gens = list(gens)
    if module is None:
        module = _common_module(gens)
        if module is None:
            raise ValueError("no generators and no module given")
    dom = module.domain
    target, ev = _residue_map(dom, point)
    new_module = module.with_domain(target)
    mapped = []
    vanished = []
    for i, g in enumerate(gens):
        terms = []
        for t in g.terms:
            c = ev(t.coeff.value)
            if not target.pis_zero(c):
                terms.append((RingElem(target, c), t.mono, t.basis))
        img = new_module.elem(terms)
        if img:
            mapped.append(img)
        else:
            vanished.append(i)
    return Specialization(tuple(mapped), tuple(vanished), new_module, point)


def kills_witness(wit, point, module):
    """True when the evaluation sends the witness to zero."""
    dom = module.domain
    target, ev = _residue_map(dom, point)
    return target.pis_zero(ev(dom.pconvert(wit.value)))


def default_points(module, wit, count=3):
    """Deterministic specialization points avoiding the witness.

    Smallest primes for ZZ, smallest scalars for k[t] (possibly fewer
    than requested over a small prime field), the identity for fields.
    """
    dom = module.domain
    if isinstance(dom, IntegerDomain):
        out = []
        q = 2
        while len(out) < count:
            if is_prime(q) and not kills_witness(wit, q, module):
                out.append(q)
            q += 1
        return out
    if isinstance(dom, PolynomialDomain):
        if isinstance(dom.base, PrimeFieldDomain):
            candidates = range(dom.base.p)
        else:
            candidates = range(count + 64)
        out = []
        for s in candidates:
            if not kills_witness(wit, s, module):
                out.append(s)
            if len(out) == count:
                break
        return out
    return [None]


# -- fiber comparison --------------------------------------------------------


@dataclass
class FiberEntry:
    point: object
    table: HilbertTable
    equal: bool
    witness_killed: bool
    vanished: tuple


@dataclass
class FiberReport:
    """Generic vs specialized Hilbert tables, degree by degree.

    Equality is expected (and asserted by the theory) only at points
    where the witness stays nonzero; witness-killing points are
    reported with no guarantee either way.
    """

    generic: HilbertTable
    witness: Witness
    entries: tuple
    span: tuple

    @property
    def passed(self):
        return all(e.equal for e in self.entries if not e.witness_killed)


def is_homogeneous(w, grading):
    if not w:
        return True
    degs = {graded_degree(t, grading) for t in w.terms}
    return len(degs) == 1


def fiber_compare(gens, points, span, grading, *, module=None,
                  fuel=None, basis=None):
    """Compare fiber Hilbert tables against the generic table.

    Computes a field Groebner basis per specialized fiber and tabulates
    standard-monomial counts over span=(lo, hi).  Points where the
    witness vanishes are still computed but flagged.
    """
    from .groebner import DEFAULT_FUEL
    fuel = fuel or DEFAULT_FUEL
    gens = list(gens)
    if module is None:
        module = _common_module(gens)
        if module is None:
            raise ValueError("no generators and no module given")
    for g in gens:
        if not is_homogeneous(g, grading):
            raise ValueError(f"inhomogeneous generator {g!r}")
    if basis is None:
        basis = buchberger(gens, fuel=fuel, module=module)
    wit = witness(basis)
    generic = hilbert_function(basis.initial_terms, grading, span)
    entries = []
    for point in points:
        killed = kills_witness(wit, point, module)
        spec = specialize(gens, point, module=module)
        fiber_basis = buchberger(spec.gens, fuel=fuel, module=spec.module)
        table = hilbert_function(fiber_basis.initial_terms, grading, span)
        entries.append(FiberEntry(point, table, table == generic, killed,
                                  spec.vanished))
    return FiberReport(generic, wit, tuple(entries), tuple(span))
