"""Reduction, term syzygies and Buchberger completion over a Euclidean
coefficient domain.

The notion of basis here is the weak one: a set of module elements is a
Groebner basis when their initial TERMS (coefficient included) generate
the initial module, which over a coefficient ring need not be a
monomial module.  A term c*mono*e_k is reducible when c lies in the
ideal generated by the leading coefficients of the basis elements whose
leading monomials divide mono on the same basis vector; over a PID that
ideal is principal, generated by the gcd, so one extended-gcd cascade
decides reducibility and produces the reduction step.

Pairwise S-vectors suffice for the Buchberger criterion: grouping a
term syzygy by its common monomial reduces it to a syzygy of the
coefficient tuple, and over a PID the kernel of (c_1, ..., c_k) is
generated by the pairwise Bezout vectors (c_j/g) e_i - (c_i/g) e_j.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .domains import DomainError, RingElem
from .freemodule import FreeElem, FreeModule, Term
from .orders import mono_deg, mono_div, mono_divides, mono_lcm, mono_one


class FuelExhausted(RuntimeError):
    """Basis completion gave up after the configured number of pair
    reductions; raise the fuel or simplify the input."""


DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class GroebnerBasis:
    gens: tuple
    order: object
    initial_terms: tuple
    certified: bool
    module: FreeModule

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


@dataclass
class ReductionTrace:
    """w = sum quotients[i] * gens[i] + remainder, exactly."""

    quotients: tuple  # ((gen index, ((coeff, mono), ...)), ...)
    remainder: FreeElem

    def expand(self, gens):
        acc = self.remainder
        for idx, poly in self.quotients:
            acc = acc + gens[idx].mul_poly(poly)
        return acc

    def verify(self, w, gens):
        return self.expand(list(gens)) == w


def _gens_of(basis):
    if isinstance(basis, GroebnerBasis):
        return list(basis.gens)
    return list(basis)


def _common_module(elems):
    module = None
    for w in elems:
        if not isinstance(w, FreeElem):
            raise TypeError("free module elements expected")
        if module is None:
            module = w.module
        elif w.module != module:
            raise DomainError("elements from different modules/orders")
    return module


def _gcd_cascade(dom, payloads):
    """(gcd, Bezout multipliers) over the domain, cascading left to right."""
    g = payloads[0]
    mults = [dom.pone()]
    for c in payloads[1:]:
        g2, s, t = dom.pext_gcd(g, c)
        mults = [dom.pmul(u, s) for u in mults]
        mults.append(t)
        g = g2
    return g, mults


def _reduction_step(dom, term, leads):
    """One reduction of `term` against the applicable leading terms.

    leads is a list of (index, coeff payload, mono, basis); returns a
    list of (index, multiplier payload, multiplier mono), or None when
    the term is irreducible.  A single divisor of lowest index is
    preferred; otherwise the full Bezout cascade over all applicable
    leading coefficients is used.
    """
    mono, basis, c = term.mono, term.basis, term.coeff.value
    applicable = [(i, ci, mi) for (i, ci, mi, bi) in leads
                  if bi == basis and mono_divides(mi, mono)]
    if not applicable:
        return None
    for i, ci, mi in applicable:
        q = dom.pexact_div(c, ci)
        if q is not None:
            return [(i, q, mono_div(mono, mi))]
    g, mults = _gcd_cascade(dom, [ci for _, ci, _ in applicable])
    q = dom.pexact_div(c, g)
    if q is None:
        return None
    steps = []
    for (i, ci, mi), u in zip(applicable, mults):
        m = dom.pmul(q, u)
        if not dom.pis_zero(m):
            steps.append((i, m, mono_div(mono, mi)))
    return steps


def reduce(w, basis):
    """Reduce w modulo a basis; every term of the remainder is irreducible.

    Returns a ReductionTrace whose identity w = sum f_i g_i + remainder
    holds exactly, with in(f_i g_i) <= in(w).
    """
    gens = _gens_of(basis)
    module = w.module
    if gens:
        gmod = _common_module(gens)
        if gmod != module:
            raise DomainError("element and basis live in different modules")
    dom = module.domain
    leads = [(i, g.leading_term.coeff.value, g.leading_term.mono,
              g.leading_term.basis)
             for i, g in enumerate(gens)]
    quotients = {}
    prefix = []
    cur = w
    while cur:
        t = cur.leading_term
        steps = _reduction_step(dom, t, leads)
        if steps is None:
            prefix.append(t)
            cur = cur.drop_leading()
            continue
        for i, mult, mmono in steps:
            coeff = RingElem(dom, mult)
            quotients.setdefault(i, []).append((coeff, mmono))
            cur = cur - gens[i].scale(coeff, mmono)
    mkey = module.order.mono_key
    quot = tuple(
        (i, tuple(sorted(parts, key=lambda cm: mkey(cm[1]), reverse=True)))
        for i, parts in sorted(quotients.items()))
    return ReductionTrace(quot, module.from_sorted(prefix))


def term_syzygies(terms):
    """Generators of the syzygies of a list of terms.

    For each pair on the same basis vector, with g = gcd(c_i, c_j) and
    L = lcm(m_i, m_j), the vector with (c_j/g) L/m_i in slot i and
    -(c_i/g) L/m_j in slot j.  Over a PID these generate all term
    syzygies.  Entries are returned as ((i, coeff, mono), (j, coeff,
    mono)) pairs.
    """
    terms = list(terms)
    if any(not t.coeff for t in terms):
        raise ValueError("zero term")
    out = []
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            ti, tj = terms[i], terms[j]
            if ti.basis != tj.basis:
                continue
            dom = ti.coeff.domain
            g, _, _ = dom.pext_gcd(ti.coeff.value, tj.coeff.value)
            lcm_mono = mono_lcm(ti.mono, tj.mono)
            ci = RingElem(dom, dom.pexact_div(tj.coeff.value, g))
            cj = RingElem(dom, dom.pexact_div(ti.coeff.value, g))
            out.append(((i, ci, mono_div(lcm_mono, ti.mono)),
                        (j, -cj, mono_div(lcm_mono, tj.mono))))
    return out


def _spair(wi, wj):
    """The S-vector cancelling the leading terms of wi and wj."""
    ti, tj = wi.leading_term, wj.leading_term
    dom = wi.module.domain
    g, _, _ = dom.pext_gcd(ti.coeff.value, tj.coeff.value)
    lcm_mono = mono_lcm(ti.mono, tj.mono)
    left = RingElem(dom, dom.pexact_div(tj.coeff.value, g))
    right = RingElem(dom, dom.pexact_div(ti.coeff.value, g))
    return (wi.scale(left, mono_div(lcm_mono, ti.mono))
            - wj.scale(right, mono_div(lcm_mono, tj.mono)))


def _normalized(w):
    """Scale by a unit so the leading coefficient is canonical."""
    dom = w.module.domain
    u, _ = dom.punit_normalize(w.leading_term.coeff.value)
    if u == dom.pone():
        return w
    return w.scale(RingElem(dom, dom.punit_inv(u)))


def _pair_entry(order, wi, wj, i, j):
    ti, tj = wi.leading_term, wj.leading_term
    lcm_mono = mono_lcm(ti.mono, tj.mono)
    return (mono_deg(lcm_mono), order.mono_key(lcm_mono), ti.basis, i, j)


def buchberger(gens, *, fuel=DEFAULT_FUEL, interreduce=True, certify=True,
               module=None):
    """Complete generators to a certified Groebner basis.

    Deterministic: pairs are processed by lcm degree, then the lcm
    monomial under the order, then indices (normal strategy); reducers
    prefer the lowest applicable index.  The result is inter-reduced:
    leading monomials are pairwise distinct with gcd leading
    coefficients, and no leading term is reducible by the others.
    """
    gens = list(gens)
    if not gens:
        order = module.order if module is not None else None
        return GroebnerBasis((), order, (), True, module)
    module = _common_module(gens)
    if any(not g for g in gens):
        raise ValueError("zero generator")
    order = module.order
    basis = []
    for g in gens:
        n = _normalized(g)
        if n not in basis:
            basis.append(n)
    heap = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if basis[i].leading_term.basis == basis[j].leading_term.basis:
                heapq.heappush(heap, _pair_entry(order, basis[i], basis[j], i, j))
    budget = fuel
    while heap:
        _, _, _, i, j = heapq.heappop(heap)
        budget -= 1
        if budget < 0:
            raise FuelExhausted(f"more than {fuel} pair reductions")
        s = _spair(basis[i], basis[j])
        if not s:
            continue
        rem = reduce(s, basis).remainder
        if not rem:
            continue
        rem = _normalized(rem)
        k = len(basis)
        basis.append(rem)
        rb = rem.leading_term.basis
        for i2 in range(k):
            if basis[i2].leading_term.basis == rb:
                heapq.heappush(heap, _pair_entry(order, basis[i2], rem, i2, k))
    if interreduce:
        basis = _interreduce(basis)
    initial = tuple(g.leading_term for g in basis)
    certified = False
    if certify:
        if not is_groebner(basis):
            raise AssertionError("completed basis failed its own criterion")
        certified = True
    return GroebnerBasis(tuple(basis), order, initial, certified, module)


def _interreduce(basis):
    """Merge equal leading monomials to their coefficient gcd, then drop
    members that reduce to zero against the rest."""
    if not basis:
        return basis
    module = basis[0].module
    dom = module.domain
    tkey = module.order.term_key

    def lead_key(w):
        t = w.leading_term
        return tkey(t.mono, t.basis)

    work = sorted(basis, key=lead_key, reverse=True)
    while True:
        groups = {}
        for w in work:
            t = w.leading_term
            groups.setdefault((t.mono, t.basis), []).append(w)
        merge = next((g for g in groups.values() if len(g) > 1), None)
        if merge is None:
            break
        rest = [w for w in work if not any(w is m for m in merge)]
        g, mults = _gcd_cascade(dom, [w.leading_term.coeff.value for w in merge])
        combined = module.zero
        for w, u in zip(merge, mults):
            if not dom.pis_zero(u):
                combined = combined + w.scale(RingElem(dom, u))
        new = rest + [_normalized(combined)]
        for w in merge:
            r = reduce(w, new).remainder
            if r:
                new.append(_normalized(r))
        work = sorted(new, key=lead_key, reverse=True)
    # head-redundancy drops
    changed = True
    while changed:
        changed = False
        for idx in range(len(work)):
            others = work[:idx] + work[idx + 1:]
            if not others:
                continue
            if not reduce(work[idx], others).remainder:
                work = others
                changed = True
                break
    return sorted(work, key=lead_key, reverse=True)


def groebner_certificate(basis):
    """Run the Buchberger criterion; (ok, failures).

    Each failure is (i, j, remainder): the pairwise syzygy of the
    initial terms of generators i and j applied to the generators did
    not reduce to zero.
    """
    gens = _gens_of(basis)
    if any(not g for g in gens):
        raise ValueError("zero generator")
    failures = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            ti = gens[i].leading_term
            tj = gens[j].leading_term
            if ti.basis != tj.basis:
                continue
            s = _spair(gens[i], gens[j])
            if not s:
                continue
            rem = reduce(s, gens).remainder
            if rem:
                failures.append((i, j, rem))
    return not failures, failures


def is_groebner(basis):
    """Buchberger criterion: every pairwise S-vector reduces to zero."""
    ok, _ = groebner_certificate(basis)
    return ok


def initial_module(G):
    """The initial terms of a certified basis; they generate in(M)."""
    if not isinstance(G, GroebnerBasis):
        raise TypeError("a GroebnerBasis is required")
    if not G.certified:
        raise ValueError("basis is not certified")
    seen = []
    for t in G.initial_terms:
        if t not in seen:
            seen.append(t)
    return tuple(seen)
