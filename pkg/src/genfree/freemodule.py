"""Terms and elements of a free module F = R e_1 + ... + R e_l.

A FreeElem stores its terms strictly decreasing under the ambient
order, with nonzero coefficients and no repeated (monomial, basis)
pair, so the leading term is terms[0] and equality is structural.
"""

from __future__ import annotations

from typing import NamedTuple

from .domains import DomainError, RingElem
from .orders import OrderSpec, mono_mul, mono_one


class Term(NamedTuple):
    coeff: RingElem
    mono: tuple
    basis: int


class FreeModule:
    """Ambient data: coefficient domain, variables, rank, order, names."""

    def __init__(self, domain, nvars, rank=1, order=None, var_names=None):
        if order is None:
            order = OrderSpec("grevlex", nvars)
        if getattr(order, "nvars", nvars) != nvars:
            raise ValueError("order does not match the variable count")
        if var_names is None:
            var_names = tuple(f"x{i + 1}" for i in range(nvars))
        else:
            var_names = tuple(var_names)
            if len(var_names) != nvars:
                raise ValueError("one name per variable required")
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.domain = domain
        self.nvars = nvars
        self.rank = rank
        self.order = order
        self.var_names = var_names

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FreeModule)
                and self.domain == other.domain and self.nvars == other.nvars
                and self.rank == other.rank and self.order == other.order
                and self.var_names == other.var_names)

    def __hash__(self):
        return hash((self.domain, self.nvars, self.rank, self.order,
                     self.var_names))

    def __repr__(self):
        return (f"FreeModule({self.domain!r}, vars={self.var_names}, "
                f"rank={self.rank})")

    def with_order(self, order):
        return FreeModule(self.domain, self.nvars, self.rank, order,
                          self.var_names)

    def with_domain(self, domain):
        return FreeModule(domain, self.nvars, self.rank, self.order,
                          self.var_names)

    # -- element construction ----------------------------------------------

    @property
    def zero(self):
        return FreeElem(self, ())

    def elem(self, terms):
        """Canonicalize (coeff, mono, basis) triples into a FreeElem.

        Coefficients may be RingElems or raw convertibles; equal module
        monomials are combined and zeros dropped.
        """
        acc = {}
        for coeff, mono, basis in terms:
            if not isinstance(coeff, RingElem):
                coeff = self.domain.elem(coeff)
            elif coeff.domain != self.domain:
                raise DomainError("coefficient from the wrong domain")
            mono = tuple(mono)
            if len(mono) != self.nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono}")
            if not 1 <= basis <= self.rank:
                raise ValueError(f"basis index {basis} out of range")
            key = (mono, basis)
            acc[key] = acc[key] + coeff if key in acc else coeff
        tk = self.order.term_key
        out = [Term(c, m, b) for (m, b), c in acc.items() if c]
        out.sort(key=lambda t: tk(t.mono, t.basis), reverse=True)
        return FreeElem(self, tuple(out))

    def from_sorted(self, terms):
        """Wrap terms already strictly decreasing and canonical."""
        return FreeElem(self, tuple(terms))

    def mono_elem(self, coeff, mono, basis=1):
        return self.elem([(coeff, mono, basis)])

    def var(self, i, coeff=1):
        """coeff * x_i as an element (rank-1 helper)."""
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.elem([(coeff, mono, 1)])


class FreeElem:
    """An element of a FreeModule; immutable, terms sorted descending."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FreeElem) and self.module == other.module
                and self.terms == other.terms)

    def __hash__(self):
        return hash(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def leading_term(self):
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        return self.terms[0]

    def _merge(self, other, negate):
        if self.module != other.module:
            raise DomainError("elements of different modules")
        tkey = self.module.order.term_key
        a, b = self.terms, other.terms
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ta, tb = a[i], b[j]
            ka = tkey(ta.mono, ta.basis)
            kb = tkey(tb.mono, tb.basis)
            if ka > kb:
                out.append(ta)
                i += 1
            elif ka < kb:
                out.append(Term(-tb.coeff, tb.mono, tb.basis) if negate else tb)
                j += 1
            else:
                c = ta.coeff - tb.coeff if negate else ta.coeff + tb.coeff
                if c:
                    out.append(Term(c, ta.mono, ta.basis))
                i += 1
                j += 1
        out.extend(a[i:])
        if negate:
            out.extend(Term(-t.coeff, t.mono, t.basis) for t in b[j:])
        else:
            out.extend(b[j:])
        return FreeElem(self.module, tuple(out))

    def __add__(self, other):
        return self._merge(other, False)

    def __sub__(self, other):
        return self._merge(other, True)

    def __neg__(self):
        return FreeElem(self.module,
                        tuple(Term(-t.coeff, t.mono, t.basis)
                              for t in self.terms))

    def scale(self, coeff, mono=None):
        """Multiply by the ring term coeff * x^mono.

        Multiplicativity of the order keeps the terms sorted, and the
        domain being an integral domain keeps the coefficients nonzero.
        """
        if not isinstance(coeff, RingElem):
            coeff = self.module.domain.elem(coeff)
        if not coeff:
            return self.module.zero
        if mono is None:
            mono = mono_one(self.module.nvars)
        return FreeElem(self.module,
                        tuple(Term(t.coeff * coeff, mono_mul(t.mono, mono),
                                   t.basis)
                              for t in self.terms))

    def mul_poly(self, poly_terms):
        """Multiply by a ring polynomial given as (coeff, mono) pairs."""
        acc = self.module.zero
        for coeff, mono in poly_terms:
            acc = acc + self.scale(coeff, mono)
        return acc

    def drop_leading(self):
        return FreeElem(self.module, self.terms[1:])

    def coeff_of(self, mono, basis=1):
        for t in self.terms:
            if t.mono == tuple(mono) and t.basis == basis:
                return t.coeff
        return self.module.domain.zero

    def __repr__(self):
        return format_elem(self)


def leading_term(w, order=None):
    """The term with the greatest (monomial, basis) under the order.

    With no explicit order the element's ambient order applies (its
    terms are already sorted for it).
    """
    if not w:
        raise ValueError("the zero element has no leading term")
    if order is None or order == w.module.order:
        return w.terms[0]
    return max(w.terms, key=lambda t: order.term_key(t.mono, t.basis))


# -- printing ----------------------------------------------------------------


def format_mono(mono, var_names):
    parts = []
    for name, e in zip(var_names, mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _coeff_sign_body(coeff):
    """(sign, printable magnitude).  Only ZZ/QQ carry a sign outside."""
    dom = coeff.domain
    if coeff.value == dom.pone():
        return 1, "1"
    text = dom.pformat(coeff.value)
    if text.startswith("-"):
        return -1, text[1:]
    return 1, text


def format_term(term, var_names, rank):
    sign, body = _coeff_sign_body(term.coeff)
    mono = format_mono(term.mono, var_names)
    basis = f"e{term.basis}" if rank > 1 else ""
    factors = [p for p in (mono, basis) if p]
    if not factors:
        out = body
    elif body == "1":
        out = "*".join(factors)
    else:
        out = "*".join([body] + factors)
    return sign, out

def format_elem(w):
    """Render an element in the problem-file expression syntax."""
    if not w:
        return "0"
    names = w.module.var_names
    rank = w.module.rank
    parts = []
    for i, t in enumerate(w.terms):
        sign, body = format_term(t, names, rank)
        if i == 0:
            parts.append(body if sign > 0 else "-" + body)
        else:
            parts.append(("+ " if sign > 0 else "- ") + body)
    return " ".join(parts)
