"""Echelon forms and span membership over a Euclidean domain.

This is the linear-algebra route for deciding membership in degree
slices of a submodule: stack the coefficient vectors of monomial
multiples of the generators, echelonize with extended-gcd row
operations (Hermite normal form over ZZ and k[t]; plain row reduction
over a field, where every gcd is a unit), and test a vector by
successive exact division against the pivots.  It shares nothing with
the reduction engine beyond the domain arithmetic, so it serves as an
independent check of Groebner normal forms.
"""

from __future__ import annotations

from .orders import mono_deg, mono_mul


class EchelonForm:
    """Row echelon form over a Euclidean domain, built incrementally."""

    def __init__(self, dom, width):
        self.dom = dom
        self.width = width
        self.rows = []     # echelon rows, pivot columns strictly increasing
        self.pivots = []   # pivot column per row

    def _pivot_col(self, row):
        dom = self.dom
        for c in range(self.width):
            if not dom.pis_zero(row[c]):
                return c
        return None

    def add_row(self, row):
        """Insert one row, restoring the echelon invariant."""
        dom = self.dom
        row = list(row)
        i = 0
        while True:
            c = self._pivot_col(row)
            if c is None:
                return
            while i < len(self.rows) and self.pivots[i] < c:
                i += 1
            if i == len(self.rows) or self.pivots[i] > c:
                u, norm = dom.punit_normalize(row[c])
                if norm != row[c]:
                    inv = dom.punit_inv(u)
                    row = [dom.pmul(inv, x) for x in row]
                self.rows.insert(i, row)
                self.pivots.insert(i, c)
                self._reduce_above(i)
                return
            # same pivot column: combine to the gcd, continue with the rest
            piv = self.rows[i]
            a, b = piv[c], row[c]
            q = dom.pexact_div(b, a)
            if q is not None:
                nq = dom.pneg(q)
                row = [dom.padd(x, dom.pmul(nq, y)) for x, y in zip(row, piv)]
                continue
            g, u, v = dom.pext_gcd(a, b)
            ca, cb = dom.pexact_div(a, g), dom.pexact_div(b, g)
            new_piv = [dom.padd(dom.pmul(u, x), dom.pmul(v, y))
                       for x, y in zip(piv, row)]
            new_row = [dom.psub(dom.pmul(ca, y), dom.pmul(cb, x))
                       for x, y in zip(piv, row)]
            self.rows[i] = new_piv
            self._reduce_above(i)
            row = new_row

    def _reduce_above(self, i):
        """Shrink the entries above pivot i when the domain has divmod."""
        dom = self.dom
        pdivmod = getattr(dom, "pdivmod", None)
        if pdivmod is None:
            return
        c = self.pivots[i]
        piv = self.rows[i]
        for j in range(i):
            q, _ = pdivmod(self.rows[j][c], piv[c])
            if dom.pis_zero(q):
                continue
            nq = dom.pneg(q)
            self.rows[j] = [dom.padd(x, dom.pmul(nq, y))
                            for x, y in zip(self.rows[j], piv)]

    def residue(self, row):
        """Remainder of a vector after elimination against the rows."""
        dom = self.dom
        row = list(row)
        for i, c in enumerate(self.pivots):
            if dom.pis_zero(row[c]):
                continue
            q = dom.pexact_div(row[c], self.rows[i][c])
            if q is None:
                # not in the span; the pivot cannot clear this entry
                return row
            nq = dom.pneg(q)
            row = [dom.padd(x, dom.pmul(nq, y))
                   for x, y in zip(row, self.rows[i])]
        return row

    def contains(self, row):
        """Membership of the vector in the row span over the domain."""
        res = self.residue(row)
        return all(self.dom.pis_zero(x) for x in res)


def _monomials_upto(nvars, bound):
    """All exponent tuples of total degree <= bound, stable order."""
    out = [()]
    for _ in range(nvars):
        nxt = []
        for m in out:
            used = sum(m)
            for e in range(bound - used + 1):
                nxt.append(m + (e,))
        out = nxt
    return out


class SliceOracle:
    """Membership in the degree-<=bound slice of the span of generators.

    Rows are every x^mono * gen whose monomials all stay within the
    degree bound.  For homogeneous generators this span IS the degree
    slice of the module they generate, for any monomial order, so the
    oracle decides module membership of elements of degree <= bound.
    """

    def __init__(self, gens, bound):
        gens = list(gens)
        if not gens:
            raise ValueError("at least one generator required")
        module = gens[0].module
        self.module = module
        self.bound = bound
        dom = module.domain
        cols = {}
        order = module.order
        col_list = []
        for basis in range(1, module.rank + 1):
            for mono in _monomials_upto(module.nvars, bound):
                col_list.append((mono, basis))
        # pivot on large monomials first
        col_list.sort(key=lambda mb: order.term_key(mb[0], mb[1]),
                      reverse=True)
        for idx, mb in enumerate(col_list):
            cols[mb] = idx
        self.cols = cols
        self.ech = EchelonForm(dom, len(col_list))
        for g in gens:
            top = max(mono_deg(t.mono) for t in g.terms)
            for mult in _monomials_upto(module.nvars, bound - top):
                self.ech.add_row(self._vector(g, mult))

    def _vector(self, g, mult=None):
        dom = self.module.domain
        row = [dom.pzero()] * len(self.cols)
        for t in g.terms:
            mono = t.mono if mult is None else mono_mul(t.mono, mult)
            row[self.cols[(mono, t.basis)]] = t.coeff.value
        return row

    def contains(self, w):
        """True when w lies in the truncated span."""
        if not w:
            return True
        if w.module != self.module:
            raise ValueError("element from another module")
        if any(mono_deg(t.mono) > self.bound for t in w.terms):
            raise ValueError("element exceeds the oracle's degree bound")
        return self.ech.contains(self._vector(w))
