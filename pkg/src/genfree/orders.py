"""Monomial orders on free modules, and gradings.

Monomials are plain exponent tuples.  A module monomial is a pair
(exponents, basis index) with 1-based basis indices; the module order is
always position-over-term with e_1 > e_2 > ... > e_l, on top of a base
order on the ring monomials (lex / grlex / grevlex over a variable
permutation, optionally refined by a weight vector that is compared
first).

Orders are exposed through sort keys: ``mono_key`` and ``term_key``
return tuples whose componentwise comparison realizes the order, with a
bigger key meaning a bigger monomial.  Every key component is a linear
function of the exponents, which makes the orders multiplicative.
"""

from __future__ import annotations

from dataclasses import dataclass


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """b / a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_one(nvars):
    return (0,) * nvars


_BASES = ("lex", "grlex", "grevlex")


class OrderSpec:
    """A monomial order on a rank-l free module over A[x_1..x_r].

    permutation lists variable indices from most to least significant;
    weights, when given, are strictly positive integers compared before
    the base order.
    """

    def __init__(self, base, nvars, permutation=None, weights=None):
        if base not in _BASES:
            raise ValueError(f"unknown base order {base!r}")
        if permutation is None:
            permutation = tuple(range(nvars))
        else:
            permutation = tuple(permutation)
            if sorted(permutation) != list(range(nvars)):
                raise ValueError("permutation must rearrange all variables")
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != nvars:
                raise ValueError("one weight per variable required")
            if any(w <= 0 for w in weights):
                raise ValueError("weights must be strictly positive")
        self.base = base
        self.nvars = nvars
        self.permutation = permutation
        self.weights = weights
        self.mono_key = self._build_key()

    def _build_key(self):
        perm = self.permutation
        rev = tuple(reversed(perm))
        w = self.weights
        if self.base == "lex":
            if w is None:
                return lambda m: tuple(m[i] for i in perm)
            return lambda m: (sum(a * b for a, b in zip(w, m)),
                              *(m[i] for i in perm))
        if self.base == "grlex":
            if w is None:
                return lambda m: (sum(m), *(m[i] for i in perm))
            return lambda m: (sum(a * b for a, b in zip(w, m)),
                              sum(m), *(m[i] for i in perm))
        if w is None:
            return lambda m: (sum(m), *(-m[i] for i in rev))
        return lambda m: (sum(a * b for a, b in zip(w, m)),
                          sum(m), *(-m[i] for i in rev))

    def term_key(self, mono, basis):
        """Sort key on module monomials: position over term, e_1 largest."""
        return (-basis, *self.mono_key(mono))

    def __eq__(self, other):
        return (isinstance(other, OrderSpec)
                and self.base == other.base and self.nvars == other.nvars
                and self.permutation == other.permutation
                and self.weights == other.weights)

    def __hash__(self):
        return hash((self.base, self.nvars, self.permutation, self.weights))

    def __repr__(self):
        extra = ""
        if self.permutation != tuple(range(self.nvars)):
            extra += f", perm={self.permutation}"
        if self.weights:
            extra += f", weights={self.weights}"
        return f"OrderSpec({self.base!r}, {self.nvars}{extra})"


def compare(order, s, t):
    """Trichotomous comparison of two terms by (monomial, basis) only.

    Accepts Term-like objects with .mono and .basis.  -1, 0, 1 for
    s < t, s == t (as monomials), s > t.
    """
    if len(s.mono) != order.nvars or len(t.mono) != order.nvars:
        raise ValueError("dimension mismatch")
    ks = order.term_key(s.mono, s.basis)
    kt = order.term_key(t.mono, t.basis)
    if ks < kt:
        return -1
    if ks > kt:
        return 1
    return 0


@dataclass(frozen=True)
class Grading:
    """Strictly positive variable weights plus per-basis degree shifts."""

    var_weights: tuple
    basis_shifts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "var_weights", tuple(self.var_weights))
        object.__setattr__(self, "basis_shifts", tuple(self.basis_shifts))
        if any(d <= 0 for d in self.var_weights):
            raise ValueError("variable weights must be strictly positive")

    @staticmethod
    def standard(nvars, rank=1):
        return Grading((1,) * nvars, (0,) * rank)

    def degree(self, mono, basis=1):
        shift = self.basis_shifts[basis - 1] if self.basis_shifts else 0
        return sum(w * n for w, n in zip(self.var_weights, mono)) + shift


def graded_degree(term, grading):
    """Weighted degree of a term: w . n + d_basis."""
    if len(term.mono) != len(grading.var_weights):
        raise ValueError("dimension mismatch")
    return grading.degree(term.mono, term.basis)
