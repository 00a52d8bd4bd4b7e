"""Determinantal specialization instances: scaled generic matrices.

The matrix has entries a_ij x_ij with nonzero scalars a_ij from the
coefficient domain.  Under the antidiagonal order (lexicographic over
the variables read row by row, right to left inside each row) every
t-minor leads with its antidiagonal product, so the minors' initial
terms are square-free monomials times products of the a_ij.  Inverting
the lcm of the a_ij at positions lying on some minor antidiagonal makes
the minors a basis of the ideal they generate, with the classical
generic Hilbert table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .domains import QQ, RingElem, lcm, localize
from .freemodule import FreeModule
from .freeness import (Witness, default_points, hilbert_function,
                       kills_witness, specialize)
from .groebner import DEFAULT_FUEL, GroebnerBasis, buchberger, is_groebner
from .charp import SquarefreeReport, squarefree_report
from .orders import Grading, OrderSpec


@dataclass(frozen=True)
class AntidiagonalComplement:
    """Positions (i, j) on no antidiagonal of any t-minor."""

    positions: frozenset

    def __contains__(self, pos):
        return pos in self.positions

    def sorted(self):
        return sorted(self.positions)


def antidiagonal_complement(m, n, t, sharp=False):
    """The exempt position set: i+j <= t-1 or i+j >= n+m-t+2.

    sharp=True uses the larger literal complement (i+j <= t instead of
    t-1), exposed for experiments only; the freeness statement is
    proved for the default set.
    """
    if not 1 <= t <= m <= n:
        raise ValueError(f"need 1 <= t <= m <= n, got t={t}, m={m}, n={n}")
    low = t if sharp else t - 1
    pos = {(i, j) for i in range(1, m + 1) for j in range(1, n + 1)
           if i + j <= low or i + j >= n + m - t + 2}
    return AntidiagonalComplement(frozenset(pos))


@dataclass
class DetInstance:
    m: int
    n: int
    t: int
    coeffs: tuple          # m x n matrix of nonzero RingElem
    module: FreeModule     # rank-1 module over A[x_ij], antidiagonal lex

    def var_index(self, i, j):
        return (i - 1) * self.n + (j - 1)


def _antidiagonal_order(m, n):
    perm = [(i - 1) * n + (j - 1)
            for i in range(1, m + 1) for j in range(n, 0, -1)]
    return OrderSpec("lex", m * n, permutation=perm)


def _parity_sign(perm):
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
                     if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def build_instance(m, n, t, coeffs=None, domain=QQ):
    """Construct the instance and its t-minors, expanded over A.

    coeffs: m x n nested sequence of nonzero domain values (default all
    ones).  The generators come in (row set, column set) lexicographic
    order, unit-normalized; each minor's leading term is checked to be
    its antidiagonal product.
    """
    if not 1 <= t <= m <= n:
        raise ValueError(f"need 1 <= t <= m <= n, got t={t}, m={m}, n={n}")
    if coeffs is None:
        coeffs = [[domain.one] * n for _ in range(m)]
    matrix = []
    for i in range(m):
        row = []
        for j in range(n):
            c = coeffs[i][j]
            if not isinstance(c, RingElem):
                c = domain.elem(c)
            if not c:
                raise ValueError(f"zero coefficient at position {(i + 1, j + 1)}")
            row.append(c)
        matrix.append(tuple(row))
    wide = n > 9 or m > 9
    names = tuple(f"x{i}_{j}" if wide else f"x{i}{j}"
                  for i in range(1, m + 1) for j in range(1, n + 1))
    module = FreeModule(domain, m * n, 1, _antidiagonal_order(m, n), names)
    inst = DetInstance(m, n, t, tuple(matrix), module)
    gens = []
    for rows in combinations(range(1, m + 1), t):
        for cols in combinations(range(1, n + 1), t):
            gens.append(_minor(inst, rows, cols))
    return inst, gens


def _minor(inst, rows, cols):
    module = inst.module
    dom = module.domain
    t = len(rows)
    terms = []
    for sigma in permutations(range(t)):
        coeff = dom.one
        mono = [0] * module.nvars
        for a in range(t):
            i, j = rows[a], cols[sigma[a]]
            coeff = coeff * inst.coeffs[i - 1][j - 1]
            mono[inst.var_index(i, j)] += 1
        if _parity_sign(sigma) < 0:
            coeff = -coeff
        terms.append((coeff, tuple(mono), 1))
    w = module.elem(terms)
    w = w if _lead_is_positive(w) else -w
    anti = [0] * module.nvars
    for a in range(t):
        anti[inst.var_index(rows[a], cols[t - 1 - a])] += 1
    assert w.leading_term.mono == tuple(anti), \
        "minor does not lead with its antidiagonal"
    return w


def _lead_is_positive(w):
    dom = w.module.domain
    u, _ = dom.punit_normalize(w.leading_term.coeff.value)
    return u == dom.pone()


def det_witness(inst, sharp=False):
    """lcm of the a_ij at positions on some minor antidiagonal
    (the complement of the exempt set), unit-normalized."""
    exempt = antidiagonal_complement(inst.m, inst.n, inst.t, sharp)
    value = inst.module.domain.one
    factors = []
    for i in range(1, inst.m + 1):
        for j in range(1, inst.n + 1):
            if (i, j) in exempt:
                continue
            c = inst.coeffs[i - 1][j - 1]
            if not c.is_unit:
                factors.append((c.unit_normalized(), inst.var_index(i, j)))
                value = lcm(value, c)
    return Witness(value, tuple(factors))


@dataclass
class DetFiber:
    point: object
    table: object
    equal: bool
    witness_killed: bool


@dataclass
class DetReport:
    instance: DetInstance
    witness: Witness
    exempt: AntidiagonalComplement
    gb_certified: bool
    squarefree: SquarefreeReport
    generic_table: object
    fibers: tuple
    bound: int

    @property
    def passed(self):
        fibers_ok = all(f.equal for f in self.fibers if not f.witness_killed)
        return self.gb_certified and self.squarefree.squarefree and fibers_ok


def verify_instance(inst, gens, bound=3, points=None, *, sharp=False,
                    fuel=DEFAULT_FUEL):
    """Certify the minors over the witness localization, check the
    square-free hypothesis, and compare fiber Hilbert tables with the
    generic (all-units) table through the degree bound."""
    module = inst.module
    dom = module.domain
    wit = det_witness(inst, sharp)
    locdom = localize(dom, wit.value)
    if locdom is dom:
        loc_module, loc_gens = module, list(gens)
    else:
        loc_module = module.with_domain(locdom)
        loc_gens = [loc_module.elem([(locdom.elem(t.coeff), t.mono, t.basis)
                                     for t in g.terms]) for g in gens]
    certified = is_groebner(loc_gens)
    grading = Grading.standard(module.nvars, 1)
    loc_basis = GroebnerBasis(tuple(loc_gens), loc_module.order,
                              tuple(g.leading_term for g in loc_gens),
                              certified, loc_module)
    sqfree = squarefree_report(loc_basis, grading) if certified else \
        SquarefreeReport(False, (), wit, dom.contains_field)
    generic = hilbert_function([g.leading_term for g in gens], grading,
                               (0, bound))
    if points is None:
        points = default_points(module, wit)
    fibers = []
    for point in points:
        killed = kills_witness(wit, point, module)
        spec = specialize(gens, point, module=module)
        fiber_basis = buchberger(spec.gens, fuel=fuel, module=spec.module)
        table = hilbert_function(fiber_basis.initial_terms, grading,
                                 (0, bound))
        fibers.append(DetFiber(point, table, table == generic, killed))
    exempt = antidiagonal_complement(inst.m, inst.n, inst.t, sharp)
    return DetReport(inst, wit, exempt, certified, sqfree, generic,
                     tuple(fibers), bound)
