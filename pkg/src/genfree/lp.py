"""Exact rational linear feasibility (Phase-I simplex, Bland's rule).

Solves: find y >= 0 with A y >= b, everything in Fractions.  Used to
produce weight vectors for degenerations: the strict inequalities
omega . d >= 1 with omega >= 1 reduce to this form.  Bland's rule makes
the pivot sequence deterministic and cycle-free.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def solve_ge(rows, rhs):
    """Find y >= 0 with rows . y >= rhs, or None when infeasible.

    rows: list of coefficient lists; rhs: list of bounds.  Exact.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    A = [[Fraction(c) for c in row] for row in rows]
    b = [Fraction(v) for v in rhs]
    # standard form A y - s = b with slacks s >= 0
    for i in range(m):
        A[i].extend(Fraction(-1) if j == i else Fraction(0) for j in range(m))
    # make b nonnegative, then add artificials as the starting basis
    for i in range(m):
        if b[i] < 0:
            A[i] = [-c for c in A[i]]
            b[i] = -b[i]
    total = n + m + m
    for i in range(m):
        A[i].extend(Fraction(1) if j == i else Fraction(0) for j in range(m))
    cost = [Fraction(0)] * (n + m) + [Fraction(1)] * m
    basis = list(range(n + m, total))

    # tableau with reduced costs for minimizing the artificial sum
    z = [Fraction(0)] * total
    zval = Fraction(0)
    for i in range(m):
        for j in range(total):
            z[j] += A[i][j]
        zval += b[i]
    # reduced cost of column j: cost[j] - z[j] for artificial cost vector
    while True:
        enter = None
        for j in range(total):
            if cost[j] - z[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if A[i][enter] > 0:
                ratio = b[i] / A[i][enter]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return None  # unbounded phase-I cannot happen, defensive
        piv = A[leave][enter]
        A[leave] = [c / piv for c in A[leave]]
        b[leave] = b[leave] / piv
        for i in range(m):
            if i != leave and A[i][enter] != 0:
                f = A[i][enter]
                A[i] = [c - f * d for c, d in zip(A[i], A[leave])]
                b[i] -= f * b[leave]
        f = z[enter] - cost[enter]
        if f != 0:
            z = [c - f * d for c, d in zip(z, A[leave])]
            zval -= f * b[leave]
        basis[leave] = enter
    if zval != 0:
        return None
    y = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            y[var] = b[i]
    return y


def integer_point_ge(rows, rhs, lower=1):
    """Integer point w >= lower (componentwise) with rows . w >= rhs.

    Substitutes w = lower + y, solves the rational relaxation, clears
    denominators and re-verifies; None when infeasible.
    """
    if not rows:
        return None
    n = len(rows[0])
    shifted = [Fraction(v) - lower * sum(Fraction(c) for c in row)
               for row, v in zip(rows, rhs)]
    y = solve_ge(rows, shifted)
    if y is None:
        return None
    denom = 1
    for v in y:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    # scaling the whole point keeps rows.w >= rhs for positive rhs
    w = [int((lower + v) * denom) for v in y]
    if not _verify(rows, rhs, w, lower):
        return None
    return _shrink(rows, rhs, w, lower)


def _verify(rows, rhs, w, lower):
    if any(c < lower for c in w):
        return False
    return all(sum(c * x for c, x in zip(row, w)) >= v
               for row, v in zip(rows, rhs))


def _shrink(rows, rhs, w, lower):
    g = 0
    for c in w:
        g = gcd(g, c)
    if g > 1:
        cand = [c // g for c in w]
        if _verify(rows, rhs, cand, lower):
            return cand
    return w
