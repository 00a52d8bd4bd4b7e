"""Exact arithmetic for the supported coefficient domains.

Basis computations here run over a coefficient ring A rather than a
field, so every reduction step has to solve a linear equation
``c = u_1*c_1 + ... + u_k*c_k`` inside A.  All domains provided are
Euclidean with a computable extended gcd, which is enough.

Elements are immutable :class:`RingElem` values carrying their domain.
Payloads by domain:

* ``ZZ``                  ``int``
* ``QQ``                  ``fractions.Fraction``
* ``GF(p)``               ``int`` in ``[0, p)``
* ``GF(p)[v]``, ``QQ[v]`` dense coefficient ``tuple``, little endian,
  no trailing zeros; ``()`` is zero
* ``localize(A, a)``      ``(numerator payload, power)`` for num / a**power

Unit normalization is fixed per domain (positive on ``ZZ``, monic for
polynomials, 1 in fields, a-free positive/monic core in localizations)
so basis computations are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class DomainError(ValueError):
    """Domain mismatch, or an argument outside an operation's contract."""


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any sane modulus here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Base class: payload-level exact arithmetic plus extended gcd."""

    is_field = False
    characteristic = 0
    contains_field = False

    # -- payload protocol -------------------------------------------------

    def pzero(self):
        raise NotImplementedError

    def pone(self):
        raise NotImplementedError

    def padd(self, a, b):
        raise NotImplementedError

    def pneg(self, a):
        raise NotImplementedError

    def pmul(self, a, b):
        raise NotImplementedError

    def pis_zero(self, a):
        raise NotImplementedError

    def pexact_div(self, a, b):
        """Payload a/b if b divides a exactly, else None.  b must be nonzero."""
        raise NotImplementedError

    def pext_gcd(self, a, b):
        """(g, u, v) with g = u*a + v*b, g unit-normalized, not both zero."""
        raise NotImplementedError

    def punit_normalize(self, a):
        """(unit, canonical) with a == unit * canonical."""
        raise NotImplementedError

    def pconvert(self, obj):
        """Build a payload from a plain Python object."""
        raise NotImplementedError

    def pformat(self, a):
        """Literal form, parseable by the problem-file grammar."""
        raise NotImplementedError

    # -- derived payload helpers ------------------------------------------

    def psub(self, a, b):
        return self.padd(a, self.pneg(b))

    def pis_unit(self, a):
        if self.pis_zero(a):
            return False
        _, n = self.punit_normalize(a)
        return n == self.pone()

    def punit_inv(self, u):
        inv = self.pexact_div(self.pone(), u)
        if inv is None:
            raise DomainError("not a unit")
        return inv

    def pdivides(self, a, b):
        """True when a divides b (a nonzero)."""
        return self.pexact_div(b, a) is not None

    def ppow(self, a, k):
        if k < 0:
            raise DomainError("negative exponent")
        r = self.pone()
        while k:
            if k & 1:
                r = self.pmul(r, a)
            a = self.pmul(a, a)
            k >>= 1
        return r

    def pstrip(self, x, a):
        """Greedy gcd-stripping of a-parts: (core, rounds) with x = core*d,
        d | a**rounds and gcd(core, a) a unit."""
        if self.pis_zero(x):
            return x, 0
        core, k = x, 0
        while True:
            g, _, _ = self.pext_gcd(core, a)
            if self.pis_unit(g):
                return core, k
            core = self.pexact_div(core, g)
            k += 1

    # -- element-level conveniences ---------------------------------------

    def elem(self, obj):
        return RingElem(self, self.pconvert(obj))

    @property
    def zero(self):
        return RingElem(self, self.pzero())

    @property
    def one(self):
        return RingElem(self, self.pone())

    def __ne__(self, other):
        return not self.__eq__(other)


class IntegerDomain(Domain):
    """The rational integers."""

    def __repr__(self):
        return "ZZ"

    def pzero(self):
        return 0

    def pone(self):
        return 1

    def padd(self, a, b):
        return a + b

    def pneg(self, a):
        return -a

    def pmul(self, a, b):
        return a * b

    def pis_zero(self, a):
        return a == 0

    def pexact_div(self, a, b):
        q, r = divmod(a, b)
        return q if r == 0 else None

    def pdivmod(self, a, b):
        return divmod(a, b)

    def pext_gcd(self, a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            return -old_r, -old_s, -old_t
        return old_r, old_s, old_t

    def punit_normalize(self, a):
        if a < 0:
            return -1, -a
        return 1, a

    def pconvert(self, obj):
        if isinstance(obj, RingElem):
            obj = obj.value
        if isinstance(obj, int):
            return obj
        raise DomainError(f"cannot convert {obj!r} to an integer")

    def pformat(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntegerDomain)

    def __hash__(self):
        return hash("ZZ")


class RationalDomain(Domain):
    """The rational numbers."""

    is_field = True
    contains_field = True

    def __repr__(self):
        return "QQ"

    def pzero(self):
        return Fraction(0)

    def pone(self):
        return Fraction(1)

    def padd(self, a, b):
        return a + b

    def pneg(self, a):
        return -a

    def pmul(self, a, b):
        return a * b

    def pis_zero(self, a):
        return a == 0

    def pexact_div(self, a, b):
        return a / b

    def pdivmod(self, a, b):
        return a / b, Fraction(0)

    def pext_gcd(self, a, b):
        if a != 0:
            return Fraction(1), 1 / a, Fraction(0)
        return Fraction(1), Fraction(0), 1 / b

    def punit_normalize(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return a, Fraction(1)

    def pconvert(self, obj):
        if isinstance(obj, RingElem):
            obj = obj.value
        if isinstance(obj, (int, Fraction)):
            return Fraction(obj)
        raise DomainError(f"cannot convert {obj!r} to a rational")

    def pformat(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("QQ")


class PrimeFieldDomain(Domain):
    """GF(p) for a prime p, values stored in [0, p)."""

    is_field = True
    contains_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    def pzero(self):
        return 0

    def pone(self):
        return 1

    def padd(self, a, b):
        return (a + b) % self.p

    def pneg(self, a):
        return -a % self.p

    def pmul(self, a, b):
        return a * b % self.p

    def pis_zero(self, a):
        return a == 0

    def pexact_div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def pdivmod(self, a, b):
        return self.pexact_div(a, b), 0

    def pext_gcd(self, a, b):
        if a != 0:
            return 1, pow(a, -1, self.p), 0
        return 1, 0, pow(b, -1, self.p)

    def punit_normalize(self, a):
        if a == 0:
            return 1, 0
        return a, 1

    def pconvert(self, obj):
        if isinstance(obj, RingElem):
            obj = obj.value
        if isinstance(obj, int):
            return obj % self.p
        raise DomainError(f"cannot convert {obj!r} to GF({self.p})")

    def pformat(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeFieldDomain) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class PolynomialDomain(Domain):
    """Univariate polynomials over GF(p) or QQ, dense little-endian tuples."""

    def __init__(self, base, var):
        if not base.is_field:
            raise DomainError("coefficient field required")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.contains_field = True

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"

    def _trim(self, coeffs):
        n = len(coeffs)
        while n and self.base.pis_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    def pzero(self):
        return ()

    def pone(self):
        return (self.base.pone(),)

    def padd(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.base.padd(out[i], c)
        return self._trim(out)

    def pneg(self, a):
        return tuple(self.base.pneg(c) for c in a)

    def pmul(self, a, b):
        if not a or not b:
            return ()
        out = [self.base.pzero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = self.base.padd(out[i + j], self.base.pmul(ca, cb))
        return self._trim(out)

    def pis_zero(self, a):
        return not a

    def pdivmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a)
        quot = [self.base.pzero()] * max(len(a) - len(b) + 1, 0)
        inv_lead = self.base.pexact_div(self.base.pone(), b[-1])
        for i in range(len(rem) - len(b), -1, -1):
            c = self.base.pmul(rem[i + len(b) - 1], inv_lead)
            if self.base.pis_zero(c):
                continue
            quot[i] = c
            for j, bc in enumerate(b):
                rem[i + j] = self.base.psub(rem[i + j], self.base.pmul(c, bc))
        return self._trim(quot), self._trim(rem)

    def pexact_div(self, a, b):
        q, r = self.pdivmod(a, b)
        return q if not r else None

    def pext_gcd(self, a, b):
        old_r, r = a, b
        old_s, s = self.pone(), self.pzero()
        old_t, t = self.pzero(), self.pone()
        while r:
            q, rem = self.pdivmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, self.psub(old_s, self.pmul(q, s))
            old_t, t = t, self.psub(old_t, self.pmul(q, t))
        unit, g = self.punit_normalize(old_r)
        if g != old_r:
            inv = (self.base.pexact_div(self.base.pone(), unit[0]),)
            old_s = self.pmul(old_s, inv)
            old_t = self.pmul(old_t, inv)
        return g, old_s, old_t

    def punit_normalize(self, a):
        if not a:
            return self.pone(), ()
        lead = a[-1]
        if lead == self.base.pone():
            return self.pone(), a
        inv = self.base.pexact_div(self.base.pone(), lead)
        return (lead,), tuple(self.base.pmul(c, inv) for c in a)

    def pconvert(self, obj):
        if isinstance(obj, RingElem):
            obj = obj.value
        if isinstance(obj, int):
            return self._trim([self.base.pconvert(obj)])
        if isinstance(obj, Fraction):
            return self._trim([self.base.pconvert(obj)])
        if isinstance(obj, (list, tuple)):
            return self._trim([self.base.pconvert(c) for c in obj])
        raise DomainError(f"cannot convert {obj!r} to {self!r}")

    @property
    def gen(self):
        """The coefficient variable as an element."""
        return RingElem(self, (self.base.pzero(), self.base.pone()))

    def pformat(self, a):
        if not a:
            return "{0}"
        parts = []
        for e in range(len(a) - 1, -1, -1):
            c = a[e]
            if self.base.pis_zero(c):
                continue
            cs = self.base.pformat(c)
            if e == 0:
                parts.append(cs)
            else:
                head = "" if cs == "1" else cs + "*"
                parts.append(head + (self.var if e == 1 else f"{self.var}^{e}"))
        return "{" + " + ".join(parts) + "}"

    def __eq__(self, other):
        return (isinstance(other, PolynomialDomain)
                and other.base == self.base and other.var == self.var)

    def __hash__(self):
        return hash(("poly", self.base, self.var))


class LocalizedDomain(Domain):
    """The localization A[1/a]; payloads are (numerator, power) pairs.

    Canonical form has minimal power: the denominator is constrained to be
    an exact power of a, so only whole factors of a are cancelled.  Units
    are exactly the elements whose a-core (greedy gcd-stripping) is a unit
    of A, and divisibility reduces to divisibility of cores in A.
    """

    def __init__(self, base, a):
        if base.pis_zero(a):
            raise DomainError("cannot invert zero")
        self.base = base
        self.a = a
        self.characteristic = base.characteristic
        self.contains_field = base.contains_field

    def __repr__(self):
        return f"{self.base!r}[1/{self.base.pformat(self.a)}]"

    def _canon(self, num, k):
        base = self.base
        if base.pis_zero(num):
            return (num, 0)
        while k > 0:
            q = base.pexact_div(num, self.a)
            if q is None:
                break
            num, k = q, k - 1
        return (num, k)

    def pzero(self):
        return (self.base.pzero(), 0)

    def pone(self):
        return (self.base.pone(), 0)

    def padd(self, x, y):
        (n1, k1), (n2, k2) = x, y
        base = self.base
        k = max(k1, k2)
        n = base.padd(base.pmul(n1, base.ppow(self.a, k - k1)),
                      base.pmul(n2, base.ppow(self.a, k - k2)))
        return self._canon(n, k)

    def pneg(self, x):
        return (self.base.pneg(x[0]), x[1])

    def pmul(self, x, y):
        return self._canon(self.base.pmul(x[0], y[0]), x[1] + y[1])

    def pis_zero(self, x):
        return self.base.pis_zero(x[0])

    def _core(self, x):
        """(core, unit numerator part, multiplicity bound): x = core * d / a^k."""
        core, rounds = self.base.pstrip(x[0], self.a)
        d = self.base.pexact_div(x[0], core)
        return core, d, rounds

    def _unit_inverse(self, d, k, rounds):
        """Inverse of the unit d/a^k where d | a^rounds."""
        base = self.base
        q = base.pexact_div(base.ppow(self.a, rounds), d)
        return self._canon(base.pmul(base.ppow(self.a, k), q), rounds)

    def pexact_div(self, x, y):
        if self.pis_zero(y):
            raise ZeroDivisionError
        if self.pis_zero(x):
            return self.pzero()
        cx, dx, _ = self._core(x)
        cy, dy, ry = self._core(y)
        q = self.base.pexact_div(cx, cy)
        if q is None:
            return None
        inv_unit = self._unit_inverse(dy, y[1], ry)
        return self.pmul(self._canon(self.base.pmul(q, dx), x[1]), inv_unit)

    def pext_gcd(self, x, y):
        base = self.base
        if self.pis_zero(x):
            g = (base.punit_normalize(base.pstrip(y[0], self.a)[0])[1], 0)
            v = self.pexact_div(g, y)
            return g, self.pzero(), v
        if self.pis_zero(y):
            g = (base.punit_normalize(base.pstrip(x[0], self.a)[0])[1], 0)
            u = self.pexact_div(g, x)
            return g, u, self.pzero()
        # Bezout over A on the cores, then divide the unit parts back out.
        cx, _, _ = self._core(x)
        cy, _, _ = self._core(y)
        gb, ub, vb = base.pext_gcd(cx, cy)
        u = self.pmul((ub, 0), self._unit_of(x))
        v = self.pmul((vb, 0), self._unit_of(y))
        return (gb, 0), u, v

    def _unit_of(self, x):
        """Inverse of x / core(x), i.e. the unit with x = core * unit."""
        _, d, rounds = self._core(x)
        return self._unit_inverse(d, x[1], rounds)

    def punit_normalize(self, x):
        if self.pis_zero(x):
            return self.pone(), self.pzero()
        core, _, _ = self._core(x)
        _, n = self.base.punit_normalize(core)
        unit = self.pexact_div(x, (n, 0))
        return unit, (n, 0)

    def pconvert(self, obj):
        if isinstance(obj, RingElem):
            if obj.domain == self:
                return obj.value
            return (self.base.pconvert(obj), 0)
        return self._canon(self.base.pconvert(obj), 0)

    def pformat(self, x):
        num = self.base.pformat(x[0])
        if x[1] == 0:
            return num
        return f"{num}/({self.base.pformat(self.a)})^{x[1]}"

    def __eq__(self, other):
        return (isinstance(other, LocalizedDomain)
                and other.base == self.base and other.a == self.a)

    def __hash__(self):
        return hash(("loc", self.base, self.a))


class RingElem:
    """An immutable element of one of the coefficient domains."""

    __slots__ = ("domain", "value")

    def __init__(self, domain, value):
        self.domain = domain
        self.value = value

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.domain is self.domain or other.domain == self.domain:
                return other.value
            raise DomainError(f"domain mismatch: {self.domain!r} vs {other.domain!r}")
        return self.domain.pconvert(other)

    def __add__(self, other):
        return RingElem(self.domain, self.domain.padd(self.value, self._coerce(other)))

    def __sub__(self, other):
        return RingElem(self.domain, self.domain.psub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return RingElem(self.domain, self.domain.pmul(self.value, self._coerce(other)))

    def __neg__(self):
        return RingElem(self.domain, self.domain.pneg(self.value))

    def __pow__(self, k):
        return RingElem(self.domain, self.domain.ppow(self.value, k))

    def __bool__(self):
        return not self.domain.pis_zero(self.value)

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = self.domain.elem(other)
            except DomainError:
                return NotImplemented
        return self.domain == other.domain and self.value == other.value

    def __hash__(self):
        return hash((self.domain, self.value))

    def __repr__(self):
        return self.domain.pformat(self.value)

    def exact_div(self, other):
        """self/other when the division is exact in the domain, else None."""
        q = self.domain.pexact_div(self.value, self._coerce(other))
        return None if q is None else RingElem(self.domain, q)

    def divides(self, other):
        if not self:
            raise DomainError("zero divides nothing")
        return self.domain.pexact_div(self._coerce(other), self.value) is not None

    @property
    def is_unit(self):
        return self.domain.pis_unit(self.value)

    def unit_normalized(self):
        _, n = self.domain.punit_normalize(self.value)
        return RingElem(self.domain, n)


# -- public constructors ---------------------------------------------------

ZZ = IntegerDomain()
QQ = RationalDomain()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeFieldDomain(p)


@lru_cache(maxsize=None)
def poly_domain(base, var):
    return PolynomialDomain(base, var)


@lru_cache(maxsize=None)
def _localized(base, a_payload):
    return LocalizedDomain(base, a_payload)


def localize(domain, a):
    """A[1/a].  Returns the domain unchanged when a is a unit."""
    a_val = domain.pconvert(a)
    if domain.pis_zero(a_val):
        raise DomainError("cannot invert zero")
    if domain.pis_unit(a_val):
        return domain
    if isinstance(domain, LocalizedDomain):
        raise DomainError("iterated localization is not supported")
    _, a_norm = domain.punit_normalize(a_val)
    return _localized(domain, a_norm)


# -- module-level element operations ----------------------------------------


def ext_gcd(x, y):
    """Extended gcd: (g, u, v) with g = u*x + v*y, g unit-normalized.

    Works in any of the supported domains; in a field the gcd of anything
    nonzero is 1.  Raises for a domain mismatch or two zero arguments.
    """
    if not isinstance(x, RingElem) or not isinstance(y, RingElem):
        raise DomainError("ext_gcd expects ring elements")
    if x.domain != y.domain:
        raise DomainError(f"domain mismatch: {x.domain!r} vs {y.domain!r}")
    if not x and not y:
        raise DomainError("ext_gcd(0, 0) is undefined")
    dom = x.domain
    g, u, v = dom.pext_gcd(x.value, y.value)
    return RingElem(dom, g), RingElem(dom, u), RingElem(dom, v)


def gcd(x, y):
    return ext_gcd(x, y)[0]


def lcm(x, y):
    """Unit-normalized least common multiple; (x) and (y) meet in (lcm)."""
    if not x or not y:
        raise DomainError("lcm of zero is undefined")
    g, _, _ = ext_gcd(x, y)
    m = (x * y).exact_div(g)
    return m.unit_normalized()


def localized_elem(locdom, num, power=0):
    """num / a**power as an element of a localization."""
    if not isinstance(locdom, LocalizedDomain):
        raise DomainError("localized domain required")
    return RingElem(locdom, locdom._canon(locdom.base.pconvert(num), power))


def loc_parts(elem):
    """(numerator over the base domain, a-power) of a localized element."""
    dom = elem.domain
    if not isinstance(dom, LocalizedDomain):
        raise DomainError("localized element required")
    return RingElem(dom.base, elem.value[0]), elem.value[1]


def strip_witness(x, a):
    """Remove from x every factor shared with powers of a.

    Returns (core, k): x = core * d with d | a**k and gcd(core, a) a unit.
    strip_witness(0, a) is (0, 0).
    """
    if not isinstance(x, RingElem) or not isinstance(a, RingElem):
        raise DomainError("strip_witness expects ring elements")
    if x.domain != a.domain:
        raise DomainError("domain mismatch")
    if not a:
        raise DomainError("witness must be nonzero")
    core, k = x.domain.pstrip(x.value, a.value)
    return RingElem(x.domain, core), k
