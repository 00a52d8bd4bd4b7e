"""The plain-text problem file format: parser and printer.

    ring GF(2)[t]
    vars x y
    order lex
    gens:
    {t}*x + y^2

A file declares the coefficient domain, the ring variables, optionally
an order (default grevlex), a weight refinement, a grading, and the
module rank with basis shifts, then lists one generator per line.
Coefficients are integer or rational literals, or braced univariate
polynomials in the coefficient variable; basis vectors are written e1,
e2, ...  The lexer and parser report positions as line:column, and the
printer emits a canonical form whose reparse is semantically identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .domains import GF, QQ, ZZ, PolynomialDomain, RingElem, is_prime, poly_domain
from .freemodule import FreeModule, format_elem
from .orders import Grading, OrderSpec

_BASIS_RE = re.compile(r"^e[0-9]+$")
_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")
_PUNCT = {"{": "LBRACE", "}": "RBRACE", "(": "LPAREN", ")": "RPAREN",
          "[": "LBRACK", "]": "RBRACK", "^": "CARET", "*": "STAR",
          "+": "PLUS", "-": "MINUS", "/": "SLASH", ":": "COLON"}


class ParseError(ValueError):
    """A lexical, syntactic or semantic problem, with its position."""

    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            tokens.append(Token("NEWLINE", "\n", line, col))
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, col))
            col += i - start
            continue
        if ch in _IDENT_START:
            start = i
            while i < n and text[i] in _IDENT_CONT:
                i += 1
            tokens.append(Token("IDENT", text[start:i], line, col))
            col += i - start
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


@dataclass
class ProblemFile:
    domain: object
    var_names: tuple
    order: OrderSpec
    grading: Grading
    rank: int
    module: FreeModule
    gens: tuple
    weights: tuple = None


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what or kind.lower()}, "
                             f"found {tok.text!r}", tok.line, tok.col)
        return self.next()

    def skip_newlines(self):
        while self.peek().kind == "NEWLINE":
            self.next()

    def end_of_line(self):
        tok = self.peek()
        if tok.kind == "EOF":
            return
        if tok.kind != "NEWLINE":
            raise ParseError(f"unexpected {tok.text!r} before end of line",
                             tok.line, tok.col)
        self.next()

    # -- header ------------------------------------------------------------

    def parse_domain(self):
        tok = self.expect("IDENT", "a coefficient domain")
        name = tok.text
        if name == "ZZ":
            return ZZ
        if name == "QQ":
            if self.peek().kind == "LBRACK":
                self.next()
                var = self.expect("IDENT", "the coefficient variable").text
                self.expect("RBRACK")
                return poly_domain(QQ, var)
            return QQ
        if name == "GF":
            self.expect("LPAREN")
            ptok = self.expect("INT", "a prime")
            p = int(ptok.text)
            if not is_prime(p):
                raise ParseError(f"{p} is not prime", ptok.line, ptok.col)
            self.expect("RPAREN")
            if self.peek().kind == "LBRACK":
                self.next()
                var = self.expect("IDENT", "the coefficient variable").text
                self.expect("RBRACK")
                return poly_domain(GF(p), var)
            return GF(p)
        raise ParseError(f"unknown coefficient domain {name!r}",
                         tok.line, tok.col)

    def parse(self):
        self.skip_newlines()
        kw = self.expect("IDENT", "'ring'")
        if kw.text != "ring":
            raise ParseError("a problem file starts with 'ring'",
                             kw.line, kw.col)
        domain = self.parse_domain()
        self.end_of_line()
        var_names = None
        var_tok = None
        order_name, perm_names, order_tok = None, None, None
        weights = grading = None
        weights_tok = grading_tok = None
        rank, shifts, module_tok = None, None, None
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "EOF":
                raise ParseError("missing 'gens:' section", tok.line, tok.col)
            if tok.kind != "IDENT":
                raise ParseError(f"expected a stanza, found {tok.text!r}",
                                 tok.line, tok.col)
            if tok.text == "gens":
                self.next()
                self.expect("COLON")
                self.end_of_line()
                break
            self.next()
            if tok.text == "vars":
                var_tok = tok
                var_names = []
                while self.peek().kind == "IDENT":
                    var_names.append(self.next())
                if not var_names:
                    raise ParseError("at least one variable required",
                                     tok.line, tok.col)
                self.end_of_line()
            elif tok.text == "order":
                order_tok = self.expect("IDENT", "lex, grlex or grevlex")
                if order_tok.text not in ("lex", "grlex", "grevlex"):
                    raise ParseError(f"unknown order {order_tok.text!r}",
                                     order_tok.line, order_tok.col)
                order_name = order_tok.text
                perm_names = []
                while self.peek().kind == "IDENT":
                    perm_names.append(self.next())
                self.end_of_line()
            elif tok.text == "weights":
                weights_tok = tok
                weights = self._int_list()
                self.end_of_line()
            elif tok.text == "grading":
                grading_tok = tok
                grading = self._int_list()
                self.end_of_line()
            elif tok.text == "module":
                module_tok = tok
                ints = self._int_list()
                if not ints:
                    raise ParseError("module rank required",
                                     tok.line, tok.col)
                rank, shifts = ints[0], ints[1:]
                self.end_of_line()
            else:
                raise ParseError(f"unknown stanza {tok.text!r}",
                                 tok.line, tok.col)
        # semantic assembly
        if var_names is None:
            tok = self.peek()
            raise ParseError("no variables declared", tok.line, tok.col)
        names = []
        coeff_var = getattr(domain, "var", None)
        for vt in var_names:
            if vt.text in names:
                raise ParseError(f"duplicate variable {vt.text!r}",
                                 vt.line, vt.col)
            if _BASIS_RE.match(vt.text):
                raise ParseError(f"variable name {vt.text!r} collides with "
                                 "basis literals", vt.line, vt.col)
            if vt.text == coeff_var:
                raise ParseError(f"{vt.text!r} is the coefficient variable",
                                 vt.line, vt.col)
            names.append(vt.text)
        nvars = len(names)
        permutation = None
        if perm_names:
            if sorted(t.text for t in perm_names) != sorted(names):
                t0 = perm_names[0]
                raise ParseError("order permutation must list every variable "
                                 "exactly once", t0.line, t0.col)
            permutation = tuple(names.index(t.text) for t in perm_names)
        if weights is not None:
            if len(weights) != nvars:
                raise ParseError("one weight per variable required",
                                 weights_tok.line, weights_tok.col)
            if any(w <= 0 for w in weights):
                raise ParseError("weights must be strictly positive",
                                 weights_tok.line, weights_tok.col)
        order = OrderSpec(order_name or "grevlex", nvars, permutation,
                          tuple(weights) if weights else None)
        if grading is not None:
            if len(grading) != nvars:
                raise ParseError("one grading weight per variable required",
                                 grading_tok.line, grading_tok.col)
            if any(d <= 0 for d in grading):
                raise ParseError("grading weights must be strictly positive",
                                 grading_tok.line, grading_tok.col)
        if rank is None:
            rank = 1
            shifts = []
        if rank < 1:
            raise ParseError("module rank must be at least 1",
                             module_tok.line, module_tok.col)
        if shifts and len(shifts) != rank:
            raise ParseError("one shift per basis vector required",
                             module_tok.line, module_tok.col)
        if not shifts:
            shifts = [0] * rank
        g = Grading(tuple(grading) if grading else (1,) * nvars,
                    tuple(shifts))
        module = FreeModule(domain, nvars, rank, order, tuple(names))
        gens = []
        while True:
            self.skip_newlines()
            if self.peek().kind == "EOF":
                break
            gens.append(self._expression(module))
            self.end_of_line()
        if not gens:
            tok = self.peek()
            raise ParseError("at least one generator required",
                             tok.line, tok.col)
        return ProblemFile(domain, tuple(names), order, g, rank, module,
                           tuple(gens), tuple(weights) if weights else None)

    def _int_list(self):
        out = []
        while self.peek().kind == "INT":
            out.append(int(self.next().text))
        return out

    # -- expressions ---------------------------------------------------------

    def _expression(self, module):
        first = self.peek()
        terms = []
        sign = 1
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = -1 if self.next().kind == "MINUS" else 1
        terms.append(self._term(module, sign))
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = -1 if self.next().kind == "MINUS" else 1
            terms.append(self._term(module, sign))
        elem = module.elem(terms)
        if not elem:
            raise ParseError("zero generator", first.line, first.col)
        return elem

    def _coeff_literal(self, module):
        dom = module.domain
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            val = int(tok.text)
            if self.peek().kind == "SLASH":
                if dom not in (QQ,) and not (isinstance(dom, PolynomialDomain)
                                             and dom.base == QQ):
                    s = self.peek()
                    raise ParseError("rational literals need rational "
                                     "coefficients", s.line, s.col)
                self.next()
                den_tok = self.expect("INT", "a denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator",
                                     den_tok.line, den_tok.col)
                coeff = dom.elem(Fraction(val, den))
            else:
                coeff = dom.elem(val)
            if not coeff:
                raise ParseError("zero coefficient literal",
                                 tok.line, tok.col)
            return coeff
        if tok.kind == "LBRACE":
            if not isinstance(dom, PolynomialDomain):
                raise ParseError("braced coefficients need a polynomial "
                                 "coefficient domain", tok.line, tok.col)
            self.next()
            coeff = self._braced_poly(dom, tok)
            if not coeff:
                raise ParseError("zero coefficient literal",
                                 tok.line, tok.col)
            return coeff
        return None

    def _braced_poly(self, dom, open_tok):
        base = dom.base
        coeffs = {}
        first = True
        while True:
            tok = self.peek()
            if tok.kind == "RBRACE":
                self.next()
                break
            sign = 1
            if tok.kind in ("PLUS", "MINUS"):
                sign = -1 if self.next().kind == "MINUS" else 1
            elif not first:
                raise ParseError(f"expected '+' or '-', found {tok.text!r}",
                                 tok.line, tok.col)
            first = False
            scalar, seen_scalar = 1, False
            tok = self.peek()
            if tok.kind == "INT":
                self.next()
                scalar = int(tok.text)
                seen_scalar = True
                if self.peek().kind == "SLASH":
                    if base != QQ:
                        s = self.peek()
                        raise ParseError("rational literals need rational "
                                         "coefficients", s.line, s.col)
                    self.next()
                    den = int(self.expect("INT", "a denominator").text)
                    if den == 0:
                        raise ParseError("zero denominator", tok.line, tok.col)
                    scalar = Fraction(scalar, den)
            exp = 0
            if self.peek().kind == "STAR":
                self.next()
            tok = self.peek()
            if tok.kind == "IDENT":
                if tok.text != dom.var:
                    raise ParseError(f"unknown coefficient variable "
                                     f"{tok.text!r}", tok.line, tok.col)
                self.next()
                exp = 1
                if self.peek().kind == "CARET":
                    self.next()
                    exp = int(self.expect("INT", "an exponent").text)
            elif not seen_scalar:
                raise ParseError(f"expected a coefficient term, found "
                                 f"{tok.text!r}", tok.line, tok.col)
            val = base.pconvert(scalar if sign > 0 else -scalar)
            prev = coeffs.get(exp, base.pzero())
            coeffs[exp] = base.padd(prev, val)
        if not coeffs:
            raise ParseError("empty braced coefficient",
                             open_tok.line, open_tok.col)
        size = max(coeffs) + 1
        dense = [coeffs.get(i, base.pzero()) for i in range(size)]
        return RingElem(dom, dom.pconvert(dense))

    def _term(self, module, sign):
        dom = module.domain
        start = self.peek()
        coeff = self._coeff_literal(module)
        if coeff is None:
            coeff = dom.one
            if start.kind not in ("IDENT", "STAR"):
                raise ParseError(f"expected a term, found {start.text!r}",
                                 start.line, start.col)
        mono = [0] * module.nvars
        basis = None
        while True:
            starred = False
            if self.peek().kind == "STAR":
                self.next()
                starred = True
            tok = self.peek()
            if tok.kind != "IDENT":
                if starred:
                    if tok.kind in ("INT", "LBRACE"):
                        raise ParseError("coefficient literal must come first",
                                         tok.line, tok.col)
                    raise ParseError(f"expected a variable after '*', found "
                                     f"{tok.text!r}", tok.line, tok.col)
                break
            self.next()
            name = tok.text
            if name in module.var_names:
                idx = module.var_names.index(name)
                exp = 1
                if self.peek().kind == "CARET":
                    self.next()
                    exp = int(self.expect("INT", "an exponent").text)
                mono[idx] += exp
            elif _BASIS_RE.match(name):
                basis = int(name[1:])
                if not 1 <= basis <= module.rank:
                    raise ParseError(f"basis index {basis} out of range "
                                     f"(module rank {module.rank})",
                                     tok.line, tok.col)
                nxt = self.peek()
                if nxt.kind in ("IDENT", "CARET", "STAR"):
                    raise ParseError("the basis literal ends a term",
                                     nxt.line, nxt.col)
                break
            elif name == getattr(dom, "var", None):
                raise ParseError(f"coefficient variable {name!r} must be "
                                 "written inside braces", tok.line, tok.col)
            else:
                raise ParseError(f"unknown variable {name!r}",
                                 tok.line, tok.col)
        if basis is None:
            if module.rank > 1:
                raise ParseError("a basis literal (e1, e2, ...) is required "
                                 "for module generators", start.line, start.col)
            basis = 1
        if sign < 0:
            coeff = -coeff
        return coeff, tuple(mono), basis


def parse_problem(text):
    """Parse a problem file; raises ParseError with line:col positions."""
    return _Parser(text).parse()


def parse_element(text, module):
    """Parse a single generator expression in an existing context."""
    parser = _Parser(text)
    parser.skip_newlines()
    elem = parser._expression(module)
    parser.skip_newlines()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing {tok.text!r}",
                         tok.line, tok.col)
    return elem


def _domain_decl(domain):
    if domain == ZZ:
        return "ZZ"
    if domain == QQ:
        return "QQ"
    if isinstance(domain, PolynomialDomain):
        return f"{_domain_decl(domain.base)}[{domain.var}]"
    return f"GF({domain.p})"


def print_problem(problem):
    """Canonical text: reparsing yields the same semantic content."""
    lines = [f"ring {_domain_decl(problem.domain)}"]
    lines.append("vars " + " ".join(problem.var_names))
    order = problem.order
    decl = f"order {order.base}"
    if order.permutation != tuple(range(order.nvars)):
        decl += " " + " ".join(problem.var_names[i] for i in order.permutation)
    lines.append(decl)
    if order.weights:
        lines.append("weights " + " ".join(str(w) for w in order.weights))
    if set(problem.grading.var_weights) != {1}:
        lines.append("grading "
                     + " ".join(str(d) for d in problem.grading.var_weights))
    shifts = problem.grading.basis_shifts
    if problem.rank > 1 or any(shifts):
        decl = f"module {problem.rank}"
        if any(shifts):
            decl += " " + " ".join(str(s) for s in shifts)
        lines.append(decl)
    lines.append("gens:")
    for g in problem.gens:
        lines.append(format_elem(g))
    return "\n".join(lines) + "\n"


def parse_coeff_matrix(text, m, n):
    """Coefficient matrix file for determinantal instances.

    First line 'ring DOMAIN', then m rows of n coefficient literals.
    """
    parser = _Parser(text)
    parser.skip_newlines()
    kw = parser.expect("IDENT", "'ring'")
    if kw.text != "ring":
        raise ParseError("a coefficient file starts with 'ring'",
                         kw.line, kw.col)
    domain = parser.parse_domain()
    parser.end_of_line()
    scratch = FreeModule(domain, 1)
    rows = []
    for _ in range(m):
        parser.skip_newlines()
        row = []
        for _ in range(n):
            tok = parser.peek()
            sign = 1
            if tok.kind == "MINUS":
                parser.next()
                sign = -1
            coeff = parser._coeff_literal(scratch)
            if coeff is None:
                raise ParseError(f"expected a coefficient, found {tok.text!r}",
                                 tok.line, tok.col)
            row.append(-coeff if sign < 0 else coeff)
        rows.append(row)
        parser.end_of_line()
    parser.skip_newlines()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing {tok.text!r}",
                         tok.line, tok.col)
    return domain, rows
