"""Report rendering: human text and a flat machine key/value document.

Machine documents are `key = value` lines with stable keys, bit-exact
across runs for identical inputs (everything upstream is deterministic).
"""

from __future__ import annotations

from .degeneration import DegenerationData, DegenerationReport
from .determinantal import DetReport
from .charp import FrobeniusReport, SquarefreeReport
from .freemodule import format_term
from .freeness import FiberReport, HilbertTable, Witness
from .groebner import GroebnerBasis, ReductionTrace


def _bool(b):
    return "true" if b else "false"


def _point(p):
    return "id" if p is None else str(p)


def term_str(term, module):
    sign, body = format_term(term, module.var_names, module.rank)
    return body if sign > 0 else "-" + body


def poly_str(pairs, module):
    """Render a ring polynomial given as (coeff, mono) pairs."""
    from .freemodule import Term
    parts = []
    for i, (coeff, mono) in enumerate(pairs):
        sign, body = format_term(Term(coeff, mono, 1), module.var_names, 1)
        if i == 0:
            parts.append(body if sign > 0 else "-" + body)
        else:
            parts.append(("+ " if sign > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _witness_pairs(wit, prefix="witness"):
    pairs = [(f"{prefix}.value", repr(wit.value))]
    for k, (coeff, idx) in enumerate(wit.factors):
        pairs.append((f"{prefix}.factor.{k}", f"{coeff!r} (gen {idx})"))
    return pairs


def _table_pairs(table, prefix):
    return [(f"{prefix}.{v}", str(r)) for v, r in sorted(table.ranks.items())]


def kv_pairs(report, module=None):
    """The machine key/value pairs of any report object."""
    if isinstance(report, GroebnerBasis):
        module = report.module
        pairs = [("gb.size", str(len(report.gens))),
                 ("gb.certified", _bool(report.certified))]
        for i, g in enumerate(report.gens):
            pairs.append((f"gb.gen.{i}", str(g)))
        for i, t in enumerate(report.initial_terms):
            pairs.append((f"gb.initial.{i}", term_str(t, module)))
        return pairs
    if isinstance(report, Witness):
        return _witness_pairs(report)
    if isinstance(report, HilbertTable):
        return _table_pairs(report, "hilbert")
    if isinstance(report, ReductionTrace):
        pairs = [("reduce.remainder", str(report.remainder))]
        for idx, poly in report.quotients:
            pairs.append((f"reduce.quotient.{idx}",
                          poly_str(poly, report.remainder.module)))
        return pairs
    if isinstance(report, FiberReport):
        pairs = [("fibers.pass", _bool(report.passed))]
        pairs += _witness_pairs(report.witness, "fibers.witness")
        pairs += _table_pairs(report.generic, "fibers.generic")
        for e in report.entries:
            key = f"fibers.point.{_point(e.point)}"
            pairs.append((f"{key}.witness_killed", _bool(e.witness_killed)))
            pairs.append((f"{key}.equal", _bool(e.equal)))
            pairs += _table_pairs(e.table, key)
            if e.vanished:
                pairs.append((f"{key}.vanished",
                              ",".join(str(i) for i in e.vanished)))
        return pairs
    if isinstance(report, FrobeniusReport):
        pairs = [("frobenius.p", str(report.p)),
                 ("frobenius.e", str(report.e)),
                 ("check.frobenius.equal",
                  _bool(report.equal_after_localization))]
        for i, t in enumerate(report.initial_of_power):
            pairs.append((f"frobenius.initial_of_power.{i}",
                          term_str(t, module)))
        for i, t in enumerate(report.power_of_initial):
            pairs.append((f"frobenius.power_of_initial.{i}",
                          term_str(t, module)))
        pairs += _witness_pairs(report.witness_used, "frobenius.witness")
        return pairs
    if isinstance(report, SquarefreeReport):
        pairs = [("check.squarefree", _bool(report.squarefree)),
                 ("sqfree.contains_field", _bool(report.contains_field)),
                 ("sqfree.applicable", _bool(report.conclusion_applies))]
        for i, mono in enumerate(report.offending):
            pairs.append((f"sqfree.offender.{i}",
                          _mono_str(mono, module)))
        pairs += _witness_pairs(report.witness, "sqfree.witness")
        return pairs
    if isinstance(report, DetReport):
        inst = report.instance
        pairs = [("det.pass", _bool(report.passed)),
                 ("det.m", str(inst.m)), ("det.n", str(inst.n)),
                 ("det.t", str(inst.t)),
                 ("check.groebner", _bool(report.gb_certified)),
                 ("check.squarefree", _bool(report.squarefree.squarefree)),
                 ("det.exempt", _positions(report.exempt.sorted()))]
        pairs += _witness_pairs(report.witness, "det.witness")
        pairs += _table_pairs(report.generic_table, "det.hilbert")
        for e in report.fibers:
            key = f"det.fiber.{_point(e.point)}"
            pairs.append((f"{key}.witness_killed", _bool(e.witness_killed)))
            pairs.append((f"{key}.equal", _bool(e.equal)))
            pairs += _table_pairs(e.table, key)
        return pairs
    if isinstance(report, DegenerationReport):
        pairs = [("check.pass", _bool(report.passed)),
                 ("check.t0", _bool(report.t0_ok)),
                 ("check.t1", _bool(report.t1_ok)),
                 ("check.homogeneous", _bool(report.homogeneous_ok))]
        if report.t0_failures:
            pairs.append(("check.t0.failures",
                          ",".join(str(i) for i in report.t0_failures)))
        if report.t1_failures:
            pairs.append(("check.t1.failures",
                          ",".join(str(i) for i in report.t1_failures)))
        if report.extended_certified is not None:
            pairs.append(("check.extended_order",
                          _bool(report.extended_certified)))
        for f in report.fibers:
            key = f"check.fiber.{_point(f.point)}"
            pairs.append((f"{key}.witness_killed", _bool(f.witness_killed)))
            pairs.append((f"{key}.equal", _bool(f.equal)))
        return pairs
    if isinstance(report, DegenerationData):
        pairs = [("hom.omega", " ".join(str(w) for w in report.omega)),
                 ("hom.shifts", " ".join(str(d) for d in report.shifts))]
        for i, h in enumerate(report.homogenized):
            pairs.append((f"hom.gen.{i}", str(h)))
        return pairs
    raise TypeError(f"no machine rendering for {type(report).__name__}")


def _mono_str(mono, module):
    from .freemodule import format_mono
    return format_mono(mono, module.var_names) or "1"


def _positions(positions):
    return " ".join(f"({i},{j})" for i, j in positions)


def text_lines(report, module=None):
    """Human-readable rendering of a report object."""
    if isinstance(report, GroebnerBasis):
        module = report.module
        word = "certified" if report.certified else "NOT certified"
        lines = [f"Groebner basis with {len(report.gens)} generators "
                 f"({word})"]
        for i, g in enumerate(report.gens):
            lines.append(f"  [{i}] {g}")
        lines.append("initial terms:")
        for i, t in enumerate(report.initial_terms):
            lines.append(f"  [{i}] {term_str(t, module)}")
        return lines
    if isinstance(report, Witness):
        lines = [f"freeness witness: {report.value!r}"]
        if report.factors:
            lines.append("from leading coefficients:")
            for coeff, idx in report.factors:
                lines.append(f"  {coeff!r} (generator {idx})")
        else:
            lines.append("all leading coefficients are units")
        return lines
    if isinstance(report, HilbertTable):
        return [f"  degree {v}: rank {r}"
                for v, r in sorted(report.ranks.items())]
    if isinstance(report, ReductionTrace):
        lines = [f"remainder: {report.remainder}"]
        for idx, poly in report.quotients:
            lines.append(f"  quotient for generator {idx}: "
                         f"{poly_str(poly, report.remainder.module)}")
        return lines
    if isinstance(report, FiberReport):
        lines = [f"witness: {report.witness.value!r}", "generic table:"]
        lines += text_lines(report.generic)
        for e in report.entries:
            status = "equal" if e.equal else "DIFFERENT"
            note = " (witness killed, no guarantee)" if e.witness_killed else ""
            lines.append(f"fiber at {_point(e.point)}: {status}{note}")
            if e.vanished:
                lines.append(f"  vanished generators: {list(e.vanished)}")
            lines += text_lines(e.table)
        lines.append("PASS" if report.passed else "FAIL")
        return lines
    if isinstance(report, FrobeniusReport):
        eq = report.equal_after_localization
        lines = [f"Frobenius power p^e = {report.p}^{report.e}",
                 f"initial terms of the power ({len(report.initial_of_power)}):"]
        lines += [f"  {term_str(t, module)}" for t in report.initial_of_power]
        lines.append("powers of the initial terms "
                     f"({len(report.power_of_initial)}):")
        lines += [f"  {term_str(t, module)}" for t in report.power_of_initial]
        lines.append(f"witness: {report.witness_used.value!r}")
        lines.append("equal after localization: " + ("yes" if eq else "NO"))
        return lines
    if isinstance(report, SquarefreeReport):
        lines = []
        if report.squarefree:
            lines.append("all initial monomials are square-free")
            if report.contains_field:
                lines.append("conclusion applies over the witness "
                             "localization: every graded local cohomology "
                             "module of the quotient is free")
            else:
                lines.append("coefficient domain contains no field: the "
                             "square-free degeneration conclusion is "
                             "withheld")
        else:
            lines.append("NOT square-free; offending monomials:")
            for mono in report.offending:
                lines.append(f"  {_mono_str(mono, module)}")
        lines.append(f"witness: {report.witness.value!r}")
        return lines
    if isinstance(report, DetReport):
        inst = report.instance
        exempt = _positions(report.exempt.sorted()) or "none"
        lines = [f"{inst.m} x {inst.n} matrix, {inst.t}-minors "
                 f"(degree bound {report.bound})",
                 f"exempt positions: {exempt}",
                 f"witness: {report.witness.value!r}",
                 "minors are a Groebner basis over the localization: "
                 + ("yes" if report.gb_certified else "NO"),
                 "square-free initial ideal: "
                 + ("yes" if report.squarefree.squarefree else "NO"),
                 "generic Hilbert table:"]
        lines += text_lines(report.generic_table)
        for e in report.fibers:
            status = "equal" if e.equal else "DIFFERENT"
            note = " (witness killed, no guarantee)" if e.witness_killed else ""
            lines.append(f"fiber at {_point(e.point)}: {status}{note}")
        lines.append("PASS" if report.passed else "FAIL")
        return lines
    if isinstance(report, DegenerationReport):
        lines = [
            "t=0 recovers the initial terms: "
            + ("yes" if report.t0_ok else f"NO {list(report.t0_failures)}"),
            "t=1 recovers the generators: "
            + ("yes" if report.t1_ok else f"NO {list(report.t1_failures)}"),
            "homogenized generators are homogeneous: "
            + ("yes" if report.homogeneous_ok else "NO"),
        ]
        if report.extended_certified is not None:
            lines.append("basis property in the extended ring: "
                         + ("yes" if report.extended_certified else "NO"))
        for f in report.fibers:
            status = "equal" if f.equal else "DIFFERENT"
            note = " (witness killed, no guarantee)" if f.witness_killed else ""
            lines.append(f"fiber tables at t=0/t=1, point {_point(f.point)}: "
                         f"{status}{note}")
        lines.append("PASS" if report.passed else "FAIL")
        return lines
    if isinstance(report, DegenerationData):
        lines = [f"omega: {report.omega}", f"shifts: {report.shifts}",
                 "homogenized generators:"]
        for i, h in enumerate(report.homogenized):
            lines.append(f"  [{i}] {h}")
        return lines
    raise TypeError(f"no text rendering for {type(report).__name__}")


def render_report(report, fmt="text", module=None):
    """Render any report object as a document string.

    fmt is "text" or "machine"; the machine format is the flat
    key/value document.
    """
    if fmt == "machine":
        return "\n".join(f"{k} = {v}" for k, v in kv_pairs(report, module))
    if fmt == "text":
        return "\n".join(text_lines(report, module))
    raise ValueError(f"unknown format {fmt!r}")
