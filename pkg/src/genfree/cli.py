"""Command-line interface.

Exit codes: 0 success / checks passed, 1 a check failed, 2 input error
(parse or semantic), 3 basis completion ran out of fuel.
"""

from __future__ import annotations

import argparse
import sys

from .charp import frobenius_initial_check, squarefree_report
from .degeneration import degeneration_check, homogenize
from .determinantal import build_instance, det_witness, verify_instance
from .domains import QQ, DomainError
from .freeness import fiber_compare, hilbert_function, standard_monomials, witness
from .freemodule import format_mono
from .groebner import DEFAULT_FUEL, FuelExhausted, buchberger, initial_module, reduce
from .problemfile import ParseError, parse_coeff_matrix, parse_element, parse_problem
from .reports import kv_pairs, render_report, term_str

OK, CHECK_FAILED, INPUT_ERROR, FUEL = 0, 1, 2, 3


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    return parse_problem(_read(path))


def _emit(report, args, module=None):
    fmt = "machine" if args.machine else "text"
    print(render_report(report, fmt, module))


def _points(text):
    return [int(p) for p in text.split(",") if p.strip()]


def cmd_gb(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    _emit(basis, args)
    return OK


def cmd_initial(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    terms = initial_module(basis)
    if args.machine:
        lines = [f"initial.size = {len(terms)}"]
        lines += [f"initial.{i} = {term_str(t, problem.module)}"
                  for i, t in enumerate(terms)]
        print("\n".join(lines))
    else:
        print("initial module generators:")
        for t in terms:
            print(f"  {term_str(t, problem.module)}")
    return OK


def cmd_witness(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    _emit(witness(basis, refine=args.refine), args)
    return OK


def cmd_reduce(args):
    problem = _load(args.file)
    target = parse_element(args.target, problem.module)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    _emit(reduce(target, basis), args)
    return OK


def cmd_stdmon(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    wit = witness(basis)
    monos = standard_monomials(basis.initial_terms, wit, args.bound,
                               problem.grading, problem.order)
    rank = problem.module.rank
    if args.machine:
        lines = [f"stdmon.count = {len(monos)}"]
        for i, (mono, b) in enumerate(monos):
            body = format_mono(mono, problem.var_names) or "1"
            if rank > 1:
                body += f"*e{b}"
            lines.append(f"stdmon.{i} = {body}")
        print("\n".join(lines))
    else:
        print(f"standard monomials up to degree {args.bound} "
              f"(witness {wit.value!r}):")
        for mono, b in monos:
            body = format_mono(mono, problem.var_names) or "1"
            if rank > 1:
                body += f"*e{b}"
            print(f"  {body}")
    return OK


def cmd_hilbert(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    table = hilbert_function(basis.initial_terms, problem.grading,
                             (0, args.bound))
    _emit(table, args)
    return OK


def cmd_fibers(args):
    problem = _load(args.file)
    report = fiber_compare(problem.gens, _points(args.points),
                           (0, args.bound), problem.grading,
                           module=problem.module, fuel=args.fuel)
    _emit(report, args)
    return OK if report.passed else CHECK_FAILED


def cmd_homogenize(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    data = homogenize(basis)
    _emit(data, args)
    if not args.check:
        return OK
    points = _points(args.points) if args.points else None
    report = degeneration_check(data, bound=args.bound, points=points,
                                fuel=args.fuel,
                                certify_extended=args.certify_extended)
    _emit(report, args)
    return OK if report.passed else CHECK_FAILED


def cmd_frobcheck(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    report = frobenius_initial_check(basis, args.e, fuel=args.fuel)
    _emit(report, args, problem.module)
    return OK if report.equal_after_localization else CHECK_FAILED


def cmd_sqfree(args):
    problem = _load(args.file)
    basis = buchberger(problem.gens, fuel=args.fuel, module=problem.module)
    report = squarefree_report(basis, problem.grading)
    _emit(report, args, problem.module)
    return OK if report.squarefree else CHECK_FAILED


def cmd_det(args):
    if args.coeffs:
        domain, matrix = parse_coeff_matrix(_read(args.coeffs), args.m, args.n)
    else:
        domain, matrix = QQ, None
    inst, gens = build_instance(args.m, args.n, args.t, matrix, domain)
    points = _points(args.points) if args.points else None
    report = verify_instance(inst, gens, bound=args.bound, points=points,
                             sharp=args.sharp, fuel=args.fuel)
    _emit(report, args)
    return OK if report.passed else CHECK_FAILED


def _add_common(sub, fuel=True):
    sub.add_argument("--machine", action="store_true",
                     help="machine-readable key/value output")
    if fuel:
        sub.add_argument("--fuel", type=int, default=DEFAULT_FUEL,
                         help="pair-reduction budget for basis completion")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genfree",
        description="Groebner bases over Euclidean coefficient domains and "
                    "effective generic freeness checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="Groebner basis and initial terms")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("initial", help="initial module of the certified basis")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("witness", help="generic freeness witness")
    p.add_argument("file")
    p.add_argument("--refine", action="store_true",
                   help="shrink the witness by gcd-grouping initial terms")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("reduce", help="normal form of an element")
    p.add_argument("file")
    p.add_argument("--target", required=True,
                   help="expression to reduce, in the file's variables")
    _add_common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("stdmon", help="standard monomials up to a degree")
    p.add_argument("file")
    p.add_argument("--bound", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_stdmon)

    p = sub.add_parser("hilbert", help="Hilbert table of the initial module")
    p.add_argument("file")
    p.add_argument("--bound", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("fibers", help="compare fiber Hilbert tables")
    p.add_argument("file")
    p.add_argument("--points", required=True,
                   help="comma-separated specialization points")
    p.add_argument("--bound", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("homogenize",
                       help="weights, shifts and the homogenized family")
    p.add_argument("file")
    p.add_argument("--check", action="store_true",
                   help="run the flat-degeneration checks")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--points", help="comma-separated specialization points")
    p.add_argument("--certify-extended", action="store_true",
                   dest="certify_extended",
                   help="also re-run the basis criterion in the extended ring")
    _add_common(p)
    p.set_defaults(func=cmd_homogenize)

    p = sub.add_parser("frobcheck",
                       help="Frobenius initial-module equality (char p)")
    p.add_argument("file")
    p.add_argument("--e", type=int, required=True, help="Frobenius exponent")
    _add_common(p)
    p.set_defaults(func=cmd_frobcheck)

    p = sub.add_parser("sqfree", help="square-free degeneration report")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_sqfree)

    p = sub.add_parser("det", help="build and verify a determinantal instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--coeffs", help="coefficient matrix file")
    p.add_argument("--points", help="comma-separated specialization points")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--sharp", action="store_true",
                   help="use the sharp exempt-position set (experimental)")
    _add_common(p)
    p.set_defaults(func=cmd_det)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        file = getattr(args, "file", None) or getattr(args, "coeffs", "")
        print(f"{file}:{exc}", file=sys.stderr)
        return INPUT_ERROR
    except FuelExhausted as exc:
        print(f"fuel exhausted: {exc}", file=sys.stderr)
        return FUEL
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
