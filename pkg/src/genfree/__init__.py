"""Groebner bases over Euclidean coefficient domains, with an effective
generic-freeness toolkit: localization witnesses, standard-monomial
bases, flat degenerations via homogenization, Frobenius-power checks,
square-free degeneration reports, and determinantal specializations."""

from .domains import (GF, QQ, ZZ, Domain, DomainError, RingElem, ext_gcd,
                      gcd, lcm, localize, localized_elem, loc_parts,
                      poly_domain, strip_witness)
from .orders import Grading, OrderSpec, compare, graded_degree
from .freemodule import FreeElem, FreeModule, Term, format_elem, leading_term
from .groebner import (DEFAULT_FUEL, FuelExhausted, GroebnerBasis,
                       ReductionTrace, buchberger, groebner_certificate,
                       initial_module, is_groebner, reduce, term_syzygies)
from .freeness import (FiberReport, HilbertTable, Witness, WitnessMismatch,
                       default_points, fiber_compare, hilbert_function,
                       specialize, standard_monomials, witness)
from .degeneration import (DegenerationData, DegenerationOrder,
                           DegenerationReport, degeneration_check,
                           homogenize, shift_vector, weight_vector)
from .charp import (FrobeniusReport, SquarefreeReport, frobenius_power,
                    frobenius_initial_check, localized_term_module,
                    squarefree_report)
from .determinantal import (AntidiagonalComplement, DetInstance, DetReport,
                            antidiagonal_complement, build_instance,
                            det_witness, verify_instance)
from .problemfile import (ParseError, ProblemFile, parse_element,
                          parse_problem, print_problem)
from .reports import render_report
from .hermite import EchelonForm, SliceOracle

__version__ = "0.1.0"
