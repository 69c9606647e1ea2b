"""Exact creative telescoping for a two-parameter family of integrals.

The package proves, entirely in rational arithmetic, that

    I1(n) = int_0^1 x^n (1-x)^n / ((x+a)(x+b))^(n+1) dx
    I2(n) = int_0^1 x^n (1-x)^n / ((a-b)x + (a+1)b)^(n+1) dx

agree for every n >= 0 and every rational a > b > 0.  Both sides
satisfy one three-term recurrence, exhibited through telescoping
certificates that are either verified from closed form or rediscovered
from scratch by a linear-algebra ansatz.  The same machinery yields
rational approximations p*log(1 + (a-b)/((a+1)b)) - q with certified
error |I2(n)| and an adaptive Gauss-Legendre cross-check in floats.
"""

from ._version import __version__
from .approximants import (
    ApproximantRow,
    approximant_table,
    decay_rate_estimate,
    decompose_against,
    rows_to_csv,
    target_constant,
)
from .errors import (
    AnsatzExhaustedError,
    DivergentIntegralError,
    FactorBoundExceededError,
    NonRationalRootError,
    PoleError,
    SingularRecurrenceError,
    SpanError,
    TelescopicError,
    ToleranceNotMetError,
)
from .families import (
    IntegrandFamily,
    ParameterPair,
    log_derivative,
    make_left_family,
    make_right_family,
    shifted_ratio,
)
from .integration import (
    LogCombination,
    PartialFractionForm,
    PoleTerm,
    factorize,
    integrate_01,
    log_of_rational,
    logcomb_arith,
    logcomb_to_float,
    partial_fractions,
    rational_roots,
)
from .polynomials import Poly, poly_gcd, poly_lcm, squarefree_decomposition, sturm_root_count
from .prove import (
    ProofObject,
    boundary_vanishing_check,
    propagate_recurrence,
    prove_identity,
    reverify_proof,
    verify_substitution_proof,
)
from .quadrature import QuadratureResult, quad_01
from .ratfuncs import RatFunc
from .serialize import proof_from_json, proof_to_json
from .telescoping import (
    Certificate,
    Recurrence,
    closed_form_certificates,
    closed_form_recurrence,
    discover,
    normalize_pair,
    required_degree_bound,
    solve_nullspace,
    verify_telescoping,
    verify_telescoping_all_n,
)

__all__ = [
    "__version__",
    "AnsatzExhaustedError",
    "ApproximantRow",
    "Certificate",
    "DivergentIntegralError",
    "FactorBoundExceededError",
    "IntegrandFamily",
    "LogCombination",
    "NonRationalRootError",
    "ParameterPair",
    "PartialFractionForm",
    "Poly",
    "PoleError",
    "PoleTerm",
    "ProofObject",
    "QuadratureResult",
    "RatFunc",
    "Recurrence",
    "SingularRecurrenceError",
    "SpanError",
    "TelescopicError",
    "ToleranceNotMetError",
    "approximant_table",
    "boundary_vanishing_check",
    "closed_form_certificates",
    "closed_form_recurrence",
    "decay_rate_estimate",
    "decompose_against",
    "discover",
    "factorize",
    "integrate_01",
    "log_derivative",
    "log_of_rational",
    "logcomb_arith",
    "logcomb_to_float",
    "make_left_family",
    "make_right_family",
    "normalize_pair",
    "partial_fractions",
    "poly_gcd",
    "poly_lcm",
    "proof_from_json",
    "proof_to_json",
    "propagate_recurrence",
    "prove_identity",
    "quad_01",
    "rational_roots",
    "required_degree_bound",
    "reverify_proof",
    "rows_to_csv",
    "shifted_ratio",
    "solve_nullspace",
    "squarefree_decomposition",
    "sturm_root_count",
    "target_constant",
    "verify_substitution_proof",
    "verify_telescoping",
    "verify_telescoping_all_n",
]
