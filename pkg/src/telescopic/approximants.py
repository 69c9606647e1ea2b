"""Rational approximations to the logarithm hiding in the integrals.

With Lambda = R(0), every right-hand integral decomposes exactly as

    R(n) = p_n * Lambda - q_n          (p_n, q_n rational)

because all R(n) live in the Q-span of {1, Lambda}.  Since R(n) -> 0
geometrically, q_n / p_n is a sequence of rational approximations to
Lambda, and (a-b) * Lambda = log(1 + (a-b)/((a+1)b)).

Rows are produced by exact LogCombination propagation of the recurrence
(the recurrence is numerically unstable in the decaying direction, so a
floating iteration would be useless); floats appear only in the final
reported columns, at a caller-chosen precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import SpanError, TelescopicError
from .families import ParameterPair, make_right_family
from .integration import LogCombination, integrate_01, log_of_rational, logcomb_to_float
from .prove import propagate_recurrence
from .serialize import rational_to_str
from .telescoping import closed_form_recurrence


@dataclass(frozen=True)
class ApproximantRow:
    """One row: R(n) = p * Lambda - q, so q/p approximates Lambda."""

    n: int
    p: Fraction
    q: Fraction
    value: mpmath.mpf
    abs_error: mpmath.mpf
    empirical_exponent: mpmath.mpf


def _to_mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def target_constant(params: ParameterPair) -> LogCombination:
    """log(1 + (a-b)/((a+1)b)), canonical; cross-checked against
    (a-b) times the right-hand integral at n=0."""
    a, b = params.a, params.b
    target = log_of_rational(1 + (a - b) / ((a + 1) * b))
    independent = (a - b) * integrate_01(make_right_family(params).at(0))
    if target != independent:
        raise TelescopicError(
            "target constant disagrees with (a-b) * integral at n=0"
        )
    return target


def decompose_against(value: LogCombination, lam: LogCombination) -> tuple[Fraction, Fraction]:
    """Write value = p * lam - q; SpanError if value is not in the
    Q-span of {1, lam}."""
    if not lam.terms:
        raise SpanError("reference value has no logarithmic part")
    lam_terms = lam.terms_dict()
    val_terms = value.terms_dict()
    if set(val_terms) - set(lam_terms):
        raise SpanError("value contains primes absent from the reference")
    first_prime = lam.terms[0][0]
    p = val_terms.get(first_prime, Fraction(0)) / lam_terms[first_prime]
    for prime, coeff in lam_terms.items():
        if val_terms.get(prime, Fraction(0)) != p * coeff:
            raise SpanError("value is not a rational multiple of the reference logs")
    q = p * lam.constant - value.constant
    return p, q


def approximant_table(
    params: ParameterPair, n_max: int, precision_bits: int = 256
) -> list[ApproximantRow]:
    """Rows n = 0..n_max from exact recurrence propagation.

    Reported columns: value = q/p, abs_error = |Lambda - q/p| (computed
    as |R(n)|/p, which is the same number), and the empirical exponent
    1 + ln(p) / (-ln(abs_error)) with ln(p) as the height proxy.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    right = make_right_family(params)
    lam = integrate_01(right.at(0))
    rec = closed_form_recurrence(params)
    initial = [lam, integrate_01(right.at(1))]
    values = propagate_recurrence(rec, initial, max(n_max, rec.order - 1))
    rows: list[ApproximantRow] = []
    for n in range(n_max + 1):
        p, q = decompose_against(values[n], lam)
        if p == 0:
            raise SpanError(f"approximant with p=0 at n={n}")
        with mpmath.workprec(precision_bits):
            value = _to_mpf(q / p)
            linear_form = abs(logcomb_to_float(values[n], precision_bits))
            abs_error = linear_form / abs(_to_mpf(p))
            if abs_error == 0:
                exponent = mpmath.inf
            else:
                exponent = 1 + mpmath.ln(abs(_to_mpf(p))) / (-mpmath.ln(abs_error))
            rows.append(
                ApproximantRow(n, p, q, +value, +abs_error, +exponent)
            )
    return rows


def decay_rate_estimate(rows: list[ApproximantRow]) -> mpmath.mpf:
    """Geometric-mean decay ratio of the linear forms |p_n Lambda - q_n|
    (= abs_error_n * p_n) over the last half of the table.

    The linear form decays like the smaller root of the recurrence's
    characteristic polynomial, which is what this estimates.
    """
    if len(rows) < 5:
        raise ValueError("need at least 5 rows to estimate a decay rate")
    window = rows[len(rows) // 2 :]
    with mpmath.workprec(128):
        first = window[0].abs_error * abs(_to_mpf(window[0].p))
        last = window[-1].abs_error * abs(_to_mpf(window[-1].p))
        steps = window[-1].n - window[0].n
        return +mpmath.power(last / first, mpmath.mpf(1) / steps)


def rows_to_csv(rows: list[ApproximantRow], precision_bits: int = 256) -> str:
    """CSV with columns n,p,q,value,abs_error,empirical_exponent;
    rationals as p/q strings, reals in scientific notation with a
    precision-derived digit count."""
    digits = max(17, int(precision_bits * 0.30103))

    def sci(x: mpmath.mpf) -> str:
        return mpmath.nstr(x, digits, min_fixed=1, max_fixed=0)

    lines = ["n,p,q,value,abs_error,empirical_exponent"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.n),
                    rational_to_str(row.p),
                    rational_to_str(row.q),
                    sci(row.value),
                    sci(row.abs_error),
                    sci(row.empirical_exponent),
                ]
            )
        )
    return "\n".join(lines) + "\n"
