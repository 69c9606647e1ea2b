"""Exact integration of rational functions over [0, 1].

The integrands treated here have denominators that split into linear
factors with rational roots, all outside [0, 1].  Partial fractions
reduce the integral to rational contributions (polynomial part, poles of
multiplicity >= 2) plus simple-pole terms c/(x - root) whose integrals
are c * log of a positive rational.  Factoring those rationals into
primes yields the canonical exact value type of this package:

    LogCombination  =  constant  +  sum_p coeff_p * log(p),   p prime.

By unique factorization and the linear independence of {log p} over Q,
this form is unique, so equality of exact integral values is a
structural comparison — the engine's base-case checks need no numerics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

import mpmath

from .errors import (
    DivergentIntegralError,
    FactorBoundExceededError,
    NonRationalRootError,
)
from .polynomials import Poly, _to_fraction, squarefree_decomposition, sturm_root_count
from .ratfuncs import RatFunc

DEFAULT_FACTOR_BOUND = 10**6


# -- integer and rational factorization --------------------------------------


def factorize(value: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division.

    A leftover cofactor with no divisor <= bound is accepted as prime
    only when it is smaller than bound**2 (which certifies primality);
    otherwise the method's scope is exceeded and an explicit error is
    raised rather than silently falling back.
    """
    if value <= 0:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    n = value
    d = 2
    while d <= bound and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d = 3 if d == 2 else d + 2
    if n > 1:
        if d * d > n or n < bound * bound:
            factors[n] = factors.get(n, 0) + 1
        else:
            raise FactorBoundExceededError(
                f"factor bound exceeded: {value} has leftover cofactor {n} "
                f"with no prime divisor <= {bound}"
            )
    return factors


# -- the canonical exact value type -------------------------------------------


@dataclass(frozen=True)
class LogCombination:
    """constant + sum over (prime, coeff) of coeff * log(prime).

    Canonical: primes strictly increasing, no zero coefficients.  Two
    values are mathematically equal iff they are structurally equal.
    """

    constant: Fraction
    terms: tuple[tuple[int, Fraction], ...]

    def __init__(self, constant=0, terms: Iterable = ()):
        object.__setattr__(self, "constant", _to_fraction(constant))
        merged: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for prime, coeff in items:
            merged[prime] = merged.get(prime, Fraction(0)) + _to_fraction(coeff)
        cleaned = tuple(
            (p, c) for p, c in sorted(merged.items()) if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> "LogCombination":
        return cls(0, ())

    def is_zero(self) -> bool:
        return self.constant == 0 and not self.terms

    def is_rational(self) -> bool:
        return not self.terms

    def terms_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def __add__(self, other) -> "LogCombination":
        if not isinstance(other, LogCombination):
            return NotImplemented
        return LogCombination(
            self.constant + other.constant, list(self.terms) + list(other.terms)
        )

    def __sub__(self, other) -> "LogCombination":
        if not isinstance(other, LogCombination):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LogCombination":
        return self.scale(-1)

    def scale(self, factor) -> "LogCombination":
        factor = _to_fraction(factor)
        return LogCombination(
            factor * self.constant, [(p, factor * c) for p, c in self.terms]
        )

    def __rmul__(self, factor) -> "LogCombination":
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __mul__ = __rmul__

    def to_float(self, precision_bits: int) -> mpmath.mpf:
        return logcomb_to_float(self, precision_bits)

    def __str__(self) -> str:
        pieces = []
        if self.constant != 0 or not self.terms:
            pieces.append(str(self.constant))
        for p, c in self.terms:
            pieces.append(f"{'+ ' if c >= 0 else '- '}{abs(c)}*log({p})")
        text = " ".join(pieces)
        return text.lstrip("+ ") if text.startswith("+ ") else text


def log_of_rational(value: Fraction) -> LogCombination:
    """log(value) for a positive rational, as a canonical LogCombination."""
    value = _to_fraction(value)
    if value <= 0:
        raise ValueError("log_of_rational requires a positive argument")
    terms: dict[int, Fraction] = {}
    for p, e in factorize(value.numerator).items():
        terms[p] = terms.get(p, Fraction(0)) + e
    for p, e in factorize(value.denominator).items():
        terms[p] = terms.get(p, Fraction(0)) - e
    return LogCombination(0, terms)


def logcomb_arith(lhs: LogCombination, rhs, op: str) -> LogCombination:
    """Named-op form: op in {"add", "sub", "scale"} (rhs a Rational for scale)."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown op {op!r}")


def logcomb_to_float(value: LogCombination, precision_bits: int) -> mpmath.mpf:
    """High-precision real value, correctly rounded to ~precision_bits.

    Combinations like p*Lambda - q cancel catastrophically (the whole
    point of the approximants), so the working precision is raised by
    the observed cancellation before the final rounding.
    """
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    coeff_bits = max(
        [abs(value.constant.numerator).bit_length()]
        + [abs(c.numerator).bit_length() for _, c in value.terms],
        default=1,
    )
    guard = 64 + coeff_bits + len(value.terms).bit_length()

    def attempt(workbits: int) -> mpmath.mpf:
        with mpmath.workprec(workbits):
            total = mpmath.mpf(value.constant.numerator) / value.constant.denominator
            for p, c in value.terms:
                total += mpmath.ln(p) * mpmath.mpf(c.numerator) / c.denominator
            return total

    if value.is_zero():
        return mpmath.mpf(0)
    first = attempt(precision_bits + guard)
    if first == 0:
        cancellation = precision_bits + guard  # everything cancelled; retry harder
    else:
        magnitude = max(
            [abs(value.constant)] + [abs(c) * 2 for _, c in value.terms]
        )
        with mpmath.workprec(64):
            cancellation = max(
                0, int(mpmath.log(mpmath.mpf(magnitude.numerator) / magnitude.denominator / abs(first), 2)) + 8
            )
    final = attempt(precision_bits + guard + cancellation)
    with mpmath.workprec(precision_bits):
        return +final


# -- rational roots ------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def _fraction_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    rn = math.isqrt(value.numerator)
    rd = math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def _squarefree_rational_roots(g: Poly) -> tuple[list[Fraction], Poly]:
    """All rational roots of a squarefree polynomial plus the unfactored
    (root-free over Q) remainder."""
    roots: list[Fraction] = []
    current = g
    while current.degree() >= 1:
        if current.degree() == 1:
            roots.append(-current[0] / current[1])
            current = Poly.constant(current.leading_coefficient())
            break
        if current.degree() == 2:
            a2, a1, a0 = current[2], current[1], current[0]
            s = _fraction_sqrt(a1 * a1 - 4 * a2 * a0)
            if s is None:
                break
            roots.extend([(-a1 + s) / (2 * a2), (-a1 - s) / (2 * a2)])
            current = Poly.constant(current.leading_coefficient())
            break
        found = _one_rational_root(current)
        if found is None:
            break
        roots.append(found)
        current = current.exact_div(Poly([-found, 1]))
    return roots, current


def _one_rational_root(p: Poly) -> Fraction | None:
    if p[0] == 0:
        return Fraction(0)
    ints = p.primitive()
    scale = 1
    for c in ints.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = Poly(c * scale for c in ints.coeffs)
    for num in _divisors(abs(int(ints[0]))):
        for den in _divisors(abs(int(ints.leading_coefficient()))):
            for sign in (1, -1):
                candidate = Fraction(sign * num, den)
                if p(candidate) == 0:
                    return candidate
    return None


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities, sorted by root value.

    Non-rational factors are ignored; use partial_fractions when a full
    linear factorization is required.
    """
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    out: list[tuple[Fraction, int]] = []
    for factor, mult in squarefree_decomposition(p):
        roots, _ = _squarefree_rational_roots(factor)
        out.extend((r, mult) for r in roots)
    return sorted(out)


def _linear_factorization(p: Poly) -> list[tuple[Fraction, int]]:
    """(root, multiplicity) pairs with prod (x-root)^mult = p / lc(p);
    raises NonRationalRootError naming any factor without rational roots."""
    out: list[tuple[Fraction, int]] = []
    for factor, mult in squarefree_decomposition(p):
        roots, leftover = _squarefree_rational_roots(factor)
        if leftover.degree() > 0:
            raise NonRationalRootError(
                f"denominator factor {leftover} has no rational root"
            )
        out.extend((r, mult) for r in roots)
    return sorted(out)


# -- partial fractions ----------------------------------------------------------


class PoleTerm(NamedTuple):
    root: Fraction
    multiplicity: int
    coefficient: Fraction


@dataclass(frozen=True)
class PartialFractionForm:
    """polynomial_part + sum of coefficient/(x - root)^multiplicity."""

    polynomial_part: Poly
    pole_terms: tuple[PoleTerm, ...]

    def reassemble(self) -> RatFunc:
        total = RatFunc(self.polynomial_part)
        for root, mult, coeff in self.pole_terms:
            total = total + RatFunc(
                Poly.constant(coeff), Poly([-root, 1]) ** mult
            )
        return total


def partial_fractions(f: RatFunc) -> PartialFractionForm:
    """Exact decomposition over Q; requires the denominator to split into
    linear factors with rational roots.

    Principal parts are read off a truncated power series: with y = x-r
    and den = y^m * B(y), the series of num(y+r)/B(y) to order m-1 gives
    the coefficients of 1/(x-r)^m, ..., 1/(x-r).
    """
    poly_part, remainder = divmod(f.num, f.den)
    if remainder.is_zero():
        return PartialFractionForm(poly_part, ())
    pole_terms: list[PoleTerm] = []
    for root, mult in _linear_factorization(f.den):
        numer = remainder.shift(root)  # A(y) = remainder(y + root)
        shifted_den = f.den.shift(root)
        basis = Poly(shifted_den.coeffs[mult:])  # B(y) = den(y+root)/y^m
        b0 = basis[0]
        series: list[Fraction] = []
        for t in range(mult):
            acc = numer[t]
            for u, s_u in enumerate(series):
                acc -= s_u * basis[t - u]
            series.append(acc / b0)
        for t, coeff in enumerate(series):
            if coeff != 0:
                pole_terms.append(PoleTerm(root, mult - t, coeff))
    return PartialFractionForm(poly_part, tuple(pole_terms))


# -- the integral ---------------------------------------------------------------


def integrate_01(f: RatFunc) -> LogCombination:
    """Exact value of the integral of f over [0, 1].

    Simple poles at rational r outside [0, 1] contribute
    coeff * log((1-r)/(-r)), a log of a positive rational, canonicalized
    through prime factorization; everything else contributes rationals.
    """
    if f.is_zero():
        return LogCombination.zero()
    if f.den.degree() > 0 and (
        f.den(0) == 0 or sturm_root_count(f.den, 0, 1) > 0
    ):
        raise DivergentIntegralError(
            f"integrand has a pole in [0, 1]: denominator {f.den}"
        )
    decomposition = partial_fractions(f)
    constant = Fraction(0)
    for i, c in enumerate(decomposition.polynomial_part.coeffs):
        constant += c / (i + 1)
    total = LogCombination(constant, ())
    for root, mult, coeff in decomposition.pole_terms:
        if mult == 1:
            ratio = (1 - root) / (-root)
            total = total + coeff * log_of_rational(ratio)
        else:
            e = 1 - mult
            jump = ((1 - root) ** e - (-root) ** e) / e
            total = total + LogCombination(coeff * jump, ())
    return total
