"""Creative telescoping: certificate verification and discovery.

A telescoping relation for a family F(n, x) = c(x) * r(x)^n is

    sum_k  c_k(n) * F(n+k, x)  =  d/dx ( R(n, x) * F(n, x) )

with polynomial coefficients c_k(n) and a rational certificate R.
Dividing by F(n, x) turns it into an identity between rational
functions of x whose dependence on n is polynomial:

    sum_k  c_k(n) * r(x)^k  =  R'(n, x) + R(n, x) * (c'/c + n * r'/r)

Verification checks this divided identity exactly for numeric n; since
both sides are polynomial in n of bounded degree, checking at
degree_bound + 1 integer values of n proves it for every n.

Discovery follows the differentiating-under-the-integral-sign ansatz:
R(x) = x(x-1) * M(x) / Q(x) with Q the denominator of c.  For each trial
order and numerator degree it solves exact homogeneous linear systems at
consecutive numeric n, reconstructs the n-dependence of the solution ray
by rational interpolation of coordinate ratios (the per-n nullspace
vectors carry an arbitrary scale, so the ratios, not the raw
coordinates, are the well-defined data), clears denominators to a
primitive polynomial tuple, and confirms the candidate with the exact
all-n verification above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import AnsatzExhaustedError
from .families import IntegrandFamily, ParameterPair
from .polynomials import Poly, poly_gcd, poly_lcm
from .ratfuncs import RatFunc

_X_TIMES_X_MINUS_1 = Poly([0, -1, 1])  # x(x-1), the forced certificate factor


@dataclass(frozen=True)
class Recurrence:
    """sum_k coeffs[k](n) * F(n+k, x); coeffs are Poly in the variable n."""

    order: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.order < 1:
            raise ValueError("recurrence order must be >= 1")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficient polynomials")
        if self.coeffs[-1].is_zero():
            raise ValueError("leading recurrence coefficient must be nonzero")

    def coefficient_at(self, k: int, n: int) -> Fraction:
        return self.coeffs[k](n)

    def degree_in_n(self) -> int:
        return max(c.degree() for c in self.coeffs)

    def _normalization_scale(self) -> Fraction:
        num_gcd, den_lcm = 0, 1
        for poly in self.coeffs:
            for c in poly.coeffs:
                num_gcd = math.gcd(num_gcd, abs(c.numerator))
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd)
        if self.coeffs[-1].leading_coefficient() < 0:
            scale = -scale
        return scale

    def normalized(self) -> tuple["Recurrence", Fraction]:
        """Primitive integer-content form with positive leading coefficient
        of the top coefficient polynomial, plus the scale that achieves it.

        Scaling a recurrence scales the telescoping identity, so any
        paired certificate must be scaled by the same factor to keep
        verifying; see normalize_pair.
        """
        scale = self._normalization_scale()
        rec = Recurrence(self.order, tuple(scale * c for c in self.coeffs))
        return rec, scale

    def to_str(self, var: str = "n") -> str:
        return "[" + ", ".join(c.to_str(var) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class Certificate:
    """R(n, x) = parts[0](x) + n * parts[1](x) + ...; the classical
    certificates here are n-free (a single part)."""

    parts: tuple[RatFunc, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("certificate needs at least one part")

    def at(self, n: int) -> RatFunc:
        acc = RatFunc.zero()
        for part in reversed(self.parts):
            acc = acc * n + part
        return acc

    def n_degree(self) -> int:
        deg = -1
        for i, part in enumerate(self.parts):
            if not part.is_zero():
                deg = i
        return max(deg, 0)

    def scaled(self, factor: Fraction) -> "Certificate":
        return Certificate(tuple(factor * p for p in self.parts))

    def satisfies_boundary_invariant(self) -> bool:
        """Each part finite and zero at x=0 and x=1, which makes
        R(n, x) * F(n, x) vanish at both endpoints for every n."""
        for part in self.parts:
            if part.den(0) == 0 or part.den(1) == 0:
                return False
            if part.num(0) != 0 or part.num(1) != 0:
                return False
        return True


def normalize_pair(
    rec: Recurrence, certs: Sequence[Certificate]
) -> tuple[Recurrence, tuple[Certificate, ...]]:
    """Normalize the recurrence and scale the certificates jointly so the
    telescoping identities keep holding."""
    normalized, scale = rec.normalized()
    return normalized, tuple(c.scaled(scale) for c in certs)


# -- verification -----------------------------------------------------------


def verify_telescoping(
    fam: IntegrandFamily, rec: Recurrence, cert: Certificate, n: int
) -> bool:
    """Exact check of the divided telescoping identity at one numeric n.

    Returns False on any mismatch; never raises for well-formed inputs.
    """
    lhs = RatFunc.zero()
    for k in range(rec.order + 1):
        lhs = lhs + rec.coefficient_at(k, n) * fam.shifted_ratio(k)
    r = cert.at(n)
    rhs = r.derivative() + r * fam.log_derivative(n)
    return lhs == rhs


def verify_telescoping_all_n(
    fam: IntegrandFamily, rec: Recurrence, cert: Certificate, degree_bound: int
) -> bool:
    """Check the identity for n = 0 .. degree_bound.

    Both sides of the divided identity are polynomials in n of degree at
    most degree_bound (when the bound satisfies required_degree_bound),
    so agreement at degree_bound + 1 integers proves the identity for
    all n.
    """
    return all(
        verify_telescoping(fam, rec, cert, n) for n in range(degree_bound + 1)
    )


def required_degree_bound(rec: Recurrence, cert: Certificate) -> int:
    """A safe degree bound in n for verify_telescoping_all_n.

    Left side has degree max_k deg c_k; the right side's R * n * r'/r
    term has degree (n-degree of R) + 1.  One extra unit of margin is
    included, giving 2 for the classical order-2, n-free-certificate
    shape.
    """
    return max(rec.degree_in_n(), cert.n_degree() + 1) + 1


# -- closed-form recurrence and certificates ----------------------------------


def closed_form_recurrence(params: ParameterPair) -> Recurrence:
    """(n+1) F(n) - (2n+3)(2ab+a+b) F(n+1) + (a-b)^2 (n+2) F(n+2)."""
    a, b = params.a, params.b
    s = 2 * a * b + a + b
    return Recurrence(
        2,
        (
            Poly([1, 1]),
            Poly([-3 * s, -2 * s]),
            (a - b) ** 2 * Poly([2, 1]),
        ),
    )


def closed_form_certificates(params: ParameterPair) -> tuple[Certificate, Certificate]:
    """The closed-form certificates for the left and right families:

    R1 = x(x-1) ((a+b+1)x^2 + 2abx - ab) / ((x+a)(x+b))
    R2 = x(x-1) ((a-b)x^2 + 2b(a+1)x - (a+1)b) / ((a-b)x + (a+1)b)
    """
    a, b = params.a, params.b
    r1 = RatFunc(
        _X_TIMES_X_MINUS_1 * Poly([-a * b, 2 * a * b, a + b + 1]),
        Poly([a * b, a + b, 1]),
    )
    r2 = RatFunc(
        _X_TIMES_X_MINUS_1 * Poly([-(a + 1) * b, 2 * b * (a + 1), a - b]),
        Poly([(a + 1) * b, a - b]),
    )
    return Certificate((r1,)), Certificate((r2,))


# -- exact nullspace ----------------------------------------------------------


def _primitive_int_row(row: Sequence[Fraction]) -> list[int]:
    den_lcm = 1
    for c in row:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def solve_nullspace(matrix: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Exact basis of the right nullspace via fraction-free elimination.

    Rows are cleared to primitive integer vectors and eliminated by
    cross-multiplication, so all intermediate arithmetic stays in Z.
    Basis vectors are canonical: primitive integer entries with positive
    first nonzero coordinate, one per free column.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    if any(len(row) != ncols for row in matrix):
        raise ValueError("matrix rows must have equal length")
    if ncols == 0:
        return []
    work = [
        _primitive_int_row([Fraction(c) for c in row])
        for row in matrix
        if any(c != 0 for c in row)
    ]
    pivots: list[tuple[int, int]] = []  # (row index in work, pivot column)
    rank = 0
    for col in range(ncols):
        candidates = [i for i in range(rank, len(work)) if work[i][col] != 0]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: abs(work[i][col]))
        work[rank], work[best] = work[best], work[rank]
        pivot_val = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                factor = work[i][col]
                merged = [
                    pivot_val * a - factor * b for a, b in zip(work[i], work[rank])
                ]
                g = 0
                for v in merged:
                    g = math.gcd(g, v)
                work[i] = [v // g for v in merged] if g > 1 else merged
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free_col in range(ncols):
        if free_col in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free_col] = Fraction(1)
        for row_idx, col in reversed(pivots):
            row = work[row_idx]
            acc = sum((row[j] * vec[j] for j in range(col + 1, ncols)), Fraction(0))
            vec[col] = -acc / row[col]
        ints = _primitive_int_row(vec)
        first = next(v for v in ints if v != 0)
        if first < 0:
            ints = [-v for v in ints]
        basis.append(tuple(Fraction(v) for v in ints))
    return basis


# -- discovery ----------------------------------------------------------------


def _ansatz_columns(fam: IntegrandFamily, rho: int, d: int) -> list[RatFunc]:
    """n-free pieces of the ansatz: one column per unknown.

    Unknowns are (c_0 .. c_rho, m_0 .. m_{d-2}) where the certificate is
    R = x(x-1) (m_0 + m_1 x + ...) / Q with Q = den(c).  The n-dependent
    part (R * n * r'/r) is added per sample in _sample_matrix.
    """
    q = fam.cofactor.den
    columns = [fam.shifted_ratio(k) for k in range(rho + 1)]
    for j in range(max(d - 1, 0)):
        r_j = RatFunc(_X_TIMES_X_MINUS_1 * Poly.monomial(1, j), q)
        columns.append(r_j)
    return columns


def _sample_matrix(
    fam: IntegrandFamily, rho: int, d: int, n_value: int
) -> list[list[Fraction]]:
    """Homogeneous system for the divided identity at one numeric n:
    coefficients in x of  sum_k c_k r^k - (R' + R * logd)  = 0."""
    logd = fam.log_derivative(n_value)
    contributions = []
    for idx, col in enumerate(_ansatz_columns(fam, rho, d)):
        if idx <= rho:
            contributions.append(col)
        else:
            contributions.append(-(col.derivative() + col * logd))
    common_den = reduce(poly_lcm, (c.den for c in contributions))
    polys = [c.num * common_den.exact_div(c.den) for c in contributions]
    nrows = max(p.degree() for p in polys) + 1
    return [[p[e] for p in polys] for e in range(nrows)]


def _choose_vector(basis: list[tuple[Fraction, ...]], rho: int) -> tuple[Fraction, ...]:
    def m_part_degree(vec):
        deg = -1
        for j, v in enumerate(vec[rho + 1 :]):
            if v != 0:
                deg = j
        return deg

    return min(basis, key=lambda v: (m_part_degree(v), v))


def _rational_interpolate(
    xs: Sequence[int], ys: Sequence[Fraction], max_deg: int
) -> tuple[Poly, Poly] | None:
    """Minimal rational function U/V with deg U, deg V <= max_deg matching
    all samples with V nonvanishing there; None if no such function."""
    for total in range(2 * max_deg + 1):
        for deg_num in range(min(total, max_deg) + 1):
            deg_den = total - deg_num
            if deg_den > max_deg:
                continue
            rows = []
            for x, y in zip(xs, ys):
                x = Fraction(x)
                row = [x**i for i in range(deg_num + 1)]
                row += [-y * x**i for i in range(deg_den + 1)]
                rows.append(row)
            for vec in solve_nullspace(rows):
                u = Poly(vec[: deg_num + 1])
                v = Poly(vec[deg_num + 1 :])
                if v.is_zero():
                    continue
                if any(v(x) == 0 for x in xs):
                    continue
                lead = v.leading_coefficient()
                return (
                    Poly(c / lead for c in u.coeffs),
                    v.monic(),
                )
            # no valid vector at this degree split; try the next
    return None


def _reconstruct_polynomials(
    vecs: list[tuple[Fraction, ...]], xs: Sequence[int], bound: int, rho: int
) -> list[Poly] | None:
    """Recover the primitive polynomial tuple behind per-sample nullspace
    rays: interpolate each coordinate's ratio to a reference coordinate,
    clear denominators, and strip the common polynomial factor."""
    ncoords = len(vecs[0])
    preference = [rho] + [i for i in range(ncoords) if i != rho]
    ref = next(
        (i for i in preference if all(v[i] != 0 for v in vecs)),
        None,
    )
    if ref is None:
        return None
    fractions_in_n: list[tuple[Poly, Poly]] = []
    for i in range(ncoords):
        ys = [v[i] / v[ref] for v in vecs]
        uv = _rational_interpolate(xs, ys, bound)
        if uv is None:
            return None
        fractions_in_n.append(uv)
    common = reduce(poly_lcm, (v for _, v in fractions_in_n))
    polys = [u * common.exact_div(v) for u, v in fractions_in_n]
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return None
    g = reduce(poly_gcd, nonzero)
    if g.degree() > 0:
        polys = [p.exact_div(g) if not p.is_zero() else p for p in polys]
    if any(p.degree() > bound for p in polys):
        return None
    return polys


def _assemble(
    fam: IntegrandFamily, polys: list[Poly], rho: int, d: int
) -> tuple[Recurrence, Certificate] | None:
    rec_polys = polys[: rho + 1]
    m_polys = polys[rho + 1 :]
    if rec_polys[-1].is_zero():
        return None
    rec = Recurrence(rho, tuple(rec_polys))
    n_degree = max((p.degree() for p in m_polys), default=-1)
    q = fam.cofactor.den
    parts = []
    for t in range(max(n_degree, 0) + 1):
        # coefficient of x^j in M_t comes from the n^t coefficient of m_polys[j]
        m_t = Poly([p[t] for p in m_polys])
        parts.append(RatFunc(_X_TIMES_X_MINUS_1 * m_t, q))
    cert = Certificate(tuple(parts))
    rec, (cert,) = normalize_pair(rec, (cert,))
    return rec, cert


def _try_shape(
    fam: IntegrandFamily, rho: int, d: int
) -> tuple[Recurrence, Certificate] | None:
    for bound in range(rho + 1, 2 * rho + 3):
        xs = list(range(2 * bound + 3))
        vecs = []
        for n_value in xs:
            basis = solve_nullspace(_sample_matrix(fam, rho, d, n_value))
            if not basis:
                return None  # no relation of this shape at this n
            vecs.append(_choose_vector(basis, rho))
        polys = _reconstruct_polynomials(vecs, xs, bound, rho)
        if polys is None:
            continue  # interpolation mismatch: raise the degree bound
        assembled = _assemble(fam, polys, rho, d)
        if assembled is None:
            continue
        rec, cert = assembled
        if verify_telescoping_all_n(fam, rec, cert, required_degree_bound(rec, cert)):
            return rec, cert
    return None


def discover(
    fam: IntegrandFamily, max_order: int = 2, max_cert_degree: int = 4
) -> tuple[Recurrence, Certificate]:
    """Find a telescoping relation for the family by the ansatz search.

    Trial orders and certificate-numerator degrees increase from 1, so
    the first hit has minimal order.  The returned recurrence is
    normalized (primitive, positive leading coefficient) with the
    certificate scaled to match, and the pair has passed the exact
    all-n verification.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if max_cert_degree < 1:
        raise ValueError("max_cert_degree must be >= 1")
    for rho in range(1, max_order + 1):
        for d in range(1, max_cert_degree + 1):
            found = _try_shape(fam, rho, d)
            if found is not None:
                return found
    raise AnsatzExhaustedError(max_order, max_cert_degree)
