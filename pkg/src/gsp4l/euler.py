"""Local L-factor reciprocals as polynomials in X = p^(-s).

Two normalizations coexist and are tagged explicitly:

* ``arithmetic`` -- the eigenvalue form, degree 4:
  1 - lambda(p) X + (lambda(p)^2 - lambda(p^2) - p^(2k-4)) X^2
    - lambda(p) p^(2k-3) X^3 + p^(4k-6) X^4
* ``analytic`` -- the normalized-parameter form prod (1 - gamma X).

The conversion is the shift s -> s + k - 3/2: coefficient r picks up the
factor p^(r(k-3/2)), which the exact backend carries via SqrtRational.
Conversions are explicit; nothing rescales implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError, KindMismatch
from .satake import SpinMultiset, StdMultiset, _check_prime, _check_weight
from .scalars import EXACT, backend_of, half_power, scalars_close
from .series import SeriesPoly, poly_from_roots

ARITHMETIC = "arithmetic"
ANALYTIC = "analytic"


@dataclass(frozen=True)
class LocalFactor:
    """Reciprocal (denominator) polynomial of a local L-factor at p."""

    p: int
    reciprocal: SeriesPoly
    degree: int
    normalization: str

    def __post_init__(self):
        _check_prime(self.p)
        if self.normalization not in (ARITHMETIC, ANALYTIC):
            raise InvariantError(f"unknown normalization {self.normalization!r}")
        if self.reciprocal.order != self.degree:
            raise InvariantError(
                f"reciprocal carries order {self.reciprocal.order}, "
                f"declared degree {self.degree}"
            )
        c0 = self.reciprocal[0]
        if self.reciprocal.backend == EXACT:
            ok = c0 == 1
        else:
            ok = scalars_close(c0, 1.0 + 0j)
        if not ok:
            raise InvariantError(f"reciprocal constant term is {c0!r}, not 1")

    @property
    def backend(self):
        return self.reciprocal.backend

    def series(self, order: int) -> SeriesPoly:
        """Expansion of the L-factor (the reciprocal's inverse) to order."""
        return self.reciprocal.truncated(order).invert()


def spin_reciprocal_satake(m: SpinMultiset, p: int) -> LocalFactor:
    """prod (1 - gamma X) over the spin multiset; degree 4, analytic."""
    if not isinstance(m, SpinMultiset) or isinstance(m, StdMultiset):
        raise KindMismatch("spin_reciprocal_satake needs a SpinMultiset")
    return LocalFactor(p, poly_from_roots(m.values), 4, ANALYTIC)


def spin_reciprocal_eigen(lambda_p, lambda_p2, p: int, k: int) -> LocalFactor:
    """Degree-4 arithmetic reciprocal from (lambda(p), lambda(p^2))."""
    _check_prime(p)
    _check_weight(k)
    kind = backend_of((lambda_p, lambda_p2))
    if kind == EXACT:
        p2k4 = p ** (2 * k - 4)
        p2k3 = p ** (2 * k - 3)
        p4k6 = p ** (4 * k - 6)
        one = 1
    else:
        p2k4 = float(p) ** (2 * k - 4)
        p2k3 = float(p) ** (2 * k - 3)
        p4k6 = float(p) ** (4 * k - 6)
        one = 1.0
    coeffs = [
        one,
        -lambda_p,
        lambda_p * lambda_p - lambda_p2 - p2k4,
        -lambda_p * p2k3,
        one * p4k6,
    ]
    return LocalFactor(p, SeriesPoly(coeffs), 4, ARITHMETIC)


def std_reciprocal(m: StdMultiset, p: int) -> LocalFactor:
    """prod (1 - delta X) over the five standard parameters; analytic."""
    if not isinstance(m, StdMultiset):
        raise KindMismatch("std_reciprocal needs a StdMultiset")
    return LocalFactor(p, poly_from_roots(m.values), 5, ANALYTIC)


def rankin_reciprocal(a, b, p: int) -> LocalFactor:
    """prod over all pairs (1 - gamma_i delta_j X); degree 16 or 25."""
    if type(a) is not type(b):
        raise KindMismatch(
            f"cannot convolve {type(a).__name__} with {type(b).__name__}"
        )
    if not isinstance(a, SpinMultiset):
        raise KindMismatch("rankin_reciprocal needs spin or std multisets")
    roots = [x * y for x in a.values for y in b.values]
    return LocalFactor(p, poly_from_roots(roots), len(roots), ANALYTIC)


def rescale(f: LocalFactor, k: int, to: str) -> LocalFactor:
    """Explicit arithmetic <-> analytic conversion of a local factor.

    Coefficient r is multiplied by p^(+r(k-3/2)) going analytic->arithmetic
    and by p^(-r(k-3/2)) the other way (the shift s -> s + k - 3/2).
    """
    _check_weight(k)
    if to not in (ARITHMETIC, ANALYTIC):
        raise InvariantError(f"unknown normalization {to!r}")
    if f.normalization == to:
        return f
    sign = 1 if to == ARITHMETIC else -1
    coeffs = []
    for r, c in enumerate(f.reciprocal):
        if f.backend == EXACT:
            factor = half_power(f.p, sign * r * (2 * k - 3))
            coeffs.append(factor * c)
        else:
            coeffs.append(float(f.p) ** (sign * r * (k - 1.5)) * c)
    return LocalFactor(f.p, SeriesPoly(coeffs), f.degree, to)


def eigen_series_local(lambda_p, lambda_p2, p: int, k: int, order: int) -> SeriesPoly:
    """sum_r lambda(p^r) X^r  =  (1 - p^(2k-4) X^2) / (arithmetic reciprocal)."""
    rec = spin_reciprocal_eigen(lambda_p, lambda_p2, p, k)
    kind = rec.backend
    if kind == EXACT:
        numerator = [1, 0, -(p ** (2 * k - 4))]
    else:
        numerator = [1.0, 0.0, -(float(p) ** (2 * k - 4))]
    num = SeriesPoly(numerator).truncated(order)
    return num * rec.reciprocal.truncated(order).invert()


def normalized_eigen_series_local(m: SpinMultiset, p: int, order: int) -> SeriesPoly:
    """sum_r lambdatilde(p^r) X^r = (1 - X^2/p) / prod(1 - gamma X)."""
    rec = spin_reciprocal_satake(m, p)
    if rec.backend == EXACT:
        numerator = [1, 0, -Fraction(1, p)]
    else:
        numerator = [1.0, 0.0, -1.0 / p]
    num = SeriesPoly(numerator).truncated(order)
    return num * rec.reciprocal.truncated(order).invert()


def a_coefficient_series(m: SpinMultiset, p: int, order: int) -> SeriesPoly:
    """a(p^r) of the normalized spin L-function: coefficient r of
    1/prod(1 - gamma X), the complete homogeneous symmetric functions."""
    rec = spin_reciprocal_satake(m, p)
    return rec.reciprocal.truncated(order).invert()
