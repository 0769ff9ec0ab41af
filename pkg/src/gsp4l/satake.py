"""Classical and normalized Satake parameters at a good prime.

Classical parameters (alpha0, alpha1, alpha2) at p satisfy
alpha0^2 * alpha1 * alpha2 = p^(2k-3).  The normalized pair is
alpha = p^(3/2-k)*alpha0 and beta = alpha*alpha1; its spin multiset is
{alpha, 1/alpha, beta, 1/beta} and has product 1.  On the exact backend
the half-integer powers of p are carried by SqrtRational.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Mapping

from .errors import (
    ConstraintViolated,
    MixedBackend,
    NumericallyDegenerate,
    InvariantError,
)
from .primes import is_prime
from .scalars import (
    EXACT,
    SqrtRational,
    backend_of,
    default_tolerance,
    half_power,
    scalars_close,
)


def _check_prime(p: int):
    if not isinstance(p, int) or not is_prime(p):
        raise InvariantError(f"p = {p!r} is not prime")


def _check_weight(k: int):
    if not isinstance(k, int) or k <= 2:
        raise InvariantError(f"weight must be an integer > 2, got {k!r}")


def _sort_values(values, kind):
    if kind == EXACT:
        return sorted(values)
    return sorted(values, key=lambda z: (complex(z).real, complex(z).imag))


@dataclass(frozen=True)
class ClassicalSatake:
    """(alpha0, alpha1, alpha2) at prime p for weight k."""

    p: int
    k: int
    alpha0: object
    alpha1: object
    alpha2: object

    def __post_init__(self):
        _check_prime(self.p)
        _check_weight(self.k)
        kind = backend_of((self.alpha0, self.alpha1, self.alpha2))
        if self.alpha1 == 0 or self.alpha2 == 0:
            raise ConstraintViolated("alpha1 and alpha2 must be nonzero")
        lhs = self.alpha0 * self.alpha0 * self.alpha1 * self.alpha2
        rhs = self.p ** (2 * self.k - 3)
        if kind == EXACT:
            ok = lhs == rhs
        else:
            ok = scalars_close(lhs, complex(rhs))
        if not ok:
            raise ConstraintViolated(
                f"alpha0^2*alpha1*alpha2 = {lhs!r} != p^(2k-3) = {rhs}"
            )

    @property
    def backend(self):
        return backend_of((self.alpha0, self.alpha1, self.alpha2))


@dataclass(frozen=True)
class NormalizedSatake:
    """The normalized pair (alpha, beta) at p."""

    p: int
    alpha: object
    beta: object

    def __post_init__(self):
        _check_prime(self.p)
        backend_of((self.alpha, self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise InvariantError("alpha and beta must be nonzero")

    @property
    def backend(self):
        return backend_of((self.alpha, self.beta))


class SpinMultiset:
    """The four spin parameters {alpha, 1/alpha, beta, 1/beta}; product 1."""

    kind = "spin"
    size = 4

    __slots__ = ("values",)

    def __init__(self, values, tol: float | None = None):
        values = tuple(values)
        if len(values) != self.size:
            raise InvariantError(
                f"{type(self).__name__} needs {self.size} values, got {len(values)}"
            )
        kind = backend_of(values)
        prod = values[0]
        for v in values[1:]:
            prod = prod * v
        if kind == EXACT:
            if prod != 1:
                raise InvariantError(f"product of spin parameters is {prod!r}, not 1")
        elif not scalars_close(prod, 1.0 + 0j, tol):
            raise InvariantError(f"product of spin parameters is {prod!r}, not ~1")
        self.values = values

    @property
    def backend(self):
        return backend_of(self.values)

    def sorted_values(self):
        return _sort_values(self.values, self.backend)

    def power_sum(self, r: int):
        acc = self.values[0] ** r
        for v in self.values[1:]:
            acc = acc + v**r
        return acc

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.sorted_values() == other.sorted_values()

    def __hash__(self):
        return hash((self.kind, tuple(self.sorted_values())))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.values)!r})"


class StdMultiset(SpinMultiset):
    """The five standard parameters {1, a1, a2, 1/a1, 1/a2}."""

    kind = "std"
    size = 5

    def __init__(self, values, tol: float | None = None):
        values = tuple(values)
        if len(values) != self.size:
            raise InvariantError(f"StdMultiset needs 5 values, got {len(values)}")
        kind = backend_of(values)
        if kind == EXACT:
            if not any(v == 1 for v in values):
                raise InvariantError("standard multiset must contain 1")
            sorted_vals = _sort_values(values, kind)
            inv = _sort_values([1 / _as_exact_div(v) for v in values], kind)
            if inv != sorted_vals:
                raise InvariantError("standard multiset not closed under inversion")
        else:
            if not any(scalars_close(complex(v), 1.0 + 0j, tol) for v in values):
                raise InvariantError("standard multiset must contain ~1")
            if not multisets_equivalent(
                values, [1 / complex(v) for v in values], tol
            ):
                raise InvariantError("standard multiset not closed under inversion")
        self.values = values


def _as_exact_div(v):
    # make 1/v exact for ints too
    if isinstance(v, int):
        return Fraction(v)
    return v


def normalize(c: ClassicalSatake) -> NormalizedSatake:
    """alpha = p^(3/2-k) * alpha0, beta = alpha * alpha1."""
    if c.backend == EXACT:
        scale = half_power(c.p, 3 - 2 * c.k)
    else:
        scale = float(c.p) ** (1.5 - c.k)
    alpha = scale * c.alpha0
    beta = alpha * c.alpha1
    return NormalizedSatake(c.p, alpha, beta)


def denormalize(n: NormalizedSatake, k: int) -> ClassicalSatake:
    """Inverse of :func:`normalize`; the constraint holds by construction."""
    _check_weight(k)
    if n.backend == EXACT:
        scale = half_power(n.p, 2 * k - 3)
        one = SqrtRational(1)
    else:
        scale = float(n.p) ** (k - 1.5)
        one = 1.0
    alpha0 = scale * n.alpha
    alpha1 = n.beta / n.alpha
    alpha2 = one / (n.alpha * n.beta)
    return ClassicalSatake(n.p, k, alpha0, alpha1, alpha2)


def spin_multiset(n: NormalizedSatake) -> SpinMultiset:
    one = SqrtRational(1) if n.backend == EXACT else 1.0
    return SpinMultiset((n.alpha, one / n.alpha, n.beta, one / n.beta))


def std_multiset(c: ClassicalSatake) -> StdMultiset:
    """{1, alpha1, alpha2, 1/alpha1, 1/alpha2}."""
    if c.backend == EXACT:
        one = 1
        a1 = _as_exact_div(c.alpha1)
        a2 = _as_exact_div(c.alpha2)
    else:
        one = 1.0
        a1, a2 = c.alpha1, c.alpha2
    return StdMultiset((one, c.alpha1, c.alpha2, one / a1, one / a2))


def std_multiset_from_normalized(n: NormalizedSatake) -> StdMultiset:
    """Standard parameters via alpha1 = beta/alpha, alpha2 = 1/(alpha*beta)."""
    one = SqrtRational(1) if n.backend == EXACT else 1.0
    a1 = n.beta / n.alpha
    a2 = one / (n.alpha * n.beta)
    return StdMultiset((one, a1, a2, one / a1, one / a2))


def eigenvalues_from_spin_multiset(m: SpinMultiset, p: int, k: int):
    """(lambda(p), lambda(p^2)) of the form carrying these spin parameters.

    lambda(p)   = p^(k-3/2) * e1
    lambda(p^2) = p^(2k-3) * (e1^2 - e2 - 1/p)
    with e1, e2 the first elementary symmetric functions of the multiset.
    """
    _check_weight(k)
    vals = m.values
    e1 = vals[0]
    for v in vals[1:]:
        e1 = e1 + v
    e2 = vals[0] * 0
    for i in range(4):
        for j in range(i + 1, 4):
            e2 = e2 + vals[i] * vals[j]
    if m.backend == EXACT:
        lam_p = half_power(p, 2 * k - 3) * e1
        lam_p2 = p ** (2 * k - 3) * (e1 * e1 - e2 - Fraction(1, p))
    else:
        lam_p = float(p) ** (k - 1.5) * e1
        lam_p2 = float(p) ** (2 * k - 3) * (e1 * e1 - e2 - 1.0 / p)
    return lam_p, lam_p2


def eigenvalues_from_normalized(n: NormalizedSatake, k: int):
    return eigenvalues_from_spin_multiset(spin_multiset(n), n.p, k)


def from_eigenvalues(lambda_p, lambda_p2, p: int, k: int, tol: float | None = None) -> NormalizedSatake:
    """Recover a normalized Satake pair from (lambda(p), lambda(p^2)).

    Works on the float-complex backend: with s = p^(3/2-k)*lambda(p) and
    v = p^(3-2k)*lambda(p^2), the pair {A, B} = {alpha+1/alpha, beta+1/beta}
    solves A+B = s, A^2+AB+B^2 = v+2+1/p, i.e. the roots of
    t^2 - s*t + (s^2 - v - 2 - 1/p).  Roots and the {A, B} order are
    canonicalized; any valid choice yields the same spin multiset.
    """
    _check_prime(p)
    _check_weight(k)
    if tol is None:
        tol = default_tolerance()
    lp = complex(lambda_p)
    lp2 = complex(lambda_p2)
    s = float(p) ** (1.5 - k) * lp
    v = float(p) ** (3 - 2 * k) * lp2
    w = v + 2 + 1.0 / p
    disc = cmath.sqrt(4 * w - 3 * s * s)
    pair = sorted(((s + disc) / 2, (s - disc) / 2), key=lambda z: (z.real, z.imag))

    def unit_root(t):
        # u^2 - t*u + 1 = 0, pick |u| >= 1, ties to Im(u) >= 0
        d = cmath.sqrt(t * t - 4)
        u1 = (t + d) / 2
        u2 = (t - d) / 2
        if abs(abs(u1) - abs(u2)) <= tol * max(1.0, abs(u1), abs(u2)):
            return u1 if u1.imag >= u2.imag else u2
        return u1 if abs(u1) > abs(u2) else u2

    alpha = unit_root(pair[0])
    beta = unit_root(pair[1])
    n = NormalizedSatake(p, alpha, beta)
    got_lp, got_lp2 = eigenvalues_from_normalized(n, k)
    if not (scalars_close(got_lp, lp, tol) and scalars_close(got_lp2, lp2, tol)):
        raise NumericallyDegenerate(
            f"recovered pair fails to reproduce eigenvalues at p={p}: "
            f"{got_lp!r} vs {lp!r}, {got_lp2!r} vs {lp2!r}"
        )
    return n


def multisets_equivalent(a_values, b_values, tol: float | None = None) -> bool:
    """Bijection matching within tol (exact equality on the exact backend)."""
    a_values = list(a_values)
    b_values = list(b_values)
    if len(a_values) != len(b_values):
        return False
    kind = backend_of(a_values + b_values)
    if kind == EXACT:
        return _sort_values(a_values, kind) == _sort_values(b_values, kind)
    if tol is None:
        tol = default_tolerance()
    av = [complex(v) for v in _sort_values(a_values, kind)]
    bv = [complex(v) for v in _sort_values(b_values, kind)]
    if all(scalars_close(x, y, tol) for x, y in zip(av, bv)):
        return True
    # the canonical sort may interleave near-equal elements; try matchings
    for perm in permutations(range(len(bv))):
        if all(scalars_close(av[i], bv[j], tol) for i, j in enumerate(perm)):
            return True
    # distinct-but-close elements make the verdict unreliable
    for vals in (av, bv):
        for i in range(len(vals) - 1):
            x, y = vals[i], vals[i + 1]
            if x != y and abs(x - y) <= 10 * tol * max(1.0, abs(x), abs(y)):
                raise NumericallyDegenerate(
                    f"elements {x!r} and {y!r} within 10*tol but unmatched"
                )
    return False


def satake_equivalent(a: SpinMultiset, b: SpinMultiset, tol: float | None = None) -> bool:
    """True iff the two multisets match up to permutation (within tol)."""
    if a.kind != b.kind:
        return False
    return multisets_equivalent(a.values, b.values, tol)


def representative_pair(m: SpinMultiset) -> tuple[complex, complex]:
    """A float (alpha, beta) whose spin multiset regenerates m: take the
    first value, drop its inverse partner, keep either of the rest."""
    vals = [complex(v) for v in m.values]
    alpha = vals[0]
    rest = vals[1:]
    j = min(range(3), key=lambda i: abs(rest[i] * alpha - 1))
    del rest[j]
    return alpha, rest[0]


@dataclass(frozen=True)
class SatakeSystem:
    """Per-prime spin multisets of one eigenform (weight k, given level)."""

    k: int
    level: int
    msets: Mapping[int, SpinMultiset] = field(default_factory=dict)

    def __post_init__(self):
        _check_weight(self.k)
        if self.level < 1:
            raise InvariantError(f"level must be >= 1, got {self.level}")
        for p in self.msets:
            _check_prime(p)
            if self.level % p == 0:
                raise InvariantError(f"stored prime {p} divides level {self.level}")

    def multiset(self, p: int) -> SpinMultiset:
        from .errors import UnknownPrime

        if p not in self.msets:
            raise UnknownPrime(f"no Satake data at p = {p}")
        return self.msets[p]
