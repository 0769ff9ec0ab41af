"""Saito-Kurokawa lift identities and quadratic twists.

The lift of an elliptic eigenform f of weight 2k-2 has normalized spin
L-function zeta(s+1/2) zeta(s-1/2) L(s, pi_f); at the coefficient level
that is the Dirichlet convolution of n^(1/2), n^(-1/2) and the analytic
coefficients a_f(n) = lambda_f(n) n^((1-w)/2), all carried exactly by the
square-root-tagged scalars.  The eigenvalue shadow of the factorization is
lambda_lift(p) = p^(k-1) + p^(k-2) + lambda_f(p); the source identity
states this at p = 2 and the general p form is forced by the
factorization (the consistency tests enforce it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    Gsp4Error,
    InvariantError,
    NotFundamental,
    OddWeight,
    WeightMismatch,
)
from .primes import is_squarefree
from .satake import _check_prime
from .scalars import SqrtRational
from .series import TruncatedDirichletSeries, dirichlet_convolve


# ---------------------------------------------------------------------------
# Kronecker symbol and quadratic characters


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending the Jacobi symbol to all n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    # Jacobi symbol (a|n) with n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def is_fundamental_discriminant(d: int) -> bool:
    """d = 1 or the discriminant of a quadratic field."""
    if d == 0:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


@dataclass(frozen=True)
class QuadChar:
    """Primitive quadratic character chi_d(n) = (d|n), d fundamental."""

    d: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.d):
            raise NotFundamental(f"{self.d} is not a fundamental discriminant")

    def __call__(self, n: int) -> int:
        return kronecker(self.d, n)


def in_twist_class(d: int, M: int, omega: int = -1) -> bool:
    """Membership in the root-number twist class: omega*d > 0 and
    d = v^2 mod 4M for some v coprime to 4M.  M is caller-supplied."""
    if M < 1:
        raise Gsp4Error(f"M must be >= 1, got {M}")
    if omega not in (1, -1):
        raise Gsp4Error(f"root number must be +-1, got {omega}")
    if omega * d <= 0:
        return False
    mod = 4 * M
    return any(
        v * v % mod == d % mod for v in range(1, mod) if math.gcd(v, mod) == 1
    )


# ---------------------------------------------------------------------------
# elliptic eigenforms


class EllipticEigenform:
    """Level-one elliptic eigenform: raw lambda_f(n) plus the analytic
    a_f(n) = lambda_f(n) * n^((1-w)/2), n = 1..N."""

    __slots__ = ("weight", "lambdas")

    def __init__(self, weight: int, lambdas):
        lambdas = [Fraction(v) for v in lambdas]
        if weight % 2:
            raise OddWeight(f"elliptic weight must be even, got {weight}")
        if weight < 12:
            raise InvariantError(f"level-one cusp forms need weight >= 12, got {weight}")
        if not lambdas or lambdas[0] != 1:
            raise InvariantError("normalized eigenform needs lambda(1) = 1")
        self.weight = weight
        self.lambdas = lambdas
        self._check_multiplicative()

    def _check_multiplicative(self):
        N = self.N
        for m in range(2, N + 1):
            for n in range(m, N // m + 1):
                if math.gcd(m, n) == 1:
                    if self.lam(m * n) != self.lam(m) * self.lam(n):
                        raise InvariantError(
                            f"multiplicativity fails at ({m}, {n})"
                        )

    @property
    def N(self) -> int:
        return len(self.lambdas)

    def lam(self, n: int) -> Fraction:
        if not 1 <= n <= self.N:
            raise Gsp4Error(f"coefficient index {n} outside [1, {self.N}]")
        return self.lambdas[n - 1]

    def a(self, n: int) -> SqrtRational:
        """Analytic coefficient lambda(n) * n^((1-w)/2), exactly."""
        lam = self.lam(n)
        # n^((1-w)/2) = sqrt(n) / n^(w/2) with w even
        return SqrtRational(lam * Fraction(1, n ** (self.weight // 2)), n)

    def a_series(self, N: int) -> TruncatedDirichletSeries:
        if N > self.N:
            raise Gsp4Error(f"only {self.N} coefficients stored, need {N}")
        return TruncatedDirichletSeries([self.a(n) for n in range(1, N + 1)])

    def __repr__(self):
        return f"EllipticEigenform(weight={self.weight}, N={self.N})"


# ---------------------------------------------------------------------------
# lift identities


def _check_lift_weights(f: EllipticEigenform, k: int):
    if k % 2:
        raise OddWeight(f"lift weight must be even, got {k}")
    if f.weight != 2 * k - 2:
        raise WeightMismatch(
            f"elliptic weight {f.weight} != 2k-2 = {2 * k - 2} for k = {k}"
        )


def sk_eigenvalue(f: EllipticEigenform, k: int, p: int):
    """Lift eigenvalue lambda(p) = p^(k-1) + p^(k-2) + lambda_f(p)."""
    _check_lift_weights(f, k)
    _check_prime(p)
    return p ** (k - 1) + p ** (k - 2) + f.lam(p)


def sk_eigenvalue_p2(f: EllipticEigenform, k: int, p: int):
    """Lift eigenvalue lambda(p^2), the coefficient shadow at p^2:
    p^(2k-2) + lambda_f(p) (p^(k-1) + p^(k-2)) + lambda_f(p)^2."""
    _check_lift_weights(f, k)
    _check_prime(p)
    lam = f.lam(p)
    return p ** (2 * k - 2) + lam * (p ** (k - 1) + p ** (k - 2)) + lam * lam


def _sqrt_n_series(N: int, sign: int) -> TruncatedDirichletSeries:
    """Coefficients n^(sign/2), exactly."""
    vals = []
    for n in range(1, N + 1):
        if sign > 0:
            vals.append(SqrtRational(1, n))
        else:
            vals.append(SqrtRational(Fraction(1, n), n))
    return TruncatedDirichletSeries(vals)


def sk_spin_coefficients(f: EllipticEigenform, N: int) -> TruncatedDirichletSeries:
    """a-coefficients of the lift's normalized spin L-function up to N:
    the convolution of n^(-1/2), n^(1/2) and a_f(n)."""
    zz = dirichlet_convolve(_sqrt_n_series(N, -1), _sqrt_n_series(N, +1))
    return dirichlet_convolve(zz, f.a_series(N))


def sk_twisted_coefficients(
    f: EllipticEigenform, chi: QuadChar, N: int
) -> TruncatedDirichletSeries:
    """Coefficients of the chi-twisted factorization: the convolution of
    chi(n) n^(-1/2), chi(n) n^(1/2) and chi(n) a_f(n).  By complete
    multiplicativity this equals chi(n) times the untwisted coefficient."""
    minus = _sqrt_n_series(N, -1)
    plus = _sqrt_n_series(N, +1)
    af = f.a_series(N)

    def twist(series):
        return TruncatedDirichletSeries(
            [chi(n) * series[n] for n in range(1, N + 1)]
        )

    return dirichlet_convolve(dirichlet_convolve(twist(minus), twist(plus)), twist(af))


def sk_local_spin_reciprocal(f: EllipticEigenform, p: int):
    """Normalized degree-4 reciprocal of the lift at p:
    (1 - (p^(1/2) + p^(-1/2)) X + X^2)(1 - a_f(p) X + X^2)."""
    from .series import SeriesPoly

    _check_prime(p)
    s = SqrtRational(1, p) + SqrtRational(Fraction(1, p), p)
    one = SqrtRational(1)
    zeta_part = SeriesPoly([one, -s, one])
    pi_part = SeriesPoly([one, -f.a(p), one])
    full = [one * 0] * 5
    for i in range(3):
        for j in range(3):
            full[i + j] = full[i + j] + zeta_part[i] * pi_part[j]
    from .euler import ANALYTIC, LocalFactor

    return LocalFactor(p, SeriesPoly(full), 4, ANALYTIC)


# ---------------------------------------------------------------------------
# dimensions and traces


def dim_cusp_forms(w: int) -> int:
    """dim of level-one elliptic cusp forms of even weight w."""
    if w % 2:
        raise OddWeight(f"weight must be even, got {w}")
    if w < 12:
        return 0
    dim_m = w // 12 + (0 if w % 12 == 2 else 1)
    return dim_m - 1


def dim_sk(k: int) -> int:
    """dim of the lift subspace at weight k: dim S_(2k-2)(SL2(Z))."""
    if k % 2:
        raise OddWeight(f"lift weight must be even, got {k}")
    if k < 4:
        raise InvariantError(f"need k >= 4, got {k}")
    return dim_cusp_forms(2 * k - 2)


def sk_trace_relation(k: int, trace_elliptic_2) -> Fraction:
    """Trace of T(2) on the lift subspace:
    dim * (2^(k-1) + 2^(k-2)) + Tr T(2) on S_(2k-2)."""
    if k % 2:
        raise OddWeight(f"lift weight must be even, got {k}")
    return dim_sk(k) * (2 ** (k - 1) + 2 ** (k - 2)) + trace_elliptic_2
