"""Distinguishing algorithms and Rankin-Selberg prime sums.

Two weight-distinct eigenforms always differ at some lambda(p^i),
i in {1,...,4}, for every good prime p; combined with the least prime
coprime to N being at most 2 log N + 2, a disagreement exists at some
n <= (2 log N + 2)^4.  All logs are natural.  The index search compares
raw eigenvalues exactly and therefore rejects float data.

The Rankin-Selberg side: the degree-16 convolution of two spin multisets
has -L'/L coefficients Lambda(p^r) = log(p) * (sum gamma_i^r)(sum
delta_j^r), supported on prime powers coprime to both levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ExactnessRequired,
    Gsp4Error,
    InsufficientTruncation,
    LevelMismatch,
    MissingPrime,
)
from .euler import a_coefficient_series
from .hecke import EigenvalueSystem, lambda_prime_power
from .primes import prime_iter, primes_upto
from .satake import SatakeSystem, SpinMultiset, satake_equivalent
from .scalars import EXACT, backend_of

_GUARD = 1e-12


def smallest_coprime_prime(N: int) -> tuple[int, float]:
    """Least prime p with gcd(p, N) = 1, plus the bound 2 ln N + 2.

    Such p always exists and always satisfies p <= 2 ln N + 2.
    """
    if N < 1:
        raise Gsp4Error(f"N must be >= 1, got {N}")
    bound = 2 * math.log(N) + 2
    for p in prime_iter():
        if N % p != 0:
            if p > bound + _GUARD:
                raise AssertionError(
                    f"prime lemma violated at N={N}: p={p} > {bound}"
                )
            return p, bound
    raise AssertionError("unreachable")


def distinguishing_index(
    F: EigenvalueSystem, G: EigenvalueSystem, p: int
) -> int | None:
    """Least i in {1..4} with lambda_F(p^i) != lambda_G(p^i), else None.

    Exact comparison only; float-backed systems are rejected.
    """
    if F.backend != EXACT or G.backend != EXACT:
        raise ExactnessRequired("index search compares eigenvalues exactly")
    for i in (1, 2, 3, 4):
        if lambda_prime_power(F, p, i) != lambda_prime_power(G, p, i):
            return i
    return None


@dataclass(frozen=True)
class DistinguishReport:
    p: int
    index: int | None
    n: int | None
    bound: float
    within_bound: bool | None
    borderline: bool
    values: dict

    @property
    def distinguished(self) -> bool:
        return self.index is not None


def distinguish_level(
    F: EigenvalueSystem, G: EigenvalueSystem, N: int
) -> DistinguishReport:
    """Search at p = least prime coprime to N; report n = p^i against
    the bound (2 ln N + 2)^4."""
    if N % F.level or N % G.level:
        raise LevelMismatch(
            f"levels {F.level}, {G.level} must divide N = {N}"
        )
    p, prime_bound = smallest_coprime_prime(N)
    index = distinguishing_index(F, G, p)
    bound = prime_bound**4
    values = {
        i: (lambda_prime_power(F, p, i), lambda_prime_power(G, p, i))
        for i in (1, 2, 3, 4)
    }
    if index is None:
        return DistinguishReport(p, None, None, bound, None, False, values)
    n = p**index
    borderline = abs(n - bound) <= _GUARD * max(1.0, bound)
    return DistinguishReport(p, index, n, bound, n <= bound + _GUARD, borderline, values)


# ---------------------------------------------------------------------------
# Rankin-Selberg Lambda coefficients


def rankin_power_product(a: SpinMultiset, b: SpinMultiset, r: int):
    """(sum gamma_i^r)(sum delta_j^r): Lambda(p^r)/log(p), exactly when
    the multisets are exact."""
    if r < 1:
        raise Gsp4Error(f"power must be >= 1, got {r}")
    return a.power_sum(r) * b.power_sum(r)


def rankin_lambda(a: SpinMultiset, b: SpinMultiset, p: int, r: int):
    """Coefficient of -L'/L at n = p^r: log(p) times the power-sum product."""
    prod = rankin_power_product(a, b, r)
    if backend_of((prod,)) == EXACT:
        prod = float(prod)
    return math.log(p) * prod


def lambda_ff_prime_identity(a: SpinMultiset, p: int):
    """Lambda_(FxF)(p) = a_F(p)^2 log p with a_F(p) the parameter sum."""
    s = a.power_sum(1)
    square = s * s
    if backend_of((square,)) == EXACT:
        square = float(square)
    return math.log(p) * square


@dataclass(frozen=True)
class RankinCoefficients:
    """Lambda(n) at prime powers n <= N for one convolution pair."""

    values: dict[int, float]
    N: int

    def __getitem__(self, n: int) -> float:
        if not 1 <= n <= self.N:
            raise Gsp4Error(f"index {n} outside [1, {self.N}]")
        return self.values.get(n, 0.0)


def rankin_coefficient_table(
    F: SatakeSystem, G: SatakeSystem, N: int
) -> RankinCoefficients:
    """Lambda(p^r) for all prime powers p^r <= N at good primes of both
    forms.  A good prime <= N without data is an error; bad primes
    contribute nothing (the convolution omits them).  Conjugate-closed
    parameter data makes every Lambda real; a materially complex value is
    rejected rather than silently truncated."""
    values: dict[int, float] = {}
    for p in primes_upto(N):
        if F.level % p == 0 or G.level % p == 0:
            continue
        if p not in F.msets or p not in G.msets:
            raise MissingPrime(f"no Satake data at good prime {p} <= {N}")
        a = F.msets[p]
        b = G.msets[p]
        n = p
        r = 1
        while n <= N:
            lam = rankin_lambda(a, b, p, r)
            if isinstance(lam, complex):
                if abs(lam.imag) > 1e-9 * max(1.0, abs(lam)):
                    raise Gsp4Error(
                        f"Lambda({n}) = {lam!r} is not real; parameter data "
                        "is not closed under conjugation"
                    )
                lam = lam.real
            values[n] = lam
            n *= p
            r += 1
    return RankinCoefficients(values, N)


def weighted_prime_sum(lambdas: RankinCoefficients, x: float) -> float:
    """2 sum_(n < x^2) Lambda(n) n^(-1/2) log(x^2 / n)."""
    if x <= 1:
        raise Gsp4Error(f"x must be > 1, got {x}")
    x2 = x * x
    needed = math.ceil(x2) - 1
    if lambdas.N < needed:
        raise InsufficientTruncation(
            f"need coefficients to {needed}, table stops at {lambdas.N}"
        )
    total = 0.0
    for n, lam in sorted(lambdas.values.items()):
        if n >= x2 or lam == 0.0:
            continue
        total += lam / math.sqrt(n) * math.log(x2 / n)
    return 2.0 * total


def explicit_main_term(x: float) -> float:
    """8 (x - 2 + 1/x), the main term of the weighted self-convolution sum."""
    if x <= 0:
        raise Gsp4Error(f"x must be > 0, got {x}")
    return 8.0 * (x - 2.0 + 1.0 / x)


# ---------------------------------------------------------------------------
# first coefficient disagreement (normalized a-coefficients)


@dataclass(frozen=True)
class Disagreement:
    n: int
    a_F: object
    a_G: object
    lambda_tilde_F: object
    lambda_tilde_G: object


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Witness that no a-coefficient disagreement exists up to the bound:
    a(p) agreement at every prime <= bound and Satake equivalence at every
    prime <= sqrt(bound), which forces Lambda agreement at all powers."""

    bound: int
    primes_checked: tuple[int, ...]
    satake_equivalent_primes: tuple[int, ...]


@dataclass(frozen=True)
class DisagreementReport:
    disagreement: Disagreement | None
    certificate: EquivalenceCertificate | None
    shape_bound: float

    @property
    def found(self) -> bool:
        return self.disagreement is not None


def _a_values(system: SatakeSystem, p: int, order: int):
    return a_coefficient_series(system.multiset(p), p, order)


def first_coefficient_disagreement(
    F: SatakeSystem, G: SatakeSystem, A: int
) -> DisagreementReport:
    """Least n <= A with a_F(n) != a_G(n), with the derived normalized
    eigenvalue witness; or the Satake-equivalence certificate when all
    coefficients up to A agree.

    Coefficients are multiplicative, so the first disagreement is at a
    prime p <= A (a(p) differs) or a prime square p^2 <= A (a(p) agrees,
    a(p^2) differs); if neither exists the forms share Satake parameters
    at every prime <= sqrt(A) and all Lambda(p^r) with p^r <= A agree.
    """
    if A < 2:
        raise Gsp4Error(f"bound must be >= 2, got {A}")
    if F.level != G.level:
        # differing levels leave some primes with one-sided data only
        raise LevelMismatch(f"levels differ: {F.level} vs {G.level}")
    shape = _dis_non_shape(F.k, G.k)
    sqrt_a = math.isqrt(A)
    primes = [p for p in primes_upto(A) if F.level % p != 0]
    missing = [p for p in primes if p not in F.msets or p not in G.msets]
    if missing:
        raise MissingPrime(f"no Satake data at good primes {missing} <= {A}")
    for p in primes:
        if F.msets[p].backend != EXACT or G.msets[p].backend != EXACT:
            raise ExactnessRequired(
                "coefficient disagreement search compares exactly"
            )
    candidates: list[tuple[int, object, object, object, object]] = []
    equal_small = []
    for p in primes:
        order = 2 if p <= sqrt_a else 1
        series_f = _a_values(F, p, order)
        series_g = _a_values(G, p, order)
        a1f, a1g = series_f[1], series_g[1]
        if a1f != a1g:
            lt_f, lt_g = a1f, a1g  # lambdatilde(p) = a(p)
            candidates.append((p, a1f, a1g, lt_f, lt_g))
            continue
        if order == 2:
            a2f, a2g = series_f[2], series_g[2]
            if p * p <= A and a2f != a2g:
                inv_p = Fraction(1, p)
                candidates.append(
                    (p * p, a2f, a2g, a2f - inv_p, a2g - inv_p)
                )
                continue
            equal_small.append(p)
    if candidates:
        n, af, ag, ltf, ltg = min(candidates, key=lambda c: c[0])
        return DisagreementReport(Disagreement(n, af, ag, ltf, ltg), None, shape)
    for p in equal_small:
        # a(p), a(p^2) agreement pins the Satake parameters up to permutation
        if not satake_equivalent(F.msets[p], G.msets[p]):
            raise AssertionError(
                f"a(p), a(p^2) agree at p={p} but multisets are inequivalent"
            )
    return DisagreementReport(
        None,
        EquivalenceCertificate(A, tuple(primes), tuple(equal_small)),
        shape,
    )


def _dis_non_shape(k1: int, k2: int) -> float:
    """(log k1 k2)^2 (log log k1 k2)^4: the ineffective-constant shape the
    observed disagreement is printed against; nothing is asserted about it."""
    kk = k1 * k2
    if kk <= 1:
        return 0.0
    inner = math.log(kk)
    if inner <= 1:
        return 0.0
    return inner**2 * math.log(inner) ** 4
