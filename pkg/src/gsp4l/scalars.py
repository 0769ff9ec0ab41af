"""Scalar backends shared by every module.

Two backends coexist and are never silently mixed:

* exact -- ``int``, ``fractions.Fraction`` and :class:`SqrtRational`
  (a rational times the square root of a squarefree positive integer).
  Arithmetic never rounds and equality is literal.
* float -- ``float`` and ``complex``, always compared through an explicit
  relative tolerance (default 1e-9, overridable with the GSP4_PRECISION
  environment variable).

The square-root part of :class:`SqrtRational` is what keeps half-integer
powers of p exact: p^(3/2-k) is stored as (1/p^(k-1)) * sqrt(p), and the
formal reduction sqrt(n)*sqrt(n) = n happens in multiplication.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from .errors import Gsp4Error, IncompatibleRadicals, MixedBackend
from .primes import squarefree_split

EXACT = "exact"
FLOAT = "float"

_EXACT_TYPES = (int, Fraction)
_FLOAT_TYPES = (float, complex)


def default_tolerance() -> float:
    """Relative float tolerance; GSP4_PRECISION overrides the 1e-9 default."""
    raw = os.environ.get("GSP4_PRECISION")
    if raw is None:
        return 1e-9
    try:
        tol = float(raw)
    except ValueError as exc:
        raise Gsp4Error(f"GSP4_PRECISION is not a float: {raw!r}") from exc
    if tol < 0:
        raise Gsp4Error(f"GSP4_PRECISION must be >= 0, got {tol}")
    return tol


class SqrtRational:
    """Exact real scalar q*sqrt(d) with q rational, d squarefree positive.

    d = 1 is a plain rational.  Sums are defined only between values with
    the same radicand (or zero); products reduce the radicand exactly.
    """

    __slots__ = ("q", "d")

    def __init__(self, q, d: int = 1):
        if isinstance(q, SqrtRational):
            if d != 1:
                raise ValueError("cannot re-tag a SqrtRational")
            q, d = q.q, q.d
        q = Fraction(q)
        d = int(d)
        if d <= 0:
            raise ValueError(f"radicand must be positive, got {d}")
        if q == 0:
            d = 1
        elif d > 1:
            s, d = squarefree_split(d)
            q *= s
        self.q = q
        self.d = d

    # -- helpers ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, SqrtRational):
            return x
        if isinstance(x, (int, Fraction)):
            return SqrtRational(x)
        if isinstance(x, _FLOAT_TYPES):
            raise MixedBackend("cannot combine SqrtRational with float data")
        return None

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def as_fraction(self) -> Fraction:
        if self.d != 1:
            raise IncompatibleRadicals(f"{self} is not rational")
        return self.q

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if self.d != other.d:
            raise IncompatibleRadicals(
                f"cannot add sqrt({self.d}) and sqrt({other.d}) terms"
            )
        return SqrtRational(self.q + other.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return SqrtRational(-self.q, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        g = math.gcd(self.d, other.d)
        # squarefree parts: d1*d2 = g^2 * (d1/g)*(d2/g), the latter squarefree
        out = SqrtRational.__new__(SqrtRational)
        q = self.q * other.q * g
        d = (self.d // g) * (other.d // g)
        if q == 0:
            d = 1
        out.q = q
        out.d = d
        return out

    __rmul__ = __mul__

    def _invert(self):
        if self.q == 0:
            raise ZeroDivisionError("division by zero SqrtRational")
        # 1/(q sqrt(d)) = sqrt(d)/(q d)
        return SqrtRational(Fraction(1, 1) / (self.q * self.d), self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other._invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self._invert()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._invert() ** (-n)
        q = self.q**n * Fraction(self.d) ** (n // 2)
        return SqrtRational(q, self.d if n % 2 else 1)

    def __abs__(self):
        return SqrtRational(abs(self.q), self.d)

    def __bool__(self):
        return self.q != 0

    # -- order and equality (real-number order, computed exactly) ---------

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is None:
            raise MixedBackend("cannot order SqrtRational against float data")
        sa = (self.q > 0) - (self.q < 0)
        sb = (other.q > 0) - (other.q < 0)
        if sa != sb:
            return sa - sb
        if sa == 0:
            return 0
        # same sign: compare squares, flipping for negatives
        left = self.q * self.q * self.d
        right = other.q * other.q * other.d
        if left == right:
            return 0
        return (1 if left > right else -1) * sa

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, SqrtRational):
            return self.q == other.q and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 1 and self.q == other
        return NotImplemented

    def __hash__(self):
        if self.d == 1:
            return hash(self.q)
        return hash((self.q, self.d))

    # -- conversions -----------------------------------------------------

    def __float__(self):
        return float(self.q) * math.sqrt(self.d)

    def __complex__(self):
        return complex(float(self))

    def __repr__(self):
        return f"SqrtRational({self.q!r}, {self.d})"

    def __str__(self):
        if self.d == 1:
            return str(self.q)
        if self.q == 1:
            return f"sqrt({self.d})"
        return f"{self.q}*sqrt({self.d})"


def sqrt_int(n: int) -> SqrtRational:
    """Exact sqrt(n) for a positive integer n."""
    return SqrtRational(1, n)


def half_power(p: int, m: int) -> SqrtRational:
    """Exact p^(m/2) for integer m (may be negative)."""
    if m % 2 == 0:
        return SqrtRational(Fraction(p) ** (m // 2))
    # p^(m/2) = p^((m-1)/2) * sqrt(p), exact for odd m of either sign
    return SqrtRational(Fraction(p) ** ((m - 1) // 2), p)


def backend_of(values) -> str:
    """'exact' or 'float' for a non-empty iterable; raises on a mix."""
    seen = set()
    for v in values:
        if isinstance(v, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(v, (SqrtRational, *_EXACT_TYPES)):
            seen.add(EXACT)
        elif isinstance(v, _FLOAT_TYPES):
            seen.add(FLOAT)
        else:
            raise TypeError(f"not a scalar: {v!r}")
    if not seen:
        raise ValueError("backend_of needs at least one value")
    if len(seen) > 1:
        raise MixedBackend("exact and float scalars mixed in one operation")
    return seen.pop()


def is_exact(v) -> bool:
    return isinstance(v, (SqrtRational, *_EXACT_TYPES)) and not isinstance(v, bool)


def scalars_close(a, b, tol: float | None = None) -> bool:
    """Backend-aware comparison.

    Exact values compare literally.  Float values compare with relative
    tolerance |a-b| <= tol * max(1, |a|, |b|); the unit floor makes
    comparisons against an exact zero meaningful.
    """
    kind = backend_of((a, b))
    if kind == EXACT:
        return a == b
    if tol is None:
        tol = default_tolerance()
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def to_float_scalar(v):
    """Best-effort float/complex image of any scalar."""
    if isinstance(v, complex):
        return v
    if isinstance(v, SqrtRational):
        return float(v)
    return float(v)
