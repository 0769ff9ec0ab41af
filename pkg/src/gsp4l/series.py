"""Truncated power series in one variable and truncated Dirichlet series.

``SeriesPoly`` is a series mod X^(order+1); X stands for p^(-s) in every
local computation.  Truncation is explicit and carried by the value:
binary operations demand equal orders and re-truncation only happens
through :meth:`SeriesPoly.truncated`.

``TruncatedDirichletSeries`` carries coefficients a(1..N); n = 0 is a
domain error, and convolutions demand equal truncation bounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    Gsp4Error,
    MissingPrime,
    TruncationMismatch,
    ZeroConstantTerm,
)
from .primes import primes_upto
from .scalars import EXACT, backend_of, default_tolerance


def _zero_like(kind):
    return 0 if kind == EXACT else 0.0


class SeriesPoly:
    """Coefficients c[0..order] of a series truncated mod X^(order+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if not coeffs and order is None:
            raise ValueError("empty series needs an explicit order")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if len(coeffs) > order + 1:
            raise TruncationMismatch(
                f"{len(coeffs)} coefficients exceed order {order}; "
                "truncate explicitly with .truncated()"
            )
        kind = backend_of(coeffs) if coeffs else EXACT
        if len(coeffs) < order + 1:
            coeffs = coeffs + [_zero_like(kind)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @property
    def backend(self) -> str:
        return backend_of(self.coeffs)

    def __getitem__(self, r: int):
        return self.coeffs[r]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __repr__(self):
        return f"SeriesPoly({self.coeffs!r})"

    def _check_compatible(self, other):
        if not isinstance(other, SeriesPoly):
            raise TypeError(f"expected SeriesPoly, got {type(other).__name__}")
        if self.order != other.order:
            raise TruncationMismatch(
                f"orders differ: {self.order} vs {other.order}"
            )
        backend_of(self.coeffs + other.coeffs)

    def __add__(self, other):
        self._check_compatible(other)
        return SeriesPoly([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_compatible(other)
        return SeriesPoly([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        self._check_compatible(other)
        n = self.order
        kind = backend_of(self.coeffs)
        out = [_zero_like(kind)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return SeriesPoly(out)

    def scale(self, c):
        backend_of([c] + self.coeffs)
        return SeriesPoly([c * a for a in self.coeffs])

    def truncated(self, order: int) -> SeriesPoly:
        """Explicit re-truncation (down) or zero-padding (up)."""
        if order >= self.order:
            return SeriesPoly(list(self.coeffs), order)
        return SeriesPoly(self.coeffs[: order + 1])

    def invert(self) -> SeriesPoly:
        """g with self*g = 1 mod X^(order+1)."""
        kind = backend_of(self.coeffs)
        c0 = self.coeffs[0]
        if kind == EXACT:
            if c0 == 0:
                raise ZeroConstantTerm("constant term is zero")
            inv0 = Fraction(1) / c0 if isinstance(c0, (int, Fraction)) else 1 / c0
        else:
            if abs(c0) <= default_tolerance():
                raise ZeroConstantTerm(
                    f"constant term {c0!r} below tolerance"
                )
            inv0 = 1 / c0
        out = [inv0]
        for r in range(1, self.order + 1):
            acc = _zero_like(kind)
            for i in range(1, r + 1):
                ci = self.coeffs[i]
                if ci == 0:
                    continue
                acc = acc + ci * out[r - i]
            out.append(-acc * inv0)
        return SeriesPoly(out)


def series_invert(f: SeriesPoly) -> SeriesPoly:
    """Inverse of f mod X^(order+1); requires an invertible constant term."""
    return f.invert()


def poly_from_roots(roots, order: int | None = None) -> SeriesPoly:
    """prod (1 - gamma*X) over the given scalars, as an exact polynomial."""
    roots = list(roots)
    kind = backend_of(roots) if roots else EXACT
    coeffs = [1 if kind == EXACT else 1.0]
    for g in roots:
        nxt = list(coeffs) + [g * 0]
        for i in range(len(coeffs), 0, -1):
            nxt[i] = nxt[i] - g * coeffs[i - 1]
        coeffs = nxt
    deg = len(coeffs) - 1
    if order is None:
        order = deg
    if order < deg:
        raise TruncationMismatch(
            f"product has degree {deg}, larger than requested order {order}"
        )
    return SeriesPoly(coeffs, order)


class TruncatedDirichletSeries:
    """Coefficients a(n) for 1 <= n <= N; n = 0 is a domain error."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs_by_n, N: int | None = None):
        if isinstance(coeffs_by_n, dict):
            if N is None:
                raise ValueError("dict input needs an explicit N")
            vals = list(coeffs_by_n.values())
            kind = backend_of(vals) if vals else EXACT
            zero = _zero_like(kind)
            data = [None] + [coeffs_by_n.get(n, zero) for n in range(1, N + 1)]
            for n in coeffs_by_n:
                if not 1 <= n <= N:
                    raise Gsp4Error(f"index {n} outside [1, {N}]")
        else:
            seq = list(coeffs_by_n)
            if N is not None and N != len(seq):
                raise TruncationMismatch(
                    f"N={N} but {len(seq)} coefficients supplied"
                )
            if not seq:
                raise ValueError("need at least a(1)")
            data = [None] + seq
        backend_of(data[1:])
        self.coeffs = data

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @property
    def backend(self) -> str:
        return backend_of(self.coeffs[1:])

    def __getitem__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("Dirichlet index must be an integer")
        if n < 1 or n > self.N:
            raise Gsp4Error(f"Dirichlet index {n} outside [1, {self.N}]")
        return self.coeffs[n]

    def items(self):
        return ((n, self.coeffs[n]) for n in range(1, self.N + 1))

    def __eq__(self, other):
        if not isinstance(other, TruncatedDirichletSeries):
            return NotImplemented
        return self.N == other.N and all(
            a == b for a, b in zip(self.coeffs[1:], other.coeffs[1:])
        )

    def __hash__(self):
        return hash(tuple(self.coeffs[1:]))

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[1:9])
        tail = ", ..." if self.N > 8 else ""
        return f"TruncatedDirichletSeries([{head}{tail}], N={self.N})"


def dirichlet_delta(N: int) -> TruncatedDirichletSeries:
    """The convolution identity: 1 at n=1, 0 elsewhere."""
    return TruncatedDirichletSeries([1] + [0] * (N - 1))


def dirichlet_convolve(
    a: TruncatedDirichletSeries, b: TruncatedDirichletSeries
) -> TruncatedDirichletSeries:
    """c(n) = sum over d|n of a(d) * b(n/d), both truncated at the same N."""
    if a.N != b.N:
        raise TruncationMismatch(f"truncations differ: {a.N} vs {b.N}")
    N = a.N
    kind = backend_of(a.coeffs[1:] + b.coeffs[1:])
    out = [_zero_like(kind)] * (N + 1)
    for d in range(1, N + 1):
        ad = a.coeffs[d]
        if ad == 0:
            continue
        for q in range(1, N // d + 1):
            bq = b.coeffs[q]
            if bq == 0:
                continue
            out[d * q] = out[d * q] + ad * bq
    return TruncatedDirichletSeries(out[1:])


def euler_expand(
    local_factor_reciprocals: dict[int, SeriesPoly],
    N: int,
    require_all_primes: bool = False,
) -> TruncatedDirichletSeries:
    """Dirichlet coefficients of prod_p (reciprocal_p)^(-1) up to N.

    A prime with no supplied reciprocal contributes the trivial factor 1,
    so coefficients at its multiples vanish; with ``require_all_primes``
    every prime <= N must be supplied or MissingPrime is raised.  The
    output is multiplicative across coprime indices by construction.
    """
    for p, f in local_factor_reciprocals.items():
        if not isinstance(f, SeriesPoly):
            raise TypeError(f"reciprocal at p={p} is not a SeriesPoly")
    all_coeffs = [c for f in local_factor_reciprocals.values() for c in f.coeffs]
    kind = backend_of(all_coeffs) if all_coeffs else EXACT
    if require_all_primes:
        missing = [p for p in primes_upto(N) if p not in local_factor_reciprocals]
        if missing:
            raise MissingPrime(
                f"no local factor at primes {missing} <= {N}"
            )
    zero = _zero_like(kind)
    one = 1 if kind == EXACT else 1.0
    out = [zero] * (N + 1)
    out[1] = one
    for p in sorted(local_factor_reciprocals):
        if p > N:
            continue
        rmax = 0
        q = 1
        while q * p <= N:
            q *= p
            rmax += 1
        inv = local_factor_reciprocals[p].truncated(rmax).invert()
        # multiply the current (p-free) expansion by sum_r inv[r] X^r
        nxt = list(out)
        for r in range(1, rmax + 1):
            pr = p**r
            c = inv[r]
            if c == 0:
                continue
            for m in range(1, N // pr + 1):
                if out[m] == 0 or m % p == 0:
                    continue
                nxt[m * pr] = nxt[m * pr] + out[m] * c
        out = nxt
    return TruncatedDirichletSeries(out[1:])
