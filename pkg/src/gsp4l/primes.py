"""Small-integer prime utilities (trial division scale)."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    f = 2
    while f * f <= n:
        if sieve[f]:
            sieve[f * f :: f] = bytearray(len(sieve[f * f :: f]))
        f += 1
    return [i for i in range(2, n + 1) if sieve[i]]


def prime_iter():
    """2, 3, 5, 7, ... without a precomputed bound."""
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 * d with d squarefree; returns (s, d). Requires n >= 1."""
    if n < 1:
        raise ValueError(f"squarefree_split needs n >= 1, got {n}")
    s, d = 1, n
    f = 2
    while f * f <= d:
        ff = f * f
        while d % ff == 0:
            d //= ff
            s *= f
        f += 1 if f == 2 else 2
    return s, d


def is_squarefree(n: int) -> bool:
    return squarefree_split(abs(n))[0] == 1
