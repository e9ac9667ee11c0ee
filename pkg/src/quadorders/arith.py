"""Rational-integer helpers: factorization, squarefree tests, divisors, Legendre symbols."""

from __future__ import annotations

from functools import lru_cache

# Ascending (prime, exponent) pairs.
Factorization = list[tuple[int, int]]


class InternalConsistencyError(RuntimeError):
    """A computed result contradicts an identity that must hold; indicates a bug."""


@lru_cache(maxsize=65536)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs; [] for n = 1.

    Trial division over the 6k+-1 wheel; fine for the desk-scale n used here.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    return list(_factorize_cached(n))


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3):
        if n % p == 0:
            return n == p
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=65536)
def is_squarefree(d: int) -> bool:
    """True iff no prime square divides d.  d = 0 is rejected."""
    if d == 0:
        raise ValueError("is_squarefree is undefined for 0")
    return all(a == 1 for _, a in _factorize_cached(abs(d)))


def kronecker(d: int, p: int) -> int:
    """Legendre symbol (d/p) in {-1, 0, 1} for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"kronecker requires an odd prime modulus, got {p}")
    t = pow(d % p, (p - 1) // 2, p)
    if t == p - 1:
        return -1
    if t not in (0, 1):
        raise InternalConsistencyError(f"Euler criterion returned {t} mod {p}")
    return t


def divisors_sorted(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors_sorted requires n >= 1, got {n}")
    divs = [1]
    for p, a in _factorize_cached(n):
        divs = [q * p**e for q in divs for e in range(a + 1)]
    divs.sort()
    return divs
