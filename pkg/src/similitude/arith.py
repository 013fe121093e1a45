"""Shared integer utilities: primality, sieves, factorization, characters."""

from __future__ import annotations

import math
from functools import lru_cache

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_factor_sieve(n: int) -> list[int]:
    """spf[m] = smallest prime factor of m, for 0 <= m <= n (spf[0] = 0, spf[1] = 1)."""
    spf = list(range(n + 1))
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(n + 1) if sieve[i])


def factorize(m: int) -> list[tuple[int, int]]:
    """Sorted prime factorization [(p, e), ...] of m >= 1, by sieved trial division."""
    if m < 1:
        raise ValueError("factorize requires m >= 1")
    out = []
    for p in primes_up_to(1 << 16):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        # remaining cofactor: prime, or a product of two primes > 2**16
        if is_prime(m):
            out.append((m, 1))
        else:
            r = math.isqrt(m)
            if r * r == m and is_prime(r):
                out.append((r, 2))
            else:
                raise ValueError(f"cannot factor {m}: cofactor too large for trial division")
    return out


def divisors(m: int) -> list[int]:
    """Sorted list of positive divisors of m."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def chi5(m: int) -> int:
    """Primitive quadratic character mod 5: +1 at +-1, -1 at +-2, 0 at multiples of 5."""
    r = m % 5
    if r == 0:
        return 0
    return 1 if r in (1, 4) else -1


def chi8(m: int) -> int:
    """Primitive quadratic character mod 8: +1 at +-1, -1 at +-3, 0 at even m."""
    r = m % 8
    if r in (1, 7):
        return 1
    if r in (3, 5):
        return -1
    return 0
