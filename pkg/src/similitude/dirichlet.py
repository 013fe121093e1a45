"""Coefficient algebra for Dirichlet series truncated at N terms.

A CoeffSeq holds a(1..N).  Convolution, inverse, dilation (s -> k*s), and
shift (s -> s-1) act on coefficients; multiplicative sequences are assembled
from prime-power data by a smallest-prime-factor sieve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .arith import smallest_prime_factor_sieve


@dataclass(frozen=True)
class CoeffSeq:
    """values[i] is the coefficient a(m) at m = i + 1."""

    values: tuple[int, ...]

    @property
    def n_terms(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= len(self.values):
            raise IndexError(f"m = {m} outside 1..{len(self.values)}")
        return self.values[m - 1]

    def __len__(self) -> int:
        return len(self.values)


def coeff_seq(values) -> CoeffSeq:
    return CoeffSeq(tuple(values))


def ones(n: int) -> CoeffSeq:
    return CoeffSeq((1,) * n)


def epsilon(n: int) -> CoeffSeq:
    """Convolution identity: 1 at m = 1, 0 elsewhere."""
    return CoeffSeq((1,) + (0,) * (n - 1))


def _check_lengths(a: CoeffSeq, b: CoeffSeq):
    if a.n_terms != b.n_terms:
        raise ValueError(f"length mismatch: {a.n_terms} vs {b.n_terms}")


def convolve(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    """c(m) = sum over d | m of a(d) * b(m/d)."""
    _check_lengths(a, b)
    n = a.n_terms
    va, vb = a.values, b.values
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = va[d - 1]
        if not ad:
            continue
        for m in range(d, n + 1, d):
            out[m] += ad * vb[m // d - 1]
    return CoeffSeq(tuple(out[1:]))


def dirichlet_inverse(a: CoeffSeq) -> CoeffSeq:
    """b with convolve(a, b) = epsilon; needs a(1) in {1, -1}."""
    lead = a[1]
    if lead not in (1, -1):
        raise ValueError("not invertible: leading coefficient must be +-1")
    n = a.n_terms
    spf = smallest_prime_factor_sieve(n)
    va = a.values
    inv = [0] * (n + 1)
    inv[1] = lead
    for m in range(2, n + 1):
        # divisors of m from its factorization
        divs = [1]
        t = m
        while t > 1:
            p = spf[t]
            e = 0
            while t % p == 0:
                t //= p
                e += 1
            divs = [d * p**k for d in divs for k in range(e + 1)]
        s = 0
        for d in divs:
            if d > 1:
                s += va[d - 1] * inv[m // d]
        inv[m] = -lead * s
    return CoeffSeq(tuple(inv[1:]))


def dilate(a: CoeffSeq, k: int) -> CoeffSeq:
    """b(m^k) = a(m), zero off k-th powers: realizes s -> k*s."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = a.n_terms
    out = [0] * n
    m = 1
    while m**k <= n:
        out[m**k - 1] = a.values[m - 1]
        m += 1
    return CoeffSeq(tuple(out))


def shift(a: CoeffSeq) -> CoeffSeq:
    """b(m) = m * a(m): realizes s -> s - 1."""
    return CoeffSeq(tuple(m * v for m, v in enumerate(a.values, start=1)))


def from_multiplicative(ppower: Callable[[int, int], int], n: int) -> CoeffSeq:
    """Assemble a(prod p_i^r_i) = prod ppower(p_i, r_i) for all m <= n."""
    for p in (2, 3):
        if ppower(p, 0) != 1:
            raise ValueError(f"ppower({p}, 0) must be 1")
    spf = smallest_prime_factor_sieve(n)
    vals = [0] * (n + 1)
    if n >= 1:
        vals[1] = 1
    cache: dict[tuple[int, int], int] = {}
    for m in range(2, n + 1):
        p = spf[m]
        e = 1
        rest = m // p
        while rest % p == 0:
            rest //= p
            e += 1
        key = (p, e)
        pv = cache.get(key)
        if pv is None:
            pv = cache[key] = ppower(p, e)
        vals[m] = vals[rest] * pv
    return CoeffSeq(tuple(vals[1:]))


def is_multiplicative(a: CoeffSeq) -> bool:
    """Check a(mn) = a(m) a(n) over all coprime pairs with mn <= N."""
    if a.n_terms and a[1] != 1:
        return False
    n = a.n_terms
    va = a.values
    for m in range(2, n + 1):
        am = va[m - 1]
        for k in range(2, n // m + 1):
            if math.gcd(m, k) == 1 and va[m * k - 1] != am * va[k - 1]:
                return False
    return True


def partial_sum(a: CoeffSeq, x: int) -> int:
    """Exact sum of a(m) for m <= x (x may not exceed the truncation)."""
    if x > a.n_terms:
        raise ValueError(f"partial sum to {x} exceeds truncation {a.n_terms}")
    return sum(a.values[: max(x, 0)])
