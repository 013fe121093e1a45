"""Exact arithmetic in the quadratic rings Z, Z[tau], and Z[sqrt2].

Elements are a + b*omega with integer a, b, where omega is tau = (1+sqrt5)/2
for the golden ring, sqrt2 for the other quadratic ring, and absent over Z.
Everything here is exact integer arithmetic; sign tests against sqrt5/sqrt2
are done by squaring, never by floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import factorize, is_prime


class Ring(enum.Enum):
    """Base ring tag. GOLDEN has omega = tau = (1+sqrt5)/2; SQRT2 has omega = sqrt2."""

    RATIONAL = "Z"
    GOLDEN = "Z[tau]"
    SQRT2 = "Z[sqrt2]"


class PrimeClass(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


def _sign_with_root(p: int, q: int, d: int) -> int:
    """Exact sign of p + q*sqrt(d) for integers p, q and squarefree d > 1."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs, rhs = p * p, d * q * q
    if p > 0:  # p - |q| sqrt(d)
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


@dataclass(frozen=True)
class QuadInt:
    """a + b*omega in the ring of integers tagged by `ring`."""

    ring: Ring
    a: int
    b: int = 0

    def __post_init__(self):
        if self.ring is Ring.RATIONAL and self.b != 0:
            raise ValueError("integers over Z have no omega component")

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(self.ring, other)
        if isinstance(other, QuadInt):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self.ring, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self.ring, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return QuadInt(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        if self.ring is Ring.GOLDEN:
            # tau^2 = tau + 1
            return QuadInt(self.ring, a * c + b * d, a * d + b * c + b * d)
        if self.ring is Ring.SQRT2:
            return QuadInt(self.ring, a * c + 2 * b * d, a * d + b * c)
        return QuadInt(self.ring, a * c)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conjugate(self) -> "QuadInt":
        if self.ring is Ring.GOLDEN:
            # tau |-> 1 - tau
            return QuadInt(self.ring, self.a + self.b, -self.b)
        if self.ring is Ring.SQRT2:
            return QuadInt(self.ring, self.a, -self.b)
        return self

    def norm(self) -> int:
        """Signed field norm: a^2+ab-b^2 (golden), a^2-2b^2 (sqrt2), a over Z."""
        if self.ring is Ring.GOLDEN:
            return self.a * self.a + self.a * self.b - self.b * self.b
        if self.ring is Ring.SQRT2:
            return self.a * self.a - 2 * self.b * self.b
        return self.a

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def sign(self) -> int:
        """Sign under the identity embedding (tau and sqrt2 taken positive)."""
        if self.ring is Ring.GOLDEN:
            # 2(a + b tau) = (2a + b) + b sqrt5
            return _sign_with_root(2 * self.a + self.b, self.b, 5)
        if self.ring is Ring.SQRT2:
            return _sign_with_root(self.a, self.b, 2)
        return (self.a > 0) - (self.a < 0)

    def __str__(self) -> str:
        if self.ring is Ring.RATIONAL:
            return str(self.a)
        sym = "t" if self.ring is Ring.GOLDEN else "r2"
        return f"{self.a}{self.b:+d}{sym}"


def one(ring: Ring) -> QuadInt:
    return QuadInt(ring, 1)


def omega(ring: Ring) -> QuadInt:
    if ring is Ring.RATIONAL:
        raise ValueError("Z has no omega")
    return QuadInt(ring, 0, 1)


def fundamental_unit(ring: Ring) -> QuadInt:
    """tau for Z[tau], 1 + sqrt2 for Z[sqrt2]."""
    if ring is Ring.GOLDEN:
        return QuadInt(ring, 0, 1)
    if ring is Ring.SQRT2:
        return QuadInt(ring, 1, 1)
    raise ValueError("Z has no fundamental unit")


def _fundamental_unit_inverse(ring: Ring) -> QuadInt:
    # tau^-1 = tau - 1;  (1+sqrt2)^-1 = -1 + sqrt2
    return QuadInt(ring, -1, 1)


def norm(x: QuadInt) -> int:
    return x.norm()


def conjugate(x: QuadInt) -> QuadInt:
    return x.conjugate()


def prime_class(p: int, ring: Ring) -> PrimeClass:
    """Splitting type of the rational prime p in the quadratic ring."""
    if ring is Ring.RATIONAL:
        raise ValueError("prime splitting is undefined over Z")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ring is Ring.GOLDEN:
        if p == 5:
            return PrimeClass.RAMIFIED
        return PrimeClass.SPLIT if p % 5 in (1, 4) else PrimeClass.INERT
    if p == 2:
        return PrimeClass.RAMIFIED
    return PrimeClass.SPLIT if p % 8 in (1, 7) else PrimeClass.INERT


def is_representable_index(m: int, ring: Ring) -> bool:
    """True iff m is the norm of an ideal: every inert prime divides m evenly."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if ring is Ring.RATIONAL:
        return True
    for p, e in factorize(m):
        if prime_class(p, ring) is PrimeClass.INERT and e % 2 == 1:
            return False
    return True


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d, ties toward +infinity. d != 0."""
    if d < 0:
        n, d = -n, -d
    return (2 * n + d) // (2 * d)


def conj_product(x: QuadInt) -> int:
    """x * conjugate(x) as a plain integer.

    Coincides with norm() on the quadratic rings but is a^2 over Z, which is
    what field inversion x^-1 = conjugate(x) / (x conjugate(x)) needs.
    """
    return (x * x.conjugate()).a


def div_nearest(x: QuadInt, y: QuadInt) -> QuadInt:
    """Quotient of x/y rounded componentwise to the nearest ring element.

    Both quadratic rings are norm-Euclidean for this rounding:
    |N(x - q*y)| < |N(y)| always holds.
    """
    if not y:
        raise ZeroDivisionError("division by zero")
    num = x * y.conjugate()
    den = conj_product(y)
    return QuadInt(x.ring, _round_div(num.a, den), _round_div(num.b, den))


def exact_div(x: QuadInt, y: QuadInt) -> QuadInt:
    """x / y when y divides x exactly; raises ValueError otherwise."""
    if not y:
        raise ZeroDivisionError("division by zero")
    num = x * y.conjugate()
    den = conj_product(y)
    qa, ra = divmod(num.a, den)
    qb, rb = divmod(num.b, den)
    if ra or rb:
        raise ValueError(f"{y} does not divide {x}")
    return QuadInt(x.ring, qa, qb)


def gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """Greatest common divisor, returned as a canonical associate."""
    if x.ring is not y.ring:
        raise ValueError("ring mismatch")
    if x.ring is Ring.RATIONAL:
        g = math.gcd(x.a, y.a)
        return QuadInt(x.ring, g)
    while y:
        x, y = y, x - div_nearest(x, y) * y
    if not x:
        return x
    return canonical_associate(x)


def canonical_associate(x: QuadInt) -> QuadInt:
    """The distinguished representative of x among its unit multiples.

    Rule: positive under the identity embedding, with |x| >= |x'| but minimal
    such among the unit orbit (i.e. dividing once more by the fundamental unit
    would break |x| >= |x'|).  Two elements are associates iff their canonical
    associates are equal.
    """
    if not x:
        raise ZeroDivisionError("zero has no canonical associate")
    if x.ring is Ring.RATIONAL:
        return QuadInt(x.ring, abs(x.a))
    eps = fundamental_unit(x.ring)
    eps_inv = _fundamental_unit_inverse(x.ring)

    def balanced(y: QuadInt) -> bool:
        # |y| >= |y'| under the embeddings <=> the omega part of y^2 is >= 0
        return (y * y).b >= 0

    y = x
    while not balanced(y):
        y = y * eps
    while balanced(y * eps_inv):
        y = y * eps_inv
    if y.sign() < 0:
        y = -y
    return y


@dataclass(frozen=True)
class QuadRat:
    """num/den with num a QuadInt and den a positive integer, in lowest terms."""

    num: QuadInt
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(abs(num.a), abs(num.b)), den)
        if g > 1:
            num = QuadInt(num.ring, num.a // g, num.b // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def ring(self) -> Ring:
        return self.num.ring

    def _coerce(self, other) -> "QuadRat":
        if isinstance(other, QuadRat):
            if other.ring is not self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, QuadInt)):
            return QuadRat(self.num._coerce(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return QuadRat(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return QuadRat(self.num.conjugate() * self.den, conj_product(self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_quadint(self) -> QuadInt:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.num

    def sign(self) -> int:
        return self.num.sign()

    def __str__(self) -> str:
        return f"{self.num}" if self.den == 1 else f"({self.num})/{self.den}"
