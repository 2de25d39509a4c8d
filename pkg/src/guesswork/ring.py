"""Exact division-free arithmetic over the integers and real quadratic rings.

A scalar is either a plain arbitrary-precision integer or an element
z0 + z1*sqrt(k) of Z[sqrt(k)] for a fixed non-square k >= 2.  Both cases
share one canonical representation (z0, z1), so equality of scalars is
equality of their coefficient pairs.  Every operation below uses integer
arithmetic only; floating point never enters, not even for the decimal
renderers, which round via integer square roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering


class RingMismatchError(ValueError):
    """Raised when scalars from different rings are combined."""


@dataclass(frozen=True, slots=True)
class RingId:
    """The coefficient ring: plain integers (k is None) or Z[sqrt(k)].

    k must be at least 2 and not a perfect square, so sqrt(k) is
    irrational and the (z0, z1) representation is unique.
    """

    k: int | None = None

    def __post_init__(self) -> None:
        k = self.k
        if k is None:
            return
        if not isinstance(k, int) or k < 2 or math.isqrt(k) ** 2 == k:
            raise ValueError(f"k must be an integer >= 2 and not a perfect square, got {k!r}")

    @property
    def is_quadratic(self) -> bool:
        return self.k is not None

    def __str__(self) -> str:
        return "Z" if self.k is None else f"Z[sqrt({self.k})]"


INTEGERS = RingId()


def _check_same_ring(a: "Scalar", b: "Scalar") -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine scalars from {a.ring} and {b.ring}")


@total_ordering
@dataclass(frozen=True, slots=True)
class Scalar:
    """An exact ring element z0 + z1*sqrt(k); z1 is forced to 0 over Z."""

    ring: RingId
    z0: int
    z1: int = 0

    def __post_init__(self) -> None:
        if self.ring.k is None and self.z1 != 0:
            raise ValueError("integer-ring scalars must have z1 = 0")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        _check_same_ring(self, other)
        return Scalar(self.ring, self.z0 + other.z0, self.z1 + other.z1)

    def __sub__(self, other: "Scalar") -> "Scalar":
        _check_same_ring(self, other)
        return Scalar(self.ring, self.z0 - other.z0, self.z1 - other.z1)

    def __neg__(self) -> "Scalar":
        return Scalar(self.ring, -self.z0, -self.z1)

    def __mul__(self, other):
        if isinstance(other, int):
            return Scalar(self.ring, other * self.z0, other * self.z1)
        if isinstance(other, Scalar):
            _check_same_ring(self, other)
            k = self.ring.k
            if k is None:
                return Scalar(self.ring, self.z0 * other.z0, 0)
            return Scalar(
                self.ring,
                self.z0 * other.z0 + k * self.z1 * other.z1,
                self.z0 * other.z1 + self.z1 * other.z0,
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    # -- order -----------------------------------------------------------

    def __lt__(self, other: "Scalar") -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        diff = other - self
        return is_nonneg(diff) and diff != _zero_of(self.ring)

    def is_zero(self) -> bool:
        return self.z0 == 0 and self.z1 == 0

    def __str__(self) -> str:
        k = self.ring.k
        if k is None or self.z1 == 0:
            return str(self.z0)
        if self.z1 == 1:
            root = f"sqrt({k})"
        elif self.z1 == -1:
            root = f"-sqrt({k})"
        else:
            root = f"{self.z1}*sqrt({k})"
        if self.z0 == 0:
            return root
        sign = "+" if not root.startswith("-") else ""
        return f"{self.z0}{sign}{root}"


def _zero_of(ring: RingId) -> Scalar:
    return Scalar(ring, 0, 0)


# -- constructors ---------------------------------------------------------

def integer(n: int) -> Scalar:
    """A plain integer scalar."""
    return Scalar(INTEGERS, n, 0)


def quadratic(k: int, z0: int, z1: int = 0) -> Scalar:
    """The element z0 + z1*sqrt(k) of Z[sqrt(k)]."""
    return Scalar(RingId(k), z0, z1)


def embed(a: Scalar, ring: RingId) -> Scalar:
    """Embed a plain integer scalar into a quadratic ring as z1 = 0.

    The only coercion the package performs, and it is always explicit.
    """
    if a.ring == ring:
        return a
    if a.ring == INTEGERS:
        return Scalar(ring, a.z0, 0)
    raise RingMismatchError(f"no embedding of {a.ring} into {ring}")


# -- the named operations --------------------------------------------------

def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def scale(n: int, a: Scalar) -> Scalar:
    """Integer multiple (n*z0, n*z1)."""
    return a * n


def mul(a: Scalar, b: Scalar) -> Scalar:
    """Full ring product; mul(a, a) is (z0^2 + k*z1^2, 2*z0*z1)."""
    return a * b


def is_nonneg(a: Scalar) -> bool:
    """Whether the real number z0 + z1*sqrt(k) is >= 0, decided over Z.

    Splitting on the signs of z0 and z1 reduces the question to comparing
    z0^2 with k*z1^2, which requires no square roots.
    """
    k = a.ring.k
    if k is None or a.z1 == 0:
        return a.z0 >= 0
    if a.z0 >= 0 and a.z1 >= 0:
        return True
    if a.z0 < 0 and a.z1 < 0:
        return False
    if a.z0 >= 0:  # z1 < 0: nonneg iff z0 >= |z1| sqrt(k)
        return a.z0 * a.z0 >= k * a.z1 * a.z1
    # z0 < 0, z1 > 0: nonneg iff z1 sqrt(k) >= |z0|
    return k * a.z1 * a.z1 >= a.z0 * a.z0


def compare(a: Scalar, b: Scalar) -> int:
    """Total order agreeing with the real values: -1, 0 or +1."""
    diff = a - b
    if diff.is_zero():
        return 0
    return 1 if is_nonneg(diff) else -1


# -- exact decimal rendering -----------------------------------------------

def _floor_mul_sqrt(b: int, k: int) -> int:
    """floor(b * sqrt(k)) for non-square k, via integer square roots."""
    if b == 0:
        return 0
    if b > 0:
        return math.isqrt(b * b * k)
    # b*b*k is never a perfect square when b != 0 and k is non-square
    return -math.isqrt(b * b * k) - 1


def _format_fixed(m: int, digits: int) -> str:
    sign = "-" if m < 0 else ""
    q, r = divmod(abs(m), 10**digits)
    return f"{sign}{q}.{r:0{digits}d}"


def to_decimal(a: Scalar, digits: int) -> str:
    """Correctly rounded decimal expansion of a to `digits` fractional digits.

    Scalars are integers or irrational, so a rounding tie can never occur
    and floor(value * 10^digits + 1/2) is the correctly rounded value.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    p = 10**digits
    t = 2 * a.z0 * p + 1
    if a.ring.k is not None and a.z1 != 0:
        t += _floor_mul_sqrt(2 * a.z1 * p, a.ring.k)
    return _format_fixed(t // 2, digits)


def rationalize(num: Scalar, den: Scalar) -> tuple[int, int, int]:
    """Write num/den as (P + Q*sqrt(k)) / R with integer P, Q and R > 0.

    Multiplying by the conjugate of den clears sqrt(k) from the
    denominator; R = den.z0^2 - k*den.z1^2 is nonzero whenever den is.
    """
    _check_same_ring(num, den)
    if den.is_zero():
        raise ZeroDivisionError("denominator is zero")
    k = num.ring.k
    if k is None:
        p, q, r = num.z0, 0, den.z0
    else:
        r = den.z0 * den.z0 - k * den.z1 * den.z1
        p = num.z0 * den.z0 - k * num.z1 * den.z1
        q = num.z1 * den.z0 - num.z0 * den.z1
    if r < 0:
        p, q, r = -p, -q, -r
    return p, q, r


def ratio_to_decimal(num: Scalar, den: Scalar, digits: int) -> str:
    """Correctly rounded decimal expansion of the ratio num/den."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    p, q, r = rationalize(num, den)
    scale10 = 10**digits
    t = 2 * scale10 * p + r
    if q != 0:
        t += _floor_mul_sqrt(2 * scale10 * q, num.ring.k)
    # floor(x / n) = floor(floor(x) / n) for positive integer n
    return _format_fixed(t // (2 * r), digits)


def sqrt_ratio_floor(mult: int, num: Scalar, den: Scalar) -> tuple[int, bool]:
    """floor(mult * sqrt(num/den)) and whether the value is an exact integer.

    Requires mult >= 0, num >= 0 and den > 0.  The floor is found by
    bracketing t^2 * R against mult^2 * (P + Q*sqrt(k)) with the exact
    sign test, so the result is independent of any numeric precision.
    """
    if mult < 0:
        raise ValueError("mult must be >= 0")
    if not is_nonneg(num):
        raise ValueError("num must be >= 0")
    if not is_nonneg(den) or den.is_zero():
        raise ValueError("den must be > 0")
    if mult == 0 or num.is_zero():
        return 0, True
    p, q, r = rationalize(num, den)
    k = num.ring.k
    p2 = mult * mult * p
    q2 = mult * mult * q

    def below(t: int) -> bool:
        # t^2 * r <= p2 + q2*sqrt(k) ?
        d0 = p2 - t * t * r
        if q2 == 0 or k is None:
            return d0 >= 0
        return is_nonneg(Scalar(num.ring, d0, q2))

    hi = 1
    while below(hi):
        hi *= 2
    lo = hi // 2  # below(lo) holds (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(mid):
            lo = mid
        else:
            hi = mid
    floor_val = lo
    if q2 != 0:
        exact = False  # value^2 is irrational, so the root is irrational
    else:
        exact = p2 % r == 0 and math.isqrt(p2 // r) ** 2 == p2 // r
    return floor_val, exact
