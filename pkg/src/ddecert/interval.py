"""Interval arithmetic with outward rounding and rigorous elementary functions.

Every rigorous quantity in this package is an :class:`Interval`: a closed
interval with binary64 endpoints such that the exact (set-valued) result of
every operation is contained in the computed result.

Outward rounding is realized by *next-after endpoint nudging*: each endpoint
is computed in round-to-nearest and then pushed one ulp outward (two ulps for
libm transcendentals, whose results are not guaranteed correctly rounded).
This keeps the implementation free of global FPU state and thread-safe; the
price is at most one spurious ulp per endpoint per operation, which the
containment test-suite bounds against a 256-bit oracle.

NaN endpoints are forbidden.  Infinite endpoints may appear only as an
overflow signal (e.g. ``exp`` of a huge argument); operations that would turn
them into NaN raise :class:`~ddecert.errors.OverflowPoison` instead of
propagating garbage.
"""

from __future__ import annotations

import decimal
import math
from math import inf, nextafter

from .errors import (
    DivisionByZeroInterval,
    DomainError,
    InvalidIntervalError,
    OverflowPoison,
)

__all__ = ["Interval", "PI", "make_interval", "from_decimal_string"]


def _up(x: float) -> float:
    return nextafter(x, inf)


def _dn(x: float) -> float:
    return nextafter(x, -inf)


def _up2(x: float) -> float:
    return nextafter(nextafter(x, inf), inf)


def _dn2(x: float) -> float:
    return nextafter(nextafter(x, -inf), -inf)


class Interval:
    """Closed interval ``[lo, hi]`` with outward-rounded binary64 endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if lo != lo or hi != hi:
            raise InvalidIntervalError("NaN endpoint")
        if lo > hi:
            raise InvalidIntervalError(f"endpoints out of order: [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    # -- constructors ------------------------------------------------------

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @staticmethod
    def _mk(lo: float, hi: float) -> "Interval":
        # internal fast path: endpoints already validated by construction
        iv = Interval.__new__(Interval)
        iv.lo = lo
        iv.hi = hi
        return iv

    # -- basic queries -----------------------------------------------------

    def is_finite(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def strictly_contains(self, other: "Interval") -> bool:
        """Interior inclusion: shared endpoints do not count."""
        return self.lo < other.lo and other.hi < self.hi

    def subset(self, other: "Interval") -> bool:
        return other.contains_interval(self)

    def strict_subset(self, other: "Interval") -> bool:
        return other.strictly_contains(self)

    def intersect(self, other: "Interval") -> "Interval | None":
        """Intersection, or ``None`` as the explicit empty marker."""
        lo = self.lo if self.lo >= other.lo else other.lo
        hi = self.hi if self.hi <= other.hi else other.hi
        if lo > hi:
            return None
        return Interval._mk(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval._mk(min(self.lo, other.lo), max(self.hi, other.hi))

    def midpoint(self) -> float:
        if self.lo == self.hi:
            return self.lo
        m = 0.5 * (self.lo + self.hi)
        if not math.isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        # keep the midpoint inside even for extreme endpoints
        return min(max(m, self.lo), self.hi)

    def diameter(self) -> float:
        return self.hi - self.lo

    def mag(self) -> float:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> float:
        """min |x| over the interval (0 if it straddles 0)."""
        if self.lo > 0.0:
            return self.lo
        if self.hi < 0.0:
            return -self.hi
        return 0.0

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval._mk(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        lo = _dn(self.lo + other.lo)
        hi = _up(self.hi + other.hi)
        if lo != lo or hi != hi:
            raise OverflowPoison("inf - inf in addition")
        return Interval._mk(lo, hi)

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        lo = _dn(self.lo - other.hi)
        hi = _up(self.hi - other.lo)
        if lo != lo or hi != hi:
            raise OverflowPoison("inf - inf in subtraction")
        return Interval._mk(lo, hi)

    def __rsub__(self, other) -> "Interval":
        return Interval.point(other) - self

    def __mul__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        p1 = a * c
        p2 = a * d
        p3 = b * c
        p4 = b * d
        lo = min(p1, p2, p3, p4)
        hi = max(p1, p2, p3, p4)
        if lo != lo or hi != hi:
            # 0 * inf from a poisoned operand
            raise OverflowPoison("0 * inf in multiplication")
        return Interval._mk(_dn(lo), _up(hi))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        if other.lo <= 0.0 <= other.hi:
            raise DivisionByZeroInterval(f"0 in divisor [{other.lo!r}, {other.hi!r}]")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        q1 = a / c
        q2 = a / d
        q3 = b / c
        q4 = b / d
        lo = min(q1, q2, q3, q4)
        hi = max(q1, q2, q3, q4)
        if lo != lo or hi != hi:
            raise OverflowPoison("inf / inf in division")
        return Interval._mk(_dn(lo), _up(hi))

    def __rtruediv__(self, other) -> "Interval":
        return Interval.point(other) / self

    def abs(self) -> "Interval":
        return Interval._mk(self.mig(), self.mag())

    # -- elementary functions ---------------------------------------------

    def exp(self) -> "Interval":
        # exp(0) = 1 exactly; otherwise allow 2 ulp for a 1-ulp libm
        try:
            lo = 1.0 if self.lo == 0.0 else _dn2(math.exp(self.lo))
        except OverflowError:
            lo = 1.7e308
        try:
            hi = 1.0 if self.hi == 0.0 else _up2(math.exp(self.hi))
        except OverflowError:
            hi = inf
        return Interval._mk(max(lo, 0.0), hi)

    def log(self) -> "Interval":
        if self.lo <= 0.0:
            raise DomainError(f"log requires lo > 0, got [{self.lo!r}, {self.hi!r}]")
        lo = 0.0 if self.lo == 1.0 else _dn2(math.log(self.lo))
        hi = 0.0 if self.hi == 1.0 else _up2(math.log(self.hi))
        return Interval._mk(lo, hi)

    def sqrt(self) -> "Interval":
        if self.lo <= 0.0:
            raise DomainError(f"sqrt requires lo > 0, got [{self.lo!r}, {self.hi!r}]")
        # math.sqrt is correctly rounded, one ulp suffices
        return Interval._mk(_dn(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))

    def int_pow(self, n: int) -> "Interval":
        """x**n for integer n via repeated interval multiplication.

        Even powers fold through |x| first, so ``[-1,1]**2 == [0,1]``.
        """
        if n < 0:
            return Interval.point(1.0) / self.int_pow(-n)
        if n == 0:
            return Interval._mk(1.0, 1.0)
        base = self.abs() if n % 2 == 0 else self
        acc: Interval | None = None
        b = base
        e = n
        while e:
            if e & 1:
                acc = b if acc is None else acc * b
            e >>= 1
            if e:
                b = b * b
        assert acc is not None
        if n % 2 == 0 and acc.lo < 0.0:
            # |x|**n is nonnegative; undo the spurious downward nudge
            acc = Interval._mk(0.0, acc.hi)
        return acc

    def pow_real(self, k: float) -> "Interval":
        """x**k for a real exponent.

        Integer k uses repeated multiplication; half-integer k goes through
        sqrt; anything else is exp(k*log(x)) and requires ``lo > 0``.
        """
        if k == round(k) and abs(k) < 2**31:
            return self.int_pow(int(round(k)))
        if 2 * k == round(2 * k) and abs(k) < 2**30:
            if self.lo <= 0.0:
                raise DomainError(f"pow_real({k}) requires lo > 0")
            return self.sqrt().int_pow(int(round(2 * k)))
        if self.lo <= 0.0:
            raise DomainError(f"pow_real({k}) requires lo > 0")
        return (self.log() * Interval.point(k)).exp()

    def _trig(self, shift_quarters: int) -> "Interval":
        # cos(x + shift_quarters * pi/2) evaluated rigorously; shift 0 -> cos, 3 -> sin
        pi_lo, pi_hi = PI.lo, PI.hi
        if self.diameter() >= 2.0 * pi_lo:
            return Interval._mk(-1.0, 1.0)
        # extrema of cos at integer multiples of pi; shift maps sin into cos
        if shift_quarters == 0:
            fn = math.cos
            x = self
        else:
            fn = math.sin
            x = self
        lo = min(_dn2(fn(x.lo)), _dn2(fn(x.hi)))
        hi = max(_up2(fn(x.lo)), _up2(fn(x.hi)))
        # critical points: fn' = 0 at k*pi (+ pi/2 for sin handled by offset o)
        o = 0.5 if shift_quarters else 0.0  # cos extrema at k*pi, sin at (k+1/2)*pi
        qlo = x.lo / pi_hi - o
        qhi = x.hi / pi_lo - o
        k0 = math.ceil(qlo - 1e-9)
        k1 = math.floor(qhi + 1e-9)
        for k in range(k0 - 1, k1 + 2):
            # critical point t = (k + o) * pi; include if it may lie in x
            t_lo = (k + o) * (pi_lo if k + o >= 0 else pi_hi)
            t_hi = (k + o) * (pi_hi if k + o >= 0 else pi_lo)
            if t_hi < x.lo or t_lo > x.hi:
                continue
            val = 1.0 if (k % 2 == 0) else -1.0
            lo = min(lo, val)
            hi = max(hi, val)
        return Interval._mk(max(lo, -1.0), min(hi, 1.0))

    def cos(self) -> "Interval":
        return self._trig(0)

    def sin(self) -> "Interval":
        return self._trig(3)

    # -- serialization and display ------------------------------------------

    def to_hex_pair(self) -> list[str]:
        """Bit-exact serialization as lowercase hexadecimal float literals."""
        return [float.hex(self.lo), float.hex(self.hi)]

    @staticmethod
    def from_hex_pair(pair) -> "Interval":
        return Interval(float.fromhex(pair[0]), float.fromhex(pair[1]))

    def display(self, sig: int = 17) -> str:
        """Human-readable rendering in the shared-prefix sub/superscript style.

        ``[2.24757628868803, 2.24757629130349]`` renders as
        ``2.2475762_8868803^9130349``; the decimal digits are rounded
        outward so the printed interval still contains the stored one.
        """
        if not self.is_finite():
            return f"[{self.lo!r}, {self.hi!r}]"
        ctx_dn = decimal.Context(prec=sig, rounding=decimal.ROUND_FLOOR)
        ctx_up = decimal.Context(prec=sig, rounding=decimal.ROUND_CEILING)
        d_lo = ctx_dn.plus(decimal.Decimal(self.lo))
        d_hi = ctx_up.plus(decimal.Decimal(self.hi))
        if d_lo == d_hi:
            return str(d_lo)
        if d_lo.is_signed() != d_hi.is_signed():
            return f"[{d_lo}, {d_hi}]"
        # align to a common fixed exponent so digit strings are comparable
        exp = min(d_lo.as_tuple().exponent, d_hi.as_tuple().exponent)
        if exp > 0:
            exp = 0
        try:
            q = decimal.Decimal((0, (1,), exp))
            s_lo = str(ctx_dn.quantize(d_lo, q))
            s_hi = str(ctx_up.quantize(d_hi, q))
        except decimal.InvalidOperation:
            return f"[{d_lo}, {d_hi}]"
        if len(s_lo) != len(s_hi):
            return f"[{s_lo}, {s_hi}]"
        i = 0
        while i < len(s_lo) and s_lo[i] == s_hi[i]:
            i += 1
        prefix = s_lo[:i]
        if "." not in prefix or not prefix[0].isdigit() and not prefix.startswith("-"):
            return f"[{s_lo}, {s_hi}]"
        return f"{prefix}_{s_lo[i:]}^{s_hi[i:]}"

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))


# math.pi is the nearest double below the true value of pi
PI = Interval._mk(math.pi, _up(math.pi))


def make_interval(x) -> Interval:
    """Coerce a number or Interval to an Interval (numbers become exact points)."""
    if isinstance(x, Interval):
        return x
    return Interval.point(float(x))


def from_decimal_string(s: str) -> Interval:
    """Tightest Interval containing the exact decimal value of ``s``.

    ``0.1`` is not representable in binary64; this returns the one-ulp
    enclosure around the nearest double instead of silently rounding.
    """
    f = float(s)
    if math.isinf(f):
        raise DomainError(f"decimal literal overflows binary64: {s}")
    d = decimal.Decimal(s)
    df = decimal.Decimal(f)
    if df == d:
        return Interval.point(f)
    if df < d:
        return Interval(f, _up(f))
    return Interval(_dn(f), f)
