"""Fixed-point ball arithmetic: midpoint-radius intervals over the reals.

A ``Ball`` with precision p represents every real in
``[(mid - rad) / 2**p, (mid + rad) / 2**p]`` where ``mid`` and ``rad`` are
exact Python ints.  All operations round outward, so an enclosure of the
inputs always yields an enclosure of the exact result; a ball is a proof of
location, never an approximation.

Addition, multiplication, square root and reciprocal are pure integer
arithmetic.  The only transcendental seeds, cos(j*pi/m) and the natural log,
are delegated to MPFR (via gmpy2) with directed rounding, which guarantees
one-sided bounds.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2

_GUARD_BITS = 32
_LOG10_2 = math.log10(2)


def _shift_round(v: int, s: int) -> int:
    """Round v / 2**s to the nearest integer (ties away from zero)."""
    if s <= 0:
        return v << -s
    half = 1 << (s - 1)
    if v >= 0:
        return (v + half) >> s
    return -((-v + half) >> s)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _mpfr_to_scaled(x, prec: int, round_up: bool) -> int:
    """Exact conversion of an mpfr value to the 2**-prec fixed-point grid."""
    num, den = x.as_integer_ratio()
    num = int(num) << prec
    den = int(den)
    return _ceil_div(num, den) if round_up else num // den


class Ball:
    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid: int, rad: int, prec: int):
        if rad < 0:
            raise ValueError("negative radius")
        self.mid = mid
        self.rad = rad
        self.prec = prec

    @classmethod
    def exact_int(cls, v: int, prec: int) -> "Ball":
        return cls(v << prec, 0, prec)

    @classmethod
    def from_fraction(cls, fr: Fraction, prec: int) -> "Ball":
        num = fr.numerator << prec
        q, r = divmod(num, fr.denominator)
        return cls(q, 1 if r else 0, prec)

    @classmethod
    def from_scaled_endpoints(cls, lo: int, hi: int, prec: int) -> "Ball":
        if lo > hi:
            raise ValueError("endpoints out of order")
        mid = (lo + hi) // 2
        return cls(mid, hi - mid, prec)

    @classmethod
    def cos_pi_frac(cls, j: int, m: int, prec: int) -> "Ball":
        """Rigorous enclosure of cos(j*pi/m) for 1 <= j < m."""
        if not 1 <= j < m:
            raise ValueError(f"need 1 <= j < m, got j={j}, m={m}")
        work = prec + _GUARD_BITS
        down = gmpy2.context(precision=work, round=gmpy2.RoundDown)
        up = gmpy2.context(precision=work, round=gmpy2.RoundUp)
        theta_lo = down.div(down.mul(down.const_pi(), j), m)
        theta_hi = up.div(up.mul(up.const_pi(), j), m)
        # cos is decreasing on [0, pi]; j < m keeps the argument inside.
        lo = _mpfr_to_scaled(down.cos(theta_hi), prec, round_up=False)
        hi = _mpfr_to_scaled(up.cos(theta_lo), prec, round_up=True)
        return cls.from_scaled_endpoints(lo, hi, prec)

    # ------------------------------------------------------------------
    # queries

    def lower(self) -> Fraction:
        return Fraction(self.mid - self.rad, 1 << self.prec)

    def upper(self) -> Fraction:
        return Fraction(self.mid + self.rad, 1 << self.prec)

    def midpoint_fraction(self) -> Fraction:
        return Fraction(self.mid, 1 << self.prec)

    def radius_fraction(self) -> Fraction:
        return Fraction(self.rad, 1 << self.prec)

    @property
    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    @property
    def excludes_zero(self) -> bool:
        return abs(self.mid) > self.rad

    @property
    def is_positive(self) -> bool:
        return self.mid - self.rad > 0

    @property
    def is_negative(self) -> bool:
        return self.mid + self.rad < 0

    def contains_int(self, v: int) -> bool:
        return abs(self.mid - (v << self.prec)) <= self.rad

    def contains_fraction(self, fr: Fraction) -> bool:
        return self.lower() <= fr <= self.upper()

    def round_nearest_int(self) -> int:
        return _shift_round(self.mid, self.prec)

    def radius_below(self, num: int, den: int) -> bool:
        """True iff the radius is strictly below num/den."""
        return self.rad * den < num << self.prec

    def __float__(self) -> float:
        fr = self.midpoint_fraction()
        return fr.numerator / fr.denominator if abs(fr) < 1e300 else float(fr)

    def __repr__(self) -> str:
        return f"Ball(~{float(self):.6g}, rad<=2^{self.rad.bit_length() - self.prec}, prec={self.prec})"

    # ------------------------------------------------------------------
    # arithmetic (operands must share the same precision)

    def _check(self, other: "Ball") -> None:
        if self.prec != other.prec:
            raise ValueError("mixed-precision ball arithmetic")

    def __neg__(self) -> "Ball":
        return Ball(-self.mid, self.rad, self.prec)

    def __add__(self, other: "Ball") -> "Ball":
        self._check(other)
        return Ball(self.mid + other.mid, self.rad + other.rad, self.prec)

    def __sub__(self, other: "Ball") -> "Ball":
        self._check(other)
        return Ball(self.mid - other.mid, self.rad + other.rad, self.prec)

    def __mul__(self, other: "Ball") -> "Ball":
        self._check(other)
        p = self.prec
        mid = _shift_round(self.mid * other.mid, p)
        err = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        rad = _ceil_div(err, 1 << p) + 1
        return Ball(mid, rad, p)

    def mul_int(self, c: int) -> "Ball":
        return Ball(self.mid * c, self.rad * abs(c), self.prec)

    def add_int(self, c: int) -> "Ball":
        return Ball(self.mid + (c << self.prec), self.rad, self.prec)

    def square(self) -> "Ball":
        return self * self

    def pow_int(self, n: int) -> "Ball":
        if n < 0:
            raise ValueError("negative power; use recip")
        result = Ball.exact_int(1, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> "Ball":
        lo = self.mid - self.rad
        hi = self.mid + self.rad
        if lo < 0:
            raise ValueError("square root of a ball not provably nonnegative")
        p = self.prec
        s_lo = math.isqrt(lo << p)
        t = hi << p
        s_hi = math.isqrt(t)
        if s_hi * s_hi < t:
            s_hi += 1
        return Ball.from_scaled_endpoints(s_lo, s_hi, p)

    def recip(self) -> "Ball":
        if self.contains_zero:
            raise ZeroDivisionError("reciprocal of a ball containing zero")
        lo = self.mid - self.rad
        hi = self.mid + self.rad
        one = 1 << (2 * self.prec)
        return Ball.from_scaled_endpoints(one // hi, _ceil_div(one, lo), self.prec)

    def __truediv__(self, other: "Ball") -> "Ball":
        return self * other.recip()

    def log(self) -> "Ball":
        """Enclosure of the natural log; requires a provably positive ball."""
        lo = self.mid - self.rad
        hi = self.mid + self.rad
        if lo <= 0:
            raise ValueError("log of a ball not provably positive")
        p = self.prec
        work = p + _GUARD_BITS
        down = gmpy2.context(precision=work, round=gmpy2.RoundDown)
        up = gmpy2.context(precision=work, round=gmpy2.RoundUp)
        den = 1 << p
        out_lo = _mpfr_to_scaled(down.log(gmpy2.mpq(lo, den)), p, round_up=False)
        out_hi = _mpfr_to_scaled(up.log(gmpy2.mpq(hi, den)), p, round_up=True)
        return Ball.from_scaled_endpoints(out_lo, out_hi, p)

    # ------------------------------------------------------------------
    # presentation

    def magnitude_log10(self) -> float | None:
        """log10 of an upper bound for |value|, or None for the zero ball."""
        bound = abs(self.mid) + self.rad
        if bound == 0:
            return None
        bl = bound.bit_length()
        shift = max(0, bl - 64)
        return math.log10(bound >> shift) + (shift - self.prec) * _LOG10_2

    def decimal_str(self) -> tuple[str, str]:
        """Exact decimal strings (midpoint, radius); finite since the scale
        is a power of two."""
        return (_scaled_to_decimal(self.mid, self.prec), _scaled_to_decimal(self.rad, self.prec))


def _scaled_to_decimal(v: int, prec: int) -> str:
    sign = "-" if v < 0 else ""
    digits = str(abs(v) * 5**prec)
    if prec == 0:
        return sign + digits
    digits = digits.rjust(prec + 1, "0")
    whole, frac = digits[:-prec], digits[-prec:]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")
