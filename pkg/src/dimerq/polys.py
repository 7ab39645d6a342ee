"""Dense univariate polynomials over the integers.

Coefficients are plain Python ints (arbitrary precision), stored ascending:
``coeffs[i]`` is the coefficient of x**i, with no trailing zeros.  The zero
polynomial is the empty tuple and has degree -1.

The GCD is computed modulo a stream of 62-bit primes and recombined by CRT;
the candidate is accepted only once exact trial division certifies it, so the
result never depends on luck with the primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import next_prime

_KARATSUBA_THRESHOLD = 32


class IntPoly:
    """An integer polynomial, e.g. ``IntPoly([1, 0, -1])`` is 1 - x**2."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if isinstance(other, IntPoly):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        """GCD of the coefficients, carrying the sign of the leading one."""
        if self.is_zero:
            return 0
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g if self.leading > 0 else -g

    def primitive_part(self) -> "IntPoly":
        """self divided by its content; leading coefficient made positive."""
        c = self.content()
        if c == 0:
            return IntPoly(())
        return IntPoly(x // c for x in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "IntPoly('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coeff = str(abs(c)) if (abs(c) != 1 or i == 0) else ""
            parts.append(sign + coeff + term)
        return f"IntPoly('{''.join(parts)}')"


def _mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _mul_rec(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if min(len(a), len(b)) <= _KARATSUBA_THRESHOLD:
        return _mul_schoolbook(a, b)
    h = min(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_rec(a0, b0)
    z2 = _mul_rec(a1, b1)
    sa = [x + y for x, y in zip(a0, a1)] + list(a1[len(a0):]) + list(a0[len(a1):])
    sb = [x + y for x, y in zip(b0, b1)] + list(b1[len(b0):]) + list(b0[len(b1):])
    z1 = _mul_rec(sa, sb)
    for i, v in enumerate(z0):
        z1[i] -= v
    for i, v in enumerate(z2):
        z1[i] -= v
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[i + h] += v
    for i, v in enumerate(z2):
        out[i + 2 * h] += v
    return out


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product; schoolbook for small operands, Karatsuba above."""
    if a.is_zero or b.is_zero:
        return IntPoly(())
    return IntPoly(_mul_rec(a.coeffs, b.coeffs))


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b, which must be exact over the integers."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return IntPoly(())
    if a.degree < b.degree:
        raise ValueError("inexact polynomial division")
    rem = list(a.coeffs)
    bl = b.leading
    q = [0] * (a.degree - b.degree + 1)
    for i in range(len(q) - 1, -1, -1):
        head = rem[i + b.degree]
        if head == 0:
            continue
        t, r = divmod(head, bl)
        if r:
            raise ValueError("inexact polynomial division")
        q[i] = t
        for j, bc in enumerate(b.coeffs):
            rem[i + j] -= t * bc
    if any(rem[: b.degree]):
        raise ValueError("inexact polynomial division")
    return IntPoly(q)


def divides(b: IntPoly, a: IntPoly) -> bool:
    """True iff b divides a exactly over the integers."""
    try:
        exact_div(a, b)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _gf_normalize(cs: list[int], p: int) -> list[int]:
    while cs and cs[-1] % p == 0:
        cs.pop()
    return cs


def _gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic GCD of two polynomials over GF(p)."""
    fa = _gf_normalize([c % p for c in a], p)
    fb = _gf_normalize([c % p for c in b], p)
    while fb:
        inv = pow(fb[-1], p - 2, p)
        db = len(fb) - 1
        rem = fa[:]
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            factor = rem[-1] * inv % p
            for j in range(db + 1):
                rem[shift + j] = (rem[shift + j] - factor * fb[j]) % p
            rem = _gf_normalize(rem, p)
        fa, fb = fb, rem
    inv = pow(fa[-1], p - 2, p)
    return [c * inv % p for c in fa]


def _symmetric(r: int, m: int) -> int:
    r %= m
    return r - m if 2 * r > m else r


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    # r1 mod m1, r2 mod m2 with coprime moduli; symmetric representative.
    t = (r2 - r1) % m2 * pow(m1, -1, m2) % m2
    return _symmetric(r1 + m1 * t, m1 * m2)


_PRIME_STREAM_START = (1 << 62) + 1


def _prime_stream():
    p = _PRIME_STREAM_START
    while True:
        p = next_prime(p)
        yield p


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive GCD with positive leading coefficient.

    Divides both inputs exactly, and any common polynomial divisor divides it
    (up to rational constants).  Both inputs zero is rejected.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    fa = a.primitive_part()
    fb = b.primitive_part()
    if fa.degree == 0 or fb.degree == 0:
        return IntPoly((1,))
    lc_gcd = math.gcd(fa.leading, fb.leading)
    best_deg: int | None = None
    residues: list[int] = []
    modulus = 1
    prev: tuple[int, ...] | None = None
    for p in _prime_stream():
        if fa.leading % p == 0 or fb.leading % p == 0:
            continue
        gp = _gf_gcd(fa.coeffs, fb.coeffs, p)
        d = len(gp) - 1
        if d == 0:
            return IntPoly((1,))
        if best_deg is None or d < best_deg:
            best_deg = d
            scale = lc_gcd % p
            residues = [_symmetric(c * scale % p, p) for c in gp]
            modulus = p
            prev = None
        elif d == best_deg:
            scale = lc_gcd % p
            scaled = [c * scale % p for c in gp]
            residues = [_crt_pair(r, modulus, s, p) for r, s in zip(residues, scaled)]
            modulus *= p
        else:
            continue  # unlucky prime: gcd image too large
        cand = tuple(residues)
        if cand == prev:
            g = IntPoly(cand).primitive_part()
            if divides(g, fa) and divides(g, fb):
                return g
        prev = cand


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """Factors with strictly increasing multiplicities; each factor is
    primitive, square-free and coprime to the others.  Their product with the
    recorded multiplicities reproduces the primitive part of the input."""

    factors: tuple[tuple[IntPoly, int], ...]

    def reassemble(self) -> IntPoly:
        out = IntPoly((1,))
        for f, m in self.factors:
            out = out * f**m
        return out

    def max_multiplicity(self) -> int:
        return max((m for _, m in self.factors), default=0)


def squarefree_decompose(a: IntPoly) -> SquarefreeDecomposition:
    """Yun's square-free decomposition of a nonzero integer polynomial."""
    if a.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    f = a.primitive_part()
    if f.degree == 0:
        return SquarefreeDecomposition(())
    fp = f.derivative()
    g = poly_gcd(f, fp)
    if g.degree == 0:
        return SquarefreeDecomposition(((f, 1),))
    c = exact_div(f, g)
    d = exact_div(fp, g) - c.derivative()
    factors = []
    i = 1
    while c.degree > 0:
        p = poly_gcd(c, d)
        if p.degree > 0:
            factors.append((p, i))
        c = exact_div(c, p)
        d = exact_div(d, p) - c.derivative()
        i += 1
    return SquarefreeDecomposition(tuple(factors))


def series_mul_truncate(p: IntPoly, s: Sequence[int], n_terms: int) -> list[int]:
    """First ``n_terms`` coefficients of p(x) * sum(s[i] * x**i), exactly."""
    if n_terms < 0:
        raise ValueError("negative truncation length")
    if len(s) < n_terms:
        raise ValueError(f"series has {len(s)} terms, need at least {n_terms}")
    cs = p.coeffs
    out = []
    for n in range(n_terms):
        acc = 0
        for i in range(min(n, len(cs) - 1) + 1):
            c = cs[i]
            if c:
                acc += c * s[n - i]
        out.append(acc)
    return out
