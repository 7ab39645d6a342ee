"""Pell numbers, their primitive parts, and related exact scans.

u_1, u_2, ... = 1, 2, 5, 12, 29, ... and the half companions
r_1, r_2, ... = 1, 3, 7, 17, 41, ... both satisfy x_{n+1} = 2 x_n + x_{n-1},
with r_n**2 - 2 u_n**2 = (-1)**n.  The primitive part L_n is defined by
u_n = prod(L_d, d | n) and is recovered exactly by Mobius inversion; the
independent cross-check is the ball product

    R_n = prod(c + 1/c) over 1 <= j < n/2 coprime to n,

whose square must enclose L_n, and which is an exact integer exactly when
L_n is a perfect square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, is_perfect_square, is_prime, mobius
from .ball import Ball
from .denominator import PrecisionSchedule, trig_unit
from .errors import InternalInvariantError


@dataclass(frozen=True)
class PellPair:
    n: int
    u: int
    r: int


@dataclass(frozen=True)
class PrimitivePart:
    n: int
    L: int


@dataclass(frozen=True)
class RnReport:
    n: int
    L: int
    is_square: bool
    r_integer: int | None
    r_ball: Ball
    precision_used: int


@dataclass(frozen=True)
class LagariasReport:
    p: int
    u: int
    p_divides_up: bool
    up_is_square: bool


_u_cache = [0, 1, 2]
_r_cache = [0, 1, 3]  # index 0 is padding so that list[n] is the n-th term


def _extend(n: int) -> None:
    while len(_u_cache) <= n:
        _u_cache.append(2 * _u_cache[-1] + _u_cache[-2])
        _r_cache.append(2 * _r_cache[-1] + _r_cache[-2])


def pell_u(n: int) -> int:
    if n < 1:
        raise ValueError("index must be positive")
    _extend(n)
    return _u_cache[n]


def pell_r(n: int) -> int:
    if n < 1:
        raise ValueError("index must be positive")
    _extend(n)
    return _r_cache[n]


def pell_numbers(n_max: int) -> list[PellPair]:
    """Exact pairs (u_n, r_n) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("need at least one term")
    _extend(n_max)
    return [PellPair(n, _u_cache[n], _r_cache[n]) for n in range(1, n_max + 1)]


def primitive_part(n: int) -> PrimitivePart:
    """L_n by Mobius inversion over the Pell numbers; division is exact."""
    if n < 1:
        raise ValueError("index must be positive")
    _extend(n)
    num = 1
    den = 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= _u_cache[d]
        elif mu == -1:
            den *= _u_cache[d]
    q, r = divmod(num, den)
    if r:
        raise InternalInvariantError(f"primitive part of index {n} is not an integer")
    return PrimitivePart(n, q)


def robinson_scan(n_max: int) -> list[int]:
    """Indices 2 <= n <= n_max whose primitive part is a perfect square."""
    if n_max < 2:
        raise ValueError("scan needs n_max >= 2")
    _extend(n_max)
    return [n for n in range(2, n_max + 1) if is_perfect_square(primitive_part(n).L)]


def compute_rn(n: int, schedule: PrecisionSchedule | None = None) -> RnReport:
    """Certified ball for R_n with the exact cross-check R_n**2 = L_n.

    Rejected for n < 3: at n = 2 the conjugate pairing behind the identity
    degenerates (the product is empty while L_2 = 2).
    """
    if n < 3:
        raise ValueError("compute_rn requires n >= 3")
    if schedule is None:
        schedule = PrecisionSchedule(initial=192, max_bits=1 << 12)
    L = primitive_part(n).L
    square = is_perfect_square(L)
    prec = next(schedule.sequence(192))
    prod = Ball.exact_int(1, prec)
    for j in range(1, (n + 1) // 2):
        if math.gcd(j, n) == 1:
            # c + 1/c = 2*sqrt(1 + cos**2) = sqrt(d)
            prod = prod * trig_unit(j, n, prec).d.sqrt()
    if not prod.square().contains_int(L):
        raise InternalInvariantError(f"R_{n} ball squared fails to enclose the primitive part")
    r_int = math.isqrt(L) if square else None
    if r_int is not None and not prod.contains_int(r_int):
        raise InternalInvariantError(f"R_{n} ball does not contain its exact integer value")
    return RnReport(n, L, square, r_int, prod, prec)


def lagarias_checks(p: int) -> LagariasReport:
    """Divisibility and squareness of u_p for an odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    u = pell_u(p)
    return LagariasReport(p, u, u % p == 0, is_perfect_square(u))


def ljunggren_scan(bound: int) -> list[tuple[int, int]]:
    """Positive solutions (X, Y) of X**2 + 1 = 2 Y**4 with Y <= bound."""
    if bound < 1:
        raise ValueError("bound must be positive")
    out = []
    for y in range(1, bound + 1):
        t = 2 * y**4 - 1
        x = math.isqrt(t)
        if x * x == t:
            out.append((x, y))
    return out
