"""Exact arithmetic in cyclotomic fields and in square-root towers above them.

``CyclotomicElement`` represents an element of Q(zeta_M) as a rational
polynomial in zeta reduced modulo the M-th cyclotomic polynomial; equality is
coefficient-wise, so zero-testing is exact.  With M = 2*(k+1) the cosine
cos(j*pi/(k+1)) equals (zeta**j + zeta**-j) / 2 and is available exactly.

``RadicalTower`` adjoins formal square roots s_j with s_j**2 given by a
cyclotomic radicand.  Tower elements are maps from square-free products of
the s_j to cyclotomic coefficients.  The presentation may contain zero
divisors precisely when the radicands are multiplicatively dependent, so no
division is ever performed; multiplication and the sign-flip conjugations are
all the certification procedure needs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InternalInvariantError
from .polys import IntPoly, exact_div

Support = frozenset


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of x**n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = exact_div(poly, cyclotomic_polynomial(d))
    return poly


class CyclotomicElement:
    """An element of Q(zeta_n), reduced mod the n-th cyclotomic polynomial."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        phi = cyclotomic_polynomial(modulus)
        cs = [Fraction(c) for c in coeffs]
        cs = _reduce_mod(cs, phi)
        cs += [Fraction(0)] * (phi.degree - len(cs))
        self.modulus = modulus
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, modulus: int) -> "CyclotomicElement":
        return cls(modulus, ())

    @classmethod
    def one(cls, modulus: int) -> "CyclotomicElement":
        return cls(modulus, (1,))

    @classmethod
    def from_rational(cls, q, modulus: int) -> "CyclotomicElement":
        return cls(modulus, (Fraction(q),))

    @classmethod
    def zeta_pow(cls, modulus: int, e: int) -> "CyclotomicElement":
        e %= modulus
        return cls(modulus, [0] * e + [1])

    @classmethod
    def half_cos(cls, modulus: int, j: int) -> "CyclotomicElement":
        """(zeta**j + zeta**-j) / 2 = cos(2*pi*j / modulus); with
        modulus = 2*m this is cos(j*pi/m)."""
        return (cls.zeta_pow(modulus, j) + cls.zeta_pow(modulus, -j)) * Fraction(1, 2)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "CyclotomicElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed cyclotomic moduli")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs))

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.modulus, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.modulus, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.modulus, [a * other for a in self.coeffs])
        if isinstance(other, CyclotomicElement):
            self._check(other)
            out = [Fraction(0)] * (2 * len(self.coeffs))
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return CyclotomicElement(self.modulus, out)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"CyclotomicElement({self.modulus}, {list(self.coeffs)!r})"


def _reduce_mod(cs: list[Fraction], phi: IntPoly) -> list[Fraction]:
    deg = phi.degree
    lead = phi.coeffs[-1]  # cyclotomic polynomials are monic
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            cs[i] = Fraction(0)
            for t in range(deg):
                cs[i - deg + t] -= c * phi.coeffs[t] / lead
    return cs[:deg] if len(cs) > deg else cs


class RadicalTower:
    """Q(zeta_M)(s_j : j in index set) with s_j**2 given cyclotomic values."""

    def __init__(self, modulus: int, radicands: dict[int, CyclotomicElement]):
        for r in radicands.values():
            if r.modulus != modulus:
                raise ValueError("radicand modulus mismatch")
        self.modulus = modulus
        self.radicands = dict(radicands)

    def zero(self) -> "TowerElement":
        return TowerElement(self, {})

    def one(self) -> "TowerElement":
        return TowerElement(self, {Support(): CyclotomicElement.one(self.modulus)})

    def scalar(self, value: CyclotomicElement) -> "TowerElement":
        return TowerElement(self, {Support(): value})

    def radical(self, j: int) -> "TowerElement":
        if j not in self.radicands:
            raise ValueError(f"no radical with index {j}")
        return TowerElement(self, {Support([j]): CyclotomicElement.one(self.modulus)})


class TowerElement:
    """A sum over square-free radical products R of coeff_R * prod(s_j, j in R)."""

    __slots__ = ("tower", "comps")

    def __init__(self, tower: RadicalTower, comps: dict):
        self.tower = tower
        self.comps = {r: c for r, c in comps.items() if not c.is_zero}

    def component(self, support) -> CyclotomicElement:
        return self.comps.get(Support(support), CyclotomicElement.zero(self.tower.modulus))

    @property
    def is_zero(self) -> bool:
        return not self.comps

    @property
    def support(self) -> set:
        out: set[int] = set()
        for r in self.comps:
            out |= r
        return out

    def add(self, other: "TowerElement") -> "TowerElement":
        out = dict(self.comps)
        for r, c in other.comps.items():
            out[r] = out[r] + c if r in out else c
        return TowerElement(self.tower, out)

    def sub(self, other: "TowerElement") -> "TowerElement":
        out = dict(self.comps)
        for r, c in other.comps.items():
            out[r] = out[r] - c if r in out else -c
        return TowerElement(self.tower, out)

    def mul(self, other: "TowerElement") -> "TowerElement":
        radicands = self.tower.radicands
        out: dict = {}
        for r1, c1 in self.comps.items():
            for r2, c2 in other.comps.items():
                c = c1 * c2
                for j in r1 & r2:
                    c = c * radicands[j]
                key = r1 ^ r2
                out[key] = out[key] + c if key in out else c
        return TowerElement(self.tower, out)

    def flip(self, j: int) -> "TowerElement":
        """The conjugation s_j -> -s_j."""
        return TowerElement(
            self.tower, {r: (-c if j in r else c) for r, c in self.comps.items()}
        )

    def eliminate(self, j: int) -> "TowerElement":
        """self * flip_j(self); the result is free of s_j."""
        out = self.mul(self.flip(j))
        if any(j in r for r in out.comps):
            raise InternalInvariantError(f"radical s_{j} survived its own elimination")
        return out
