"""Construction of the tiling generating function's explicit denominator.

For width k let ell = floor(k/2), m = k + 1, and for 1 <= j <= ell define the
unit pair

    c_j = cos(j*pi/m) + sqrt(1 + cos(j*pi/m)**2),   cbar_j = cos(j*pi/m) - sqrt(...),

with c_j * cbar_j = -1.  Each subset S of {1..ell} yields
a_S = prod(c_j, j in S) * prod(cbar_j, j not in S), and the denominator is
the product of (1 - a_S x) over all subsets for even k, or (1 - a_S**2 x**2)
for odd k; its degree is 2**floor((k+1)/2).

Coefficients are computed as balls via a balanced product tree and rounded to
integers.  Certification is double-keyed: every coefficient radius must be
below 1/4, and the rounded polynomial must annihilate a window of exact
tiling counts (the recurrence check).  On failure the precision doubles and
the build retries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .ball import Ball
from .dimers import tiling_series
from .errors import CertificationError, ResourceLimitError
from .polys import IntPoly

DEGREE_CAP = 512
RECURRENCE_WINDOW = 64
MAX_PRECISION_BITS = 1 << 20


@dataclass(frozen=True)
class TrigUnit:
    """The unit data for one index: balls for c, cbar and the radicand
    d = 4 * (1 + cos(j*pi/m)**2), which satisfies (c + 1/c)**2 = d."""

    j: int
    m: int
    c: Ball
    cbar: Ball
    d: Ball


@dataclass(frozen=True)
class SubsetProduct:
    k: int
    subset: frozenset[int]
    b: Ball
    a: Ball


@dataclass(frozen=True)
class PrecisionSchedule:
    """Doubling precision ladder.  ``initial=None`` defers to the caller's
    heuristic starting point."""

    initial: int | None = None
    max_bits: int = MAX_PRECISION_BITS

    def sequence(self, default_initial: int) -> Iterator[int]:
        bits = self.initial if self.initial is not None else default_initial
        bits = min(bits, self.max_bits)
        while True:
            yield bits
            if bits >= self.max_bits:
                return
            bits = min(bits * 2, self.max_bits)


@dataclass(frozen=True)
class CertifiedPoly:
    k: int
    poly: IntPoly
    precision_used: int
    recurrence_checked: bool

    def to_json_dict(self) -> dict:
        return poly_to_json_dict(self.k, self.poly)

    def to_payload(self) -> dict:
        payload = self.to_json_dict()
        payload["precision_used"] = self.precision_used
        payload["recurrence_checked"] = self.recurrence_checked
        return payload

    @classmethod
    def from_payload(cls, payload: dict) -> "CertifiedPoly":
        k, poly = poly_from_json_dict(payload)
        return cls(k, poly, int(payload["precision_used"]), bool(payload["recurrence_checked"]))


def poly_to_json_dict(k: int, poly: IntPoly) -> dict:
    """Shared wire format: coefficients as decimal strings, ascending."""
    return {"k": k, "degree": poly.degree, "coeffs": [str(c) for c in poly.coeffs]}


def poly_from_json_dict(doc: dict) -> tuple[int, IntPoly]:
    k = int(doc["k"])
    poly = IntPoly(int(c) for c in doc["coeffs"])
    if poly.degree != int(doc["degree"]):
        raise ValueError("degree field does not match coefficient list")
    return k, poly


def poly_json_dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def denominator_degree(k: int) -> int:
    return 1 << ((k + 1) // 2)


def initial_precision(ell: int) -> int:
    # Middle coefficients of a degree-2**ell product can reach
    # binomial(2**ell, 2**(ell-1)) * max|a_S|**(2**(ell-1)).
    return 64 + 8 * ell + (1 << ell) // 4


def trig_unit(j: int, m: int, precision: int) -> TrigUnit:
    if not 1 <= j < m:
        raise ValueError(f"need 1 <= j < m, got j={j}, m={m}")
    if precision < 64:
        raise ValueError("precision below 64 bits")
    cos_ball = Ball.cos_pi_frac(j, m, precision)
    one = Ball.exact_int(1, precision)
    s = (one + cos_ball.square()).sqrt()
    return TrigUnit(j, m, c=cos_ball + s, cbar=cos_ball - s, d=(one + cos_ball.square()).mul_int(4))


def _units_for(k: int, precision: int) -> list[TrigUnit]:
    return [trig_unit(j, k + 1, precision) for j in range(1, k // 2 + 1)]


def subset_product(k: int, subset: frozenset[int] | set[int], precision: int) -> SubsetProduct:
    ell = k // 2
    subset = frozenset(subset)
    if not subset <= set(range(1, ell + 1)):
        raise ValueError(f"subset {sorted(subset)} not within 1..{ell}")
    units = _units_for(k, precision)
    b = Ball.exact_int(1, precision)
    a = Ball.exact_int(1, precision)
    for u in units:
        if u.j in subset:
            b = b * u.c
            a = a * u.c
        else:
            a = a * u.cbar
    return SubsetProduct(k, subset, b, a)


def _all_subset_factors(units: Sequence[TrigUnit], precision: int) -> list[Ball]:
    """a_S for every subset; index bit j-1 set means j is in S."""
    prods = [Ball.exact_int(1, precision)]
    for u in units:
        prods = [p * u.cbar for p in prods] + [p * u.c for p in prods]
    return prods


def _ball_poly_mul(f: list[Ball], g: list[Ball], prec: int) -> list[Ball]:
    out = [Ball.exact_int(0, prec) for _ in range(len(f) + len(g) - 1)]
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return out


def _product_tree(factors: list[list[Ball]], prec: int) -> list[Ball]:
    layer = factors
    while len(layer) > 1:
        nxt = []
        for i in range(0, len(layer) - 1, 2):
            nxt.append(_ball_poly_mul(layer[i], layer[i + 1], prec))
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def recurrence_check(q: IntPoly, k: int, window: int = RECURRENCE_WINDOW) -> bool:
    """True iff q's coefficients annihilate the exact tiling series on the
    window deg(q) <= n < deg(q) + window."""
    deg = denominator_degree(k)
    if q.degree != deg:
        raise ValueError(f"polynomial degree {q.degree}, expected {deg} for k={k}")
    terms = tiling_series(k, deg + window).terms
    cs = q.coeffs
    nonzero = [(i, c) for i, c in enumerate(cs) if c]
    for n in range(deg, deg + window):
        if sum(c * terms[n - i] for i, c in nonzero) != 0:
            return False
    return True


_build_cache: dict[int, CertifiedPoly] = {}


def build_qk(
    k: int,
    schedule: PrecisionSchedule | None = None,
    degree_cap: int = DEGREE_CAP,
    window: int = RECURRENCE_WINDOW,
) -> CertifiedPoly:
    """Certified exact denominator polynomial for width k."""
    if k < 1:
        raise ValueError(f"width must be positive, got {k}")
    degree = denominator_degree(k)
    if degree > degree_cap:
        raise ResourceLimitError(
            f"degree {degree} exceeds the cap {degree_cap}; use the criterion path for large k"
        )
    default = schedule is None
    if default:
        cached = _build_cache.get(k)
        if cached is not None and cached.poly.degree == degree:
            return cached
        schedule = PrecisionSchedule()
    ell = k // 2
    for prec in schedule.sequence(initial_precision(ell)):
        units = _units_for(k, prec)
        one = Ball.exact_int(1, prec)
        factors_a = _all_subset_factors(units, prec)
        if k % 2 == 0:
            factors = [[one, -a] for a in factors_a]
        else:
            # Quadratic factors (1 - a**2 x**2) expanded in y = x**2; odd
            # coefficients are zero by construction.
            factors = [[one, -a.square()] for a in factors_a]
        coeff_balls = _product_tree(factors, prec)
        if not all(b.radius_below(1, 4) for b in coeff_balls):
            continue
        ints = [b.round_nearest_int() for b in coeff_balls]
        if k % 2 == 1:
            expanded = []
            for c in ints:
                expanded.extend((c, 0))
            ints = expanded[:-1]
        poly = IntPoly(ints)
        if poly.degree != degree or poly[0] != 1 or abs(poly.leading) != 1:
            continue
        if not recurrence_check(poly, k, window):
            continue
        result = CertifiedPoly(k, poly, prec, True)
        if default:
            _build_cache[k] = result
        return result
    raise CertificationError(f"could not certify the k={k} denominator within the precision schedule")
