"""Multiplicative relations among the trigonometric units.

A relation candidate for width k is a pair of disjoint subsets S, T of
{1..floor(k/2)} with prod(c_j, j in S) provably equal (or not) to
prod(c_j, j in T).  The scan enumerates sign vectors in {-1, 0, +1}**ell by
meet-in-the-middle over the log c_j values; certification is exact:

* inequality is certified by a zero-excluding ball for b_S - b_T;
* equality is certified by the norm product over all sign conjugates
  (computed exactly in a radical tower over Q(zeta_{2(k+1)}), where it
  collapses to a pure cyclotomic element) being zero, together with ball
  separation of the non-identity conjugates — the vanishing factor must
  then be the identity one.  One wrinkle: because cbar_j = -1/c_j, the
  all-flipped conjugate equals (-1)**|S| (1/b_S - (-1)**(|T|-|S|)/b_T), so
  when |S| and |T| share parity it vanishes exactly iff the identity
  conjugate does; it is therefore exempt from the separation requirement
  in that case, which keeps the rule sound in both directions.

Equality is never decided by normal-form comparison in the tower: the tower
presentation has zero divisors exactly when a genuine identity holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .ball import Ball
from .cyclotomic import CyclotomicElement, RadicalTower, Support
from .denominator import PrecisionSchedule, trig_unit
from .errors import InternalInvariantError, ResourceLimitError

STATUS_EQUAL = "certified_equal"
STATUS_UNEQUAL = "certified_unequal"
STATUS_UNDECIDED = "undecided"

MAX_SCAN_HALF_WIDTH = 25  # floor(k/2) <= 25, i.e. k <= 51
MAX_NORM_RADICALS = 12
DEFAULT_SCAN_THRESHOLD = 1e-9
RESCREEN_BITS = 256
_STREAM_BASE_TRITS = 9  # stream the larger half in blocks of 3**9 sums

_CERTIFY_SCHEDULE = PrecisionSchedule(initial=128, max_bits=1 << 14)


@dataclass(frozen=True)
class NormCertificate:
    modulus: int
    norm_is_zero: bool
    conjugates_checked: int
    precision_bits: int


@dataclass(frozen=True)
class Relation:
    k: int
    S: frozenset[int]
    T: frozenset[int]
    status: str
    gap: Ball | None
    certificate: NormCertificate | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "S": sorted(self.S),
            "T": sorted(self.T),
            "status": self.status,
            "gap_log10": None if self.gap is None else self.gap.magnitude_log10(),
            "certificate_present": self.certificate is not None,
        }


def _validate_subsets(k: int, S: Iterable[int], T: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    ell = k // 2
    S, T = frozenset(S), frozenset(T)
    universe = set(range(1, ell + 1))
    if not S <= universe or not T <= universe:
        raise ValueError(f"subsets must lie within 1..{ell}")
    return S, T


def _log_c_floats(k: int) -> dict[int, float]:
    m = k + 1
    out = {}
    for j in range(1, k // 2 + 1):
        c = math.cos(j * math.pi / m)
        out[j] = math.log(c + math.sqrt(1 + c * c))
    return out


def _trit_signs(index: int, count: int) -> list[int]:
    signs = []
    for _ in range(count):
        index, t = divmod(index, 3)
        signs.append(0 if t == 0 else 1 if t == 1 else -1)
    return signs


def _signed_sums(values: Sequence[float]) -> np.ndarray:
    sums = np.zeros(1)
    for v in values:
        sums = np.concatenate([sums, sums + v, sums - v])
    return sums


def _log_gap_ball(k: int, S: frozenset[int], T: frozenset[int], prec: int) -> Ball:
    logs = {j: trig_unit(j, k + 1, prec).c.log() for j in S | T}
    gap = Ball.exact_int(0, prec)
    for j in S:
        gap = gap + logs[j]
    for j in T:
        gap = gap - logs[j]
    return gap


def scan_relations(k: int, threshold: float = DEFAULT_SCAN_THRESHOLD) -> list[Relation]:
    """All sign vectors in {-1, 0, +1}**ell whose signed sum of log c_j is
    provably possibly below ``threshold``, as undecided relation candidates.

    Meet-in-the-middle: the smaller index half is fully enumerated and
    sorted; the larger half is streamed against it in blocks.  Float hits are
    re-screened with 256-bit balls before being returned.
    """
    if k < 1:
        raise ValueError(f"width must be positive, got {k}")
    ell = k // 2
    if ell > MAX_SCAN_HALF_WIDTH:
        raise ResourceLimitError(f"scan supports floor(k/2) <= {MAX_SCAN_HALF_WIDTH}, got {ell}")
    if ell == 0:
        return []
    logs = _log_c_floats(k)
    indices = list(range(1, ell + 1))
    half_a = indices[: ell // 2]  # smaller half, fully materialized
    half_b = indices[ell // 2 :]
    widened = threshold + 1e-12 * (ell + 1)

    a_vals = _signed_sums([logs[j] for j in half_a])
    order = np.argsort(a_vals, kind="stable")
    a_sorted = a_vals[order]

    base = half_b[:_STREAM_BASE_TRITS]
    prefix = half_b[_STREAM_BASE_TRITS:]
    base_sums = _signed_sums([logs[j] for j in base])

    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    candidates: list[tuple[frozenset[int], frozenset[int]]] = []
    for pidx in range(3 ** len(prefix)):
        p_signs = _trit_signs(pidx, len(prefix))
        block = base_sums + sum(s * logs[j] for s, j in zip(p_signs, prefix))
        lo = np.searchsorted(a_sorted, -block - widened, side="left")
        hi = np.searchsorted(a_sorted, -block + widened, side="right")
        for bidx in np.nonzero(hi > lo)[0]:
            b_signs = _trit_signs(int(bidx), len(base))
            for pos in range(lo[bidx], hi[bidx]):
                a_signs = _trit_signs(int(order[pos]), len(half_a))
                eps = dict(zip(half_a, a_signs))
                eps.update(zip(base, b_signs))
                eps.update(zip(prefix, p_signs))
                S = frozenset(j for j, s in eps.items() if s == 1)
                T = frozenset(j for j, s in eps.items() if s == -1)
                if not S and not T:
                    continue
                if T and (not S or min(T) < min(S)):
                    S, T = T, S
                key = (tuple(sorted(S)), tuple(sorted(T)))
                if key not in seen:
                    seen.add(key)
                    candidates.append((S, T))

    thr = Fraction(threshold)
    out = []
    for S, T in sorted(candidates, key=lambda st: (len(st[0] | st[1]), sorted(st[0] | st[1]), sorted(st[0]))):
        gap = _log_gap_ball(k, S, T, RESCREEN_BITS)
        low_bound = abs(gap.midpoint_fraction()) - gap.radius_fraction()
        if low_bound >= thr:
            continue  # float artifact: |gap| provably at or above threshold
        out.append(Relation(k, S, T, STATUS_UNDECIDED, gap, None))
    return out


def relation_norm(k: int, S: Iterable[int], T: Iterable[int]) -> CyclotomicElement:
    """The exact product of b_S**sigma - b_T**sigma over all sign conjugates
    sigma, eliminated radical by radical down to Q(zeta_{2(k+1)})."""
    S, T = _validate_subsets(k, S, T)
    union = S | T
    if len(union) > MAX_NORM_RADICALS:
        raise ResourceLimitError(f"norm supports at most {MAX_NORM_RADICALS} radicals, got {len(union)}")
    modulus = 2 * (k + 1)
    one = CyclotomicElement.one(modulus)
    cosines = {j: CyclotomicElement.half_cos(modulus, j) for j in union}
    radicands = {j: one + cosines[j] * cosines[j] for j in union}
    tower = RadicalTower(modulus, radicands)

    def product_over(subset: frozenset[int]):
        acc = tower.one()
        for j in sorted(subset):
            factor = tower.scalar(cosines[j]).add(tower.radical(j))
            acc = acc.mul(factor)
        return acc

    element = product_over(S).sub(product_over(T))
    for j in sorted(union):
        element = element.eliminate(j)
    if element.support:
        raise InternalInvariantError("radical components failed to vanish in the norm product")
    return element.component(Support())


def _conjugate_differences(k: int, S: frozenset[int], T: frozenset[int], prec: int) -> list[Ball]:
    """Balls for b_S**sigma - b_T**sigma, identity sign pattern first."""
    units = {j: trig_unit(j, k + 1, prec) for j in S | T}
    one = Ball.exact_int(1, prec)
    pairs = [(one, one)]
    for j in sorted(S | T):
        plus, minus = units[j].c, units[j].cbar
        nxt = []
        for ps, pt in pairs:
            if j in S:
                nxt.append((ps * plus, pt))
            else:
                nxt.append((ps, pt * plus))
        for ps, pt in pairs:
            if j in S:
                nxt.append((ps * minus, pt))
            else:
                nxt.append((ps, pt * minus))
        pairs = nxt
    return [ps - pt for ps, pt in pairs]


def certify_relation(
    k: int,
    S: Iterable[int],
    T: Iterable[int],
    schedule: PrecisionSchedule | None = None,
) -> Relation:
    """Decide b_S = b_T with an exact certificate, or return undecided."""
    S, T = _validate_subsets(k, S, T)
    if S & T:
        raise ValueError("subsets must be disjoint")
    if S == T:
        raise ValueError("subsets must be distinct")
    if schedule is None:
        schedule = _CERTIFY_SCHEDULE
    n_radicals = len(S | T)
    norm: CyclotomicElement | None = None
    norm_known = False
    for prec in schedule.sequence(128):
        units = {j: trig_unit(j, k + 1, prec) for j in S | T}
        b_s = Ball.exact_int(1, prec)
        b_t = Ball.exact_int(1, prec)
        for j in S:
            b_s = b_s * units[j].c
        for j in T:
            b_t = b_t * units[j].c
        diff = b_s - b_t
        gap = b_s.log() - b_t.log()
        if diff.excludes_zero:
            certificate = None
            if norm_known and norm is not None and not norm.is_zero:
                certificate = NormCertificate(2 * (k + 1), False, 0, prec)
            return Relation(k, S, T, STATUS_UNEQUAL, gap, certificate)
        if not norm_known:
            if n_radicals <= MAX_NORM_RADICALS:
                norm = relation_norm(k, S, T)
            norm_known = True
        if norm is not None and norm.is_zero:
            conjugates = _conjugate_differences(k, S, T, prec)
            # conjugates[0] is the identity pattern; conjugates[-1] is the
            # all-flipped one, which vanishes iff the identity does whenever
            # |S| and |T| share parity and so cannot be separated then.
            mirror_tied = (len(S) - len(T)) % 2 == 0
            to_separate = conjugates[1:-1] if mirror_tied else conjugates[1:]
            if all(d.excludes_zero for d in to_separate):
                # The exact norm vanishes, so some conjugate difference is
                # exactly zero; every conjugate not tied to the identity is
                # separated from zero, so the vanishing one forces b_S = b_T.
                certificate = NormCertificate(2 * (k + 1), True, len(to_separate), prec)
                return Relation(k, S, T, STATUS_EQUAL, gap, certificate)
    return Relation(k, S, T, STATUS_UNDECIDED, gap, None)


def classify(k: int, S: Iterable[int], T: Iterable[int]) -> bool:
    """Whether a certified relation b_S = b_T forces repeated denominator
    roots at width k: always for odd k, and for even k exactly when |S| and
    |T| have the same parity."""
    S, T = _validate_subsets(k, S, T)
    if k % 2 == 1:
        return True
    return (len(S) - len(T)) % 2 == 0


def _proper_subpairs(S: frozenset[int], T: frozenset[int]):
    s_sorted, t_sorted = sorted(S), sorted(T)
    for s_bits in range(1 << len(s_sorted)):
        sub_s = frozenset(s_sorted[i] for i in range(len(s_sorted)) if s_bits >> i & 1)
        for t_bits in range(1 << len(t_sorted)):
            sub_t = frozenset(t_sorted[i] for i in range(len(t_sorted)) if t_bits >> i & 1)
            size = len(sub_s) + len(sub_t)
            if 0 < size < len(S) + len(T):
                yield sub_s, sub_t


def primitive_filter(k: int, relations: Sequence[Relation]) -> list[Relation]:
    """Keep the relations with no proper nonempty certified sub-relation."""
    for rel in relations:
        if rel.status != STATUS_EQUAL:
            raise ValueError("primitive_filter expects certified-equal relations")
    out = []
    for rel in relations:
        primitive = True
        for sub_s, sub_t in _proper_subpairs(rel.S, rel.T):
            if certify_relation(k, sub_s, sub_t).status == STATUS_EQUAL:
                primitive = False
                break
        if primitive:
            out.append(rel)
    return out
