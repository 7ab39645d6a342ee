"""Repeated-root verdicts and the reduced generating-function fraction.

Two independent verdict paths are provided.  The exact path expands the
denominator and inspects gcd(Q, Q').  The criterion path never expands: for
odd k the denominator has repeated roots iff two distinct subset products
collide, and for even k iff additionally the subset sizes share parity; so a
certified unit relation (or a certified absence of one) decides the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .denominator import CertifiedPoly, PrecisionSchedule, build_qk
from .dimers import tiling_series
from .errors import InternalInvariantError
from .identities import (
    STATUS_EQUAL,
    STATUS_UNDECIDED,
    Relation,
    certify_relation,
    classify,
    scan_relations,
)
from .polys import IntPoly, poly_gcd, series_mul_truncate

VERDICT_DISTINCT = "distinct"
VERDICT_REPEATED = "repeated"
VERDICT_INCONCLUSIVE = "inconclusive"

DEFAULT_EXTRA_TERMS = 50


@dataclass(frozen=True)
class RepeatedRootReport:
    k: int
    verdict: str
    method: str  # "exact_gcd" or "criterion"
    witness: IntPoly | Relation | None


@dataclass(frozen=True)
class ReducedFraction:
    k: int
    P: IntPoly
    Q: IntPoly
    common: IntPoly
    min_order: int


def repeated_roots_exact(k: int, schedule: PrecisionSchedule | None = None) -> RepeatedRootReport:
    """Verdict from the exact polynomial: repeated iff gcd(Q, Q') is nontrivial."""
    q = build_qk(k, schedule).poly
    g = poly_gcd(q, q.derivative())
    if g.degree > 0:
        return RepeatedRootReport(k, VERDICT_REPEATED, "exact_gcd", g)
    return RepeatedRootReport(k, VERDICT_DISTINCT, "exact_gcd", None)


def repeated_roots_criterion(
    k: int,
    threshold: float | None = None,
    schedule: PrecisionSchedule | None = None,
) -> RepeatedRootReport:
    """Verdict via certified unit relations; no degree cap.

    An uncertified near-collision yields an inconclusive verdict rather than
    a claim in either direction.
    """
    candidates = scan_relations(k) if threshold is None else scan_relations(k, threshold)
    undecided = False
    witness: Relation | None = None
    for cand in candidates:
        rel = certify_relation(k, cand.S, cand.T, schedule)
        if rel.status == STATUS_EQUAL and classify(k, rel.S, rel.T):
            witness = rel
            break
        if rel.status == STATUS_UNDECIDED:
            undecided = True
    if witness is not None:
        return RepeatedRootReport(k, VERDICT_REPEATED, "criterion", witness)
    if undecided:
        return RepeatedRootReport(k, VERDICT_INCONCLUSIVE, "criterion", None)
    return RepeatedRootReport(k, VERDICT_DISTINCT, "criterion", None)


def compute_pk(
    k: int,
    extra_terms: int = DEFAULT_EXTRA_TERMS,
    schedule: PrecisionSchedule | None = None,
) -> ReducedFraction:
    """Numerator P, common factor gcd(P, Q) and the minimal recurrence order.

    P is the truncation of Q times the exact tiling series; the next
    ``extra_terms`` convolution coefficients are verified to vanish, which
    can only fail if Q itself were wrong.
    """
    if extra_terms < 1:
        raise ValueError("need a positive verification window")
    certified: CertifiedPoly = build_qk(k, schedule)
    q = certified.poly
    deg = q.degree
    series = tiling_series(k, deg + extra_terms)
    conv = series_mul_truncate(q, series.terms, deg + extra_terms)
    if any(conv[deg:]):
        raise InternalInvariantError(
            f"k={k}: convolution tail does not vanish; certified polynomial is inconsistent"
        )
    p = IntPoly(conv[:deg])
    common = poly_gcd(p, q)
    return ReducedFraction(k, p, q, common, deg - common.degree)
