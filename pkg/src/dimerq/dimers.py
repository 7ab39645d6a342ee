"""Exact domino-tiling counts of k x n rectangles.

The production path is a broken-profile dynamic program: cells are processed
one short-dimension slice at a time, and the state is a bitmask of cells
already covered by dominoes protruding from the previous slice.  Memory stays
at O(2**k) big integers.  ``brute_force_count`` is a deliberately independent
oracle that enumerates complete tilings by backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError

MAX_WIDTH = 32
MAX_BRUTE_CELLS = 64


@dataclass(frozen=True)
class TilingCount:
    k: int
    n: int
    count: int


@dataclass(frozen=True)
class TilingSeries:
    k: int
    terms: tuple[int, ...]


def _validate(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"width must be positive, got {k}")
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if k > MAX_WIDTH:
        raise ResourceLimitError(f"width {k} exceeds the supported maximum {MAX_WIDTH}")


def _advance_column(dp: list[int], width: int) -> list[int]:
    """One slice of the broken-profile DP.

    ``dp`` is indexed by the incoming protrusion mask.  Within the slice the
    mask mixes decided bits (below the current row: outgoing protrusions) with
    undecided ones (the remaining incoming bits); a side flag tracks a
    vertical domino covering the current row from the row below.
    """
    size = 1 << width
    v0 = dp
    v1 = [0] * size
    for r in range(width):
        bit = 1 << r
        bit2 = bit << 1
        n0 = [0] * size
        n1 = [0] * size
        for mask in range(size):
            x = v0[mask]
            if x:
                if mask & bit:
                    n0[mask & ~bit] += x
                else:
                    n0[mask | bit] += x
                    if r + 1 < width and not mask & bit2:
                        n1[mask] += x
            y = v1[mask]
            if y:
                n0[mask] += y
        v0, v1 = n0, n1
    return v0


class _SeriesSweep:
    """Resumable DP sweep for one width; extends on demand."""

    def __init__(self, width: int):
        self.width = width
        self.dp = [0] * (1 << width)
        self.dp[0] = 1
        self.terms: list[int] = [1]

    def extend(self, n_terms: int) -> None:
        while len(self.terms) < n_terms:
            self.dp = _advance_column(self.dp, self.width)
            self.terms.append(self.dp[0])


_sweeps: dict[int, _SeriesSweep] = {}


def _series_terms(width: int, n_terms: int) -> list[int]:
    sweep = _sweeps.get(width)
    if sweep is None:
        sweep = _sweeps[width] = _SeriesSweep(width)
    sweep.extend(n_terms)
    return sweep.terms[:n_terms]


def count_tilings(k: int, n: int) -> int:
    """Exact number of domino tilings of a k x n rectangle."""
    _validate(k, n)
    if n == 0:
        return 1
    w, length = min(k, n), max(k, n)
    return _series_terms(w, length + 1)[length]


def tiling_series(k: int, n_terms: int) -> TilingSeries:
    """Tiling counts of k x 0, k x 1, ..., k x (n_terms - 1)."""
    _validate(k, max(n_terms - 1, 0))
    if n_terms < 1:
        raise ValueError("need at least one term")
    return TilingSeries(k, tuple(_series_terms(k, n_terms)))


def brute_force_count(k: int, n: int) -> int:
    """Test oracle: count tilings by backtracking over cells in row-major
    order, trying a horizontal then a vertical domino at the first empty
    cell.  Guarded to small boards."""
    if k < 1:
        raise ValueError(f"width must be positive, got {k}")
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if k * n > MAX_BRUTE_CELLS:
        raise ResourceLimitError(f"{k}x{n} board exceeds {MAX_BRUTE_CELLS} cells")
    if n == 0:
        return 1
    full = (1 << (k * n)) - 1

    def go(occ: int) -> int:
        if occ == full:
            return 1
        free = ~occ & full
        lsb = free & -free
        pos = lsb.bit_length() - 1
        r, c = divmod(pos, n)
        total = 0
        if c + 1 < n and not occ >> (pos + 1) & 1:
            total += go(occ | (3 << pos))
        if r + 1 < k:
            total += go(occ | lsb | (lsb << n))
        return total

    return go(0)
