"""Tight feasibility thresholds, row selection and the minimal triangle count.

A triangle of side ``n + d`` needs ``n**2 + 2p`` unit triangles exactly when
``d <= p/(n+1)`` is the first even threshold it clears, and ``n**2 + 2p + 1``
when ``d <= p/n`` is the first odd one.  All arithmetic is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Method, Q


class ThresholdExceeded(ValueError):
    """A construction was asked to cover a target beyond its proven reach."""

    def __init__(self, method: Method, n: int, d: Fraction, bound: Fraction):
        self.method = Method(method)
        self.n = n
        self.d = d
        self.bound = bound
        super().__init__(f"{self.method.value}: d={d} exceeds threshold {bound} for n={n}")


def _check_d(d) -> Fraction:
    d = Q(d)
    if not 0 < d < 1:
        raise ValueError(f"d must satisfy 0 < d < 1, got {d}")
    return d


def even_slide(j: int, k: int) -> Fraction:
    """Up-left slide for row ``k`` when extra pairs start on row ``j``: j / (k(k+1))."""
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    return Fraction(j, k * (k + 1))


def odd_slide(j: int, k: int) -> Fraction:
    """Down-right slide for row ``k`` when sliding starts on row ``j``: (j-1) / (k(k-1))."""
    if not 2 <= j <= k:
        raise ValueError(f"need 2 <= j <= k, got j={j}, k={k}")
    return Fraction(j - 1, k * (k - 1))


def threshold_even(n: int, p: int) -> Fraction:
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    return Fraction(p, n + 1)


def threshold_odd(n: int, p: int) -> Fraction:
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < n, got p={p}, n={n}")
    return Fraction(p, n)


def select_j_even(n: int, d) -> int:
    """floor((1 - d)(n + 1)); 0 means the even family must fall back to naive."""
    d = _check_d(d)
    return math.floor((1 - d) * (n + 1))


def select_j_odd(n: int, d) -> int:
    """ceil(d*n + 1); n + 1 means the odd family must fall back to naive."""
    d = _check_d(d)
    return math.ceil(d * n + 1)


def p_even(n: int, d) -> int:
    return n - select_j_even(n, d) + 1


def p_odd(n: int, d) -> int:
    return select_j_odd(n, d) - 1


def k_min(n: int, d) -> tuple[int, Method]:
    """Fewest unit triangles that cover T_{n+d}, and the family that achieves it.

    The odd family is taken only when it needs strictly fewer pairs; on a tie
    the even family wins because ``2p < 2p + 1``.  Either selector's reversion
    sentinel resolves to the naive ``(n+1)**2`` covering.
    """
    pe, po = p_even(n, d), p_odd(n, d)
    if po < pe:
        if po == n:
            return n * n + 2 * n + 1, Method.NAIVE
        return n * n + 2 * po + 1, Method.ODD_FULL
    # pe <= po <= n here, so the even selector never reverted
    return n * n + 2 * pe, Method.EVEN_FULL


def reference_thresholds_intermediate(n: int, p: int) -> tuple[Fraction, Fraction]:
    """Reach of the two weaker odd variants (three extras on the last row / on row j)."""
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < n, got p={p}, n={n}")
    last_row = Fraction(p, n) - Fraction(p - 1, n * n)
    row_j = Fraction(p, n + 1) + Fraction(1, (n + 1) * (n - p + 1))
    return last_row, row_j


def infeasibility_delta(n: int, d, p: int, parity: str) -> Fraction:
    """(n+1)d - p for even counts, nd - p for odd; positive means infeasible."""
    d = Q(d)
    if p < 1:
        raise ValueError("p must be >= 1")
    if parity == "even":
        return (n + 1) * d - p
    if parity == "odd":
        return n * d - p
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class BoundsRecord:
    n: int
    p: int
    threshold_even: Fraction
    threshold_odd: Fraction | None
    delta_even: Fraction | None = None
    delta_odd: Fraction | None = None


def bounds_table(n: int, d=None) -> list[BoundsRecord]:
    """Per-p thresholds for fixed n; deltas are filled in when ``d`` is given."""
    rows = []
    for p in range(1, n + 1):
        odd = threshold_odd(n, p) if p < n else None
        rows.append(
            BoundsRecord(
                n=n,
                p=p,
                threshold_even=threshold_even(n, p),
                threshold_odd=odd,
                delta_even=None if d is None else infeasibility_delta(n, d, p, "even"),
                delta_odd=None if d is None or odd is None else infeasibility_delta(n, d, p, "odd"),
            )
        )
    return rows


def step_points(n: int) -> list[Fraction]:
    """Every d in (0, 1) at which the minimal count jumps, in increasing order."""
    pts = {threshold_even(n, p) for p in range(1, n + 1)}
    pts |= {threshold_odd(n, p) for p in range(1, n)}
    return sorted(pts)
