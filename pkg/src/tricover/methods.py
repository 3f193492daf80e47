"""Covering constructions, all built from horizontal rows of unit triangles.

Stacked constructions hang from the apex (0, L) of the target and keep every
row's leftmost up-triangle on the vertical leg x = 0.  Rows may spill past
the target on the left, on the right, or below y = 0; only containment of the
target matters.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import bounds
from .bounds import ThresholdExceeded, _check_d
from .geometry import CoveringPlan, Method, Placement, Q


class SlideKind(str, enum.Enum):
    NONE = "none"
    UP_LEFT = "up_left"
    DOWN_RIGHT = "down_right"


@dataclass(frozen=True)
class RowSpec:
    """One alternating up/down strip; ``up_count`` ups and one fewer downs."""

    index: int
    up_count: int
    slide: Fraction = Fraction(0)
    slide_kind: SlideKind = SlideKind.NONE
    base_y: Fraction = Fraction(0)
    left_x: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("slide", "base_y", "left_x"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        object.__setattr__(self, "slide_kind", SlideKind(self.slide_kind))
        if self.index < 1 or self.up_count < 1:
            raise ValueError("row index and up_count must be >= 1")
        if self.slide < 0:
            raise ValueError("slide must be non-negative")
        if self.slide_kind is SlideKind.NONE and self.slide != 0:
            raise ValueError("an unslid row must have slide 0")

    @property
    def down_count(self) -> int:
        return self.up_count - 1

    @property
    def base_width(self) -> Fraction:
        m, s = self.up_count, self.slide
        if self.slide_kind is SlideKind.DOWN_RIGHT:
            return m + (m - 1) * s
        return m - (m - 1) * s


def build_row(spec: RowSpec) -> list[Placement]:
    """Placements of one row, in left-to-right order (up, down, up, ...).

    An up-left slide moves each down-triangle by ``s`` along its left
    neighbour's hypotenuse, direction (-1, +1), and shifts every later triangle
    left by ``s``.  A down-right slide moves each down-triangle by ``s`` along
    (+1, -1) and pushes every later triangle right by ``s``.
    """
    s, m, yb, x0 = spec.slide, spec.up_count, spec.base_y, spec.left_x
    if s >= 1:
        raise ValueError(f"slide must be < 1, got {s}")
    kind = spec.slide_kind
    if kind is SlideKind.UP_LEFT:
        step, down_dx, down_y = 1 - s, -s, yb + 1 + s
    elif kind is SlideKind.DOWN_RIGHT:
        step, down_dx, down_y = 1 + s, s, yb + 1 - s
    else:
        step, down_dx, down_y = Fraction(1), Fraction(0), yb + 1

    row = []
    for i in range(m):
        x = x0 + i * step
        row.append(Placement.up(x, yb))
        if i < m - 1:
            row.append(Placement.down(x + down_dx, down_y))
    return row


def _grid_rows(size: int, apex_y: Fraction) -> list[Placement]:
    """A T_size grid hanging from (0, apex_y); row k has its base at apex_y - k."""
    out: list[Placement] = []
    for k in range(1, size + 1):
        out += build_row(RowSpec(k, k, base_y=apex_y - k))
    return out


def _check_n(n: int, least: int = 1):
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def grid_cover(n: int) -> CoveringPlan:
    """The standard n**2 covering of T_n."""
    _check_n(n)
    return CoveringPlan(_grid_rows(n, Fraction(n)), n, Fraction(0), Method.GRID)


def naive_cover(n: int, d) -> CoveringPlan:
    """A T_{n+1} grid hung from the apex of T_{n+d}; always covers."""
    _check_n(n)
    d = _check_d(d)
    return CoveringPlan(_grid_rows(n + 1, n + d), n, d, Method.NAIVE)


def _cs1_family(n: int, d: Fraction, extra_pairs: int, method: Method, j=None) -> CoveringPlan:
    L = n + d
    placements = _grid_rows(n - 1, L)
    # bottom row: the top of its trapezoid (height 1 + d) meets the grid at L - (n - 1)
    placements += build_row(
        RowSpec(n, n + extra_pairs, d, SlideKind.UP_LEFT, base_y=L - n - d)
    )
    return CoveringPlan(placements, n, d, method, j)


def cs1_cover(n: int, d, force: bool = False) -> CoveringPlan:
    """n**2 + 2: one extra pair in the bottom row, up-left slide of d."""
    _check_n(n)
    d = _check_d(d)
    bound = Fraction(1, n + 1)
    if d > bound and not force:
        raise ThresholdExceeded(Method.CS1, n, d, bound)
    return _cs1_family(n, d, 1, Method.CS1)


def cs1_generalized_q(n: int, d) -> int:
    """Fewest extra bottom-row pairs q with d <= q/(n+q); n + 1 signals naive."""
    d = _check_d(d)
    # d <= q/(n+q)  <=>  q >= d*n/(1-d)
    return max(1, math.ceil(d * n / (1 - d)))


def cs1_generalized_cover(n: int, d) -> CoveringPlan:
    """n**2 + 2q with q extra pairs in the bottom row; naive once q would pass n."""
    _check_n(n)
    d = _check_d(d)
    q = cs1_generalized_q(n, d)
    if q > n:
        return naive_cover(n, d)
    return _cs1_family(n, d, q, Method.CS1_GEN)


def even_threshold(n: int, j: int) -> Fraction:
    return 1 - Fraction(j, n + 1)


def even_cover(n: int, d, j: int, force: bool = False, *, method: Method = Method.EVEN_BASIC) -> CoveringPlan:
    """Extra pairs on rows j..n, row k slid up-left by j/(k(k+1)).

    Rows 1..j-1 are a plain T_{j-1}.  Row k's trapezoid has height 1 + s_k and
    its base ends exactly on the target's hypotenuse, so the rows stack into a
    T_{n + S} with S the summed slides, which telescopes to 1 - j/(n+1).
    """
    _check_n(n)
    d = _check_d(d)
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    bound = even_threshold(n, j)
    if d > bound and not force:
        raise ThresholdExceeded(method, n, d, bound)

    L = n + d
    placements = _grid_rows(j - 1, L)
    reach = Fraction(0)
    for k in range(j, n + 1):
        s = bounds.even_slide(j, k)
        reach += s
        placements += build_row(RowSpec(k, k + 1, s, SlideKind.UP_LEFT, base_y=L - k - reach))
    return CoveringPlan(placements, n, d, method, j)


def even_cover_auto(n: int, d) -> CoveringPlan:
    _check_n(n)
    j = bounds.select_j_even(n, d)
    if j == 0:
        return naive_cover(n, d)
    return even_cover(n, d, j, method=Method.EVEN_FULL)


def bl3_cover(n: int, d, force: bool = False) -> CoveringPlan:
    """n**2 + 3: bottom row slid up-left by 1/n, closed by an unslid T_2 block.

    The first n up-triangles overlap by 1/n; after them a down, an up and the
    T_2's top up sit unslid.  A T_{n-1} grid rests on the slid downs' tops.
    """
    _check_n(n, 2)
    d = _check_d(d)
    bound = Fraction(1, n)
    if d > bound and not force:
        raise ThresholdExceeded(Method.BL3, n, d, bound)

    L = n + d
    s = Fraction(1, n)
    yb = L - n - s
    placements = _grid_rows(n - 1, L)
    placements += build_row(RowSpec(n, n, s, SlideKind.UP_LEFT, base_y=yb))
    x_last = (n - 1) * (1 - s)
    placements += [
        Placement.down(x_last, yb + 1),
        Placement.up(x_last + 1, yb),
        Placement.up(x_last, yb + 1),
    ]
    return CoveringPlan(placements, n, d, Method.BL3)


def odd_threshold(n: int, j: int) -> Fraction:
    return Fraction(j - 1, n)


def odd_cover(n: int, d, j: int, force: bool = False, *, method: Method = Method.ODD_BASIC) -> CoveringPlan:
    """Rows 1..j-1 form a T_j grid; rows j..n are slid down-right by (j-1)/(k(k-1)).

    A down-right slide keeps the row solid over a band of height 1 - s_k while
    widening its base to k + (j-1)/k, which lands exactly on the hypotenuse.
    """
    _check_n(n)
    d = _check_d(d)
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got j={j}, n={n}")
    bound = odd_threshold(n, j)
    if d > bound and not force:
        raise ThresholdExceeded(method, n, d, bound)

    L = n + d
    placements = _grid_rows(j, L)
    y = L - j
    for k in range(j, n + 1):
        s = bounds.odd_slide(j, k)
        y -= 1 - s
        placements += build_row(RowSpec(k, k, s, SlideKind.DOWN_RIGHT, base_y=y))
    return CoveringPlan(placements, n, d, method, j)


def odd_cover_auto(n: int, d) -> CoveringPlan:
    _check_n(n)
    j = bounds.select_j_odd(n, d)
    if j == n + 1:
        return naive_cover(n, d)
    return odd_cover(n, d, j, method=Method.ODD_FULL)


def consolidated_cover(n: int, d) -> CoveringPlan:
    """Whichever of the even and odd families uses fewer triangles.

    The returned plan keeps the tag of the family that built it.
    """
    _check_n(n)
    if bounds.p_odd(n, d) < bounds.p_even(n, d):
        return odd_cover_auto(n, d)
    return even_cover_auto(n, d)


def plan_threshold(plan: CoveringPlan) -> Fraction:
    """Largest d the plan's construction (with its n and j) is proven to reach."""
    n, m = plan.n, plan.method
    if m is Method.GRID:
        return Fraction(0)
    if m is Method.NAIVE:
        return Fraction(1)
    if m is Method.CS1:
        return Fraction(1, n + 1)
    if m is Method.CS1_GEN:
        q = (len(plan) - n * n) // 2
        return Fraction(q, n + q)
    if m is Method.BL3:
        return Fraction(1, n)
    if m in (Method.EVEN_BASIC, Method.EVEN_FULL):
        return even_threshold(n, plan.j)
    if m in (Method.ODD_BASIC, Method.ODD_FULL):
        return odd_threshold(n, plan.j)
    raise ValueError(f"no threshold for method {m.value}")
