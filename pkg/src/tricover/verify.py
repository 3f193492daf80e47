"""Exact coverage certification and width-function diagnostics.

``verify_coverage`` decides whether the union of a plan's closed unit
triangles contains the target.  Every edge involved is horizontal, vertical
or anti-diagonal (x + y = c), so the x-order of interval endpoints along a
horizontal line can only change at vertex heights or where a vertical edge
meets an anti-diagonal one.  Between two consecutive such levels the order,
and hence the covered/uncovered pattern, is fixed, so checking every level
plus one height strictly inside every slab decides the whole target.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .geometry import (
    CoveringPlan,
    Placement,
    Point2,
    TargetTriangle,
    contains,
)


class CheckMethod(str, enum.Enum):
    EXACT_SLAB = "exact_slab"
    SAMPLING = "sampling"


@dataclass(frozen=True)
class CoverageReport:
    covered: bool
    witness: Point2 | None
    critical_levels: int
    checked_method: CheckMethod

    def __bool__(self):
        return self.covered


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    m = 1
    for v in values:
        m = math.lcm(m, v.denominator)
    return m


def _scaled(plan: Sequence[Placement], target: TargetTriangle, extra: int = 1):
    """Anchors, side length and the unit, all as integers on a common scale."""
    scale = extra * _lcm_denominators(
        [target.side] + [c for p in plan for c in (p.anchor.x, p.anchor.y)]
    )
    tris = [
        (p.is_up, int(p.anchor.x * scale), int(p.anchor.y * scale)) for p in plan
    ]
    return tris, int(target.side * scale), scale


def _union_gap(intervals, lo, hi):
    """Uncovered piece of [lo, hi] as (left, right), or None."""
    ivs = sorted((a, b) for a, b in intervals if b >= lo and a <= hi)
    reach = None  # right end of the covered prefix, which starts at lo
    for a, b in ivs:
        start = lo if reach is None else reach
        if a > start:
            return start, min(a, hi)
        if reach is None or b > reach:
            reach = b
        if reach >= hi:
            return None
    if reach is None:
        return lo, hi
    return reach, hi


def verify_coverage(plan: Union[CoveringPlan, Sequence[Placement]], target: TargetTriangle | None = None) -> CoverageReport:
    """Decide exactly whether ``plan`` covers ``target`` (default: the plan's own)."""
    if target is None:
        target = plan.target
    placements = list(plan)
    # doubling the scale keeps every slab midpoint an integer
    tris, L, unit = _scaled(placements, target, extra=2)

    verticals = [(0, 0, L)]  # (x, y_lo, y_hi)
    diagonals = [(L, 0, L)]  # (x + y, y_lo, y_hi)
    levels = {0, L}
    for up, x, y in tris:
        if up:
            verticals.append((x, y, y + unit))
            diagonals.append((x + y + unit, y, y + unit))
            levels.update((y, y + unit))
        else:
            verticals.append((x + unit, y - unit, y))
            diagonals.append((x + y, y - unit, y))
            levels.update((y - unit, y))
    for a, v_lo, v_hi in verticals:
        for c, g_lo, g_hi in diagonals:
            y = c - a
            if v_lo <= y <= v_hi and g_lo <= y <= g_hi:
                levels.add(y)
    levels = sorted(y for y in levels if 0 <= y <= L)

    probes = []
    for i, y in enumerate(levels):
        probes.append(y)
        if i + 1 < len(levels):
            probes.append((y + levels[i + 1]) // 2)

    # triangles sorted by bottom so each probe only scans the ones that can reach it
    spans = sorted(
        ((y, y + unit, up, x) if up else (y - unit, y, up, x) for up, x, y in tris),
        key=lambda t: t[0],
    )
    for y in probes:
        ivs = []
        for y_lo, y_hi, up, x in spans:
            if y_lo > y:
                break
            if y > y_hi:
                continue
            if up:
                ivs.append((x, x + unit - (y - y_lo)))
            else:
                ivs.append((x + (y_hi - y), x + unit))
        gap = _union_gap(ivs, 0, L - y)
        if gap is not None:
            gx = Fraction(gap[0] + gap[1], 2 * unit)
            witness = Point2(gx, Fraction(y, unit))
            if not _is_witness(witness, placements, target):
                raise AssertionError(f"internal error: bad witness {witness}")
            return CoverageReport(False, witness, len(levels), CheckMethod.EXACT_SLAB)
    return CoverageReport(True, None, len(levels), CheckMethod.EXACT_SLAB)


def _is_witness(q: Point2, placements: Sequence[Placement], target: TargetTriangle) -> bool:
    return target.contains(q) and not any(contains(p, q) for p in placements)


def sample_check(
    plan: Union[CoveringPlan, Sequence[Placement]],
    target: TargetTriangle | None = None,
    seed: int = 0,
    count: int = 10_000,
    resolution: int = 1 << 20,
) -> CoverageReport:
    """Randomized oracle: test ``count`` lattice points spread uniformly over the target.

    Points are (L*a/R, L*b/R) with a + b <= R.  Only a gap found is conclusive.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if target is None:
        target = plan.target
    placements = list(plan)
    tris, _, unit = _scaled(placements, target)
    # a point's scaled coordinates are L*unit*a/R; multiply everything by R to stay integral
    R = resolution
    side = int(target.side * unit)
    U = unit * R
    tris = [(up, x * R, y * R) for up, x, y in tris]
    rng = random.Random(seed)
    for _ in range(count):
        a, b = rng.randint(0, R), rng.randint(0, R)
        if a + b > R:
            a, b = R - a, R - b
        qx, qy = side * a, side * b
        for up, x, y in tris:
            if up:
                if qx >= x and qy >= y and qx + qy <= x + y + U:
                    break
            elif qy <= y and qx <= x + U and qx + qy >= x + y:
                break
        else:
            w = Point2(target.side * Fraction(a, R), target.side * Fraction(b, R))
            return CoverageReport(False, w, 0, CheckMethod.SAMPLING)
    return CoverageReport(True, None, 0, CheckMethod.SAMPLING)


# --- width functions -------------------------------------------------------


def frac(x: Fraction) -> Fraction:
    """x modulo 1, in [0, 1)."""
    return x - math.floor(x)


@dataclass(frozen=True)
class WidthFunction:
    """A finite sum of generators on [0, 1).

    A term ``(+1, a)`` is t -> {t - a} (a down-triangle, slope +1); a term
    ``(-1, a)`` is t -> 1 - {t - a} (an up-triangle, slope -1).
    """

    terms: tuple[tuple[int, Fraction], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple(sorted((int(s), frac(Fraction(a))) for s, a in self.terms))
        )
        if any(s not in (1, -1) for s, _ in self.terms):
            raise ValueError("term signs must be +1 or -1")

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        total = Fraction(0)
        for s, a in self.terms:
            f = frac(t - a)
            total += f if s > 0 else 1 - f
        return total

    def __add__(self, other: "WidthFunction") -> "WidthFunction":
        return WidthFunction(self.terms + other.terms)

    @property
    def slope(self) -> int:
        return sum(s for s, _ in self.terms)

    @property
    def breakpoints(self) -> list[Fraction]:
        return sorted({a for _, a in self.terms} | {Fraction(0)})

    @property
    def integral(self) -> Fraction:
        """Exact area under the function over [0, 1), piece by piece."""
        pts = self.breakpoints + [Fraction(1)]
        area = Fraction(0)
        for lo, hi in zip(pts, pts[1:]):
            # linear on [lo, hi): value at lo plus slope times offset
            left = self(lo)
            right = left + self.slope * (hi - lo)
            area += (left + right) * (hi - lo) / 2
        return area


def width_function(obj: Union[Placement, CoveringPlan, TargetTriangle, Sequence[Placement]]) -> WidthFunction:
    """Folded width function of a unit triangle, a plan, or an integer-side target."""
    if isinstance(obj, Placement):
        return WidthFunction([(-1 if obj.is_up else 1, obj.leg_y)])
    if isinstance(obj, TargetTriangle):
        if obj.d != 0:
            raise ValueError(
                "T_{n+d} with d > 0 has a kinked width function outside the generator "
                "group; evaluate it with target_width()"
            )
        from .methods import grid_cover

        return width_function(grid_cover(obj.n))
    return WidthFunction([(-1 if p.is_up else 1, p.leg_y) for p in obj])


def target_width(target: TargetTriangle, t) -> Fraction:
    """Sum of the target's cross-section widths at heights t, t+1, t+2, ..."""
    t = frac(Fraction(t))
    total = Fraction(0)
    y = t
    while y <= target.side:
        lo, hi = target.cross_section(y)
        total += hi - lo
        y += 1
    return total


def width_identity_check(n: int, d, t) -> bool:
    """f_{T_{n+d}}(t) == f_{T_n}(t) + n*d + max(0, d - t), both sides exact."""
    d, t = Fraction(d), Fraction(t)
    if not 0 < d < 1:
        raise ValueError(f"d must satisfy 0 < d < 1, got {d}")
    if not 0 <= t < 1:
        raise ValueError(f"t must lie in [0, 1), got {t}")
    lhs = target_width(TargetTriangle(n, d), t)
    rhs = width_function(TargetTriangle(n))(t) + n * d + max(Fraction(0), d - t)
    return lhs == rhs


def pointwise_necessity_check(plan: Union[CoveringPlan, Sequence[Placement]], target: TargetTriangle | None, t) -> bool:
    """Whether the summed placement widths at level t reach the target's width.

    False proves the plan does not cover the target; True proves nothing.
    """
    if target is None:
        target = plan.target
    return width_function(plan)(t) >= target_width(target, t)
