"""Canonical frame, exact points, unit-triangle placements and affine maps.

Everything lives in the right isosceles frame: the target of side ``L = n + d``
is the closed triangle (0,0), (L,0), (0,L).  An equilateral triangle and its
covering map onto this frame by an invertible affine map that preserves
horizontal lines, so nothing is lost by working here and every coordinate
stays rational.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction


def Q(value: Union[int, str, Fraction], den: int = 1) -> Fraction:
    """Shorthand for an exact rational.  Floats are refused."""
    if isinstance(value, float):
        raise TypeError("floats are not allowed in exact geometry")
    return Fraction(value) / den if den != 1 else Fraction(value)


@dataclass(frozen=True, order=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


class Orientation(str, enum.Enum):
    UP = "U"
    DOWN = "D"


@dataclass(frozen=True)
class Placement:
    """A unit triangle.

    ``UP`` at (x, y) is the triangle (x,y), (x+1,y), (x,y+1).
    ``DOWN`` at (x, y) is anchored at its top-left vertex: (x,y), (x+1,y), (x+1,y-1).
    """

    orientation: Orientation
    anchor: Point2

    @classmethod
    def up(cls, x, y) -> "Placement":
        return cls(Orientation.UP, Point2(x, y))

    @classmethod
    def down(cls, x, y) -> "Placement":
        return cls(Orientation.DOWN, Point2(x, y))

    @property
    def is_up(self) -> bool:
        return self.orientation is Orientation.UP

    @property
    def leg_y(self) -> Fraction:
        """y of the horizontal leg (bottom for up, top for down)."""
        return self.anchor.y

    @property
    def y_extent(self) -> tuple[Fraction, Fraction]:
        y = self.anchor.y
        return (y, y + 1) if self.is_up else (y - 1, y)

    def __repr__(self):
        return f"{self.orientation.name.title()}({self.anchor.x}, {self.anchor.y})"


@dataclass(frozen=True)
class TargetTriangle:
    n: int
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "d", Q(self.d))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not 0 <= self.d < 1:
            raise ValueError(f"d must satisfy 0 <= d < 1, got {self.d}")

    @property
    def side(self) -> Fraction:
        return self.n + self.d

    def vertices(self) -> tuple[Point2, Point2, Point2]:
        L = self.side
        return Point2(0, 0), Point2(L, 0), Point2(0, L)

    def contains(self, q: Point2) -> bool:
        return q.x >= 0 and q.y >= 0 and q.x + q.y <= self.side

    def cross_section(self, y: Fraction) -> tuple[Fraction, Fraction] | None:
        if not 0 <= y <= self.side:
            return None
        return Fraction(0), self.side - y


class Method(str, enum.Enum):
    GRID = "grid"
    NAIVE = "naive"
    CS1 = "cs1"
    CS1_GEN = "cs1_gen"
    EVEN_BASIC = "even_basic"
    EVEN_FULL = "even_full"
    BL3 = "bl3"
    ODD_BASIC = "odd_basic"
    ODD_FULL = "odd_full"
    CONSOLIDATED = "consolidated"


@dataclass(frozen=True)
class CoveringPlan:
    placements: tuple[Placement, ...]
    n: int
    d: Fraction
    method: Method
    j: int | None = None
    count: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))
        object.__setattr__(self, "d", Q(self.d))
        object.__setattr__(self, "method", Method(self.method))
        TargetTriangle(self.n, self.d)  # same range rules as the target
        if self.count == -1:
            object.__setattr__(self, "count", len(self.placements))
        elif self.count != len(self.placements):
            raise ValueError(
                f"count {self.count} does not match {len(self.placements)} placements"
            )

    @property
    def target(self) -> TargetTriangle:
        return TargetTriangle(self.n, self.d)

    def __len__(self):
        return len(self.placements)

    def __iter__(self):
        return iter(self.placements)


def vertices(p: Placement) -> tuple[Point2, Point2, Point2]:
    """The three vertices of ``p`` in counterclockwise order, starting at the anchor."""
    x, y = p.anchor
    if p.is_up:
        return Point2(x, y), Point2(x + 1, y), Point2(x, y + 1)
    return Point2(x, y), Point2(x + 1, y - 1), Point2(x + 1, y)


def contains(p: Placement, q: Point2) -> bool:
    x, y = p.anchor
    if p.is_up:
        return q.x >= x and q.y >= y and q.x + q.y <= x + y + 1
    return q.y <= y and q.x <= x + 1 and q.x + q.y >= x + y


def cross_section(p: Placement, y) -> tuple[Fraction, Fraction] | None:
    """Closed x-interval of ``p`` on the horizontal line at height ``y``."""
    y = Q(y)
    ax, ay = p.anchor
    if p.is_up:
        if not ay <= y <= ay + 1:
            return None
        return ax, ax + 1 - (y - ay)
    if not ay - 1 <= y <= ay:
        return None
    return ax + (ay - y), ax + 1


@dataclass(frozen=True)
class AffineMap:
    """(x, y) -> (a*x + b*y + tx, c*x + d*y + ty) with rational entries."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(1)
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "tx", "ty"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls()

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __call__(self, p: Point2) -> Point2:
        return Point2(
            self.a * p.x + self.b * p.y + self.tx,
            self.c * p.x + self.d * p.y + self.ty,
        )

    def __matmul__(self, other: "AffineMap") -> "AffineMap":
        """Composition: ``(self @ other)(p) == self(other(p))``."""
        return AffineMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.tx + self.b * other.ty + self.tx,
            self.c * other.tx + self.d * other.ty + self.ty,
        )

    def inverse(self) -> "AffineMap":
        det = self.determinant
        if det == 0:
            raise ValueError("affine map is not invertible")
        a, b, c, d = self.d / det, -self.b / det, -self.c / det, self.a / det
        return AffineMap(a, b, c, d, -(a * self.tx + b * self.ty), -(c * self.tx + d * self.ty))


Triple = tuple[Point2, Point2, Point2]


def apply_affine(m: AffineMap, obj: Union[CoveringPlan, TargetTriangle, Placement]) -> list[Triple]:
    """Transformed vertex triples of a plan's placements, or of a single triangle."""
    if m.determinant == 0:
        raise ValueError("affine map is not invertible")
    if isinstance(obj, CoveringPlan):
        triples: Iterable[Sequence[Point2]] = (vertices(p) for p in obj.placements)
    elif isinstance(obj, TargetTriangle):
        triples = [obj.vertices()]
    elif isinstance(obj, Placement):
        triples = [vertices(obj)]
    else:
        raise TypeError(f"cannot transform {type(obj).__name__}")
    return [tuple(m(v) for v in tri) for tri in triples]
