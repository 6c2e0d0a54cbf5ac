"""Exact planar primitives: rational points, integer lines, incidence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence


class GeometryError(ValueError):
    pass


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not accepted")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            x, y = self.x, self.y
            h = hash((x.numerator, x.denominator, y.numerator, y.denominator))
            object.__setattr__(self, "_hash", h)
        return h

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x}, {self.y})"

    def to_strings(self) -> list[str]:
        return [format_rational(self.x), format_rational(self.y)]


@dataclass(frozen=True, order=True)
class Line:
    """The line ``a*x + b*y + c = 0``, kept in canonical integer form.

    Any nonzero rational multiple of the same triple yields an equal object.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = (to_rational(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise GeometryError("line needs (a, b) != (0, 0)")
        den = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = (int(v * den) for v in (a, b, c))
        g = gcd(ia, ib, ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        lead = ia if ia != 0 else ib
        if lead < 0:
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", ia)
        object.__setattr__(self, "b", ib)
        object.__setattr__(self, "c", ic)

    def __repr__(self):
        return f"Line({self.a}, {self.b}, {self.c})"

    def __call__(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def to_strings(self) -> list[str]:
        return [str(self.a), str(self.b), str(self.c)]

    def point_at(self, t) -> Point:
        """A rational parametrisation of the line, injective in ``t``."""
        t = to_rational(t)
        if self.b != 0:
            return Point(t, -(self.a * t + self.c) / Fraction(self.b))
        return Point(Fraction(-self.c, self.a), t)


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise GeometryError(f"identical points {p}")
    return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def incident(line: Line, p: Point) -> bool:
    return line(p) == 0


def intersect(l1: Line, l2: Line) -> Point | None:
    """Common point of two distinct lines; ``None`` when they are parallel."""
    if l1 == l2:
        raise GeometryError(f"identical lines {l1}")
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    return Point(
        Fraction(l1.b * l2.c - l2.b * l1.c, det),
        Fraction(l1.c * l2.a - l2.c * l1.a, det),
    )


def general_position(lines: Sequence[Line]) -> bool:
    """No two lines parallel, no three concurrent."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise GeometryError("duplicate line in family")
    for l1, l2 in combinations(lines, 2):
        p = intersect(l1, l2)
        if p is None:
            return False
        if sum(incident(l, p) for l in lines) > 2:
            return False
    return True


def collinear(points: Iterable[Point]) -> bool:
    points = list(points)
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return True
    line = line_through(distinct[0], distinct[1])
    return all(incident(line, p) for p in distinct[2:])


def concurrent(lines: Sequence[Line]) -> Point | None:
    """The single point shared by all given lines, if there is one."""
    lines = list(dict.fromkeys(lines))
    if len(lines) < 2:
        raise GeometryError("need at least two distinct lines")
    p = intersect(lines[0], lines[1])
    if p is None or not all(incident(l, p) for l in lines[2:]):
        return None
    return p
