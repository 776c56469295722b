"""Scott's inequality, the polygon pair set, and the open cones sigma_c.

For c >= 1 the open cone sigma_c is the set of (b, i) strictly between the
lower line i = (c-1)/2 * b - (c-1) and the upper line i = c/2 * b - c(c+2).
Everything is evaluated in doubled form (2i) so no rationals appear.

All predicates are total: they take any integer pair, including b < 3,
which lies outside every cone and outside the polygon set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import BiPair

SCOTT_EXCEPTION = (9, 1)


def _check_index(c: int) -> None:
    if c < 1:
        raise ValueError(f"cone index must be >= 1, got {c}")


def lower_line_twice(c: int, b: int) -> int:
    """2i on the lower line of sigma_c at abscissa b."""
    return (c - 1) * b - 2 * (c - 1)


def upper_line_twice(c: int, b: int) -> int:
    """2i on the upper line of sigma_c at abscissa b."""
    return c * b - 2 * c * (c + 2)


def cone_contains(c: int, p) -> bool:
    _check_index(c)
    b, i = p
    if b < 0 or i < 0:
        return False
    return lower_line_twice(c, b) < 2 * i < upper_line_twice(c, b)


def cone_closure_contains(c: int, p) -> bool:
    _check_index(c)
    b, i = p
    if b < 0 or i < 0:
        return False
    return lower_line_twice(c, b) <= 2 * i <= upper_line_twice(c, b)


def max_cone_index(b: int) -> int:
    """Upper bound on any c with a point of abscissa b inside sigma_c.

    The lines cross at b = 2c^2 + 2c + 2 and the cone opens to the right,
    so b > 2c^2 forces c <= isqrt(b // 2).
    """
    if b < 0:
        return 0
    return math.isqrt(b // 2) + 1


def cone_classify(p) -> int | None:
    """The unique c with p in sigma_c, or None."""
    b, _ = p
    for c in range(1, max_cone_index(b) + 1):
        if cone_contains(c, p):
            return c
    return None


def apex(c: int) -> BiPair:
    _check_index(c)
    b, i = 2 * c * c + 2 * c + 2, c ** 3 - c
    # the apex is where both doubled lines meet
    assert lower_line_twice(c, b) == 2 * i == upper_line_twice(c, b)
    return BiPair(b, i)


def scott_holds(p) -> bool:
    b, i = p
    return i == 0 or (b, i) == SCOTT_EXCEPTION or b <= 2 * i + 6


def polygon_set_contains(p) -> bool:
    b, i = p
    if (b, i) == SCOTT_EXCEPTION:
        return True
    if i == 0:
        return b >= 3
    return i >= 1 and 3 <= b <= 2 * i + 6


@dataclass(frozen=True)
class LinePoint:
    """A point (b, i) with integer b and i stored doubled."""

    b: int
    two_i: int

    @property
    def i(self) -> Fraction:
        return Fraction(self.two_i, 2)


@dataclass(frozen=True)
class Segment:
    start: LinePoint
    end: LinePoint


def cone_boundary_lines(c: int, b_max: int) -> tuple[Segment, Segment] | tuple[()]:
    """The lower and upper facets of the closure of sigma_c, clipped to b <= b_max.

    Empty when b_max lies left of the apex.
    """
    top = apex(c)
    if b_max < top.b:
        return ()
    start = LinePoint(top.b, 2 * top.i)
    lower = Segment(start, LinePoint(b_max, lower_line_twice(c, b_max)))
    upper = Segment(start, LinePoint(b_max, upper_line_twice(c, b_max)))
    return lower, upper


def cone_points(c: int, b_max: int):
    """Yield the integer points of sigma_c with b <= b_max, row by row in b."""
    _check_index(c)
    for b in range(apex(c).b + 1, b_max + 1):
        # smallest i with 2i > lower, largest i with 2i < upper
        lo = max(lower_line_twice(c, b) // 2 + 1, 0)
        hi = (upper_line_twice(c, b) - 1) // 2
        for i in range(lo, hi + 1):
            yield b, i
