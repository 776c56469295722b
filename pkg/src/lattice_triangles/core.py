"""Exact integer primitives for lattice triangles.

Boundary/interior counts from HNF triples, Pick and Ehrhart formulas, a
brute-force lattice scan used as an independent oracle, and reduction of an
arbitrary triangle to Hermite normal form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Boxes with more lattice points than this are scanned with numpy.
_VECTOR_SCAN_THRESHOLD = 256


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):
        return LatticePoint(self.x - other.x, self.y - other.y)


def cross(u: tuple[int, int], v: tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class LatticeTriangle:
    v1: LatticePoint
    v2: LatticePoint
    v3: LatticePoint

    def __post_init__(self):
        for name in ("v1", "v2", "v3"):
            v = getattr(self, name)
            if not isinstance(v, LatticePoint):
                v = LatticePoint(*v)
            if not all(isinstance(c, (int, np.integer)) for c in v):
                raise TypeError(f"{name} must have integer coordinates, got {v!r}")
            object.__setattr__(self, name, LatticePoint(int(v.x), int(v.y)))
        if self.doubled_area == 0:
            raise ValueError(f"degenerate triangle {self.vertices}")

    @classmethod
    def from_coords(cls, *coords) -> "LatticeTriangle":
        """Build from three (x, y) pairs or six flat integers."""
        if len(coords) == 6:
            coords = (coords[0:2], coords[2:4], coords[4:6])
        if len(coords) != 3:
            raise ValueError("expected three vertices")
        return cls(*(LatticePoint(*c) for c in coords))

    @property
    def vertices(self) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
        return (self.v1, self.v2, self.v3)

    @property
    def signed_doubled_area(self) -> int:
        return cross(self.v2 - self.v1, self.v3 - self.v1)

    @property
    def doubled_area(self) -> int:
        return abs(self.signed_doubled_area)

    def dilate(self, k: int) -> "LatticeTriangle":
        if k < 1:
            raise ValueError("dilation factor must be positive")
        return LatticeTriangle(*(LatticePoint(k * v.x, k * v.y) for v in self.vertices))


@dataclass(frozen=True, order=True)
class HnfTriangle:
    """The triangle with vertices (0,0), (A,0), (B,C).

    ``relaxed`` permits B outside [0, C); the witness builders need it to
    reproduce vertex lists such as (0,0),(4,0),(1,1) verbatim.
    """

    A: int
    B: int
    C: int
    relaxed: bool = False

    def __post_init__(self):
        if self.A < 1 or self.C < 1:
            raise ValueError(f"need A >= 1 and C >= 1, got {self.triple}")
        if not self.relaxed and not 0 <= self.B < self.C:
            raise ValueError(f"need 0 <= B < C, got {self.triple}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    @property
    def normalized_volume(self) -> int:
        return self.A * self.C

    def to_triangle(self) -> LatticeTriangle:
        return LatticeTriangle.from_coords((0, 0), (self.A, 0), (self.B, self.C))


@dataclass(frozen=True, order=True)
class BiPair:
    """Boundary and interior lattice-point counts (b, i)."""

    b: int
    i: int

    def __post_init__(self):
        if self.b < 3 or self.i < 0:
            raise ValueError(f"not a lattice polygon pair: ({self.b}, {self.i})")

    def __iter__(self):
        return iter((self.b, self.i))

    @property
    def normalized_volume(self) -> int:
        return 2 * self.i + self.b - 2


@dataclass(frozen=True)
class EhrhartPoly:
    """k -> (two_a * k**2 + b * k + 2) / 2, i.e. a k^2 + (b/2) k + 1."""

    two_a: int
    b: int

    @classmethod
    def from_pair(cls, p: BiPair) -> "EhrhartPoly":
        return cls(pick_area_twice(p), p.b)

    def __call__(self, k: int) -> int:
        if k < 0:
            raise ValueError("k must be non-negative")
        num = self.two_a * k * k + self.b * k + 2
        if num % 2:
            raise ValueError(f"parity violation: ({self.two_a}, {self.b}) is not an Ehrhart polynomial")
        return num // 2


def gcd_with_modulus(x: int, C: int) -> int:
    """gcd(|x| mod C, C) with gcd(0, C) = C.

    This is the number of lattice steps on a segment with vertical extent C
    and horizontal offset x, so it is what the boundary formula needs even
    when x is negative.
    """
    if C <= 0:
        raise ValueError(f"modulus must be positive, got {C}")
    return math.gcd(abs(x) % C, C)


def boundary_count(t: HnfTriangle) -> int:
    A, B, C = t.triple
    return A + gcd_with_modulus(B, C) + gcd_with_modulus(B - A, C)


def interior_count(t: HnfTriangle) -> int:
    n = t.A * t.C
    twice = n - boundary_count(t) + 2
    if twice % 2:
        raise ArithmeticError(f"odd lattice count for {t.triple}")
    return twice // 2


def bi_pair(t: HnfTriangle) -> BiPair:
    return BiPair(boundary_count(t), interior_count(t))


def pick_area_twice(p: BiPair) -> int:
    return 2 * p.i + p.b - 2


def ehrhart_eval(p: BiPair, k: int) -> int:
    """Number of lattice points in the k-th dilate of any polygon with pair p."""
    return EhrhartPoly.from_pair(p)(k)


def _scan_python(v1, v2, v3, xs, ys):
    e1 = (v2[0] - v1[0], v2[1] - v1[1])
    e2 = (v3[0] - v2[0], v3[1] - v2[1])
    e3 = (v1[0] - v3[0], v1[1] - v3[1])
    b = i = 0
    for y in ys:
        for x in xs:
            d1 = e1[0] * (y - v1[1]) - e1[1] * (x - v1[0])
            d2 = e2[0] * (y - v2[1]) - e2[1] * (x - v2[0])
            d3 = e3[0] * (y - v3[1]) - e3[1] * (x - v3[0])
            if (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0):
                i += 1
            elif (
                (d1 == 0 and _between(x, y, v1, v2))
                or (d2 == 0 and _between(x, y, v2, v3))
                or (d3 == 0 and _between(x, y, v3, v1))
            ):
                b += 1
    return b, i


def _between(x, y, p, q):
    return min(p[0], q[0]) <= x <= max(p[0], q[0]) and min(p[1], q[1]) <= y <= max(p[1], q[1])


def _scan_numpy(v1, v2, v3, xs, ys):
    X, Y = np.meshgrid(np.arange(xs.start, xs.stop, dtype=np.int64),
                       np.arange(ys.start, ys.stop, dtype=np.int64))
    ds = []
    on_edge = np.zeros(X.shape, dtype=bool)
    for p, q in ((v1, v2), (v2, v3), (v3, v1)):
        d = (q[0] - p[0]) * (Y - p[1]) - (q[1] - p[1]) * (X - p[0])
        ds.append(d)
        on_edge |= (
            (d == 0)
            & (X >= min(p[0], q[0])) & (X <= max(p[0], q[0]))
            & (Y >= min(p[1], q[1])) & (Y <= max(p[1], q[1]))
        )
    d1, d2, d3 = ds
    inside = ((d1 > 0) & (d2 > 0) & (d3 > 0)) | ((d1 < 0) & (d2 < 0) & (d3 < 0))
    return int(on_edge.sum()), int(inside.sum())


def brute_force_bi(t: LatticeTriangle) -> BiPair:
    """Count boundary and interior lattice points by scanning the bounding box.

    Shares no code with the gcd formulas; the tests use it as their oracle.
    """
    vs = t.vertices
    xs = range(min(v.x for v in vs), max(v.x for v in vs) + 1)
    ys = range(min(v.y for v in vs), max(v.y for v in vs) + 1)
    if len(xs) * len(ys) > _VECTOR_SCAN_THRESHOLD:
        b, i = _scan_numpy(*vs, xs, ys)
    else:
        b, i = _scan_python(*vs, xs, ys)
    return BiPair(b, i)


def lattice_point_count(t: LatticeTriangle) -> int:
    """|t ∩ Z^2| by direct scan."""
    b, i = brute_force_bi(t)
    return b + i


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _hnf_of_edges(e1: tuple[int, int], e2: tuple[int, int]) -> tuple[int, int, int]:
    """Row-style HNF of the 2x2 matrix with columns e1, e2.

    Finds U in GL2(Z) with U e1 = (A, 0) and U e2 = (B, C), A, C > 0,
    0 <= B < C; the result is unique for the ordered pair of edges.
    """
    g, s, t = _ext_gcd(e1[0], e1[1])
    b = s * e2[0] + t * e2[1]
    c = cross(e1, e2) // g
    if c < 0:
        c = -c
    return g, b % c, c


def hnf_normalize(t: LatticeTriangle) -> HnfTriangle:
    """Canonical HNF triple of t: the minimum of (C, A, B) over vertex orderings."""
    best = None
    for p, q, r in itertools.permutations(t.vertices):
        A, B, C = _hnf_of_edges(q - p, r - p)
        key = (C, A, B)
        if best is None or key < best:
            best = key
    C, A, B = best
    return HnfTriangle(A, B, C)
