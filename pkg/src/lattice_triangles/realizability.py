"""Which pairs (b, i) come from lattice triangles.

Every lattice triangle is equivalent to one with vertices (0,0), (A,0), (B,C)
where A >= 1 and 0 <= B < C, and then b = A + gcd(B,C) + gcd(B-A,C) and
A*C = 2i + b - 2. Deciding membership is therefore a finite search over
the factorizations of 2i + b - 2.
"""

from __future__ import annotations

import bisect
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import cones
from .core import BiPair, HnfTriangle, boundary_count, brute_force_bi, interior_count


@dataclass(frozen=True)
class Witness:
    pair: BiPair
    triangle: HnfTriangle

    def __post_init__(self):
        got = (boundary_count(self.triangle), interior_count(self.triangle))
        if got != (self.pair.b, self.pair.i):
            raise ArithmeticError(f"{self.triangle.triple} realizes {got}, not {tuple(self.pair)}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.triangle.triple

    @property
    def relaxed(self) -> bool:
        return self.triangle.relaxed

    @property
    def vertices(self) -> list[tuple[int, int]]:
        A, B, C = self.triple
        return [(0, 0), (A, 0), (B, C)]

    def check(self) -> bool:
        """Re-derive the pair with the brute-force scan."""
        return brute_force_bi(self.triangle.to_triangle()) == self.pair


@dataclass(frozen=True)
class PairSet:
    """Sorted, deduplicated (b, i) pairs, complete for 2i + b - 2 <= n_max."""

    pairs: tuple[tuple[int, int], ...]
    n_max: int

    def __post_init__(self):
        for (b, i) in self.pairs:
            if 2 * i + b - 2 > self.n_max:
                raise ValueError(f"({b}, {i}) lies outside the window n <= {self.n_max}")
        if any(p >= q for p, q in zip(self.pairs, self.pairs[1:])):
            raise ValueError("pairs must be strictly increasing")

    @classmethod
    def from_iterable(cls, pairs, n_max: int) -> "PairSet":
        return cls(tuple(sorted({(int(b), int(i)) for b, i in pairs})), n_max)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p):
        key = tuple(p)
        k = bisect.bisect_left(self.pairs, key)
        return k < len(self.pairs) and self.pairs[k] == key

    def as_set(self) -> set[tuple[int, int]]:
        return set(self.pairs)


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _boundary_table(n: int) -> dict[int, tuple[int, int, int]]:
    """Map each achievable b with A*C = n to its first (A, B, C), A then B ascending."""
    table: dict[int, tuple[int, int, int]] = {}
    gcd = math.gcd
    for A in divisors(n):
        C = n // A
        g = [gcd(B, C) for B in range(C)]
        shift = A % C
        for B in range(C):
            b = A + g[B] + g[B - shift]
            if b not in table:
                table[b] = (A, B, C)
    return table


@lru_cache(maxsize=8192)
def _cached_table(n: int) -> dict[int, tuple[int, int, int]]:
    return _boundary_table(n)


def membership_witness(p) -> Witness | None:
    """A triangle realizing (b, i), or None when no lattice triangle does."""
    b, i = p
    if b < 3 or i < 0:
        raise ValueError(f"not a lattice polygon pair: ({b}, {i})")
    n = 2 * i + b - 2
    hit = _cached_table(n).get(b)
    if hit is None:
        return None
    return Witness(BiPair(b, i), HnfTriangle(*hit))


def is_realizable(p) -> bool:
    return membership_witness(p) is not None


def apex_witness(c: int) -> Witness:
    if c < 1:
        raise ValueError(f"cone index must be >= 1, got {c}")
    A = 2 * c * c + 2 * c
    return Witness(cones.apex(c), HnfTriangle(A, 1, c, relaxed=1 >= c))


def lower_facet_witness(p, c: int) -> Witness:
    """Realize a lattice point on the lower facet of the closure of sigma_c."""
    if c < 1:
        raise ValueError(f"cone index must be >= 1, got {c}")
    b, i = p
    if 2 * i != cones.lower_line_twice(c, b) or b < cones.apex(c).b:
        raise ValueError(f"({b}, {i}) is not on the lower facet of cone {c}")
    n = 2 * i + b - 2
    if n % c:
        raise ValueError(f"{c} does not divide {n}")
    A = n // c
    # one admissible residue exists modulo rad(c) <= c, well inside this bound
    for B in range(2 * c + 2):
        if math.gcd(B, c) == 1 and math.gcd(B - A, c) == 1:
            return Witness(BiPair(b, i), HnfTriangle(A, B, c, relaxed=B >= c))
    raise ArithmeticError(f"no admissible B below {2 * c + 2} for ({b}, {i}), c={c}")


def lower_facet_points(c: int, b_max: int):
    """Integer points on the lower facet of the closure of sigma_c with b <= b_max."""
    for b in range(cones.apex(c).b, b_max + 1):
        two_i = cones.lower_line_twice(c, b)
        if two_i % 2 == 0:
            yield b, two_i // 2


def upper_face_witness(c: int, k: int) -> Witness:
    if c < 1:
        raise ValueError(f"cone index must be >= 1, got {c}")
    if k < 2 * c + 1:
        raise ValueError(f"need k >= {2 * c + 1}, got {k}")
    pair = BiPair(k * (c + 1), k * c * (c + 1) // 2 - c * (c + 2))
    assert 2 * pair.i == cones.upper_line_twice(c, pair.b)
    return Witness(pair, HnfTriangle((k - 2) * (c + 1), 0, c + 1))


def _pairs_for_volumes(ns) -> list[tuple[int, int]]:
    out = []
    for n in ns:
        for b in _boundary_table(n):
            if b <= n + 2:
                out.append((b, (n - b) // 2 + 1))
    return out


def _shard(n_max: int, shard: int, shards: int) -> list[tuple[int, int]]:
    return _pairs_for_volumes(range(1 + shard, n_max + 1, shards))


def enumerate_pairs(n_max: int, shards: int = 1) -> PairSet:
    """All (b, i) realized by lattice triangles with 2i + b - 2 <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    if shards == 1:
        return PairSet.from_iterable(_pairs_for_volumes(range(1, n_max + 1)), n_max)
    merged: set[tuple[int, int]] = set()
    with ProcessPoolExecutor(max_workers=shards) as pool:
        futures = [pool.submit(_shard, n_max, s, shards) for s in range(shards)]
        for f in futures:
            merged.update(f.result())
    return PairSet.from_iterable(merged, n_max)


def _check_rows(rows) -> list[tuple[int, int]]:
    hits = []
    for c, b in rows:
        lo = cones.lower_line_twice(c, b) // 2 + 1
        hi = (cones.upper_line_twice(c, b) - 1) // 2
        for i in range(max(lo, 0), hi + 1):
            if membership_witness((b, i)) is not None:
                hits.append((b, i))
    return hits


def cone_rows(b_max: int, c_min: int, c_max: int) -> list[tuple[int, int]]:
    return [(c, b) for c in range(c_min, c_max + 1)
            for b in range(cones.apex(c).b + 1, b_max + 1)]


def verify_cone_emptiness(b_max: int, c_min: int = 2, c_max: int = 2,
                          shards: int = 1) -> list[Witness]:
    """Realizable pairs inside sigma_c for c_min <= c <= c_max and b <= b_max.

    An empty result confirms that no lattice triangle lands in those cones.
    c_min = 1 is allowed so the Scott exception (9, 1) can be exercised.
    """
    if c_min < 1 or c_min > c_max:
        raise ValueError(f"invalid cone range {c_min}..{c_max}")
    rows = cone_rows(b_max, c_min, c_max)
    if shards == 1:
        hits = _check_rows(rows)
    else:
        hits = []
        with ProcessPoolExecutor(max_workers=shards) as pool:
            for part in pool.map(_check_rows, [rows[s::shards] for s in range(shards)]):
                hits.extend(part)
    return [membership_witness(p) for p in sorted(set(hits))]


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def prime_line_pairs(p: int) -> PairSet:
    """Pairs of all triangles with normalized volume p, for an odd prime p."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return PairSet.from_iterable(_pairs_for_volumes([p]), p)


def expected_prime_line(p: int) -> set[tuple[int, int]]:
    return {(3, (p - 1) // 2), (p + 2, 0)}
