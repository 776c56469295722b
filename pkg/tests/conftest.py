import itertools

import pytest

from lattice_triangles.core import LatticeTriangle, brute_force_bi


def triangles_in_box(lo, hi, max_doubled_area=None):
    """All non-degenerate triangles with vertices in [lo, hi]^2, one per translation class."""
    pts = [(x, y) for x in range(lo, hi + 1) for y in range(lo, hi + 1)]
    seen = set()
    for p, q, r in itertools.combinations(pts, 3):
        area2 = abs((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))
        if area2 == 0 or (max_doubled_area is not None and area2 > max_doubled_area):
            continue
        mx = min(p[0], q[0], r[0])
        my = min(p[1], q[1], r[1])
        key = tuple(sorted((v[0] - mx, v[1] - my) for v in (p, q, r)))
        if key in seen:
            continue
        seen.add(key)
        yield LatticeTriangle.from_coords(*key)


def scan_count(t: LatticeTriangle) -> int:
    """Total lattice points of t, by scan."""
    b, i = brute_force_bi(t)
    return b + i


def dilated_count(t: LatticeTriangle, k: int) -> int:
    return 1 if k == 0 else scan_count(t.dilate(k))


@pytest.fixture(scope="session")
def small_box_pairs():
    """(b, i) of every triangle in [0,10]^2 with doubled area <= 20, by scan."""
    return {tuple(brute_force_bi(t)) for t in triangles_in_box(0, 10, max_doubled_area=20)}


def pytest_configure(config):
    config._acceptance_results = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
