"""CSV and SVG emitters for (b, i) scatter plots.

Output is byte-stable: fixed precision, LF line endings, pairs in
lexicographic order.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass

from . import cones

WIDTH, HEIGHT = 1000, 800
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 20, 20, 60
PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
DEFAULT_B_MAX = 500


def pairs_to_csv(pairs) -> str:
    lines = ["b,i"]
    lines.extend(f"{b},{i}" for b, i in pairs)
    return "\n".join(lines) + "\n"


def pairs_from_csv(text: str) -> list[tuple[int, int]]:
    rows = csv.reader(io.StringIO(text))
    header = next(rows)
    if header != ["b", "i"]:
        raise ValueError(f"unexpected header {header!r}")
    return [(int(b), int(i)) for b, i in rows]


@dataclass(frozen=True)
class PlotWindow:
    """Axis extents 0 <= b <= b_max, 0 <= i <= i_max."""

    b_max: int
    i_max: int

    @classmethod
    def complete_for(cls, n_max: int, b_max: int | None = None) -> "PlotWindow":
        """Largest window in which every realizable pair with 2i + b - 2 <= n_max is shown.

        Any pair inside the returned rectangle has 2i + b - 2 <= n_max, so
        an enumeration up to n_max leaves no holes in it.
        """
        if b_max is None:
            b_max = min(DEFAULT_B_MAX, n_max + 2)
        return cls(b_max, max((n_max + 2 - b_max) // 2, 1))

    def x(self, b) -> float:
        return MARGIN_LEFT + float(b) * PLOT_W / self.b_max

    def y(self, i) -> float:
        return MARGIN_TOP + PLOT_H - float(i) * PLOT_H / self.i_max

    def contains(self, b, i) -> bool:
        return 0 <= b <= self.b_max and 0 <= i <= self.i_max


def _f(v: float) -> str:
    return f"{v:.2f}"


def render_svg(pairs, window: PlotWindow, cone_range: range = range(0)) -> str:
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        "<defs>",
        f'<clipPath id="plot"><rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" '
        f'width="{PLOT_W}" height="{PLOT_H}"/></clipPath>',
        "</defs>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + PLOT_H
    out.append(
        f'<path d="M {x0} {MARGIN_TOP} L {x0} {y0} L {x0 + PLOT_W} {y0}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    out.append(f'<text x="{x0 + PLOT_W // 2}" y="{HEIGHT - 15}" text-anchor="middle" '
               'font-family="sans-serif" font-size="16">b</text>')
    out.append(f'<text x="20" y="{MARGIN_TOP + PLOT_H // 2}" text-anchor="middle" '
               'font-family="sans-serif" font-size="16">i</text>')
    for label, x, y, anchor in (
        ("0", x0, y0 + 18, "middle"),
        (str(window.b_max), x0 + PLOT_W, y0 + 18, "end"),
        (str(window.i_max), x0 - 6, MARGIN_TOP + 12, "end"),
    ):
        out.append(f'<text x="{x}" y="{y}" text-anchor="{anchor}" '
                   f'font-family="sans-serif" font-size="12">{label}</text>')

    out.append('<g clip-path="url(#plot)" fill="none" stroke="red" stroke-width="1">')
    for c in cone_range:
        segs = cones.cone_boundary_lines(c, window.b_max)
        if not segs:
            continue
        lower, upper = segs
        pts = (lower.end, lower.start, upper.end)
        d = "M " + " L ".join(f"{_f(window.x(p.b))} {_f(window.y(p.i))}" for p in pts)
        out.append(f'<path d="{d}"/>')
    out.append("</g>")

    out.append('<g fill="black">')
    for b, i in pairs:
        if window.contains(b, i):
            out.append(f'<circle cx="{_f(window.x(b))}" cy="{_f(window.y(i))}" r="1.5"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_circle_pairs(svg: str, window: PlotWindow) -> list[tuple[int, int]]:
    """Recover the plotted (b, i) pairs from an SVG written by render_svg."""
    found = []
    for cx, cy in re.findall(r'<circle cx="([-\d.]+)" cy="([-\d.]+)"', svg):
        b = (float(cx) - MARGIN_LEFT) * window.b_max / PLOT_W
        i = (MARGIN_TOP + PLOT_H - float(cy)) * window.i_max / PLOT_H
        found.append((round(b), round(i)))
    return found
