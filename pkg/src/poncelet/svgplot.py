"""SVG rendering of a plane scene: curve, envelope conic, member lines, vertices.

Only the plane case (n = 2) is drawable.  The scene lives in one affine
chart x_c = 1 of P^2; the remaining two coordinates, in index order, are
the plot axes.  Curves are contoured by sign changes of a float evaluation
on a fixed grid; exact data only enters through the chart projection, so a
fixed configuration renders to byte-identical SVG.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, InvalidInputError
from .incidence import contact_hyperplane, polytope_vertices
from .binforms import ParamPoint
from .multipoly import MultiPoly

VIEW = 800  # fixed square viewport in pixels
DEFAULT_WINDOW = (Fraction(-5), Fraction(5), Fraction(-5), Fraction(5))
DEFAULT_RESOLUTION = 160


def envelope_conic() -> MultiPoly:
    """The discriminant x1^2 - 4 x0 x2: forms that are perfect squares."""
    x0, x1, x2 = (MultiPoly.variable(3, i) for i in range(3))
    return x1 * x1 - x0 * x2 * 4


def _chart_point(chart: int, x: float, y: float) -> tuple[float, float, float]:
    if chart == 0:
        return (1.0, x, y)
    if chart == 1:
        return (x, 1.0, y)
    return (x, y, 1.0)


def _float_terms(p: MultiPoly) -> list[tuple[float, tuple[int, ...]]]:
    return [(float(c), e) for e, c in p.sorted_terms()]


def _eval_float(terms: Sequence[tuple[float, tuple[int, ...]]], pt: tuple[float, float, float]) -> float:
    total = 0.0
    for c, (e0, e1, e2) in terms:
        total += c * pt[0] ** e0 * pt[1] ** e1 * pt[2] ** e2
    return total


class _Frame:
    """World window to pixel mapping."""

    def __init__(self, window: tuple[Fraction, Fraction, Fraction, Fraction]):
        xmin, xmax, ymin, ymax = (float(w) for w in window)
        if not (xmin < xmax and ymin < ymax):
            raise InvalidInputError("window must satisfy xmin < xmax and ymin < ymax")
        self.xmin, self.xmax, self.ymin, self.ymax = xmin, xmax, ymin, ymax

    def px(self, x: float) -> float:
        return (x - self.xmin) / (self.xmax - self.xmin) * VIEW

    def py(self, y: float) -> float:
        return VIEW - (y - self.ymin) / (self.ymax - self.ymin) * VIEW

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _contour_path(
    poly: MultiPoly, chart: int, frame: _Frame, resolution: int
) -> str:
    """Marching-squares segments of {poly = 0} in the chart, as one path."""
    terms = _float_terms(poly)
    if not terms:
        return ""
    nx = resolution + 1
    dx = (frame.xmax - frame.xmin) / resolution
    dy = (frame.ymax - frame.ymin) / resolution
    values = []
    for iy in range(nx):
        row = []
        y = frame.ymin + iy * dy
        for ix in range(nx):
            x = frame.xmin + ix * dx
            row.append(_eval_float(terms, _chart_point(chart, x, y)))
        values.append(row)

    def sign(v: float) -> int:
        return 1 if v >= 0 else -1  # exact zeros count as positive, consistently

    segments: list[str] = []
    for iy in range(resolution):
        for ix in range(resolution):
            x0 = frame.xmin + ix * dx
            y0 = frame.ymin + iy * dy
            corners = (
                (values[iy][ix], x0, y0),
                (values[iy][ix + 1], x0 + dx, y0),
                (values[iy + 1][ix + 1], x0 + dx, y0 + dy),
                (values[iy + 1][ix], x0, y0 + dy),
            )
            crossings: list[tuple[float, float]] = []
            for a in range(4):
                v1, cx1, cy1 = corners[a]
                v2, cx2, cy2 = corners[(a + 1) % 4]
                if sign(v1) != sign(v2):
                    t = v1 / (v1 - v2)
                    crossings.append((cx1 + (cx2 - cx1) * t, cy1 + (cy2 - cy1) * t))
            if len(crossings) >= 2:
                # at a saddle (4 crossings) pair them in edge order
                for a in range(0, len(crossings) - 1, 2):
                    (ax, ay), (bx, by) = crossings[a], crossings[a + 1]
                    segments.append(
                        f"M{_fmt(frame.px(ax))} {_fmt(frame.py(ay))}"
                        f"L{_fmt(frame.px(bx))} {_fmt(frame.py(by))}"
                    )
    return "".join(segments)


def _clip_line(alpha: float, beta: float, gamma: float, frame: _Frame) -> tuple | None:
    """Clip alpha*x + beta*y + gamma = 0 to the window; None if invisible."""
    if alpha == 0 and beta == 0:
        return None
    points: list[tuple[float, float]] = []
    eps = 1e-9
    if beta != 0:
        for x in (frame.xmin, frame.xmax):
            y = -(alpha * x + gamma) / beta
            if frame.ymin - eps <= y <= frame.ymax + eps:
                points.append((x, y))
    if alpha != 0:
        for y in (frame.ymin, frame.ymax):
            x = -(beta * y + gamma) / alpha
            if frame.xmin - eps <= x <= frame.xmax + eps:
                points.append((x, y))
    unique: list[tuple[float, float]] = []
    for p in points:
        if all(abs(p[0] - q[0]) > 1e-7 or abs(p[1] - q[1]) > 1e-7 for q in unique):
            unique.append(p)
    if len(unique) < 2:
        return None
    unique.sort()
    return unique[0], unique[-1]


def render_scene(
    curve: MultiPoly,
    member_root_lists: Sequence[Sequence[ParamPoint]],
    chart: int = 0,
    window: tuple[Fraction, Fraction, Fraction, Fraction] = DEFAULT_WINDOW,
    resolution: int = DEFAULT_RESOLUTION,
) -> str:
    """Render the curve with its envelope conic, member lines and vertex dots."""
    if curve.num_vars != 3:
        raise DimensionError("only plane curves are drawable")
    if chart not in (0, 1, 2):
        raise InvalidInputError("chart must be 0, 1 or 2")
    if not 8 <= resolution <= 2000:
        raise InvalidInputError("resolution out of range (8..2000)")
    frame = _Frame(window)

    curve_path = _contour_path(curve, chart, frame, resolution)
    envelope_path = _contour_path(envelope_conic(), chart, frame, resolution)

    other_axes = [i for i in range(3) if i != chart]
    lines: list[str] = []
    dots: list[str] = []
    for roots in member_root_lists:
        for t in roots:
            h = [float(c) for c in contact_hyperplane(2, t)]
            alpha, beta, gamma = h[other_axes[0]], h[other_axes[1]], h[chart]
            clipped = _clip_line(alpha, beta, gamma, frame)
            if clipped is None:
                continue
            (ax, ay), (bx, by) = clipped
            lines.append(
                f'<line x1="{_fmt(frame.px(ax))}" y1="{_fmt(frame.py(ay))}" '
                f'x2="{_fmt(frame.px(bx))}" y2="{_fmt(frame.py(by))}"/>'
            )
        for vertex in polytope_vertices(2, roots).vertices:
            if vertex[chart] == 0:
                continue  # on the line at infinity of this chart
            x = float(vertex[other_axes[0]] / vertex[chart])
            y = float(vertex[other_axes[1]] / vertex[chart])
            if frame.contains(x, y):
                dots.append(
                    f'<circle cx="{_fmt(frame.px(x))}" cy="{_fmt(frame.py(y))}" r="4"/>'
                )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" '
        f'viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="#ffffff"/>',
        f'<g id="envelope" fill="none" stroke="#999999" stroke-width="1.5" '
        f'stroke-dasharray="6 4"><path d="{envelope_path}"/></g>',
        f'<g id="curve" fill="none" stroke="#1f6feb" stroke-width="2">'
        f'<path d="{curve_path}"/></g>',
        '<g id="member-lines" stroke="#d97706" stroke-width="1.2">',
        *lines,
        "</g>",
        '<g id="vertices" fill="#dc2626">',
        *dots,
        "</g>",
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
