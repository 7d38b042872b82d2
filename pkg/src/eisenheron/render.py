"""SVG figures: filled lattice triangles over a dotted point field.

All layout happens in exact rationals; the single irrational constant
sqrt(3)/2 enters once, as a fixed decimal approximation, when lattice
coordinates become document coordinates. Output is deterministic: the same
figure yields byte-identical SVG.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FigureError
from .lattice import EisensteinPoint, LatticeTriangle

# sqrt(3) to 16 significant digits; used only when emitting coordinates.
SQRT3 = Fraction(1732050807568877, 10**15)

_DOT_FILL = "#606060"
_STROKE_WIDTH = Fraction(1, 10)  # lattice units


@dataclass(frozen=True)
class LatticeExtent:
    """Inclusive box of lattice coordinates: all (m, n) with
    m_min <= m <= m_max and n_min <= n <= n_max."""

    m_min: int
    m_max: int
    n_min: int
    n_max: int

    def __post_init__(self) -> None:
        if self.m_min > self.m_max or self.n_min > self.n_max:
            raise FigureError(
                f"empty lattice extent ({self.m_min}..{self.m_max}, "
                f"{self.n_min}..{self.n_max})"
            )

    def contains(self, p: EisensteinPoint) -> bool:
        return self.m_min <= p.m <= self.m_max and self.n_min <= p.n <= self.n_max

    def point_count(self) -> int:
        return (self.m_max - self.m_min + 1) * (self.n_max - self.n_min + 1)

    def points(self) -> list[EisensteinPoint]:
        return [
            EisensteinPoint(m, n)
            for n in range(self.n_min, self.n_max + 1)
            for m in range(self.m_min, self.m_max + 1)
        ]


@dataclass(frozen=True)
class FigureSpec:
    """Triangles (with fill and stroke colors) over a dotted extent.

    dot_radius and scale are document units; scale is the length of one
    lattice step.
    """

    triangles: tuple[tuple[LatticeTriangle, str, str], ...]
    extent: LatticeExtent
    scale: Fraction = Fraction(40)
    dot_radius: Fraction = Fraction(5, 2)

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise FigureError(f"scale must be positive, got {self.scale}")
        if self.dot_radius <= 0:
            raise FigureError(f"dot_radius must be positive, got {self.dot_radius}")
        for i, (tri, _, _) in enumerate(self.triangles):
            for v in tri.vertices:
                if not self.extent.contains(v):
                    raise FigureError(
                        f"triangles[{i}]: vertex ({v.m}, {v.n}) lies outside the extent"
                    )


def to_cartesian(p: EisensteinPoint, scale: Fraction) -> tuple[Fraction, Fraction]:
    """Document coordinates of a lattice point: (scale*(m - n/2), scale*n*sqrt(3)/2)."""
    return scale * Fraction(2 * p.m - p.n, 2), scale * p.n * SQRT3 / 2


def _fmt(x: Fraction) -> str:
    """Exact decimal rendering with <= 6 places, no trailing zeros."""
    q = round(x * 10**6)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(abs(q), 10**6)
    text = f"{whole}.{frac:06d}".rstrip("0").rstrip(".")
    return "0" if text == "0" else sign + text


def render_svg(fig: FigureSpec) -> str:
    """A standalone SVG 1.1 document: one circle per lattice point in the
    extent, one filled polygon per triangle, y axis pointing up."""
    corners = [
        EisensteinPoint(m, n)
        for m in (fig.extent.m_min, fig.extent.m_max)
        for n in (fig.extent.n_min, fig.extent.n_max)
    ]
    xs = [to_cartesian(p, fig.scale)[0] for p in corners]
    ys = [to_cartesian(p, fig.scale)[1] for p in corners]
    margin = fig.scale / 2 + fig.dot_radius
    x_lo, x_hi = min(xs) - margin, max(xs) + margin
    y_lo, y_hi = min(ys) - margin, max(ys) + margin

    def place(p: EisensteinPoint) -> tuple[Fraction, Fraction]:
        x, y = to_cartesian(p, fig.scale)
        return x - x_lo, y_hi - y  # shift to the viewport, flip y

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(x_hi - x_lo)}" height="{_fmt(y_hi - y_lo)}" '
        f'viewBox="0 0 {_fmt(x_hi - x_lo)} {_fmt(y_hi - y_lo)}">',
    ]
    for p in fig.extent.points():
        cx, cy = place(p)
        lines.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(fig.dot_radius)}" fill="{_DOT_FILL}"/>'
        )
    stroke_width = _fmt(_STROKE_WIDTH * fig.scale)
    for tri, fill, stroke in fig.triangles:
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (place(v) for v in tri.vertices)
        )
        lines.append(
            f'<polygon points="{pts}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{stroke_width}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _tri(*mn: tuple[int, int]) -> LatticeTriangle:
    return LatticeTriangle(tuple(EisensteinPoint(m, n) for m, n in mn))


def figure1_spec() -> FigureSpec:
    """The five showcase triangles on one dotted field: the isosceles (7,7,2),
    the scalene (7,5,3), and the equilaterals (3,3,3), (2,2,2), (1,1,1)."""
    triangles = (
        (_tri((0, 0), (13, 11), (11, 13)), "#c8e6c9", "#2e7d32"),
        (_tri((0, 0), (13, 11), (10, 5)), "#ffcdd2", "#c62828"),
        (_tri((11, 6), (17, 9), (14, 12)), "#bbdefb", "#1565c0"),
        (_tri((10, 2), (14, 4), (12, 6)), "#9fcdf7", "#1565c0"),
        (_tri((8, 0), (10, 1), (9, 2)), "#7fb9f2", "#1565c0"),
    )
    return FigureSpec(triangles, LatticeExtent(-1, 18, -1, 14))


def figure_spec_from_json(data: object) -> FigureSpec:
    """Build a FigureSpec from parsed JSON, naming the offending field on error.

    Expected shape:
        {"extent": {"m_min": .., "m_max": .., "n_min": .., "n_max": ..},
         "scale": number-or-string, "dot_radius": number-or-string,
         "triangles": [{"vertices": [[m, n], [m, n], [m, n]],
                        "fill": "#rrggbb", "stroke": "#rrggbb"}, ...]}
    """
    if not isinstance(data, dict):
        raise FigureError("figure spec: top level must be an object")

    def rational(value: object, where: str) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            raise FigureError(f"{where}: expected a number or decimal string")
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise FigureError(f"{where}: not a valid rational: {value!r}") from None

    extent_obj = data.get("extent")
    if not isinstance(extent_obj, dict):
        raise FigureError("extent: required object with m_min/m_max/n_min/n_max")
    bounds = {}
    for key in ("m_min", "m_max", "n_min", "n_max"):
        value = extent_obj.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise FigureError(f"extent.{key}: required integer")
        bounds[key] = value
    extent = LatticeExtent(**bounds)

    triangles_obj = data.get("triangles")
    if not isinstance(triangles_obj, list) or not triangles_obj:
        raise FigureError("triangles: required non-empty array")
    triangles = []
    for i, entry in enumerate(triangles_obj):
        if not isinstance(entry, dict):
            raise FigureError(f"triangles[{i}]: expected an object")
        vertices = entry.get("vertices")
        if (
            not isinstance(vertices, list)
            or len(vertices) != 3
            or not all(
                isinstance(v, list)
                and len(v) == 2
                and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
                for v in vertices
            )
        ):
            raise FigureError(f"triangles[{i}].vertices: expected three [m, n] pairs")
        try:
            tri = _tri(*[(v[0], v[1]) for v in vertices])
        except ValueError as exc:
            raise FigureError(f"triangles[{i}].vertices: {exc}") from None
        fill = entry.get("fill", "#c8e6c9")
        stroke = entry.get("stroke", "#2e7d32")
        if not isinstance(fill, str):
            raise FigureError(f"triangles[{i}].fill: expected a string")
        if not isinstance(stroke, str):
            raise FigureError(f"triangles[{i}].stroke: expected a string")
        triangles.append((tri, fill, stroke))

    kwargs = {}
    if "scale" in data:
        kwargs["scale"] = rational(data["scale"], "scale")
    if "dot_radius" in data:
        kwargs["dot_radius"] = rational(data["dot_radius"], "dot_radius")
    return FigureSpec(tuple(triangles), extent, **kwargs)
