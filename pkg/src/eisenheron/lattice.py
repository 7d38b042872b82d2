"""Exact geometry on the triangular lattice spanned by 1 and w = -1/2 + i*sqrt(3)/2.

Points are integer pairs (m, n) standing for m + n*w. Squared distances
between lattice points are exactly the values m^2 - m*n + n^2 (the Loeschian
numbers), and every triangle with lattice vertices has area k*sqrt(3)/4 for an
integer k, so all geometry here stays in plain integers. Cartesian values
appear only at render time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmbeddabilityViolationError, NotLatticeHeronError
from .intmath import isqrt, perfect_square_root
from .triangles import TriangleSides, area_quantum


@dataclass(frozen=True, order=True)
class EisensteinPoint:
    """The lattice point m + n*w; ordering is lexicographic on (m, n)."""

    m: int
    n: int

    def __add__(self, other: EisensteinPoint) -> EisensteinPoint:
        return EisensteinPoint(self.m + other.m, self.n + other.n)

    def __sub__(self, other: EisensteinPoint) -> EisensteinPoint:
        return EisensteinPoint(self.m - other.m, self.n - other.n)

    def __neg__(self) -> EisensteinPoint:
        return EisensteinPoint(-self.m, -self.n)

    def rotate60(self) -> EisensteinPoint:
        """Rotation by 60 degrees about the origin (multiplication by 1 + w)."""
        return EisensteinPoint(self.m - self.n, self.m)

    def reflect(self) -> EisensteinPoint:
        """The orientation-reversing lattice symmetry swapping the basis rays."""
        return EisensteinPoint(self.n, self.m)


ORIGIN = EisensteinPoint(0, 0)


def norm(p: EisensteinPoint) -> int:
    """Squared Euclidean length of p: m^2 - m*n + n^2."""
    return p.m * p.m - p.m * p.n + p.n * p.n


def squared_distance(p: EisensteinPoint, q: EisensteinPoint) -> int:
    """Squared Euclidean distance; zero exactly when p == q."""
    return norm(p - q)


def symmetry_images(p: EisensteinPoint) -> tuple[EisensteinPoint, ...]:
    """The images of p under the 12 point symmetries of the lattice.

    Index 2k is rotation by k*60 degrees; index 2k+1 is that rotation followed
    by the reflection. The same index always denotes the same group element,
    so applying one index across several points is a rigid motion.
    """
    images = []
    q = p
    for _ in range(6):
        images.append(q)
        images.append(q.reflect())
        q = q.rotate60()
    return tuple(images)


def _det(p0: EisensteinPoint, p1: EisensteinPoint, p2: EisensteinPoint) -> int:
    e1 = p1 - p0
    e2 = p2 - p0
    return e1.m * e2.n - e2.m * e1.n


@dataclass(frozen=True)
class LatticeTriangle:
    """Three distinct, non-collinear lattice points."""

    vertices: tuple[EisensteinPoint, EisensteinPoint, EisensteinPoint]

    def __post_init__(self) -> None:
        p0, p1, p2 = self.vertices
        if _det(p0, p1, p2) == 0:
            raise ValueError(f"degenerate lattice triangle {self.vertices}")

    def squared_sides(self) -> tuple[int, int, int]:
        """The three squared side lengths, ascending."""
        p0, p1, p2 = self.vertices
        s = sorted(
            (squared_distance(p0, p1), squared_distance(p0, p2), squared_distance(p1, p2))
        )
        return s[0], s[1], s[2]


def area_quantum_of(tri: LatticeTriangle) -> int:
    """The integer k with area = k*sqrt(3)/4 (edge-vector determinant)."""
    return abs(_det(*tri.vertices))


def represent_loeschian(value: int) -> list[EisensteinPoint]:
    """All lattice points (m, n) with m^2 - m*n + n^2 == value, sorted.

    Empty when value is not a Loeschian number. Scans n over the interval
    forced by the discriminant 4*value - 3*n^2 >= 0 and solves the remaining
    quadratic in m exactly.
    """
    if value < 0:
        raise ValueError(f"Loeschian values are non-negative, got {value}")
    if value == 0:
        return [ORIGIN]
    points = set()
    bound = isqrt(4 * value // 3) + 2
    for n in range(-bound, bound + 1):
        disc = 4 * value - 3 * n * n
        if disc < 0:
            continue
        s = perfect_square_root(disc)
        if s is None:
            continue
        for twice_m in {n + s, n - s}:
            if twice_m % 2 == 0:
                points.add(EisensteinPoint(twice_m // 2, n))
    return sorted(points)


def canonicalize(tri: LatticeTriangle) -> LatticeTriangle:
    """Canonical representative of tri under translations and point symmetries.

    For each of the 12 point symmetries: apply it to all vertices, translate
    the lexicographically least vertex to the origin, sort the vertices. The
    least of the twelve results is the canonical form, so congruent embeddings
    related by any lattice symmetry canonicalize identically, and the map is
    idempotent.
    """
    orbits = [symmetry_images(v) for v in tri.vertices]
    best: tuple[EisensteinPoint, ...] | None = None
    for i in range(12):
        moved = [orbit[i] for orbit in orbits]
        least = min(moved)
        candidate = tuple(sorted(v - least for v in moved))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return LatticeTriangle(best)


def _orbit_representatives(points: list[EisensteinPoint]) -> list[EisensteinPoint]:
    """One representative (the least) per point-symmetry orbit, sorted."""
    return sorted({min(symmetry_images(p)) for p in points})


def _embeddings(t: TriangleSides, first_only: bool) -> list[LatticeTriangle]:
    n = area_quantum(t)
    if n is None:
        raise NotLatticeHeronError(
            f"({t.a}, {t.b}, {t.c}) has no area of the form n*sqrt(3)/4"
        )
    a, b, c = t.sorted_desc()
    target = sorted((3 * a * a, 3 * b * b, 3 * c * c))
    found = {}
    # One vertex is pinned at the origin; the vertex at squared distance
    # 3a^2 only needs one candidate per symmetry orbit, since any solution
    # maps to one with a representative P under the point group.
    for p in _orbit_representatives(represent_loeschian(3 * a * a)):
        for q in represent_loeschian(3 * b * b):
            if squared_distance(p, q) != 3 * c * c:
                continue
            tri = canonicalize(LatticeTriangle((ORIGIN, p, q)))
            if list(tri.squared_sides()) != target or area_quantum_of(tri) != n:
                raise EmbeddabilityViolationError(
                    f"embedding of ({a}, {b}, {c}) failed verification: "
                    f"sides {tri.squared_sides()} area {area_quantum_of(tri)}, "
                    f"expected {tuple(target)} and {n}"
                )
            found.setdefault(tri.vertices, tri)
            if first_only:
                return [tri]
    if not found:
        raise EmbeddabilityViolationError(
            f"exhausted the embedding search for ({a}, {b}, {c}); every triangle "
            f"with sides in sqrt(3)*N and integral area quantum must embed, so "
            f"this indicates a bug"
        )
    return [found[key] for key in sorted(found)]


def embed(t: TriangleSides) -> LatticeTriangle:
    """A lattice realization of t: origin vertex, squared sides {3a^2, 3b^2, 3c^2},
    area quantum matching the triangle's own. Deterministic and canonicalized.

    Raises NotLatticeHeronError when t has no integral area quantum and
    EmbeddabilityViolationError if the exhaustive scan finds nothing (which
    would mean a bug, not a mathematical possibility).
    """
    return _embeddings(t, first_only=True)[0]


def embed_all(t: TriangleSides) -> list[LatticeTriangle]:
    """Every embedding of t up to lattice symmetry, canonicalized and sorted."""
    return _embeddings(t, first_only=False)
