"""Triangle model for side lengths that are integer multiples of sqrt(3).

A triangle is held as positive integers (a, b, c) meaning sides a*sqrt(3),
b*sqrt(3), c*sqrt(3). The transformed coordinates u = -a+b+c, v = a-b+c,
w = a+b-c together with p = a+b+c are positive integers sharing one parity,
and the squared-area identity

    n^2 = 3*p*u*v*w

decides exactly whether the area is an integer multiple of sqrt(3)/4 (we call
such triangles lattice-Heron). Perimeter-dominance (perimeter > area) is the
exact integer comparison 3*u*v*w < 16*p. No floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidTriangleError, NotLatticeHeronError
from .intmath import perfect_square_root


@dataclass(frozen=True, eq=False)
class TriangleSides:
    """Sides (a, b, c) in units of sqrt(3); compared and hashed as a multiset."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for s in (self.a, self.b, self.c):
            if not isinstance(s, int) or s < 1:
                raise InvalidTriangleError(
                    f"sides must be positive integers, got ({self.a}, {self.b}, {self.c})"
                )
        a, b, c = self.a, self.b, self.c
        if b + c <= a or a + c <= b or a + b <= c:
            raise InvalidTriangleError(
                f"({a}, {b}, {c}) violates the strict triangle inequality"
            )

    def sorted_desc(self) -> tuple[int, int, int]:
        """Canonical ordering a >= b >= c."""
        s = sorted((self.a, self.b, self.c), reverse=True)
        return s[0], s[1], s[2]

    @property
    def perimeter_coeff(self) -> int:
        """Perimeter divided by sqrt(3)."""
        return self.a + self.b + self.c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangleSides):
            return NotImplemented
        return self.sorted_desc() == other.sorted_desc()

    def __hash__(self) -> int:
        return hash(self.sorted_desc())


@dataclass(frozen=True)
class UvwTriple:
    """Sorted triple u <= v <= w of one shared parity, with p = u + v + w.

    The inverse images a = (v+w)/2, b = (u+w)/2, c = (u+v)/2 are integers
    exactly because of the parity constraint.
    """

    u: int
    v: int
    w: int
    p: int

    def __post_init__(self) -> None:
        if not 1 <= self.u <= self.v <= self.w:
            raise InvalidTriangleError(
                f"(u, v, w) must be positive and sorted, got ({self.u}, {self.v}, {self.w})"
            )
        if not self.u % 2 == self.v % 2 == self.w % 2:
            raise InvalidTriangleError(
                f"(u, v, w) must share one parity, got ({self.u}, {self.v}, {self.w})"
            )
        if self.p != self.u + self.v + self.w:
            raise InvalidTriangleError(
                f"p must equal u+v+w, got p={self.p} for ({self.u}, {self.v}, {self.w})"
            )


def uvw_from_sides(t: TriangleSides) -> UvwTriple:
    """Transform sides to the sorted (u, v, w) triple with its perimeter sum."""
    u, v, w = sorted((-t.a + t.b + t.c, t.a - t.b + t.c, t.a + t.b - t.c))
    return UvwTriple(u, v, w, t.perimeter_coeff)


def sides_from_uvw(q: UvwTriple) -> TriangleSides:
    """Inverse transform; returns sides in descending order."""
    return TriangleSides((q.v + q.w) // 2, (q.u + q.w) // 2, (q.u + q.v) // 2)


def area_quantum(t: TriangleSides) -> int | None:
    """The integer n with area = n*sqrt(3)/4, or None when no such n exists."""
    q = uvw_from_sides(t)
    return perfect_square_root(3 * q.p * q.u * q.v * q.w)


def is_perimeter_dominant(t: TriangleSides) -> bool:
    """Whether the perimeter strictly exceeds the area.

    Exact test: 3*u*v*w < 16*(u+v+w). Equality (perimeter == area) counts as
    not dominant. Agrees with n < 4*p whenever the area quantum n exists.
    """
    q = uvw_from_sides(t)
    return 3 * q.u * q.v * q.w < 16 * q.p


def exact_measures(t: TriangleSides) -> tuple[int, Fraction]:
    """(perimeter/sqrt(3), area/sqrt(3)) as exact values; area comes out n/4."""
    n = area_quantum(t)
    if n is None:
        raise NotLatticeHeronError(
            f"({t.a}, {t.b}, {t.c}) has no area of the form n*sqrt(3)/4"
        )
    return t.perimeter_coeff, Fraction(n, 4)
