"""Exact solvers for the equations a*x^2 - d*y^2 = 1 with a in {1, 4}.

a=1 is the classical Pell equation: the fundamental solution comes from the
continued-fraction expansion of sqrt(d) and the rest from the usual
composition law. a=4 forms are solved through the a=1 form: among the
solutions (X, y) of X^2 - d*y^2 = 1, keep those with even X and set x = X/2.

Three forms drive the triangle families and each has a matching two-term
linear recurrence for its x-values:

    family "a": 4x^2 -  3y^2 = 1    x_n = 14*x_{n-1} - x_{n-2}, seeds (1, 13)
    family "b":  x^2 -  3y^2 = 1    x_n =  4*x_{n-1} - x_{n-2}, seeds (2, 7)
    family "c": 4x^2 - 15y^2 = 1    x_n = 62*x_{n-1} - x_{n-2}, seeds (2, 122)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .intmath import is_perfect_square, isqrt, perfect_square_root


@dataclass(frozen=True)
class PellForm:
    """The equation a*x^2 - d*y^2 = 1 with a in {1, 4} and d a positive non-square."""

    a: int
    d: int

    def __post_init__(self) -> None:
        if self.a not in (1, 4):
            raise ValueError(f"leading coefficient must be 1 or 4, got {self.a}")
        if self.d < 2 or is_perfect_square(self.d):
            raise ValueError(f"d must be a non-square integer >= 2, got {self.d}")

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x - self.d * y * y


@dataclass(frozen=True)
class PellSolution:
    """One positive solution; index is the 1-based position in ascending order."""

    x: int
    y: int
    index: int


@dataclass(frozen=True)
class Recurrence:
    """x_n = coefficient * x_{n-1} - x_{n-2} started from two seed values."""

    coefficient: int
    seeds: tuple[int, int]

    def terms(self, count: int) -> list[int]:
        if count < 0:
            raise ValueError("count must be non-negative")
        xs = list(self.seeds[:count])
        while len(xs) < count:
            xs.append(self.coefficient * xs[-1] - xs[-2])
        return xs


FAMILY_TAGS = ("a", "b", "c")

FORMS: dict[str, PellForm] = {
    "a": PellForm(4, 3),
    "b": PellForm(1, 3),
    "c": PellForm(4, 15),
}

_RECURRENCES: dict[str, Recurrence] = {
    "a": Recurrence(14, (1, 13)),
    "b": Recurrence(4, (2, 7)),
    "c": Recurrence(62, (2, 122)),
}


def recurrence_for(family: str) -> Recurrence:
    """The x-value recurrence of family "a", "b", or "c"."""
    if family not in _RECURRENCES:
        raise ValueError(f"family must be one of {FAMILY_TAGS}, got {family!r}")
    return _RECURRENCES[family]


def fundamental_solution(d: int) -> tuple[int, int]:
    """Minimal positive (X, y) with X^2 - d*y^2 = 1.

    Walks the convergents of the continued fraction of sqrt(d) until one
    satisfies the equation; that convergent is the fundamental solution.
    """
    if d < 2 or is_perfect_square(d):
        raise ValueError(f"d must be a non-square integer >= 2, got {d}")
    a0 = isqrt(d)
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


def base_solutions(d: int) -> Iterator[tuple[int, int]]:
    """All positive solutions of X^2 - d*y^2 = 1 in ascending order."""
    x1, y1 = fundamental_solution(d)
    x, y = x1, y1
    while True:
        yield x, y
        x, y = x1 * x + d * y1 * y, x1 * y + y1 * x


def solution_stream(form: PellForm) -> Iterator[PellSolution]:
    """Ascending solutions of the form, indexed from 1.

    For a=4 this is the even-X subsequence of the a=1 solutions with x = X/2.
    """
    index = 0
    for big_x, y in base_solutions(form.d):
        if form.a == 4:
            if big_x % 2:
                continue
            x = big_x // 2
        else:
            x = big_x
        index += 1
        yield PellSolution(x, y, index)


def solutions(form: PellForm, count: int) -> list[PellSolution]:
    """The first `count` solutions of the form."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    return list(islice(solution_stream(form), count))


def y_for_x(form: PellForm, x: int) -> int | None:
    """Recover y from x: the positive integer with a*x^2 - d*y^2 = 1, if any."""
    t = form.a * x * x - 1
    if t <= 0 or t % form.d:
        return None
    y = perfect_square_root(t // form.d)
    if y is None or y < 1:
        return None
    return y
