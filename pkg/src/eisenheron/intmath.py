"""Exact integer primitives: floor square roots, perfect-square tests, square residues.

Everything here operates on Python's arbitrary-precision ints; nothing rounds
or overflows at any magnitude.
"""

from __future__ import annotations

import math
from functools import lru_cache


def isqrt(n: int) -> int:
    """Floor of the square root: the r with r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise ValueError(f"isqrt is undefined for negative input {n}")
    return math.isqrt(n)


@lru_cache(maxsize=None)
def squares_mod(m: int) -> frozenset[int]:
    """The residues {k^2 mod m : 0 <= k < m} that perfect squares can take."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return frozenset(k * k % m for k in range(m))


# A perfect square must land in squares_mod(m) for every m. These four moduli
# reject the vast majority of non-squares before an isqrt runs; enumeration
# over (u, v, w) triples calls the test in its innermost loop.
_FILTERS = tuple((m, squares_mod(m)) for m in (64, 63, 65, 11))


def is_perfect_square(n: int) -> bool:
    """Whether n is k^2 for some integer k (False for negative n)."""
    if n < 0:
        return False
    for m, residues in _FILTERS:
        if n % m not in residues:
            return False
    r = math.isqrt(n)
    return r * r == n


def perfect_square_root(n: int) -> int | None:
    """The exact r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        raise ValueError(f"perfect_square_root is undefined for negative input {n}")
    if not is_perfect_square(n):
        return None
    return math.isqrt(n)
