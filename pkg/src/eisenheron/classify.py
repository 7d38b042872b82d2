"""Classification of perimeter-dominant lattice-Heron triangles.

Every perimeter-dominant triangle with sides in sqrt(3)*N and area in
(sqrt(3)/4)*N is the equilateral (3, 3, 3) or a member of one of three
infinite Pell families:

    family_a: (x, x, 1)        with 4x^2 -  3y^2 = 1, area quantum n = 3y
    family_b: (x, x, 2)        with  x^2 -  3y^2 = 1, n = 12y
    family_c: (3x+1, 3x-1, 3)  with 4x^2 - 15y^2 = 1, n = 45y

The case analysis behind the closed form lives in `candidate_cases` (the ten
possible (u, v) pairs under the dominance inequality, transcribed) and
`rederive_case_bounds` (the same table recomputed from first principles, as a
guard against transcription slips). `obstruction_mod8` and
`finite_case_check` dispose of the non-family rows.

`enumerate_perimeter_dominant` is the independent cross-check: a brute-force
scan of (u, v, w) triples that never consults the case table or the families.
Its output agreeing with the closed form is this package's central invariant;
`classify` raising TheoremViolationError is the matching tripwire for single
triangles.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import TheoremViolationError
from .intmath import is_perfect_square, isqrt, perfect_square_root, squares_mod
from .pell import FAMILY_TAGS, FORMS, solution_stream, solutions
from .triangles import (
    TriangleSides,
    UvwTriple,
    area_quantum,
    is_perimeter_dominant,
    sides_from_uvw,
    uvw_from_sides,
)

# w-constraint kinds
W_UNBOUNDED = "unbounded-with-parity"
W_BOUNDED = "bounded-range"
W_SINGLE = "single-value"

# case dispositions
FAMILY = "family"
ELIMINATED_MOD8 = "eliminated-mod-8"
ELIMINATED_FINITE = "eliminated-finite-check"
ELIMINATED_NOT_SQUARE = "eliminated-not-square"
EQUILATERAL = "equilateral"

EQUILATERAL3 = "equilateral3"


@dataclass(frozen=True)
class CandidateCase:
    """One (u, v) case: n^2 = coefficient * w * (w + shift) over admissible w.

    w runs over the values >= v with the parity of u; w_max is None exactly
    for the unbounded rows.
    """

    u: int
    v: int
    w_kind: str
    w_max: int | None
    disposition: str

    @property
    def coefficient(self) -> int:
        return 3 * self.u * self.v

    @property
    def shift(self) -> int:
        return self.u + self.v

    @property
    def w_min(self) -> int:
        return self.v

    @property
    def w_parity(self) -> int:
        return self.u % 2

    def n_squared(self, w: int) -> int:
        return self.coefficient * w * (w + self.shift)

    @property
    def formula(self) -> str:
        return f"{self.coefficient}w(w+{self.shift})"

    def admissible_w(self) -> range:
        """The finitely many admissible w; only for bounded rows."""
        if self.w_max is None:
            raise ValueError(f"case ({self.u}, {self.v}) has unbounded w")
        return range(self.w_min, self.w_max + 1, 2)


def candidate_cases() -> list[CandidateCase]:
    """The ten possible (u, v) cases with their w-bounds and fates, as transcribed."""
    return [
        CandidateCase(1, 1, W_UNBOUNDED, None, FAMILY),
        CandidateCase(1, 3, W_UNBOUNDED, None, ELIMINATED_MOD8),
        CandidateCase(1, 5, W_UNBOUNDED, None, FAMILY),
        CandidateCase(1, 7, W_BOUNDED, 25, ELIMINATED_MOD8),
        CandidateCase(1, 9, W_BOUNDED, 13, ELIMINATED_FINITE),
        CandidateCase(1, 11, W_SINGLE, 11, ELIMINATED_NOT_SQUARE),
        CandidateCase(2, 2, W_UNBOUNDED, None, FAMILY),
        CandidateCase(2, 4, W_BOUNDED, 10, ELIMINATED_FINITE),
        CandidateCase(2, 6, W_SINGLE, 6, ELIMINATED_NOT_SQUARE),
        CandidateCase(3, 3, W_BOUNDED, 7, EQUILATERAL),
    ]


def _mod8_obstructed(case: CandidateCase) -> bool:
    squares = squares_mod(8)
    return all(
        case.n_squared(w) % 8 not in squares
        for w in range(8)
        if w % 2 == case.w_parity
    )


def _derive_disposition(case: CandidateCase) -> str:
    # Single-value rows are settled by evaluating their one n^2 directly;
    # bounded ranges try the residue obstruction first, then enumerate;
    # unbounded rows survive as families unless the residues kill them.
    if case.w_kind == W_SINGLE:
        assert case.w_max is not None
        if is_perfect_square(case.n_squared(case.w_max)):
            return EQUILATERAL if case.u == case.v == case.w_max else FAMILY
        return ELIMINATED_NOT_SQUARE
    if _mod8_obstructed(case):
        return ELIMINATED_MOD8
    if case.w_kind == W_UNBOUNDED:
        return FAMILY
    square_ws = [w for w in case.admissible_w() if is_perfect_square(case.n_squared(w))]
    if not square_ws:
        return ELIMINATED_FINITE
    if all(case.u == case.v == w for w in square_ws):
        return EQUILATERAL
    return FAMILY


def rederive_case_bounds() -> list[CandidateCase]:
    """Recompute the candidate table from the dominance inequality alone.

    3uvw < 16(u+v+w) with 1 <= u <= v <= w and shared parity forces u <= 3,
    then bounds v for each u and w for each (u, v):

        u:      3/u^2 > 3/16 requires u < 4
        v:      taking w = v, 32v + 16u > 3uv^2
        w:      w*(3uv - 16) < 16*(u + v); unbounded when 3uv < 16

    Dispositions are re-derived too. The result must equal candidate_cases()
    row for row; any difference means a transcription error on one side.
    """
    cases = []
    u = 1
    while 3 * u * u * u < 16 * 3 * u:
        v = u
        while 32 * v + 16 * u > 3 * u * v * v:
            if 3 * u * v > 16:
                w_max = (16 * (u + v) - 1) // (3 * u * v - 16)
                w_max -= (w_max - v) % 2
                kind = W_SINGLE if w_max == v else W_BOUNDED
            else:
                w_max = None
                kind = W_UNBOUNDED
            row = CandidateCase(u, v, kind, w_max, "undecided")
            cases.append(CandidateCase(u, v, kind, w_max, _derive_disposition(row)))
            v += 2
        u += 1
    return cases


@dataclass(frozen=True)
class ResidueObstructionReport:
    """Proof record: the case's n^2 avoids every square residue mod `modulus`."""

    case: CandidateCase
    modulus: int
    square_residues: frozenset[int]
    values: tuple[tuple[int, int], ...]  # (w residue, n^2 mod modulus)

    @property
    def passed(self) -> bool:
        return all(value not in self.square_residues for _, value in self.values)


def obstruction_mod8(case: CandidateCase) -> ResidueObstructionReport:
    """Exhaustive residue check that eliminates a mod-8-obstructed case."""
    if case.disposition != ELIMINATED_MOD8:
        raise ValueError(
            f"case ({case.u}, {case.v}) is not eliminated by the mod-8 argument"
        )
    values = tuple(
        (w, case.n_squared(w) % 8) for w in range(8) if w % 2 == case.w_parity
    )
    return ResidueObstructionReport(case, 8, squares_mod(8), values)


@dataclass(frozen=True)
class FiniteCheckReport:
    """Proof record: n^2 evaluated at every admissible w of a bounded case."""

    case: CandidateCase
    evaluations: tuple[tuple[int, int, int | None], ...]  # (w, n^2, root or None)

    @property
    def square_ws(self) -> tuple[int, ...]:
        return tuple(w for w, _, root in self.evaluations if root is not None)

    @property
    def eliminated(self) -> bool:
        return not self.square_ws


def finite_case_check(case: CandidateCase) -> FiniteCheckReport:
    """Evaluate a bounded case at each admissible w and report square status."""
    if case.w_kind == W_UNBOUNDED:
        raise ValueError(f"case ({case.u}, {case.v}) has unbounded w")
    evaluations = tuple(
        (w, case.n_squared(w), perfect_square_root(case.n_squared(w)))
        for w in case.admissible_w()
    )
    return FiniteCheckReport(case, evaluations)


@dataclass(frozen=True)
class FamilyId:
    """Which classification branch a triangle belongs to, with its Pell witness.

    The equilateral exception carries no witness; family members carry the
    (x, y) pair solving their family's equation and its 1-based index.
    """

    tag: str
    x: int | None = None
    y: int | None = None
    index: int | None = None

    def __post_init__(self) -> None:
        if self.tag == EQUILATERAL3:
            if not (self.x is None and self.y is None and self.index is None):
                raise ValueError("the equilateral exception carries no Pell witness")
            return
        if self.tag not in ("family_a", "family_b", "family_c"):
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.x is None or self.y is None or self.index is None:
            raise ValueError(f"{self.tag} members need a Pell witness and index")
        if self.index < 1:
            raise ValueError(f"index must be 1-based, got {self.index}")
        form = FORMS[self.tag[-1]]
        if form.evaluate(self.x, self.y) != 1:
            raise ValueError(
                f"({self.x}, {self.y}) does not solve "
                f"{form.a}x^2 - {form.d}y^2 = 1"
            )


@dataclass(frozen=True)
class ClassifiedTriangle:
    """A perimeter-dominant lattice-Heron triangle with its branch and quantum."""

    sides: TriangleSides
    n: int
    family: FamilyId

    def __post_init__(self) -> None:
        if not is_perimeter_dominant(self.sides):
            raise ValueError(f"{self.sides} is not perimeter-dominant")
        if area_quantum(self.sides) != self.n:
            raise ValueError(f"{self.sides} does not have area quantum {self.n}")


def _pell_index(family: str, x: int) -> int | None:
    """1-based position of x in the family's ascending x-sequence, if present."""
    for sol in solution_stream(FORMS[family]):
        if sol.x == x:
            return sol.index
        if sol.x > x:
            return None


def classify(t: TriangleSides) -> ClassifiedTriangle | None:
    """Place t in the classification, or None when it falls outside it.

    None means t is not perimeter-dominant or its area is not an integer
    multiple of sqrt(3)/4. A triangle passing both gates but matching no
    branch raises TheoremViolationError: the classification says that input
    cannot exist, so reaching it indicates a bug somewhere in this package.
    """
    if not is_perimeter_dominant(t):
        return None
    n = area_quantum(t)
    if n is None:
        return None
    a, b, c = t.sorted_desc()
    family = None
    if (a, b, c) == (3, 3, 3):
        family = FamilyId(EQUILATERAL3)
    elif a == b and c == 1 and n % 3 == 0:
        x, y = a, n // 3
        if 4 * x * x - 3 * y * y == 1:
            family = FamilyId("family_a", x, y, _pell_index("a", x))
    elif a == b and c == 2 and n % 12 == 0:
        x, y = a, n // 12
        if x * x - 3 * y * y == 1:
            family = FamilyId("family_b", x, y, _pell_index("b", x))
    elif c == 3 and a - b == 2 and (a + b) % 6 == 0 and n % 45 == 0:
        x, y = (a + b) // 6, n // 45
        if 4 * x * x - 15 * y * y == 1:
            family = FamilyId("family_c", x, y, _pell_index("c", x))
    if family is None:
        raise TheoremViolationError(
            f"({a}, {b}, {c}) is perimeter-dominant with area quantum {n} "
            f"but matches no classification branch"
        )
    return ClassifiedTriangle(t, n, family)


def family_member(family: str, k: int) -> ClassifiedTriangle:
    """The k-th triangle (1-based) of family "a", "b", or "c"."""
    if family not in FAMILY_TAGS:
        raise ValueError(f"family must be one of {FAMILY_TAGS}, got {family!r}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    sol = solutions(FORMS[family], k)[-1]
    if family == "a":
        sides = TriangleSides(sol.x, sol.x, 1)
        n = 3 * sol.y
    elif family == "b":
        sides = TriangleSides(sol.x, sol.x, 2)
        n = 12 * sol.y
    else:
        sides = TriangleSides(3 * sol.x + 1, 3 * sol.x - 1, 3)
        n = 45 * sol.y
    return ClassifiedTriangle(sides, n, FamilyId(f"family_{family}", sol.x, sol.y, k))


def _scan_w_range(bounds: tuple[int, int]) -> list[tuple[int, int, int, int]]:
    """Brute-force hits (u, v, w, n) with w in [lo, hi].

    Scans every sorted same-parity triple u <= v <= w in the slab, keeping
    those that are perimeter-dominant with 3(u+v+w)uvw a perfect square. The
    u- and v-loop cutoffs below are consequences of the dominance inequality
    being monotone in each variable, nothing else.
    """
    lo, hi = bounds
    hits = []
    for w in range(max(1, lo), hi + 1):
        u = 2 if w % 2 == 0 else 1  # u, v, w must share one parity
        while u <= w:
            # If even v = u fails dominance, every larger u does too.
            if not 3 * u * u * w < 16 * (2 * u + w):
                break
            for v in range(u, w + 1, 2):
                if not 3 * u * v * w < 16 * (u + v + w):
                    break  # dominance is decreasing in v past this point
                n2 = 3 * (u + v + w) * u * v * w
                if is_perfect_square(n2):
                    hits.append((u, v, w, isqrt(n2)))
            u += 2
    return hits


def enumerate_perimeter_dominant(max_w: int, workers: int = 1) -> list[ClassifiedTriangle]:
    """Brute-force enumeration of all perimeter-dominant lattice-Heron triangles
    with w <= max_w, sorted by perimeter then by descending side triple.

    The scan itself never consults the case table or the family generators, so
    this is an independent oracle for the closed-form classification; the
    family labels are attached afterwards by `classify`. Workers > 1 partition
    the w-range across processes; the deterministic final sort makes output
    independent of scheduling.
    """
    if max_w < 1:
        raise ValueError(f"max_w must be at least 1, got {max_w}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if workers == 1 or max_w < 64:
        hits = _scan_w_range((1, max_w))
    else:
        step = -(-max_w // workers)
        chunks = [(lo, min(lo + step - 1, max_w)) for lo in range(1, max_w + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [hit for part in pool.map(_scan_w_range, chunks) for hit in part]
    triangles = []
    for u, v, w, n in hits:
        ct = classify(sides_from_uvw(UvwTriple(u, v, w, u + v + w)))
        assert ct is not None and ct.n == n  # scan guarantees both gates
        triangles.append(ct)
    triangles.sort(key=lambda ct: (ct.sides.perimeter_coeff, ct.sides.sorted_desc()))
    return triangles


def closed_form_members(max_w: int) -> list[ClassifiedTriangle]:
    """The classification's own answer restricted to w <= max_w: the
    equilateral exception plus every family member whose w fits."""
    members = []
    if max_w >= 3:
        eq = classify(TriangleSides(3, 3, 3))
        assert eq is not None
        members.append(eq)
    for family in FAMILY_TAGS:
        k = 1
        while True:
            member = family_member(family, k)
            if uvw_from_sides(member.sides).w > max_w:
                break
            members.append(member)
            k += 1
    members.sort(key=lambda ct: (ct.sides.perimeter_coeff, ct.sides.sorted_desc()))
    return members
