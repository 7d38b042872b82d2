"""End-to-end consistency checks tying the whole package together.

The central check is oracle equivalence: the brute-force triple scan and the
closed-form family generators must produce exactly the same triangle set.
The remaining suites re-derive the candidate case table, re-run the
obstruction and finite-case eliminations, confirm the y-parity behaviour of
the families, and spot-check lattice embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    ELIMINATED_FINITE,
    ELIMINATED_MOD8,
    ELIMINATED_NOT_SQUARE,
    EQUILATERAL,
    W_UNBOUNDED,
    candidate_cases,
    closed_form_members,
    enumerate_perimeter_dominant,
    family_member,
    finite_case_check,
    obstruction_mod8,
    rederive_case_bounds,
)
from .lattice import area_quantum_of, embed
from .pell import FAMILY_TAGS, FORMS, solutions
from .triangles import TriangleSides, area_quantum


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> list[str]:
        return [check.line() for check in self.checks]


def _check_oracle_equivalence(max_w: int, workers: int) -> CheckResult:
    oracle = {ct.sides.sorted_desc() for ct in enumerate_perimeter_dominant(max_w, workers)}
    closed = {ct.sides.sorted_desc() for ct in closed_form_members(max_w)}
    missing = sorted(closed - oracle)
    extra = sorted(oracle - closed)
    if missing or extra:
        return CheckResult(
            "oracle-equivalence",
            False,
            f"w <= {max_w}: missing from scan {missing}, unexplained by families {extra}",
        )
    return CheckResult(
        "oracle-equivalence",
        True,
        f"brute force and closed form agree on all {len(oracle)} triangles with w <= {max_w}",
    )


def _check_case_table() -> CheckResult:
    transcribed = candidate_cases()
    derived = rederive_case_bounds()
    if derived != transcribed:
        mismatches = [
            f"{d} != {t}" for d, t in zip(derived, transcribed) if d != t
        ] or [f"row counts differ: {len(derived)} vs {len(transcribed)}"]
        return CheckResult("case-table-rederivation", False, "; ".join(mismatches))
    return CheckResult(
        "case-table-rederivation",
        True,
        f"all {len(transcribed)} candidate rows re-derived from the dominance inequality",
    )


def _check_mod8() -> CheckResult:
    rows = [case for case in candidate_cases() if case.disposition == ELIMINATED_MOD8]
    details = []
    passed = True
    for case in rows:
        report = obstruction_mod8(case)
        passed = passed and report.passed
        values = sorted({value for _, value in report.values})
        details.append(f"({case.u},{case.v}): n^2 mod 8 in {values}")
    squares = sorted(obstruction_mod8(rows[0]).square_residues) if rows else []
    return CheckResult(
        "mod8-obstruction",
        passed and len(rows) == 2,
        f"{'; '.join(details)}; squares mod 8 are {squares}",
    )


def _check_finite_cases() -> CheckResult:
    failures = []
    for case in candidate_cases():
        if case.disposition in (ELIMINATED_FINITE, ELIMINATED_NOT_SQUARE):
            if not finite_case_check(case).eliminated:
                failures.append(f"({case.u},{case.v}) not eliminated")
        elif case.disposition == EQUILATERAL:
            report = finite_case_check(case)
            if report.square_ws != (3,):
                failures.append(
                    f"({case.u},{case.v}) squares at {report.square_ws}, expected (3,)"
                )
    if failures:
        return CheckResult("finite-case-checks", False, "; ".join(failures))
    return CheckResult(
        "finite-case-checks",
        True,
        "bounded rows eliminated; row (3,3) leaves exactly w=3 (n^2=729)",
    )


def _check_y_parity(count: int = 20) -> CheckResult:
    bad = []
    for tag in ("a", "c"):
        for sol in solutions(FORMS[tag], count):
            if sol.y % 2 == 0:
                bad.append(f"family {tag} index {sol.index} has even y={sol.y}")
    for sol in solutions(FORMS["b"], count):
        if (12 * sol.y) % 4 != 0:
            bad.append(f"family b index {sol.index} area not an integer multiple of sqrt(3)")
    if bad:
        return CheckResult("y-parity", False, "; ".join(bad))
    return CheckResult(
        "y-parity",
        True,
        f"first {count} solutions: y odd in families a and c; "
        f"family b areas are integer multiples of sqrt(3)",
    )


def _embedding_spot_triangles() -> list[tuple[str, TriangleSides, int]]:
    spots = [
        ("equilateral3", TriangleSides(3, 3, 3)),
        ("family_a x=1", TriangleSides(1, 1, 1)),
        ("family_b x=2", TriangleSides(2, 2, 2)),
        ("family_b x=7", TriangleSides(7, 7, 2)),
        ("family_c x=2", TriangleSides(7, 5, 3)),
    ]
    out = []
    for label, sides in spots:
        n = area_quantum(sides)
        assert n is not None
        out.append((label, sides, n))
    for tag, depth in (("a", 3), ("b", 3), ("c", 2)):
        for k in range(1, depth + 1):
            member = family_member(tag, k)
            out.append((f"family_{tag} #{k}", member.sides, member.n))
    return out


def check_embedding(t: TriangleSides, n: int) -> str | None:
    """Embed t and verify squared sides and area quantum; None when sound."""
    tri = embed(t)
    a, b, c = t.sorted_desc()
    expected = tuple(sorted((3 * a * a, 3 * b * b, 3 * c * c)))
    if tri.squared_sides() != expected:
        return f"squared sides {tri.squared_sides()} != {expected}"
    if area_quantum_of(tri) != n:
        return f"area quantum {area_quantum_of(tri)} != {n}"
    return None


def _check_embeddings() -> CheckResult:
    failures = []
    count = 0
    for label, sides, n in _embedding_spot_triangles():
        count += 1
        problem = check_embedding(sides, n)
        if problem:
            failures.append(f"{label}: {problem}")
    if failures:
        return CheckResult("embedding-spot-checks", False, "; ".join(failures))
    return CheckResult(
        "embedding-spot-checks",
        True,
        f"{count} triangles embed with exact squared sides and area quanta",
    )


def run_verification(max_w: int, workers: int = 1) -> VerificationReport:
    """Run every suite; max_w controls the oracle-equivalence scan depth."""
    if max_w < 3:
        raise ValueError(f"max_w must be at least 3, got {max_w}")
    checks = (
        _check_oracle_equivalence(max_w, workers),
        _check_case_table(),
        _check_mod8(),
        _check_finite_cases(),
        _check_y_parity(),
        _check_embeddings(),
    )
    return VerificationReport(checks)
