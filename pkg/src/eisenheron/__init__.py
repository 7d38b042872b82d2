"""Exact arithmetic for perimeter-dominant triangles with sides in sqrt(3)*N.

The package enumerates these triangles by brute force, classifies them into
the equilateral exception plus three Pell-equation families, realizes them
with vertices on the triangular lattice generated by 1 and
w = -1/2 + i*sqrt(3)/2, and renders the results as SVG figures. The
brute-force enumerator and the closed-form generators check each other.
"""

from .classify import (
    CandidateCase,
    ClassifiedTriangle,
    FamilyId,
    candidate_cases,
    classify,
    closed_form_members,
    enumerate_perimeter_dominant,
    family_member,
    finite_case_check,
    obstruction_mod8,
    rederive_case_bounds,
)
from .errors import (
    EmbeddabilityViolationError,
    FigureError,
    InvalidTriangleError,
    NotLatticeHeronError,
    TheoremViolationError,
)
from .intmath import is_perfect_square, isqrt, perfect_square_root, squares_mod
from .lattice import (
    EisensteinPoint,
    LatticeTriangle,
    area_quantum_of,
    canonicalize,
    embed,
    embed_all,
    norm,
    represent_loeschian,
    squared_distance,
)
from .pell import (
    PellForm,
    PellSolution,
    Recurrence,
    fundamental_solution,
    recurrence_for,
    solutions,
    y_for_x,
)
from .render import FigureSpec, LatticeExtent, figure1_spec, render_svg, to_cartesian
from .triangles import (
    TriangleSides,
    UvwTriple,
    area_quantum,
    exact_measures,
    is_perimeter_dominant,
    sides_from_uvw,
    uvw_from_sides,
)
from .verify import VerificationReport, run_verification

__all__ = [
    "CandidateCase",
    "ClassifiedTriangle",
    "EisensteinPoint",
    "EmbeddabilityViolationError",
    "FamilyId",
    "FigureError",
    "FigureSpec",
    "InvalidTriangleError",
    "LatticeExtent",
    "LatticeTriangle",
    "NotLatticeHeronError",
    "PellForm",
    "PellSolution",
    "Recurrence",
    "TheoremViolationError",
    "TriangleSides",
    "UvwTriple",
    "VerificationReport",
    "area_quantum",
    "area_quantum_of",
    "candidate_cases",
    "canonicalize",
    "classify",
    "closed_form_members",
    "embed",
    "embed_all",
    "enumerate_perimeter_dominant",
    "exact_measures",
    "family_member",
    "figure1_spec",
    "finite_case_check",
    "fundamental_solution",
    "is_perfect_square",
    "is_perimeter_dominant",
    "isqrt",
    "norm",
    "obstruction_mod8",
    "perfect_square_root",
    "recurrence_for",
    "rederive_case_bounds",
    "render_svg",
    "represent_loeschian",
    "run_verification",
    "sides_from_uvw",
    "solutions",
    "squared_distance",
    "squares_mod",
    "to_cartesian",
    "uvw_from_sides",
    "y_for_x",
]
