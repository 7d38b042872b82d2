"""Exception types shared across the package."""


class InvalidTriangleError(ValueError):
    """Side or (u, v, w) data that cannot form a valid triangle."""


class NotLatticeHeronError(ValueError):
    """Operation needs an area of the form n*sqrt(3)/4 with integer n."""


class FigureError(ValueError):
    """A figure specification failed validation."""


class TheoremViolationError(RuntimeError):
    """A perimeter-dominant triangle with integral area quantum matched no
    classification branch. The classification says this cannot happen, so
    raising it flags an implementation bug, never a math outcome."""


class EmbeddabilityViolationError(RuntimeError):
    """The exhaustive lattice-embedding scan came up empty for a triangle
    that must embed. Like TheoremViolationError, this flags a bug."""
