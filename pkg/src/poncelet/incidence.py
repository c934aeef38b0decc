"""Contact hyperplanes, polytope vertices and the closure check.

A point x of P^n is a binary n-form; it is divisible by the linear factor
of t = (a : b) exactly when X(a, b) = 0, which is the linear condition
sum_i x_i a^(n-i) b^i = 0 - the contact hyperplane of t.  A rational-rooted
member of degree n+k has C(n+k, n) polytope vertices: the products of n of
its linear factors.  Every vertex of every member of a section span lies on
the span's determinantal hypersurface; darboux_check verifies that with
exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .binforms import ParamPoint, distinct_points, form_from_roots
from .errors import DegenerateInputError, DimensionError, InvalidInputError
from .linalg import kernel_basis, proj_equal_vector
from .multipoly import MultiPoly, format_rational


def contact_hyperplane(n: int, t: ParamPoint) -> list[Fraction]:
    """Coefficients h_i = a^(n-i) b^i of the divisibility condition at t."""
    if n < 1:
        raise InvalidInputError("need n >= 1")
    a_pows = [Fraction(1)]
    b_pows = [Fraction(1)]
    for _ in range(n):
        a_pows.append(a_pows[-1] * t.a)
        b_pows.append(b_pows[-1] * t.b)
    return [a_pows[n - i] * b_pows[i] for i in range(n + 1)]


def is_contact_vector(h: Sequence[Fraction]) -> bool:
    """All 2x2 minors of the 2-row Hankel arrangement of h vanish."""
    for i in range(len(h) - 2):
        if h[i] * h[i + 2] - h[i + 1] * h[i + 1] != 0:
            return False
    return any(v != 0 for v in h)


class VertexSet:
    """Polytope vertices of a rational-rooted member, one per n-subset of roots."""

    __slots__ = ("n", "roots", "subsets", "vertices")

    def __init__(
        self,
        n: int,
        roots: Sequence[ParamPoint],
        subsets: Sequence[tuple[int, ...]],
        vertices: Sequence[tuple[Fraction, ...]],
    ):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "roots", tuple(roots))
        object.__setattr__(self, "subsets", tuple(subsets))
        object.__setattr__(self, "vertices", tuple(vertices))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("VertexSet is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "roots": [t.to_json() for t in self.roots],
            "subsets": [list(s) for s in self.subsets],
            "vertices": [[format_rational(c) for c in v] for v in self.vertices],
        }


def polytope_vertices(n: int, roots: Sequence[ParamPoint]) -> VertexSet:
    """Vertices of the member with the given n+k distinct rational roots.

    Each vertex is computed twice: as the coefficient vector of the product
    of the chosen n linear factors, and as the 1-dimensional intersection of
    the n contact hyperplanes.  The two must agree projectively; the second
    computation is the cross-check.
    """
    if n < 1:
        raise InvalidInputError("need n >= 1")
    roots = list(roots)
    if len(roots) < n:
        raise DimensionError(f"need at least {n} roots")
    if not distinct_points(roots):
        raise DegenerateInputError("repeated roots")
    subsets: list[tuple[int, ...]] = []
    vertices: list[tuple[Fraction, ...]] = []
    for subset in combinations(range(len(roots)), n):
        product = form_from_roots([roots[i] for i in subset])
        vertex = product.coeffs
        cross = kernel_basis([contact_hyperplane(n, roots[i]) for i in subset])
        if len(cross) != 1 or not proj_equal_vector(vertex, cross[0]):
            raise DegenerateInputError("hyperplane intersection disagrees with factor product")
        subsets.append(subset)
        vertices.append(vertex)
    return VertexSet(n, roots, subsets, vertices)


class DarbouxReport:
    """Outcome of an exact vertex-vanishing check."""

    __slots__ = ("passed", "vertex_set", "values")

    def __init__(self, passed: bool, vertex_set: VertexSet, values: Sequence[Fraction]):
        object.__setattr__(self, "passed", passed)
        object.__setattr__(self, "vertex_set", vertex_set)
        object.__setattr__(self, "values", tuple(values))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("DarbouxReport is immutable")

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "vertices": [[format_rational(c) for c in v] for v in self.vertex_set.vertices],
            "values": [format_rational(v) for v in self.values],
        }


def darboux_check(
    hypersurface: MultiPoly, n: int, k: int, member_roots: Sequence[ParamPoint]
) -> DarbouxReport:
    """Evaluate the hypersurface at every vertex of the member; all must be 0.

    The member is assumed to lie in the span of the system that produced the
    hypersurface; if it does not, the report simply fails.
    """
    if hypersurface.num_vars != n + 1:
        raise DimensionError("hypersurface lives in the wrong ambient space")
    member_roots = list(member_roots)
    if len(member_roots) != n + k:
        raise DimensionError(f"member of degree {n + k} needs {n + k} roots")
    vertex_set = polytope_vertices(n, member_roots)
    values = [hypersurface.evaluate(v) for v in vertex_set.vertices]
    return DarbouxReport(all(v == 0 for v in values), vertex_set, values)


def section_vanishing_points(
    n: int, k: int, roots: Sequence[ParamPoint]
) -> VertexSet:
    """Vertices of a single rational-rooted section, verified against its minors.

    Every maximal minor of [M | section] vanishes exactly at each vertex:
    the vertex divides the section, so the section column is a combination
    of the multiplication-matrix columns there.
    """
    from .schwarzenberger import PonceletSystem, poncelet_subvariety

    roots = list(roots)
    if len(roots) != n + k:
        raise DimensionError(f"a section of degree {n + k} needs {n + k} roots")
    vertex_set = polytope_vertices(n, roots)
    if n >= 2:
        system = PonceletSystem(n, k, [form_from_roots(roots)])
        for _, minor in poncelet_subvariety(system):
            for vertex in vertex_set.vertices:
                if minor.evaluate(vertex) != 0:
                    raise DegenerateInputError("minor fails to vanish at a vertex")
    return vertex_set
