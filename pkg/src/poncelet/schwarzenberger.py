"""Canonical presentation matrices and their degeneracy-locus equations.

The ambient space P^n is the projectivized space of binary n-forms: a point
x = (x_0 : ... : x_n) is the form X = sum_i x_i u^(n-i) v^i.  The canonical
matrix M(n, k) is the (n+k+1) x (k+1) matrix of the multiplication map
q 'maps to' X*q from degree-k forms to degree-(n+k) forms; its entry (i, j) is
x_(i-j) when 0 <= i-j <= n and 0 otherwise.  A system of n independent
degree-(n+k) sections pasted as constant columns next to M gives a square
matrix whose determinant is a hypersurface of degree k+1; fewer sections
give a determinantal locus cut out by maximal minors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .binforms import BinaryForm, GL2, ParamPoint, transform_form
from .errors import DegenerateInputError, DimensionError, InvalidInputError
from .linalg import det_rational, rank_rational_matrix
from .multipoly import MultiPoly, PolyMatrix, det_poly_matrix


def canonical_matrix(n: int, k: int) -> PolyMatrix:
    """The multiplication-by-X matrix, shape (n+k+1) x (k+1), variables x_0..x_n."""
    if n < 1 or k < 0:
        raise InvalidInputError("need n >= 1 and k >= 0")
    num_vars = n + 1
    entries: list[MultiPoly] = []
    for i in range(n + k + 1):
        for j in range(k + 1):
            if 0 <= i - j <= n:
                entries.append(MultiPoly.variable(num_vars, i - j))
            else:
                entries.append(MultiPoly.zero(num_vars))
    return PolyMatrix(n + k + 1, k + 1, entries)


class PonceletSystem:
    """n, k together with 1..n independent sections of degree n+k."""

    __slots__ = ("n", "k", "sections")

    def __init__(self, n: int, k: int, sections: Sequence[BinaryForm]):
        if n < 1 or k < 0:
            raise InvalidInputError("need n >= 1 and k >= 0")
        sections = list(sections)
        if not 1 <= len(sections) <= n:
            raise DimensionError(f"a system carries between 1 and {n} sections")
        for f in sections:
            if f.degree != n + k:
                raise DimensionError(f"sections must have degree {n + k}")
            if f.is_zero():
                raise DegenerateInputError("zero section")
        rows = [list(f.coeffs) for f in sections]
        if rank_rational_matrix(rows) != len(sections):
            raise DegenerateInputError("sections are linearly dependent")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "sections", tuple(sections))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("PonceletSystem is immutable")

    def section_columns(self) -> list[list[Fraction]]:
        """Sections as columns: entry [i][s] is coefficient i of section s."""
        return [
            [f.coeffs[i] for f in self.sections] for i in range(self.n + self.k + 1)
        ]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "sections": [f.to_json() for f in self.sections],
        }

    @staticmethod
    def from_json(data: Mapping) -> "PonceletSystem":
        sections = [BinaryForm.from_json(item) for item in data["sections"]]
        return PonceletSystem(int(data["n"]), int(data["k"]), sections)


def sections_matrix(system: PonceletSystem) -> PolyMatrix:
    """The full (n+k+1) x (k+1+r+1) matrix [M | section columns]."""
    m = canonical_matrix(system.n, system.k)
    num_vars = system.n + 1
    cols = system.section_columns()
    entries: list[MultiPoly] = []
    for i in range(m.rows):
        entries.extend(m.row(i))
        entries.extend(MultiPoly.constant(num_vars, c) for c in cols[i])
    return PolyMatrix(m.rows, m.cols + len(system.sections), entries)


@lru_cache(maxsize=32)
def _canonical_minors(n: int, k: int) -> dict[tuple[int, ...], MultiPoly]:
    """All (k+1)-row minors of canonical_matrix(n, k), keyed by row subset."""
    m = canonical_matrix(n, k)
    cols = list(range(k + 1))
    return {
        rows: det_poly_matrix(m.submatrix(rows, cols))
        for rows in combinations(range(n + k + 1), k + 1)
    }


def det_poly_const(
    poly_block: PolyMatrix,
    const_cols: Sequence[Sequence[Fraction]],
    poly_minors: Mapping[tuple[int, ...], MultiPoly] | None = None,
) -> MultiPoly:
    """Determinant of [poly_block | const_cols] by Laplace along the constant block.

    const_cols is row-major, one row per matrix row.  For every row subset S
    taken by the constant block, the complementary minor of the polynomial
    block is either looked up in `poly_minors` or computed on the spot.
    """
    m = poly_block.rows
    c = len(const_cols[0]) if const_cols else 0
    if poly_block.cols + c != m or len(const_cols) != m:
        raise DimensionError("blocks do not assemble into a square matrix")
    col_sign = sum(range(poly_block.cols, m))  # constant block sits in the last c columns
    poly_col_idx = list(range(poly_block.cols))
    acc = MultiPoly.zero(poly_block.num_vars)
    for taken in combinations(range(m), c):
        const_minor = det_rational([list(const_cols[i]) for i in taken])
        if const_minor == 0:
            continue
        rest = tuple(i for i in range(m) if i not in taken)
        if poly_minors is not None:
            minor = poly_minors[rest]
        else:
            minor = det_poly_matrix(poly_block.submatrix(rest, poly_col_idx))
        if minor.is_zero():
            continue
        sign = -1 if (sum(taken) + col_sign) % 2 else 1
        acc = acc + minor * (const_minor if sign == 1 else -const_minor)
    return acc


def poncelet_hypersurface(system: PonceletSystem) -> MultiPoly:
    """Degree-(k+1) equation det[M(n,k) | sections] for a full system of n sections.

    The determinant is expanded along the constant section block with the
    polynomial minors of M cached per (n, k); it agrees with a direct
    determinant of the assembled matrix.
    """
    n, k = system.n, system.k
    if len(system.sections) != n:
        raise DimensionError(f"hypersurface needs exactly {n} sections")
    m = canonical_matrix(n, k)
    det = det_poly_const(m, system.section_columns(), _canonical_minors(n, k))
    if det.is_zero():
        raise DegenerateInputError("determinant vanishes identically")
    degree = det.total_degree()
    if degree is None or degree > k + 1:
        raise DegenerateInputError("determinant degree exceeds k+1")  # unreachable
    return det


def poncelet_subvariety(system: PonceletSystem) -> list[tuple[tuple[int, ...], MultiPoly]]:
    """Maximal minors of [M | sections] for r+1 <= n-1 sections.

    Returns (omitted_rows, minor) pairs ordered lexicographically by the
    omitted row subset; there are C(n+k+1, k+r+2) of them.
    """
    n, k = system.n, system.k
    r1 = len(system.sections)
    if r1 > n - 1:
        raise DimensionError("subvariety needs at most n-1 sections")
    full = sections_matrix(system)
    size = k + 1 + r1
    cols = system.section_columns()
    m = canonical_matrix(n, k)
    out: list[tuple[tuple[int, ...], MultiPoly]] = []
    for omitted in combinations(range(full.rows), full.rows - size):
        taken = [i for i in range(full.rows) if i not in omitted]
        minor = det_poly_const(
            m.submatrix(taken, list(range(k + 1))),
            [cols[i] for i in taken],
        )
        out.append((omitted, minor))
    return out


def contains_subvariety(
    hypersurface: MultiPoly,
    n: int,
    k: int,
    member_root_lists: Sequence[Sequence[ParamPoint]],
) -> bool:
    """Exact vanishing of the hypersurface on sampled subvariety points.

    Each member is given by its n+k rational roots and must lie in the span
    of the sections that cut the subvariety (the caller arranges this; a
    violation simply fails).  The sample points are the polytope vertices of
    every member.
    """
    from .incidence import polytope_vertices  # local import breaks the module cycle

    for roots in member_root_lists:
        for vertex in polytope_vertices(n, roots).vertices:
            if hypersurface.evaluate(vertex) != 0:
                return False
    return True


def symmetric_power_images(g: GL2, n: int) -> list[MultiPoly]:
    """Linear forms expressing the induced action of g on P^n coordinates.

    images[i] is the coefficient of u^(n-i) v^i in the transform of
    X = sum_j x_j u^(n-j) v^j, as a linear polynomial in x_0..x_n.
    """
    num_vars = n + 1
    images = [MultiPoly.zero(num_vars) for _ in range(num_vars)]
    for j in range(num_vars):
        basis = BinaryForm(n, [1 if i == j else 0 for i in range(num_vars)])
        transformed = transform_form(g, basis)
        xj = MultiPoly.variable(num_vars, j)
        for i, c in enumerate(transformed.coeffs):
            if c:
                images[i] = images[i] + xj * c
    return images


def transform_hypersurface(h: MultiPoly, g: GL2, n: int) -> MultiPoly:
    """Compose h with the induced coordinate change of g (degree preserved)."""
    return h.substitute(symmetric_power_images(g, n))
