"""Determinantal quadrics and cubics in P^3, and family-dimension probes.

A 3-dimensional subspace A of the binary quintics determines a cubic
surface: pick the canonical basis P of the orthogonal complement (a model
of the quotient space), multiply P into the canonical 6x3 matrix of binary
cubics to get a 3x3 matrix N of linear forms, and take its determinant.
The same P flattens the multiplication tensor of quadratic x cubic binary
forms into a 3x4 Hankel matrix of linear forms whose maximal minors cut
out six points in the plane.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .binforms import BinaryForm
from .errors import DegenerateInputError, DimensionError, InvalidInputError
from .linalg import (
    CROSSCHECK_PRIMES,
    as_matrix,
    det_rational,
    kernel_basis,
    mat_vec,
    rank_mod_prime,
    rank_rational_matrix,
    rref,
)
from .multipoly import (
    MultiPoly,
    PolyMatrix,
    det_poly_matrix,
    format_rational,
    parse_rational,
)
from .sampling import random_fraction, seeded_rng
from .schwarzenberger import (
    PonceletSystem,
    canonical_matrix,
    det_poly_const,
    poncelet_hypersurface,
)

Matrix = list[list[Fraction]]

# The four 2x2 minors of the 5x2 canonical matrix for (n, k) = (3, 1) that
# realize quadrics of every rank, as row pairs: ranks 4, 3, 2, 1.
QUADRIC_DEMO_ROWS = ((1, 3), (1, 2), (1, 4), (0, 1))


def quadric_rank(q: MultiPoly) -> int:
    """Rank of the symmetric Gram matrix of a homogeneous quadratic form."""
    if q.is_zero():
        return 0
    if q.total_degree() != 2 or not q.is_homogeneous():
        raise InvalidInputError("not a homogeneous quadratic form")
    v = q.num_vars
    gram: Matrix = [[Fraction(0)] * v for _ in range(v)]
    for exps, coeff in q.terms.items():
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            i = support[0]
            gram[i][i] = coeff
        else:
            i, j = support
            gram[i][j] = gram[j][i] = coeff / 2
    return rank_rational_matrix(gram)


class QuadricDemoEntry:
    """One minor of the (3,1) canonical matrix realized as a unit-section determinant."""

    __slots__ = ("rows", "quadric", "rank", "section_indices", "determinant", "sign_matched")

    def __init__(self, rows, quadric, rank, section_indices, determinant, sign_matched):
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "quadric", quadric)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "section_indices", section_indices)
        object.__setattr__(self, "determinant", determinant)
        object.__setattr__(self, "sign_matched", sign_matched)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("QuadricDemoEntry is immutable")

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "quadric": self.quadric.to_json(),
            "rank": self.rank,
            "sections": list(self.section_indices),
            "sign_matched": self.sign_matched,
        }


def quadric_demo() -> list[QuadricDemoEntry]:
    """The rank-4, 3, 2, 1 quadrics as 2x2 minors of the (3,1) matrix.

    Each minor on row pair R equals, up to sign, the full determinant of the
    system whose three sections are the unit quartics indexed by the
    complementary rows.
    """
    m = canonical_matrix(3, 1)
    out: list[QuadricDemoEntry] = []
    for rows in QUADRIC_DEMO_ROWS:
        quadric = det_poly_matrix(m.submatrix(list(rows), [0, 1]))
        complement = tuple(i for i in range(5) if i not in rows)
        sections = [
            BinaryForm(4, [1 if i == c else 0 for i in range(5)]) for c in complement
        ]
        determinant = poncelet_hypersurface(PonceletSystem(3, 1, sections))
        sign_matched = determinant == quadric or determinant == -quadric
        out.append(
            QuadricDemoEntry(
                rows, quadric, quadric_rank(quadric), complement, determinant, sign_matched
            )
        )
    return out


# --------------------------------------------------------------------- cubics


def _validate_subspace(a_rows: Sequence[Sequence[Fraction]]) -> Matrix:
    a = as_matrix(a_rows)
    if len(a) != 3 or any(len(r) != 6 for r in a):
        raise DimensionError("subspace must be given as a 3x6 matrix of quintic coefficients")
    if rank_rational_matrix(a) != 3:
        raise DegenerateInputError("subspace rows are linearly dependent")
    return a


def complement_model(a_rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Canonical 3x6 matrix P with P A^T = 0: the reduced echelon basis of
    the orthogonal complement of the row space."""
    a = _validate_subspace(a_rows)
    basis = kernel_basis(a)
    reduced, _ = rref(basis)
    return reduced


class CubicModel:
    """A subspace of quintics, its complement model, and the induced cubic."""

    __slots__ = ("A", "P", "N", "cubic", "degenerate")

    def __init__(self, A: Matrix, P: Matrix, N: PolyMatrix, cubic: MultiPoly, degenerate: bool):
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "cubic", cubic)
        object.__setattr__(self, "degenerate", degenerate)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("CubicModel is immutable")

    def to_json(self) -> dict:
        return {
            "A": [[format_rational(v) for v in row] for row in self.A],
            "P": [[format_rational(v) for v in row] for row in self.P],
            "N": self.N.to_json(),
            "cubic": self.cubic.to_json(),
            "degenerate": self.degenerate,
        }

    @staticmethod
    def from_json(data: Mapping) -> "CubicModel":
        return cubic_from_subspace(
            [[parse_rational(str(v)) for v in row] for row in data["A"]]
        )


def _has_triple_point(cubic: MultiPoly) -> bool:
    # A degree-3 form has a point of multiplicity 3 iff all second partials
    # (linear forms) share a nonzero common zero.
    v = cubic.num_vars
    rows = []
    for i in range(v):
        di = cubic.partial_derivative(i)
        for j in range(i, v):
            dij = di.partial_derivative(j)
            rows.append([dij.coefficient(tuple(1 if m == idx else 0 for m in range(v))) for idx in range(v)])
    return rank_rational_matrix(rows) < v


def cubic_from_subspace(a_rows: Sequence[Sequence[Fraction]]) -> CubicModel:
    """Build the determinantal cubic of a 3-dimensional space of quintics.

    N = P * M(3,2) is a 3x3 matrix of linear forms in x_0..x_3 and the cubic
    is det N.  The degenerate flag marks constructions that visibly collapse:
    zero or degree-deficient determinant, flattening minors spanning fewer
    than 4 dimensions, or a point of multiplicity 3 on the cubic.
    """
    a = _validate_subspace(a_rows)
    p = complement_model(a)
    n_matrix = canonical_matrix(3, 2).left_mul_rational(p)
    cubic = det_poly_matrix(n_matrix)
    tensor = _flattening_from_complement(p)
    degenerate = (
        cubic.is_zero()
        or cubic.total_degree() != 3
        or tensor.minor_rank < 4
        or _has_triple_point(cubic)
    )
    return CubicModel(a, p, n_matrix, cubic, degenerate)


# ------------------------------------------------------------- six points


class SixPointTensor:
    """Multiplication tensor S_2 x S_3 -> S_5/A flattened against the plane P(S_5/A)."""

    __slots__ = ("T", "flattening", "minors", "minor_rank")

    def __init__(self, T, flattening: PolyMatrix, minors: Sequence[MultiPoly], minor_rank: int):
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "flattening", flattening)
        object.__setattr__(self, "minors", tuple(minors))
        object.__setattr__(self, "minor_rank", minor_rank)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("SixPointTensor is immutable")

    def is_persymmetric(self) -> bool:
        """T[a][b][c] depends on (a+b, c) only - the Hankel property."""
        for c in range(3):
            for a in range(3):
                for b in range(4):
                    for a2 in range(3):
                        for b2 in range(4):
                            if a + b == a2 + b2 and self.T[a][b][c] != self.T[a2][b2][c]:
                                return False
        return True

    def to_json(self) -> dict:
        return {
            "T": [
                [[format_rational(v) for v in fiber] for fiber in slab] for slab in self.T
            ],
            "flattening": self.flattening.to_json(),
            "minors": [m.to_json() for m in self.minors],
            "minor_rank": self.minor_rank,
        }


def _flattening_from_complement(p: Matrix) -> SixPointTensor:
    # T[a][b] = P * coeffs(m_a * m_b) where m_a, m_b run over the monomial
    # bases of the quadratics and cubics; m_a * m_b is the unit quintic
    # e_(a+b), so the product rule is exercised literally.
    quad_basis = [BinaryForm(2, [1 if i == a else 0 for i in range(3)]) for a in range(3)]
    cubic_basis = [BinaryForm(3, [1 if i == b else 0 for i in range(4)]) for b in range(4)]
    from .binforms import multiply

    tensor = []
    for qa in quad_basis:
        slab = []
        for cb in cubic_basis:
            product = multiply(qa, cb)
            slab.append(mat_vec(p, list(product.coeffs)))
        tensor.append(slab)
    # Flattening against y: F[a][b] = sum_c T[a][b][c] y_c, linear in 3 vars.
    entries = []
    for a in range(3):
        for b in range(4):
            entries.append(
                MultiPoly(
                    3,
                    {
                        tuple(1 if m == c else 0 for m in range(3)): tensor[a][b][c]
                        for c in range(3)
                    },
                )
            )
    flattening = PolyMatrix(3, 4, entries)
    minors = [
        det_poly_matrix(flattening.submatrix([0, 1, 2], [b for b in range(4) if b != omit]))
        for omit in range(4)
    ]
    cubic_monomials = graded_monomials(3, 3)
    coeff_rows = [[m.coefficient(e) for e in cubic_monomials] for m in minors]
    return SixPointTensor(tensor, flattening, minors, rank_rational_matrix(coeff_rows))


def six_point_flattening(a_rows: Sequence[Sequence[Fraction]]) -> SixPointTensor:
    """Multiplication tensor and Hankel flattening attached to a subspace."""
    return _flattening_from_complement(complement_model(a_rows))


def graded_monomials(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, canonical order first."""
    if degree < 0:
        return []
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, num_vars)
    return out


def hilbert_function_of_minors(
    a_rows: Sequence[Sequence[Fraction]], degrees: Sequence[int]
) -> dict[int, int]:
    """Dimension of each graded piece of the ideal spanned by the four minors.

    The degree-d piece is the span of minor * monomial over monomials of
    degree d-3; its dimension is an exact rank.  Six general points give
    C(d+2, 2) - 6 from degree 3 on, and 0 below.
    """
    tensor = six_point_flattening(a_rows)
    out: dict[int, int] = {}
    for d in degrees:
        if d < 0:
            raise InvalidInputError("negative degree")
        if d < 3:
            out[d] = 0
            continue
        target = graded_monomials(3, d)
        index = {e: i for i, e in enumerate(target)}
        rows = []
        for minor in tensor.minors:
            for mono in graded_monomials(3, d - 3):
                shifted = minor * MultiPoly(3, {mono: Fraction(1)})
                row = [Fraction(0)] * len(target)
                for exps, coeff in shifted.terms.items():
                    row[index[exps]] = coeff
                rows.append(row)
        out[d] = rank_rational_matrix(rows) if rows else 0
    return out


# ------------------------------------------------------------ dimension probe

PROBE_CASES = {
    # case -> (n, k); a full system of n sections each time
    "plane-curve": (2, None),
    "quadric": (3, 1),
    "cubic": (3, 2),
}


class DimProbeReport:
    """Exact Jacobian rank of the parametrization at seeded random points."""

    __slots__ = (
        "case",
        "n",
        "k",
        "rank",
        "ambient_dim",
        "param_count",
        "dominant",
        "sample_ranks",
        "modular_agrees",
    )

    def __init__(self, case, n, k, rank, ambient_dim, param_count, dominant, sample_ranks, modular_agrees):
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "param_count", param_count)
        object.__setattr__(self, "dominant", dominant)
        object.__setattr__(self, "sample_ranks", tuple(sample_ranks))
        object.__setattr__(self, "modular_agrees", modular_agrees)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("DimProbeReport is immutable")

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "k": self.k,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "param_count": self.param_count,
            "dominant": self.dominant,
            "sample_ranks": list(self.sample_ranks),
            "modular_agrees": self.modular_agrees,
        }


def _substituted_canonical(n: int, k: int, g: Matrix) -> PolyMatrix:
    # canonical_matrix with x replaced by G x: entry (i, j) = (G x)_(i-j).
    num_vars = n + 1
    images = [
        MultiPoly(
            num_vars,
            {
                tuple(1 if m == c else 0 for m in range(num_vars)): g[r][c]
                for c in range(num_vars)
                if g[r][c] != 0
            },
        )
        for r in range(num_vars)
    ]
    entries: list[MultiPoly] = []
    for i in range(n + k + 1):
        for j in range(k + 1):
            if 0 <= i - j <= n:
                entries.append(images[i - j])
            else:
                entries.append(MultiPoly.zero(num_vars))
    return PolyMatrix(n + k + 1, k + 1, entries)


def _laplace_sign(taken: Sequence[int], poly_cols: int, total: int) -> int:
    return -1 if (sum(taken) + sum(range(poly_cols, total))) % 2 else 1


def _det_with_poly_minors(
    minors: Mapping[tuple[int, ...], MultiPoly], const_cols: Matrix, poly_cols: int
) -> MultiPoly:
    # det [poly block | const block] given all (poly_cols)-row minors of the
    # polynomial block; mirrors det_poly_const.
    total = len(const_cols)
    c = len(const_cols[0])
    some = next(iter(minors.values()))
    acc = MultiPoly.zero(some.num_vars)
    for taken in combinations(range(total), c):
        const_minor = det_rational([const_cols[i] for i in taken])
        if const_minor == 0:
            continue
        rest = tuple(i for i in range(total) if i not in taken)
        minor = minors[rest]
        if minor.is_zero():
            continue
        sign = _laplace_sign(taken, poly_cols, total)
        acc = acc + minor * (const_minor if sign == 1 else -const_minor)
    return acc


def _probe_jacobian(n: int, k: int, g: Matrix, sections: Matrix) -> list[list[Fraction]]:
    """Exact Jacobian of (sections, G) -> coefficients of det[M(Gx) | sections].

    The determinant is multilinear in the section columns, so those partials
    are unit-column replacements; a G entry enters one diagonal of M, so its
    partial is a sum over columns of single-entry replacements, each of
    which Laplace-reduces to a cached k-row minor.
    """
    num_vars = n + 1
    size = n + k + 1
    mg = _substituted_canonical(n, k, g)
    poly_cols = list(range(k + 1))
    # (k+1)-row minors of the substituted block, and k-row minors with one
    # column removed; both cached once per sample.
    big_minors = {
        rows: det_poly_matrix(mg.submatrix(rows, poly_cols))
        for rows in combinations(range(size), k + 1)
    }
    small_minors = {
        (rows, j): det_poly_matrix(mg.submatrix(rows, [c for c in poly_cols if c != j]))
        for rows in combinations(range(size), k)
        for j in poly_cols
    }
    const_cols = [[sections[s][i] for s in range(n)] for i in range(size)]

    partials: list[MultiPoly] = []
    # Section coefficient partials: replace one constant column by a unit.
    for s in range(n):
        for m_idx in range(size):
            cols = [list(row) for row in const_cols]
            for i in range(size):
                cols[i][s] = Fraction(1) if i == m_idx else Fraction(0)
            partials.append(_det_with_poly_minors(big_minors, cols, k + 1))
    # Ambient matrix partials: d/dG[a][b] touches entry (a+j, j) of M(Gx).
    xb = [MultiPoly.variable(num_vars, b) for b in range(num_vars)]
    for a in range(num_vars):
        for b in range(num_vars):
            total = MultiPoly.zero(num_vars)
            for j in range(k + 1):
                row_hit = a + j
                acc = MultiPoly.zero(num_vars)
                for taken in combinations(range(size), n):
                    if row_hit in taken:
                        continue
                    const_minor = det_rational([const_cols[i] for i in taken])
                    if const_minor == 0:
                        continue
                    rest = tuple(i for i in range(size) if i not in taken)
                    pos = rest.index(row_hit)
                    reduced = tuple(i for i in rest if i != row_hit)
                    minor = small_minors[(reduced, j)]
                    if minor.is_zero():
                        continue
                    sign = _laplace_sign(taken, k + 1, size)
                    if (pos + j) % 2:
                        sign = -sign
                    acc = acc + minor * (const_minor if sign == 1 else -const_minor)
                total = total + acc * xb[b]
            partials.append(total)

    basis = graded_monomials(num_vars, k + 1)
    index = {e: i for i, e in enumerate(basis)}
    jacobian = [[Fraction(0)] * len(partials) for _ in basis]
    for col, partial in enumerate(partials):
        for exps, coeff in partial.terms.items():
            jacobian[index[exps]][col] = coeff
    return jacobian


def dim_probe(case: str, k: int | None = None, samples: int = 5, seed: int | None = None) -> DimProbeReport:
    """Probe the dimension of the image of the parametrization for a case.

    Each sample draws random rational sections and an ambient change of
    coordinates, computes the exact Jacobian rank there, and cross-checks it
    modulo a 62-bit prime.  The reported rank is the majority over samples.
    """
    if case not in PROBE_CASES:
        raise InvalidInputError(f"unknown case {case!r}; choose from {sorted(PROBE_CASES)}")
    n, fixed_k = PROBE_CASES[case]
    if fixed_k is not None:
        if k is not None and k != fixed_k:
            raise InvalidInputError(f"case {case!r} pins k = {fixed_k}")
        k = fixed_k
    else:
        k = 3 if k is None else k
        if k < 1:
            raise InvalidInputError("plane-curve probe needs k >= 1")
    if samples < 1:
        raise InvalidInputError("need at least one sample")
    rng = seeded_rng(seed)
    num_vars = n + 1
    size = n + k + 1
    ranks: list[int] = []
    modular_ok = True
    for _ in range(samples):
        while True:
            g = [[random_fraction(rng, 7) for _ in range(num_vars)] for _ in range(num_vars)]
            sections = [[random_fraction(rng, 7) for _ in range(size)] for _ in range(n)]
            if det_rational(g) == 0:
                continue
            if rank_rational_matrix(sections) != n:
                continue
            mg = _substituted_canonical(n, k, g)
            base = det_poly_const(mg, [[sections[s][i] for s in range(n)] for i in range(size)])
            if not base.is_zero():
                break
        jacobian = _probe_jacobian(n, k, g, sections)
        rank = rank_rational_matrix(jacobian)
        ranks.append(rank)
        for prime in CROSSCHECK_PRIMES:
            try:
                if rank_mod_prime(jacobian, prime) != rank:
                    modular_ok = False
                break
            except InvalidInputError:
                continue
    majority = Counter(ranks).most_common()
    top = max(count for _, count in majority)
    rank = max(r for r, count in majority if count == top)
    ambient_dim = len(graded_monomials(num_vars, k + 1))
    param_count = n * size + num_vars * num_vars
    return DimProbeReport(
        case,
        n,
        k,
        rank,
        ambient_dim,
        param_count,
        rank == ambient_dim,
        ranks,
        modular_ok,
    )
