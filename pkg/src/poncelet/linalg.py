"""Exact linear algebra over the rationals.

Rank is computed fraction-free: rows are scaled to integers first, then
eliminated with the two-term Bareiss update, so no rounding can occur
anywhere.  A reduction of the same matrix modulo a fixed 62-bit prime is
available as a fast probabilistic cross-check; the exact result is always
the authoritative one.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import DimensionError, InvalidInputError

Scalar = Union[Fraction, int]
Matrix = list[list[Fraction]]

# Verified primes just under 2^62, largest first.
CROSSCHECK_PRIMES = (
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
)


def as_matrix(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    out = [[Fraction(v) for v in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix")
    return out


def _integer_rows(rows: Matrix) -> list[list[int]]:
    scaled = []
    for row in rows:
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in row]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        scaled.append([v // g for v in ints] if g > 1 else ints)
    return scaled


def rank_rational_matrix(rows: Sequence[Sequence[Scalar]]) -> int:
    """Exact rank via fraction-free elimination on integer-scaled rows."""
    a = _integer_rows(as_matrix(rows))
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for i in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_mod_prime(rows: Sequence[Sequence[Scalar]], prime: int) -> int:
    """Rank of the matrix reduced mod `prime` (raises if a denominator dies)."""
    reduced: list[list[int]] = []
    for row in as_matrix(rows):
        out = []
        for v in row:
            den = v.denominator % prime
            if den == 0:
                raise InvalidInputError("denominator vanishes modulo the prime")
            out.append(v.numerator % prime * pow(den, prime - 2, prime) % prime)
        reduced.append(out)
    if not reduced or not reduced[0]:
        return 0
    nrows, ncols = len(reduced), len(reduced[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if reduced[i][col]), None)
        if pivot is None:
            continue
        reduced[row], reduced[pivot] = reduced[pivot], reduced[row]
        inv = pow(reduced[row][col], prime - 2, prime)
        for i in range(row + 1, nrows):
            if reduced[i][col]:
                factor = reduced[i][col] * inv % prime
                reduced[i] = [
                    (x - factor * y) % prime for x, y in zip(reduced[i], reduced[row])
                ]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the pivot column list."""
    a = as_matrix(rows)
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        a[row] = [v * inv for v in a[row]]
        for i in range(nrows):
            if i != row and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return a, pivots


def kernel_basis(rows: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Canonical basis of the right null space {v : A v = 0}.

    One basis vector per free column, ordered by free column index; the
    result is deterministic for a given input.
    """
    a = as_matrix(rows)
    if not a:
        raise InvalidInputError("kernel of an empty matrix is ambiguous")
    ncols = len(a[0])
    reduced, pivots = rref(a)
    free = [j for j in range(ncols) if j not in pivots]
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return basis


def det_rational(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant of a square rational matrix (Gaussian elimination)."""
    a = as_matrix(rows)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                factor = a[i][col] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return det


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    am, bm = as_matrix(a), as_matrix(b)
    if not am or not bm:
        return []
    if len(am[0]) != len(bm):
        raise DimensionError("inner dimensions differ")
    cols = len(bm[0])
    return [
        [sum((row[k] * bm[k][j] for k in range(len(bm))), Fraction(0)) for j in range(cols)]
        for row in am
    ]


def mat_vec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> list[Fraction]:
    am = as_matrix(a)
    vec = [Fraction(x) for x in v]
    if am and len(am[0]) != len(vec):
        raise DimensionError("matrix width must match vector length")
    return [sum((row[k] * vec[k] for k in range(len(vec))), Fraction(0)) for row in am]


def proj_equal_vector(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """True when u = c*v for a nonzero rational c (both nonzero vectors)."""
    uf = [Fraction(x) for x in u]
    vf = [Fraction(x) for x in v]
    if len(uf) != len(vf):
        return False
    if all(x == 0 for x in uf) or all(x == 0 for x in vf):
        return False
    scale = None
    for x, y in zip(uf, vf):
        if (x == 0) != (y == 0):
            return False
        if y != 0:
            ratio = x / y
            if scale is None:
                scale = ratio
            elif ratio != scale:
                return False
    return scale is not None and scale != 0
