"""Shared builders and an independent determinant oracle for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from poncelet.multipoly import MultiPoly, PolyMatrix


def const(num_vars: int, value) -> MultiPoly:
    return MultiPoly.constant(num_vars, value)


def var(num_vars: int, index: int) -> MultiPoly:
    return MultiPoly.variable(num_vars, index)


def linear(coeffs) -> MultiPoly:
    """Linear form sum coeffs[i] * x_i in len(coeffs) variables."""
    num_vars = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[tuple(1 if j == i else 0 for j in range(num_vars))] = Fraction(c)
    return MultiPoly(num_vars, terms)


def naive_laplace_det(m: PolyMatrix) -> MultiPoly:
    """Reference determinant: first-row Laplace expansion, no shortcuts.

    Deliberately independent of the production code paths (cofactor column
    selection, Bareiss), so agreement is a real cross-check.
    """
    assert m.rows == m.cols
    n = m.rows
    if n == 0:
        return MultiPoly.constant(m.num_vars, 1)
    if n == 1:
        return m[0, 0]
    acc = MultiPoly.zero(m.num_vars)
    for j in range(n):
        entry = m[0, j]
        if entry.is_zero():
            continue
        minor = m.submatrix(list(range(1, n)), [c for c in range(n) if c != j])
        term = entry * naive_laplace_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def random_linear_matrix(rng: random.Random, size: int, num_vars: int = 3) -> PolyMatrix:
    """Square matrix of random small-height linear forms (some entries zero)."""
    entries = []
    for _ in range(size * size):
        if rng.random() < 0.2:
            entries.append(MultiPoly.zero(num_vars))
        else:
            entries.append(linear([rng.randint(-4, 4) for _ in range(num_vars)]))
    return PolyMatrix(size, size, entries)
