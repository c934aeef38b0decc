"""Sparse multivariate polynomials over the rationals, and polynomial matrices.

Coefficients are `fractions.Fraction`; terms are stored sparsely as a map
from exponent tuples to nonzero coefficients.  The canonical term order is
graded lexicographic, highest term first: compare total degree, then the
exponent tuple itself (variable 0 is the biggest variable).  All serialized
term lists use that order, so equal polynomials serialize byte-identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DegenerateInputError, DimensionError, InvalidInputError

Scalar = Union[Fraction, int]


def _grlex_key(exponents: tuple[int, ...]) -> tuple:
    return (sum(exponents), exponents)


def parse_rational(text: str) -> Fraction:
    """Parse the wire form "p/q" (or "p") into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    # str(Fraction) is exactly the wire format: "p/q", or "p" when q == 1.
    return str(value)


class MultiPoly:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        if num_vars < 0:
            raise InvalidInputError("num_vars must be >= 0")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise InvalidInputError(f"bad exponent tuple {exps} for {num_vars} variables")
            c = Fraction(coeff)
            if c != 0:
                clean[exps] = c
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("MultiPoly is immutable")

    # ------------------------------------------------------------------ basics

    @staticmethod
    def zero(num_vars: int) -> "MultiPoly":
        return MultiPoly(num_vars, {})

    @staticmethod
    def constant(num_vars: int, value: Scalar) -> "MultiPoly":
        return MultiPoly(num_vars, {(0,) * num_vars: Fraction(value)})

    @staticmethod
    def variable(num_vars: int, index: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise InvalidInputError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(num_vars))
        return MultiPoly(num_vars, {exps: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (errors otherwise)."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise InvalidInputError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int | None:
        """Total degree; None for the zero polynomial (degree is undefined)."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order, leading term first."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    # -------------------------------------------------------------- arithmetic

    def _check_same_ring(self, other: "MultiPoly") -> None:
        if self.num_vars != other.num_vars:
            raise DimensionError("polynomials live in different rings")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_same_ring(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return MultiPoly(self.num_vars, terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.num_vars, {e: c * other for e, c in self.terms.items()})
        self._check_same_ring(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise InvalidInputError("negative power of a polynomial")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out

    # ------------------------------------------------------------- operations

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.num_vars:
            raise DimensionError("evaluation point has wrong length")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for base, e in zip(pt, exps):
                if e:
                    value *= base**e
            total += value
        return total

    def partial_derivative(self, index: int) -> "MultiPoly":
        """Exact partial derivative with respect to variable `index`."""
        if not 0 <= index < self.num_vars:
            raise InvalidInputError(f"variable index {index} out of range")
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            new = list(exps)
            new[index] = e - 1
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff * e
        return MultiPoly(self.num_vars, terms)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute images[i] for variable i; images share one target ring."""
        if len(images) != self.num_vars:
            raise DimensionError("need one image per variable")
        if not images:
            return self
        target_vars = images[0].num_vars
        if any(im.num_vars != target_vars for im in images):
            raise DimensionError("substitution images live in different rings")
        # Cache powers per variable: degrees stay small in every use here.
        powers: list[dict[int, MultiPoly]] = [dict() for _ in images]
        result = MultiPoly.zero(target_vars)
        for exps, coeff in self.terms.items():
            factor = MultiPoly.constant(target_vars, coeff)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if e not in powers[i]:
                    powers[i][e] = images[i] ** e
                factor = factor * powers[i][e]
            result = result + factor
        return result

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient self/divisor when the division is exact (errors otherwise)."""
        self._check_same_ring(divisor)
        if divisor.is_zero():
            raise DegenerateInputError("division by the zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.num_vars)
        lead_exp, lead_coeff = divisor.sorted_terms()[0]
        remainder = self
        quotient: dict[tuple[int, ...], Fraction] = {}
        while not remainder.is_zero():
            rexp, rcoeff = remainder.sorted_terms()[0]
            qexp = tuple(a - b for a, b in zip(rexp, lead_exp))
            if any(e < 0 for e in qexp):
                raise InvalidInputError("division is not exact")
            qcoeff = rcoeff / lead_coeff
            quotient[qexp] = quotient.get(qexp, Fraction(0)) + qcoeff
            remainder = remainder - divisor * MultiPoly(self.num_vars, {qexp: qcoeff})
        return MultiPoly(self.num_vars, quotient)

    def normalized(self) -> "MultiPoly":
        """Scale so the leading coefficient is 1 (projective representative)."""
        if self.is_zero():
            return self
        return self * (1 / self.leading_coefficient())

    # ------------------------------------------------------------ wire format

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coeff": format_rational(coeff)}
            for exps, coeff in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable[Mapping], num_vars: int | None = None) -> "MultiPoly":
        terms: dict[tuple[int, ...], Fraction] = {}
        width = num_vars
        for item in data:
            exps = tuple(int(e) for e in item["exponents"])
            if width is None:
                width = len(exps)
            coeff = parse_rational(item["coeff"])
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        if width is None:
            raise InvalidInputError("cannot infer variable count of an empty term list")
        return MultiPoly(width, terms)


def proj_equal_poly(p: MultiPoly, q: MultiPoly) -> bool:
    """True when p = c*q for a nonzero rational c."""
    if p.num_vars != q.num_vars:
        return False
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.normalized() == q.normalized()


class PolyMatrix:
    """Dense matrix of MultiPoly entries over one common ring."""

    __slots__ = ("rows", "cols", "num_vars", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[MultiPoly]):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError("entry list does not match the matrix shape")
        widths = {e.num_vars for e in entries}
        if len(widths) > 1:
            raise DimensionError("matrix entries live in different rings")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "num_vars", widths.pop() if widths else 0)
        object.__setattr__(self, "entries", list(entries))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, key: tuple[int, int]) -> MultiPoly:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index {key} out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[MultiPoly]:
        return [self[i, j] for j in range(self.cols)]

    def column(self, j: int) -> list[MultiPoly]:
        return [self[i, j] for i in range(self.rows)]

    def iter_rows(self) -> Iterator[list[MultiPoly]]:
        for i in range(self.rows):
            yield self.row(i)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        entries = [self[i, j] for i in row_idx for j in col_idx]
        return PolyMatrix(len(row_idx), len(col_idx), entries)

    def with_column(self, j: int, column: Sequence[MultiPoly]) -> "PolyMatrix":
        if len(column) != self.rows:
            raise DimensionError("replacement column has wrong length")
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + j] = column[i]
        return PolyMatrix(self.rows, self.cols, entries)

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.rows != self.rows:
            raise DimensionError("row counts differ")
        entries = []
        for i in range(self.rows):
            entries.extend(self.row(i))
            entries.extend(other.row(i))
        return PolyMatrix(self.rows, self.cols + other.cols, entries)

    def left_mul_rational(self, lhs: Sequence[Sequence[Scalar]]) -> "PolyMatrix":
        """Product Q*self for a rational matrix Q."""
        if any(len(r) != self.rows for r in lhs):
            raise DimensionError("left factor width must equal row count")
        out: list[MultiPoly] = []
        for qrow in lhs:
            for j in range(self.cols):
                acc = MultiPoly.zero(self.num_vars)
                for i, q in enumerate(qrow):
                    if q:
                        acc = acc + self[i, j] * Fraction(q)
                out.append(acc)
        return PolyMatrix(len(lhs), self.cols, out)

    def evaluate(self, point: Sequence[Scalar]) -> list[list[Fraction]]:
        return [[self[i, j].evaluate(point) for j in range(self.cols)] for i in range(self.rows)]

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [e.to_json() for e in self.entries],
        }

    @staticmethod
    def from_json(data: Mapping, num_vars: int | None = None) -> "PolyMatrix":
        entries = [MultiPoly.from_json(item, num_vars) for item in data["entries"]]
        return PolyMatrix(int(data["rows"]), int(data["cols"]), entries)


def _constant_columns(m: PolyMatrix) -> list[int]:
    return [j for j in range(m.cols) if all(m[i, j].is_constant() for i in range(m.rows))]


def _det_cofactor(m: PolyMatrix) -> MultiPoly:
    n = m.rows
    if n == 0:
        return MultiPoly.constant(m.num_vars, 1)
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    # Expand along the most convenient column: prefer constant columns, then
    # the one with the most zero entries.
    const_cols = set(_constant_columns(m))

    def column_score(j: int) -> tuple[int, int, int]:
        zeros = sum(1 for i in range(n) if m[i, j].is_zero())
        return (0 if j in const_cols else 1, -zeros, j)

    j = min(range(m.cols), key=column_score)
    rest_cols = [c for c in range(m.cols) if c != j]
    acc = MultiPoly.zero(m.num_vars)
    for i in range(n):
        entry = m[i, j]
        if entry.is_zero():
            continue
        minor = m.submatrix([r for r in range(n) if r != i], rest_cols)
        term = entry * _det_cofactor(minor)
        acc = acc + (term if (i + j) % 2 == 0 else -term)
    return acc


def _det_bareiss(m: PolyMatrix) -> MultiPoly:
    """Fraction-free Bareiss determinant; exact divisions are guaranteed."""
    n = m.rows
    a: list[list[MultiPoly]] = [m.row(i) for i in range(n)]
    sign = 1
    prev = MultiPoly.constant(m.num_vars, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                return MultiPoly.zero(m.num_vars)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign  # row swap flips the sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_divide(prev)
            a[i][k] = MultiPoly.zero(m.num_vars)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def det_poly_matrix(m: PolyMatrix) -> MultiPoly:
    """Determinant of a square polynomial matrix.

    Strategy: cofactor expansion when at least half the columns are constant
    (cheap eliminations dominate), fraction-free Bareiss otherwise.
    """
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    if m.rows == 0:
        return MultiPoly.constant(m.num_vars, 1)
    if 2 * len(_constant_columns(m)) >= m.cols:
        return _det_cofactor(m)
    return _det_bareiss(m)
