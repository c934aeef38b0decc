"""Binary forms in two variables u, v with exact rational coefficients.

A form of degree d is stored as its d+1 coefficients against the monomial
basis u^(d-i) v^i, i = 0..d, with no binomial weights.  Points of the
parameter line are ratios (a : b); the linear factor attached to such a
point is b*u - a*v, which vanishes exactly at (u, v) = (a, b).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegenerateInputError, DimensionError, InvalidInputError
from .multipoly import format_rational, parse_rational

Scalar = Union[Fraction, int]


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


class ParamPoint:
    """A point (a : b) of the projective parameter line, not both zero."""

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar, b: Scalar):
        a, b = Fraction(a), Fraction(b)
        if a == 0 and b == 0:
            raise InvalidInputError("(0 : 0) is not a point")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ParamPoint is immutable")

    def same_point(self, other: "ParamPoint") -> bool:
        # (a : b) == (a' : b') iff the cross ratio a*b' - a'*b vanishes.
        return self.a * other.b - other.a * self.b == 0

    def __repr__(self) -> str:
        return f"({self.a} : {self.b})"

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}

    @staticmethod
    def from_json(data: Mapping) -> "ParamPoint":
        return ParamPoint(parse_rational(str(data["a"])), parse_rational(str(data["b"])))


class BinaryForm:
    """Homogeneous binary form, coefficients in basis u^(d-i) v^i."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence[Scalar]):
        if degree < 0:
            raise InvalidInputError("degree must be >= 0")
        if len(coeffs) != degree + 1:
            raise DimensionError(f"degree {degree} form needs {degree + 1} coefficients")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("BinaryForm is immutable")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if d - i:
                mono.append("u" if d - i == 1 else f"u^{d - i}")
            if i:
                mono.append("v" if i == 1 else f"v^{i}")
            m = "*".join(mono) or "1"
            parts.append(m if c == 1 and mono else f"{c}*{m}" if c != 1 else str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise DimensionError("cannot add forms of different degrees")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def scale(self, factor: Scalar) -> "BinaryForm":
        return BinaryForm(self.degree, [c * Fraction(factor) for c in self.coeffs])

    def evaluate(self, point: ParamPoint) -> Fraction:
        """Value at (u, v) = (a, b); zero iff linear_factor(point) divides."""
        total = Fraction(0)
        # powers a^(d-i) b^i accumulated in two sweeps
        a_pows = [Fraction(1)]
        b_pows = [Fraction(1)]
        for _ in range(self.degree):
            a_pows.append(a_pows[-1] * point.a)
            b_pows.append(b_pows[-1] * point.b)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * a_pows[self.degree - i] * b_pows[i]
        return total

    def proj_equal(self, other: "BinaryForm") -> bool:
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        lead = next(i for i, c in enumerate(self.coeffs) if c != 0)
        olead = next(i for i, c in enumerate(other.coeffs) if c != 0)
        if lead != olead:
            return False
        scale = self.coeffs[lead] / other.coeffs[lead]
        return all(a == scale * b for a, b in zip(self.coeffs, other.coeffs))

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_rational(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: Mapping) -> "BinaryForm":
        coeffs = [parse_rational(str(c)) for c in data["coeffs"]]
        return BinaryForm(int(data["degree"]), coeffs)


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Product of forms: coefficient convolution, degrees add."""
    out = [Fraction(0)] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] += a * b
    return BinaryForm(f.degree + g.degree, out)


def linear_factor(t: ParamPoint) -> BinaryForm:
    """The degree-1 form b*u - a*v vanishing exactly at t = (a : b)."""
    return BinaryForm(1, [t.b, -t.a])


def form_from_roots(roots: Sequence[ParamPoint]) -> BinaryForm:
    """Product of the linear factors of the given roots (degree = len(roots))."""
    acc = BinaryForm(0, [Fraction(1)])
    for t in roots:
        acc = multiply(acc, linear_factor(t))
    return acc


def veronese(t: ParamPoint, n: int) -> BinaryForm:
    """The form (a*u + b*v)^n: coefficients C(n,i) a^(n-i) b^i."""
    if n < 0:
        raise InvalidInputError("negative degree")
    a_pows = [Fraction(1)]
    b_pows = [Fraction(1)]
    for _ in range(n):
        a_pows.append(a_pows[-1] * t.a)
        b_pows.append(b_pows[-1] * t.b)
    return BinaryForm(n, [_binomial(n, i) * a_pows[n - i] * b_pows[i] for i in range(n + 1)])


GL2 = Sequence[Sequence[Scalar]]


def transform_form(g: GL2, f: BinaryForm) -> BinaryForm:
    """Substitute (u, v) <- (g00*u + g01*v, g10*u + g11*v) into f.

    Requires det g != 0.  Composition contravariant in this convention:
    transform_form(g1*g2, f) == transform_form(g2, transform_form(g1, f)).
    """
    if len(g) != 2 or any(len(row) != 2 for row in g):
        raise DimensionError("expected a 2x2 matrix")
    g00, g01 = Fraction(g[0][0]), Fraction(g[0][1])
    g10, g11 = Fraction(g[1][0]), Fraction(g[1][1])
    if g00 * g11 - g01 * g10 == 0:
        raise DegenerateInputError("singular change of variables")
    d = f.degree
    u_image = BinaryForm(1, [g00, g01])
    v_image = BinaryForm(1, [g10, g11])
    # u^(d-i) v^i -> u_image^(d-i) * v_image^i, accumulated by running powers.
    u_pows: list[BinaryForm] = [BinaryForm(0, [Fraction(1)])]
    v_pows: list[BinaryForm] = [BinaryForm(0, [Fraction(1)])]
    for _ in range(d):
        u_pows.append(multiply(u_pows[-1], u_image))
        v_pows.append(multiply(v_pows[-1], v_image))
    out = BinaryForm(d, [Fraction(0)] * (d + 1)) if d >= 0 else BinaryForm(0, [0])
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + multiply(u_pows[d - i], v_pows[i]).scale(c)
    return out


def distinct_points(points: Iterable[ParamPoint]) -> bool:
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i].same_point(pts[j]):
                return False
    return True
