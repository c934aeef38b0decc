"""Deterministic random generators for sweeps and probes.

Everything is driven by `random.Random(seed)`, so a fixed seed reproduces a
sweep bit-for-bit.  Heights are bounded so all arithmetic stays in small
rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .binforms import BinaryForm, ParamPoint, distinct_points, form_from_roots, linear_factor, multiply
from .errors import DegenerateInputError
from .linalg import rank_rational_matrix
from .schwarzenberger import PonceletSystem

DEFAULT_SEED = 1729


def seeded_rng(seed: int | None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def random_fraction(rng: random.Random, height: int = 100) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_param_point(rng: random.Random, height: int = 20) -> ParamPoint:
    # Mostly affine points a/b, occasionally the point at infinity (1 : 0).
    if rng.random() < 0.05:
        return ParamPoint(1, 0)
    return ParamPoint(rng.randint(-height, height), rng.randint(1, height))


def distinct_param_points(rng: random.Random, count: int, height: int = 20) -> list[ParamPoint]:
    points: list[ParamPoint] = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 200 * count:
            raise DegenerateInputError("could not sample distinct points")  # pragma: no cover
        candidate = random_param_point(rng, height)
        if all(not candidate.same_point(p) for p in points):
            points.append(candidate)
    return points


def random_integer_form(rng: random.Random, degree: int, bound: int = 9) -> BinaryForm:
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
        if any(coeffs):
            return BinaryForm(degree, coeffs)


def random_system(
    rng: random.Random, n: int, k: int, count: int | None = None, bound: int = 9
) -> PonceletSystem:
    """Random integer-coefficient system of `count` independent sections."""
    count = n if count is None else count
    degree = n + k
    while True:
        sections = [random_integer_form(rng, degree, bound) for _ in range(count)]
        if rank_rational_matrix([list(f.coeffs) for f in sections]) == count:
            return PonceletSystem(n, k, sections)


def low_height_pairs() -> Iterator[tuple[int, int]]:
    """The fixed member-parameter sequence (1,0), (0,1), (1,-1), (1,1), (1,-2), ...

    Enumerates primitive (lam, mu) by height, lam >= 0, normalized so each
    ratio appears once.
    """
    from math import gcd

    yield (1, 0)
    yield (0, 1)
    height = 1
    while True:
        for lam in range(1, height + 1):
            for mu in range(-height, height + 1):
                if mu == 0 or max(lam, abs(mu)) != height:
                    continue
                if gcd(lam, abs(mu)) != 1:
                    continue
                yield (lam, mu)
        height += 1


class SplitPencil:
    """A pencil {l_a * p, l_b * p} every member of which splits rationally.

    p is a fixed rational-rooted form of degree n+k-1; the member at (lam : mu)
    is (lam*l_a + mu*l_b) * p, with root list p_roots + one moving root.
    """

    __slots__ = ("n", "k", "p_roots", "t_a", "t_b", "system")

    def __init__(self, n: int, k: int, p_roots: Sequence[ParamPoint], t_a: ParamPoint, t_b: ParamPoint):
        if t_a.same_point(t_b):
            raise DegenerateInputError("pencil generators coincide")
        p = form_from_roots(p_roots)
        f = multiply(linear_factor(t_a), p)
        g = multiply(linear_factor(t_b), p)
        system = PonceletSystem(n, k, [f, g])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p_roots", tuple(p_roots))
        object.__setattr__(self, "t_a", t_a)
        object.__setattr__(self, "t_b", t_b)
        object.__setattr__(self, "system", system)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("SplitPencil is immutable")

    def member_roots(self, lam: int, mu: int) -> list[ParamPoint] | None:
        """Roots of the member at (lam : mu); None if the moving root collides.

        lam*l_a + mu*l_b = (lam*b_a + mu*b_b) u - (lam*a_a + mu*a_b) v, the
        linear factor of the point below.
        """
        a = lam * self.t_a.a + mu * self.t_b.a
        b = lam * self.t_a.b + mu * self.t_b.b
        if a == 0 and b == 0:
            return None
        moving = ParamPoint(a, b)
        if any(moving.same_point(t) for t in self.p_roots):
            return None
        return list(self.p_roots) + [moving]

    def members(self, count: int) -> list[list[ParamPoint]]:
        """The first `count` non-degenerate members along the fixed sequence."""
        out: list[list[ParamPoint]] = []
        for lam, mu in low_height_pairs():
            roots = self.member_roots(lam, mu)
            if roots is not None:
                out.append(roots)
            if len(out) == count:
                return out
        raise DegenerateInputError("pencil exhausted")  # pragma: no cover


def random_split_pencil(rng: random.Random, n: int, k: int, height: int = 20) -> SplitPencil:
    while True:
        points = distinct_param_points(rng, n + k + 1, height)
        try:
            return SplitPencil(n, k, points[: n + k - 1], points[-2], points[-1])
        except DegenerateInputError:  # pragma: no cover - distinct points make this rare
            continue
