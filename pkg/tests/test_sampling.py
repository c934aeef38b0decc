"""Tests for the seeded generators and split pencils."""

from itertools import islice
from math import gcd

import pytest

from poncelet.binforms import ParamPoint, distinct_points, form_from_roots, multiply, linear_factor
from poncelet.errors import DegenerateInputError
from poncelet.sampling import (
    SplitPencil,
    distinct_param_points,
    low_height_pairs,
    random_fraction,
    random_integer_form,
    random_param_point,
    random_split_pencil,
    random_system,
    seeded_rng,
)


def test_low_height_pairs_prefix():
    first = list(islice(low_height_pairs(), 10))
    assert first == [
        (1, 0), (0, 1), (1, -1), (1, 1), (1, -2),
        (1, 2), (2, -1), (2, 1), (1, -3), (1, 3),
    ]


def test_low_height_pairs_primitive_and_unique():
    seen = set()
    for lam, mu in islice(low_height_pairs(), 100):
        assert gcd(abs(lam), abs(mu)) == 1
        assert (lam, mu) not in seen
        # lam >= 0 normalization means distinct pairs are distinct ratios
        assert (-lam, -mu) not in seen
        seen.add((lam, mu))


def test_seeded_rng_reproducible():
    a = seeded_rng(42)
    b = seeded_rng(42)
    assert [a.randint(0, 10**9) for _ in range(5)] == [b.randint(0, 10**9) for _ in range(5)]
    assert seeded_rng(None).randint(0, 10**9) == seeded_rng(None).randint(0, 10**9)


def test_random_fraction_height():
    rng = seeded_rng(1)
    for _ in range(200):
        q = random_fraction(rng, height=7)
        assert abs(q.numerator) <= 7
        assert 1 <= q.denominator <= 7


def test_random_param_point_valid():
    rng = seeded_rng(2)
    points = [random_param_point(rng, height=5) for _ in range(300)]
    assert any(p.same_point(ParamPoint(1, 0)) for p in points)
    for p in points:
        assert (p.a, p.b) != (0, 0)


def test_distinct_param_points():
    rng = seeded_rng(3)
    points = distinct_param_points(rng, 8, height=10)
    assert len(points) == 8
    assert distinct_points(points)


def test_random_integer_form():
    rng = seeded_rng(4)
    for _ in range(50):
        f = random_integer_form(rng, 4, bound=3)
        assert f.degree == 4
        assert any(c != 0 for c in f.coeffs)
        assert all(abs(c) <= 3 for c in f.coeffs)


def test_random_system_shape():
    rng = seeded_rng(5)
    system = random_system(rng, 3, 2)
    assert system.n == 3
    assert system.k == 2
    assert len(system.sections) == 3
    assert all(f.degree == 5 for f in system.sections)
    single = random_system(rng, 2, 1, count=1)
    assert len(single.sections) == 1


def test_random_system_reproducible():
    one = random_system(seeded_rng(9), 2, 2)
    two = random_system(seeded_rng(9), 2, 2)
    assert [f.coeffs for f in one.sections] == [f.coeffs for f in two.sections]


def test_split_pencil_members():
    pencil = SplitPencil(
        2, 1,
        [ParamPoint(0, 1), ParamPoint(1, 1)],
        ParamPoint(1, 0), ParamPoint(1, 2),
    )
    roots = pencil.member_roots(1, 0)
    assert roots is not None
    assert roots[:2] == list(pencil.p_roots)
    assert roots[2].same_point(ParamPoint(1, 0))
    members = pencil.members(20)
    assert len(members) == 20
    for roots in members:
        assert len(roots) == 3
        assert distinct_points(roots)


def test_split_pencil_member_matches_pencil_combination():
    pencil = SplitPencil(
        2, 2,
        [ParamPoint(0, 1), ParamPoint(1, 1), ParamPoint(-1, 1)],
        ParamPoint(1, 2), ParamPoint(1, 3),
    )
    f, g = pencil.system.sections
    for lam, mu in islice(low_height_pairs(), 8):
        roots = pencil.member_roots(lam, mu)
        if roots is None:
            continue
        member = form_from_roots(roots)
        combo = [lam * fc + mu * gc for fc, gc in zip(f.coeffs, g.coeffs)]
        scaled = multiply(linear_factor(roots[-1]), form_from_roots(pencil.p_roots))
        assert scaled.coeffs == member.coeffs
        ratios = {c / m for c, m in zip(combo, member.coeffs) if m != 0}
        assert len(ratios) == 1
        assert all(c == 0 for c, m in zip(combo, member.coeffs) if m == 0)


def test_split_pencil_collision_returns_none():
    pencil = SplitPencil(
        2, 1,
        [ParamPoint(0, 1), ParamPoint(1, 1)],
        ParamPoint(1, 0), ParamPoint(1, 2),
    )
    # the moving root lands on the fixed root (0 : 1) when
    # lam*(1,0) + mu*(1,2) ~ (0,1), i.e. lam + mu == 0
    assert pencil.member_roots(-1, 1) is None
    assert pencil.member_roots(1, -1) is None
    assert pencil.member_roots(2, 1) is not None


def test_split_pencil_coincident_generators():
    with pytest.raises(DegenerateInputError):
        SplitPencil(2, 1, [ParamPoint(0, 1), ParamPoint(1, 1)], ParamPoint(1, 2), ParamPoint(2, 4))


def test_random_split_pencil():
    rng = seeded_rng(11)
    pencil = random_split_pencil(rng, 3, 2, height=15)
    assert pencil.n == 3
    assert pencil.k == 2
    assert len(pencil.p_roots) == 4
    assert all(f.degree == 5 for f in pencil.system.sections)
    again = random_split_pencil(seeded_rng(11), 3, 2, height=15)
    assert [f.coeffs for f in again.system.sections] == [f.coeffs for f in pencil.system.sections]
