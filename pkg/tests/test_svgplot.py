"""Tests for the SVG scene renderer."""

from fractions import Fraction

import pytest

from conftest import var
from poncelet.binforms import BinaryForm, ParamPoint
from poncelet.errors import DimensionError, InvalidInputError
from poncelet.incidence import polytope_vertices
from poncelet.schwarzenberger import PonceletSystem, poncelet_hypersurface
from poncelet.svgplot import envelope_conic, render_scene

CONIC_ROOTS = [ParamPoint(0, 1), ParamPoint(1, 1), ParamPoint(1, 0)]


def conic_equation():
    system = PonceletSystem(
        2, 1, [BinaryForm(3, [0, 1, -1, 0]), BinaryForm(3, [1, 0, 0, 1])]
    )
    return poncelet_hypersurface(system)


def test_envelope_conic():
    x0, x1, x2 = (var(3, i) for i in range(3))
    assert envelope_conic() == x1 * x1 - x0 * x2 * 4


def test_render_scene_validation():
    x0 = var(4, 0)
    with pytest.raises(DimensionError):
        render_scene(x0 * x0, [])
    conic = conic_equation()
    with pytest.raises(InvalidInputError):
        render_scene(conic, [], chart=3)
    with pytest.raises(InvalidInputError):
        render_scene(conic, [], resolution=7)
    with pytest.raises(InvalidInputError):
        render_scene(
            conic, [], window=(Fraction(5), Fraction(-5), Fraction(-5), Fraction(5))
        )


def test_render_scene_counts_by_chart():
    conic = conic_equation()
    svg1 = render_scene(conic, [CONIC_ROOTS], chart=1)
    assert svg1.count("<line") == 3
    assert svg1.count("<circle") == 3
    svg0 = render_scene(conic, [CONIC_ROOTS], chart=0)
    assert svg0.count("<line") == 2
    assert svg0.count("<circle") == 1


def test_render_scene_structure():
    svg = render_scene(conic_equation(), [CONIC_ROOTS], chart=1)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")
    for group in ('id="envelope"', 'id="curve"', 'id="member-lines"', 'id="vertices"'):
        assert group in svg


def test_render_scene_deterministic():
    conic = conic_equation()
    first = render_scene(conic, [CONIC_ROOTS], chart=1)
    second = render_scene(conic, [CONIC_ROOTS], chart=1)
    assert first == second


def test_render_scene_empty_members():
    svg = render_scene(conic_equation(), [])
    assert svg.count("<line") == 0
    assert svg.count("<circle") == 0
    assert svg.count("<path") == 2


def test_vertices_lie_on_curve_numerically():
    conic = conic_equation()
    terms = [(float(c), e) for e, c in conic.sorted_terms()]
    for vertex in polytope_vertices(2, CONIC_ROOTS).vertices:
        pt = [float(v) for v in vertex]
        value = sum(c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] for c, e in terms)
        assert abs(value) < 1e-9
