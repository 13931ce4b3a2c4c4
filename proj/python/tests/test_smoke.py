from fractions import Fraction

import pytest

import pyporism as pp

CIRCLE = pp.unit_circle()
BUTTERFLY = [(0, 0, 1), (2, 0, 1), (3, 0, 1), (-1, 0, 5)]


def test_join_meet_cross_ratio():
    assert pp.join((1, 0, 1), (-1, 0, 1)) == (0, 1, 0)
    assert pp.meet((0, 1, 0), (1, 0, -1)) == (1, 0, 1)
    assert pp.cross_ratio((1, 0, 1), (-1, 0, 1), (0, 0, 1), ("-1/5", 0, 1)) == Fraction(2, 3)
    assert pp.cross_ratio((1, 0, 1), (-1, 0, 1), (-1, 0, 1), (3, 0, 1)) is None


def test_reversion_and_three_to_one():
    assert pp.reversion_matrix(CIRCLE, (2, 0, 1)) == ((5, 0, -4), (0, -3, 0), (4, 0, -5))
    assert pp.three_to_one(CIRCLE, (0, 0, 1), (2, 0, 1), (3, 0, 1)) == (1, 0, -5)


def test_closing_and_completion():
    assert pp.closing_property(CIRCLE, BUTTERFLY)
    assert not pp.closing_property(CIRCLE, BUTTERFLY[:3] + [(-1, 0, 4)])
    assert pp.closing_line(CIRCLE, BUTTERFLY[:2]) == (0, 1, 0)
    assert pp.complete_porism(CIRCLE, BUTTERFLY[:2], (3, 0, 1)) == (1, 0, -5)
    vertices, closed = pp.trace_polygon(CIRCLE, BUTTERFLY, (Fraction(3, 5), Fraction(4, 5), 1))
    assert closed and vertices[0] == vertices[-1] == (3, 4, 5)


def test_criteria_and_transfers():
    closes, outer, inner = pp.butterfly_secant_criterion(CIRCLE, BUTTERFLY)
    assert closes and outer == inner == Fraction(2, 3)
    assert pp.butterfly_tangent_criterion(CIRCLE, (0, 1, 1), [(1, 1, 1), (2, 1, 1), (3, 1, 1), (6, 5, 5)])
    conj = pp.conjugate_scene(CIRCLE, (0, 1, 0), BUTTERFLY)
    assert pp.closing_property(CIRCLE, conj)
    assert pp.transfer_check(CIRCLE, BUTTERFLY, pp.pencil_member(CIRCLE, (0, 1, 0), 3))
    assert pp.radical_axis(CIRCLE, (1, 0, -4, 1, 0, 12)) == (8, 0, -13)


def test_fixed_elements_and_conics():
    fe = pp.fixed_elements(CIRCLE, [(0, 0, 1), (2, 0, 1)])
    assert fe["kind"] == "secant"
    assert fe["line"] == (0, 1, 0) and fe["pole"] == (0, 1, 0)
    five = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1), (3, 4, 5)]
    assert pp.conic_through_five_points(five) == CIRCLE
    assert pp.line_position(CIRCLE, (8, 0, -13))["kind"] == "missing"


def test_errors_carry_codes():
    with pytest.raises(pp.GeometryError) as err:
        pp.reversion_matrix(CIRCLE, (3, 4, 5))
    assert err.value.code == "CenterOnConic"
