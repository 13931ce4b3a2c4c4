"""Exact reversion porisms on conics.

Points and lines are triples of rationals (int, str or Fraction); results
come back as canonical triples of Fraction. A conic is the six upper-triangle
coefficients a11 a12 a13 a22 a23 a33.
"""

from ._core import (
    GeometryError,
    butterfly_secant_criterion,
    butterfly_tangent_criterion,
    closing_line,
    closing_property,
    complete_porism,
    conic_through_five_points,
    conjugate_scene,
    cross_ratio,
    fixed_elements,
    join,
    line_position,
    meet,
    pencil_member,
    polar,
    radical_axis,
    reversion_matrix,
    three_to_one,
    trace_polygon,
    transfer_check,
    unit_circle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
