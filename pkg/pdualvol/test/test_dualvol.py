#
# coding: utf-8
# Copyright (c) 2018 DATADVANCE
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""Dual volumes, dual volume functions and adjoints."""

import random

import pytest

from pdualvol import dualvol
from pdualvol import exactnum
from pdualvol import geometry
from pdualvol import symfun
from pdualvol.exactnum import Rational
from pdualvol.symfun import LinearForm

from . import helper_polytopes


SQUARE = geometry.Polytope([(-1, -1), (1, -1), (-1, 1), (1, 1)])
SEGMENT = geometry.Polytope([(1,), (3,)])


def test_dual_volume_of_quadrilateral(quadrilateral):
    """The origin lies outside, so the value is negative."""
    assert dualvol.dual_volume(quadrilateral) == Rational(-6, 5)


def test_dual_volume_simple_cases():
    assert dualvol.dual_volume(SEGMENT) == Rational(-2, 3)
    assert dualvol.dual_volume(SQUARE) == 4
    assert dualvol.dual_volume(geometry.Polytope([(0, 0), (1, 1)])) == 0
    with pytest.raises(dualvol.Codegenerate):
        dualvol.dual_volume(geometry.Polytope([(0, 0), (1, 0), (0, 1)]))


def test_fan_function():
    """Fan of the square with support values 1, 2, 3, 4 on its rays."""
    fan = geometry.Fan(
        2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)]
    )
    assert dualvol.f_fan(dualvol.SupportData(fan, [1, 2, 3, 4])) == 1
    with pytest.raises(dualvol.ZeroSupportValue):
        dualvol.f_fan(dualvol.SupportData(fan, [1, 0, 3, 4]))
    with pytest.raises(exactnum.DimensionError):
        dualvol.SupportData(fan, [1, 2])


def test_fan_function_modulo_normal():
    """Two opposite rays in R^2 / R(1, 1), each determinant is 2."""
    fan = geometry.Fan(2, [(1, -1), (-1, 1)], [(0,), (1,)])
    data = dualvol.SupportData(fan, [1, 1])
    assert dualvol.f_fan(data, normal=(1, 1)) == 4


def test_fan_function_symbolic():
    fan = geometry.normal_fan(SQUARE)
    table = symfun.VariableTable(['t'])
    t = LinearForm.variable('t')
    function = dualvol.f_fan(dualvol.SupportData(fan, [t] * 4, table))
    assert symfun.rf_eval(function, (2,)) == 1


def test_dual_volume_function(quadrilateral):
    result = dualvol.dual_volume_function(quadrilateral)
    table = result.table
    assert table.names == ('z1', 'z2')
    assert result.kind == 'dual_volume'
    assert result.value_at_origin == Rational(-6, 5)
    expected = symfun.SparsePolynomial.from_form(
        table, LinearForm(6, {'z2': -2})
    )
    assert result.numerator == expected
    assert len(result.denominator) == 4
    assert symfun.rf_eval(result.function, (2, 0)) == dualvol.dual_volume(
        quadrilateral.translated((-2, 0))
    )


def test_pole_at_origin():
    triangle = geometry.Polytope([(0, 0), (1, 0), (0, 1)])
    result = dualvol.canonical_form(triangle)
    assert result.kind == 'canonical_form'
    assert result.value_at_origin is dualvol.POLE_AT_ORIGIN
    inside = (Rational(1, 4), Rational(1, 4))
    assert symfun.rf_eval(result.function, inside) > 0


def test_triangle_with_origin_on_a_facet_line():
    """conv((0,3),(0,1),(1,1)) and a projective image of a scaled copy."""
    triangle = geometry.Polytope([(0, 3), (0, 1), (1, 1)])
    result = dualvol.dual_volume_function(triangle)
    assert result.value_at_origin is dualvol.POLE_AT_ORIGIN
    expected = symfun.RationalFunction(result.table, [(2, (), (
        LinearForm.variable('z1'),
        LinearForm(-1, {'z2': 1}),
        LinearForm(3, {'z1': -2, 'z2': -1}),
    ))])
    assert symfun.rf_equal(result.function, expected)
    halved = geometry.Polytope([
        (0, Rational(3, 2)), (0, Rational(1, 2)), (1, Rational(1, 2))
    ])
    pulled = symfun.projective_pullback(
        dualvol.dual_volume_function(halved).function,
        [[1, 0, 0], [0, 1, 0], [0, 1, 1]]
    )
    displayed = symfun.RationalFunction(result.table, [(4, (), (
        LinearForm.variable('z1'),
        LinearForm(3, {'z1': -2, 'z2': 1}),
        LinearForm(-1, {'z2': 1}),
    ))])
    assert symfun.rf_equal(pulled, displayed)


def test_translation_is_a_pullback(quadrilateral):
    """Vol^_z(P + t) is Vol^_{z - t}(P)."""
    shift = (3, -1)
    moved = dualvol.dual_volume_function(quadrilateral.translated(shift))
    original = dualvol.dual_volume_function(quadrilateral)
    pulled = symfun.projective_pullback(
        original.function, [[1, 0, -3], [0, 1, 1], [0, 0, 1]]
    )
    assert symfun.rf_equal(pulled, moved.function)


def test_adjoint_identity(quadrilateral, random_polytope):
    assert dualvol.verify_adjoint_identity(quadrilateral)
    assert dualvol.verify_adjoint_identity(SQUARE)
    for _ in range(3):
        assert dualvol.verify_adjoint_identity(random_polytope(2, 6))


def test_adjoint_of_cone():
    """Cone over the unit triangle: the adjoint is the constant 1."""
    adjoint = dualvol.adjoint_polynomial([(1, 0, 0), (1, 1, 0), (1, 0, 1)])
    assert adjoint.terms() == {(0, 0): 1}
    with pytest.raises(geometry.NotPointed):
        dualvol.adjoint_polynomial([(1, 0), (-1, 0), (0, 1)])


@pytest.mark.slow
@pytest.mark.parametrize('dim, max_vertices', [(2, 7), (3, 6)])
@pytest.mark.parametrize('seed', range(50))
def test_dual_volume_is_volume_of_polar(dim, max_vertices, seed):
    """Vol^(P) is the normalized volume of the polar dual."""
    p = helper_polytopes.random_polytope(
        random.Random(seed), dim, max_vertices
    )
    assert dualvol.dual_volume(p) == geometry.normalized_volume(
        geometry.polar_dual(p)
    )


def test_dual_volume_of_segment_is_polar_length(random_polytope):
    p = random_polytope(1, 4)
    assert dualvol.dual_volume(p) == geometry.normalized_volume(
        geometry.polar_dual(p)
    )


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(100))
def test_dual_brunn_minkowski(seed):
    rng = random.Random(seed)
    p = helper_polytopes.random_polytope(rng, 2, 6)
    q = helper_polytopes.random_polytope(rng, 2, 6)
    assert dualvol.dual_brunn_minkowski_holds(p, q)


@pytest.mark.parametrize('dim, max_vertices', [(2, 6), (3, 5)])
@pytest.mark.parametrize('seed', range(5))
def test_valuation_over_triangulations(dim, max_vertices, seed):
    """Vol^_z(P) is the sum of Vol^_z over a pulling triangulation."""
    p = helper_polytopes.random_lattice_polytope(
        random.Random(seed), dim, max_vertices
    )
    whole = dualvol.dual_volume_function(p).function
    pieces = [
        dualvol.dual_volume_function(simplex).function
        for simplex in geometry.simplices(p)
    ]
    assert symfun.rf_equal(whole, symfun.rf_sum(whole.table, pieces))


def test_integral_comparison():
    shifted = dualvol.integral_comparison(SEGMENT, (2,))
    assert shifted.exact == 2
    assert shifted.within_tolerance
    assert shifted.numeric == pytest.approx(2.0, rel=1e-6)
    assert dualvol.integral_check(SQUARE, (0, 0))
    with pytest.raises(geometry.OriginNotInterior):
        dualvol.integral_comparison(SEGMENT, (5,))
    with pytest.raises(dualvol.DimensionTooLarge):
        dualvol.integral_comparison(
            geometry.Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
            (0, 0, 0)
        )
