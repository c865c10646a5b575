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

"""Dual mixed volumes, fine mixed cells and mixed subdivisions."""

import random

import pytest

from pdualvol import dualvol
from pdualvol import geometry
from pdualvol import mixed
from pdualvol import symfun
from pdualvol.exactnum import Rational
from pdualvol.symfun import LinearForm

from . import helper_polytopes


# a 2-simplex and a segment in R^3 forming a fine mixed cell
PRISM_CELL = mixed.MixedCell([
    [(0, 2, 1), (1, -1, 1), (-1, 0, 1)],
    [(0, 0, -2), (-1, 1, -1)],
])


def _form(c1, c2):
    return LinearForm(0, {'x1': c1, 'x2': c2})


def test_fine_cell_rays():
    info = mixed.fine_cell_rays(PRISM_CELL)
    assert info.kappa == Rational(1, 5)
    first = {v for (i, _), v in info.rays.items() if i == 0}
    assert first == {
        (Rational(1, 5), Rational(2, 5), Rational(-1, 5)),
        (Rational(2, 5), Rational(-1, 5), Rational(3, 5)),
        (Rational(-3, 5), Rational(-1, 5), Rational(-2, 5)),
    }
    second = {v for (i, _), v in info.rays.items() if i == 1}
    assert second == {(0, 0, -1), (0, 0, 1)}


def test_fine_cell_dmv_closed_form():
    """kappa * x1 * x2 over the product of the five support forms."""
    function = mixed.fine_cell_dmv(PRISM_CELL, z=False)
    table = function.table
    assert table.names == ('x1', 'x2')
    expected = symfun.RationalFunction(table, [(
        Rational(1, 5),
        (_form(1, 0), _form(0, 1)),
        (_form(Rational(2, 5), Rational(-2, 5)),
         _form(Rational(-1, 5), Rational(6, 5)),
         _form(Rational(4, 5), Rational(-4, 5)),
         _form(1, -1),
         _form(-1, 2)),
    )])
    assert symfun.rf_equal(function, expected)
    assert symfun.rf_equal(
        function, mixed.dual_mixed_volume(PRISM_CELL.sequence())
    )


def test_fine_cell_dmv_with_translation():
    function = mixed.fine_cell_dmv(PRISM_CELL)
    assert function.table.names == ('x1', 'x2', 'z1', 'z2', 'z3')
    assert symfun.rf_equal(
        function, mixed.dual_mixed_volume_z(PRISM_CELL.sequence())
    )


def test_non_fine_cell_rejected():
    cell = mixed.MixedCell([[(0, 0), (1, 0), (0, 1)], [(0, 0), (1, 1)]])
    assert not cell.is_fine()
    with pytest.raises(mixed.SingularCellGeometry):
        mixed.fine_cell_rays(cell)


def test_dmv_specializes_to_dual_volume(two_triangles):
    function = mixed.dual_mixed_volume(two_triangles)
    total = two_triangles.total()
    assert symfun.rf_eval(function, (1, 1)) == dualvol.dual_volume(total)
    assert symfun.rf_eval(function, (2, 0)) == dualvol.dual_volume(
        two_triangles.parts[0].scaled(2)
    )
    numerator, factors = mixed.dmv_numerator(two_triangles)
    point = {'x1': 1, 'x2': 2}
    product = Rational(1)
    for form in factors:
        product *= form.evaluate(point)
    assert numerator.evaluate(point) / product == symfun.rf_eval(
        function, point
    )


def test_regularity():
    segments = mixed.MinkowskiSequence([
        geometry.Polytope([(0, 0), (1, 0)]),
        geometry.Polytope([(0, 0), (0, 1)]),
    ])
    assert not mixed.is_regular(segments)
    with pytest.raises(mixed.NotRegular):
        mixed.dual_mixed_volume(segments)
    # the translated dual mixed volume is still defined
    assert not mixed.dual_mixed_volume_z(segments).is_trivially_zero()
    parallel = mixed.MinkowskiSequence([
        geometry.Polytope([(0, 0), (1, 0)]),
        geometry.Polytope([(0, 0), (2, 0)]),
    ])
    with pytest.raises(geometry.NotFullDimensional):
        mixed.is_regular(parallel)
    assert mixed.dual_mixed_volume(parallel).is_trivially_zero()


def test_polar_cone(two_triangles):
    assert mixed.is_regular(two_triangles)
    assert mixed.in_polar_cone(two_triangles, (1, 1))
    assert not mixed.in_polar_cone(two_triangles, (-1, -1))


def test_two_triangles_subdivision(two_triangles, two_triangles_subdivision):
    sub = two_triangles_subdivision
    assert sub.is_fine()
    VOLUMES = [4, 4, 5, 8, 4]
    assert [
        geometry.normalized_volume(cell.sequence().total()) for cell in sub
    ] == VOLUMES
    assert geometry.normalized_volume(two_triangles.total()) == sum(VOLUMES)
    assert mixed.validate_mixed_subdivision(two_triangles, sub)
    assert sub.to_indices(two_triangles)[3] == [[1, 2], [0, 2]]
    assert mixed.verify_subdivision_additivity(two_triangles, sub)


def test_broken_subdivisions(two_triangles, two_triangles_subdivision):
    cells = list(two_triangles_subdivision)
    partial = mixed.MixedSubdivision(cells[1:])
    assert not mixed.validate_mixed_subdivision(two_triangles, partial)
    doubled = mixed.MixedSubdivision(cells[1:] + cells[:2])
    assert not mixed.validate_mixed_subdivision(two_triangles, doubled)
    with pytest.raises(mixed.MalformedCell):
        mixed.MixedSubdivision.from_indices(two_triangles, [[[0, 5], [0]]])
    with pytest.raises(mixed.MalformedCell):
        mixed.MixedSubdivision.from_indices(two_triangles, [[[0]]])


def test_cayley_identity(two_triangles):
    cayley = mixed.cayley_polytope(two_triangles)
    assert cayley.dim == 4
    assert len(cayley.vertices) == 6
    assert mixed.verify_cayley_identity(two_triangles)


def test_generated_subdivision(two_triangles):
    sub, heights = mixed.generate_fine_subdivision(two_triangles, seed=3)
    assert [len(row) for row in heights] == [3, 3]
    assert sub.is_fine()
    assert mixed.validate_mixed_subdivision(two_triangles, sub)
    again, _ = mixed.generate_fine_subdivision(two_triangles, heights=heights)
    assert set(again) == set(sub)


def test_non_generic_heights(two_triangles):
    with pytest.raises(mixed.NonGenericLifting):
        mixed.generate_fine_subdivision(
            two_triangles, heights=[[0, 0, 0], [0, 0, 0]]
        )


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(50))
def test_random_additivity(seed):
    seq = helper_polytopes.random_sequence(random.Random(seed), 2, 2, 4)
    sub, _ = mixed.generate_fine_subdivision(seq, seed=seed)
    assert mixed.validate_mixed_subdivision(seq, sub)
    assert mixed.verify_subdivision_additivity(seq, sub, seed=seed)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(20))
def test_random_cayley_identity(seed):
    seq = helper_polytopes.random_sequence(random.Random(seed), 2, 2, 4)
    assert mixed.verify_cayley_identity(seq, seed=seed)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(20))
def test_dmv_on_polar_cone(seed):
    """m_P(x) is the volume of the polar of x_1 P_1 + .. + x_r P_r."""
    rng = random.Random(seed)
    seq = helper_polytopes.random_sequence(rng, 2, rng.randint(2, 3), 4)
    function = mixed.dual_mixed_volume(seq)
    for _ in range(20):
        x = helper_polytopes.random_positive(rng, seq.r)
        assert mixed.in_polar_cone(seq, x)
        dilated = geometry.minkowski_sum(seq.parts, x)
        assert symfun.rf_eval(function, x) == geometry.normalized_volume(
            geometry.polar_dual(dilated)
        )


@pytest.mark.parametrize('seed', range(5))
def test_dmv_homogeneity(seed):
    """m_P(t x) = t^(-d) m_P(x)."""
    rng = random.Random(seed)
    dim = 2 + seed % 2
    seq = helper_polytopes.random_sequence(rng, dim, 2, dim + 2)
    function = mixed.dual_mixed_volume(seq)
    x = helper_polytopes.random_positive(rng, seq.r)
    t = helper_polytopes.random_positive(rng, 1)[0]
    scaled = [t * a for a in x]
    assert symfun.rf_eval(function, scaled) == (
        t ** -dim * symfun.rf_eval(function, x)
    )
