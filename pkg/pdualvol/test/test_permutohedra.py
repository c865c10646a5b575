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

"""Generalized permutohedra: closed form, spanning-tree cells, identities."""

import pytest

from pdualvol import mixed
from pdualvol import symfun
from pdualvol.exactnum import Rational
from pdualvol.families import permutohedra
from pdualvol.symfun import LinearForm


# subsets ordered 1, 2, 3, 12, 13, 23, 123
SEVEN_CELLS = [
    ('1', '2', '3', '1', '1', '23', '12'),
    ('1', '2', '3', '12', '1', '23', '2'),
    ('1', '2', '3', '2', '13', '23', '2'),
    ('1', '2', '3', '2', '13', '3', '23'),
    ('1', '2', '3', '12', '13', '3', '3'),
    ('1', '2', '3', '1', '1', '3', '123'),
    ('1', '2', '3', '12', '1', '3', '23'),
]


def _sum(*names):
    return LinearForm(0, {name: 1 for name in names})


def test_subsets_and_names():
    assert permutohedra.nonempty_subsets(3) == [
        (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)
    ]
    assert permutohedra.genperm_names(3) == (
        'x1', 'x2', 'x3', 'x12', 'x13', 'x23'
    )
    assert permutohedra.genperm_names(2, include_full=True)[-1] == 'x12'


def test_closed_form_small_cases():
    two = permutohedra.genperm_dmv_closed_form(2)
    expected = symfun.RationalFunction(two.table, [
        (-1, (), (_sum('x1'),)), (-1, (), (_sum('x2'),)),
    ])
    assert symfun.rf_equal(two, expected)
    three = permutohedra.genperm_dmv_closed_form(3, threads=2)
    assert len(three.terms) == 6
    expected = symfun.RationalFunction(three.table, [
        (1, (), (_sum('x1'), _sum('x1', 'x2', 'x12'))),
        (1, (), (_sum('x1'), _sum('x1', 'x3', 'x13'))),
        (1, (), (_sum('x2'), _sum('x1', 'x2', 'x12'))),
        (1, (), (_sum('x2'), _sum('x2', 'x3', 'x23'))),
        (1, (), (_sum('x3'), _sum('x1', 'x3', 'x13'))),
        (1, (), (_sum('x3'), _sum('x2', 'x3', 'x23'))),
    ])
    assert symfun.rf_equal(three, expected)
    with pytest.raises(permutohedra.common.InputError):
        permutohedra.genperm_dmv_closed_form(0)


def test_closed_form_matches_geometry():
    assert permutohedra.verify_geometric_closed_form(2)
    assert permutohedra.verify_geometric_closed_form(3)


def test_cell_formula():
    """J = (1, 2, 3, 1, 1, 23, 12) gives a product of two fractions."""
    function = permutohedra.genperm_cell_dmv(3, SEVEN_CELLS[0])
    everything = _sum('x1', 'x2', 'x3', 'x12', 'x13', 'x23')
    expected = symfun.RationalFunction(function.table, [(
        1,
        (everything, _sum('x23')),
        (_sum('x1', 'x12', 'x13'), _sum('x2', 'x3', 'x23'),
         _sum('x3', 'x23'), _sum('x3')),
    )])
    assert symfun.rf_equal(function, expected)
    raw = permutohedra.genperm_cell_dmv(
        3, SEVEN_CELLS[0], eliminate_full=False
    )
    assert 'x123' in raw.table


def test_spanning_tree_check():
    assert permutohedra.check_spanning_tree(3, SEVEN_CELLS[5])[-1] == (1, 2, 3)
    too_many_edges = ('1', '2', '3', '12', '1', '23', '12')
    with pytest.raises(permutohedra.NotSpanningTree):
        permutohedra.check_spanning_tree(3, too_many_edges)
    disconnected = ('1', '2', '3', '1', '1', '2', '12')
    with pytest.raises(permutohedra.NotSpanningTree):
        permutohedra.check_spanning_tree(3, disconnected)
    with pytest.raises(mixed.MalformedCell):
        permutohedra.check_spanning_tree(
            3, ('1', '2', '3', '1', '1', '23', '4')
        )
    with pytest.raises(mixed.MalformedCell):
        permutohedra.check_spanning_tree(3, ('1', '2', '3'))


def test_count_identity_values():
    assert permutohedra.count_identity_total(2) == 2
    assert permutohedra.count_identity_total(3) == 2
    assert permutohedra.count_identity_total(4) == Rational(8, 7)
    value = permutohedra.count_identity_cell(3, SEVEN_CELLS[0])
    assert value == Rational(1, 3)


def test_seven_cell_identities():
    report = permutohedra.verify_genperm_identities(3, SEVEN_CELLS)
    assert report.valid
    assert report.sum_identity
    assert report.count_identity
    assert report.count_left == report.count_right == 2


def test_generated_cells():
    cells = permutohedra.generate_genperm_cells(3, seed=11)
    assert len(cells) == 7
    for cell in cells:
        permutohedra.check_spanning_tree(3, cell)
    report = permutohedra.verify_genperm_identities(3, cells, validate=False)
    assert report.valid is None
    assert report.sum_identity and report.count_identity


def test_subdivision_round_trip():
    sub = permutohedra.genperm_subdivision(3, SEVEN_CELLS)
    cells = permutohedra.cells_from_subdivision(3, sub)
    assert cells[0] == ((1,), (2,), (3,), (1,), (1,), (2, 3), (1, 2))
