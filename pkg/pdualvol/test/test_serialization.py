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

"""JSON codecs and schema validation."""

import jsonschema
import pytest

from pdualvol import exactnum
from pdualvol import geometry
from pdualvol import mixed
from pdualvol import serialization
from pdualvol import symfun
from pdualvol.exactnum import Rational
from pdualvol.symfun import LinearForm


QUADRILATERAL_VERTICES = [(1, -1), (1, 1), (2, 1), (3, -1)]


def test_read_polytope(data_file):
    data = serialization.read_json(
        data_file('quadrilateral.json'), serialization.POLYTOPE
    )
    polytope = serialization.load_polytope(data)
    assert polytope.dim == 2
    assert list(polytope.vertices) == [
        exactnum.vector(v) for v in QUADRILATERAL_VERTICES
    ]
    dumped = serialization.dump_polytope(polytope)
    assert dumped['vertices'][0] == ['1', '-1']


def test_inexact_numbers_rejected(data_file):
    with pytest.raises(jsonschema.ValidationError):
        serialization.read_json(
            data_file('inexact_polytope.json'), serialization.POLYTOPE
        )
    with pytest.raises(exactnum.DimensionError):
        serialization.load_polytope({'dim': 3, 'vertices': [[0, 1], [1, 0]]})


def test_affine_polytope_level(data_file):
    data = serialization.read_json(
        data_file('flat_triangle.json'), serialization.POLYTOPE
    )
    polytope = serialization.load_affine_polytope(data)
    assert polytope.level == 1
    del data['level']
    assert serialization.load_affine_polytope(data).level == 1
    data['vertices'][0] = [2, 0, 0]
    with pytest.raises(serialization.affine.LevelMismatch):
        serialization.load_affine_polytope(data)


def test_fan_and_support_data(data_file):
    data = serialization.load_support_data(serialization.read_json(
        data_file('square_fan.json'), serialization.SUPPORT_DATA
    ))
    assert data.values[2] == 3
    fan = data.fan
    assert serialization.load_fan(serialization.dump_fan(fan)).cones == fan.cones
    bad = serialization.dump_fan(fan)
    bad['cones'].append([0, 2])
    with pytest.raises(geometry.InvalidFan):
        serialization.load_fan(bad)


def test_sequence_and_subdivision(data_file, two_triangles):
    seq = serialization.load_sequence(serialization.read_json(
        data_file('two_triangles.json'), serialization.SEQUENCE
    ))
    assert seq.r == 2
    assert [p.vertices for p in seq] == [p.vertices for p in two_triangles]
    sub = serialization.load_subdivision(seq, serialization.read_json(
        data_file('two_triangles_sub.json'), serialization.SUBDIVISION
    ))
    assert len(sub) == 5
    assert serialization.dump_subdivision(seq, sub)['cells'][1] == [
        [1], [0, 1, 2]
    ]
    with pytest.raises(mixed.MalformedCell):
        serialization.load_subdivision(seq, {'cells': [[[0, 7], [0]]]})


def test_function_record():
    table = symfun.VariableTable(['z1', 'z2'])
    function = symfun.RationalFunction(table, [
        (Rational(1, 2), (), (LinearForm(1, {'z1': -1}),)),
        (3, (LinearForm.variable('z2'),), (LinearForm(1, {'z2': 2}),) * 2),
    ])
    record = serialization.dump_function(function, normal=True)
    assert record['variables'] == ['z1', 'z2']
    assert 'normal' in record
    jsonschema.validate(record, serialization.RATIONAL_FUNCTION)
    loaded = serialization.load_function(record)
    assert symfun.rf_equal(loaded, function)


def test_function_table_inferred():
    record = {
        'terms': [{
            'coeff': '2',
            'factors': [{'constant': '1', 'coeffs': {'b': '1', 'a': '-1/2'}}]
        }]
    }
    function = serialization.load_function(record)
    assert function.table.names == ('a', 'b')
    with pytest.raises(symfun.VariableTableMismatch):
        serialization.load_function(record, symfun.VariableTable(['a']))


def test_polynomial_record():
    table = symfun.VariableTable(['z1', 'z2'])
    poly = symfun.SparsePolynomial.from_form(table, LinearForm(6, {'z2': -2}))
    record = serialization.dump_polynomial(poly)
    assert record['variables'] == ['z1', 'z2']
    assert {'coeff': '6', 'monomial': {}} in record['terms']
    assert {'coeff': '-2', 'monomial': {'z2': 1}} in record['terms']
    assert serialization.load_polynomial(record).terms() == poly.terms()
    record['terms'].append({'coeff': '1', 'monomial': {'w': 1}})
    with pytest.raises(symfun.VariableTableMismatch):
        serialization.load_polynomial(record)


def test_tiling_and_cells(data_file):
    tiling = serialization.load_tiling(serialization.read_json(
        data_file('hexagon_tiling.json'), serialization.TILING
    ))
    assert tiling == [(0, 0, 1), (0, -1, 0), (-1, 0, 0)]
    assert serialization.dump_tiling(tiling)['tiling'][1] == ['0', '-', '0']
    n, cells = serialization.load_genperm_cells(serialization.read_json(
        data_file('genperm3_cells.json'), serialization.GENPERM_CELLS
    ))
    assert n == 3
    assert cells[0][5] == (2, 3)
    assert cells[6][6] == (2, 3)


def test_vector_argument():
    assert serialization.parse_vector_argument('1/2, -3,') == (
        Rational(1, 2), Rational(-3)
    )
    with pytest.raises(exactnum.InvalidNumber):
        serialization.parse_vector_argument('1,x')
