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

"""Associahedra, plane binary trees and the phi^3 amplitude."""

import random

import pytest

from pdualvol import common
from pdualvol import symfun
from pdualvol.exactnum import Rational
from pdualvol.families import associahedra
from pdualvol.families.associahedra import PlaneBinaryTree
from pdualvol.symfun import LinearForm


EIGHT_NODE_TREE = (
    (None, ((None, None), None)),
    ((None, None), ((None, None), None)),
)


def _interval_sum(lo, hi):
    return LinearForm(0, {
        associahedra.interval_name(i, j): 1
        for i in range(lo, hi + 1) for j in range(i, hi + 1)
    })


def test_catalan_counts():
    counts = [
        len(associahedra.enumerate_plane_binary_trees(n)) for n in range(1, 6)
    ]
    assert counts == [1, 2, 5, 14, 42]
    assert [len(associahedra.planar_cubic_trees(n)) for n in (3, 4, 5)] == [
        1, 2, 5
    ]
    with pytest.raises(common.InputError):
        associahedra.planar_cubic_trees(2)
    too_many = associahedra.MAX_TREE_NODES + 1
    for n in (0, too_many):
        with pytest.raises(common.InputError):
            associahedra.enumerate_plane_binary_trees(n)
    with pytest.raises(common.InputError):
        associahedra.associahedron_dmv(too_many)


def test_tree_structure():
    tree = PlaneBinaryTree.from_nested(EIGHT_NODE_TREE)
    assert tree.label == 4
    assert (tree.lo, tree.hi) == (1, 8)
    assert tree.to_nested() == EIGHT_NODE_TREE
    assert tree.intervals()[6] == (5, 8)
    assert sorted(tree.edges()) == [
        (1, 3), (3, 2), (4, 1), (4, 6), (6, 5), (6, 8), (8, 7)
    ]
    assert PlaneBinaryTree.from_nested(EIGHT_NODE_TREE) == tree


def test_invalid_trees():
    with pytest.raises(associahedra.InvalidTree):
        PlaneBinaryTree(2, PlaneBinaryTree(3))
    with pytest.raises(associahedra.InvalidTree):
        PlaneBinaryTree.from_nested((None, None, None))
    with pytest.raises(associahedra.InvalidTree):
        associahedra.PlanarCubicTree(3, [
            (('node', 1), ('leaf', 1)), (('node', 1), ('leaf', 2)),
        ])
    with pytest.raises(associahedra.InvalidTree):
        associahedra.PlanarCubicTree(3, [
            (('node', 1), ('leaf', 1)), (('node', 1), ('leaf', 2)),
            (('node', 1), ('leaf', 3)), (('node', 1), ('leaf', 4)),
        ])


def test_loday_vertex():
    tree = PlaneBinaryTree.from_nested(EIGHT_NODE_TREE)
    point = associahedra.loday_vertex(tree)
    assert point == (3, 1, 2, 20, 1, 6, 1, 2)
    assert sum(point) == 8 * 9 // 2
    weighted = associahedra.loday_vertex(tree, {(2, 2): 5})
    assert weighted[:3] == (3, 5, 2)


def test_pentagon_closed_form():
    closed = associahedra.associahedron_dmv(3)
    assert closed.table.names == (
        'x1_1', 'x2_2', 'x3_3', 'x1_2', 'x2_3'
    )
    expected = symfun.RationalFunction(closed.table, [
        (1, (), (_interval_sum(2, 3), _interval_sum(3, 3))),
        (1, (), (_interval_sum(2, 3), _interval_sum(2, 2))),
        (1, (), (_interval_sum(1, 1), _interval_sum(3, 3))),
        (1, (), (_interval_sum(1, 2), _interval_sum(2, 2))),
        (1, (), (_interval_sum(1, 2), _interval_sum(1, 1))),
    ])
    assert symfun.rf_equal(closed, expected)
    assert len(associahedra.associahedron_dmv(4, threads=2).terms) == 14


@pytest.mark.parametrize('n', [2, 3])
def test_closed_form_specializations(n):
    """Permutohedron specialization and the boundary fan agree."""
    closed = associahedra.associahedron_dmv(n)
    assert symfun.rf_equal(closed, associahedra.genperm_specialization(n))
    assert symfun.rf_equal(closed, associahedra.associahedron_geometric_dmv(n))


def test_cubic_tree_splits():
    tree = PlaneBinaryTree.from_nested((None, ((None, None), None)))
    cubic = associahedra.pb_to_pc(tree)
    assert cubic.leaves == 5
    assert len(cubic.interior_edges()) == 2
    assert cubic.splits() == [frozenset({2, 3}), frozenset({2, 3, 4})]


def test_mandelstam_table():
    with pytest.raises(common.InputError):
        associahedra.MandelstamTable(3)
    mandelstam = associahedra.MandelstamTable(5)
    assert mandelstam.table.names == ('s1_2', 's1_3', 's1_4', 's2_3', 's2_4')
    assert mandelstam.form(4, 5) == mandelstam.planar(1, 3)
    assert mandelstam.form(1, 5) == mandelstam.planar(2, 4)
    with pytest.raises(common.InputError):
        mandelstam.form(2, 2)


@pytest.mark.parametrize('n', [4, 5, 6, 7])
def test_mandelstam_reduction_is_consistent(n):
    """Reduced invariants obey momentum conservation at random points."""
    mandelstam = associahedra.MandelstamTable(n)
    forms = {
        (i, j): mandelstam.form(i, j)
        for i in range(1, n + 1) for j in range(1, n + 1) if i != j
    }
    planar = {
        (lo, hi): mandelstam.planar(lo, hi)
        for lo in range(1, n + 1) for hi in range(lo + 1, n + 1)
    }
    rng = random.Random(n)
    for _ in range(100):
        point = {
            name: Rational(rng.randint(-99, 99), rng.randint(1, 9))
            for name in mandelstam.table
        }
        for i in range(1, n + 1):
            assert sum(
                forms[i, j].evaluate(point)
                for j in range(1, n + 1) if j != i
            ) == 0
        assert planar[1, n].evaluate(point) == 0
        # X of leaves 1..k equals X of the complementary leaves
        for k in range(2, n - 1):
            assert planar[1, k].evaluate(point) == (
                planar[k + 1, n].evaluate(point)
            )


def test_four_point_amplitude():
    amplitude = associahedra.phi3_amplitude(4)
    mandelstam = associahedra.MandelstamTable(4)
    expected = symfun.RationalFunction(mandelstam.table, [
        (1, (), (mandelstam.form(1, 2),)), (1, (), (mandelstam.form(2, 3),)),
    ])
    assert symfun.rf_equal(amplitude, expected)


def test_five_point_amplitude():
    mandelstam = associahedra.MandelstamTable(5)
    s = mandelstam.form
    expected = symfun.RationalFunction(mandelstam.table, [
        (1, (), (s(1, 2), s(3, 4))), (1, (), (s(2, 3), s(4, 5))),
        (1, (), (s(3, 4), s(1, 5))), (1, (), (s(4, 5), s(1, 2))),
        (1, (), (s(1, 5), s(2, 3))),
    ])
    amplitude = associahedra.phi3_amplitude(5, threads=2)
    assert symfun.rf_equal(amplitude, expected)


@pytest.mark.parametrize('n', [4, 5, 6])
def test_amplitude_sign(n):
    assert associahedra.amplitude_sign(n) == (-1) ** (n - 3)
