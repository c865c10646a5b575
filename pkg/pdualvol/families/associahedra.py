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

"""Loday associahedra, planar cubic trees and the phi^3 amplitude."""

import collections
import logging

from .. import affine
from .. import common
from .. import dualvol
from .. import exactnum
from .. import geometry
from .. import mixed
from .. import symfun
from ..exactnum import ONE, ZERO, Rational
from ..symfun import LinearForm, RationalFunction, VariableTable
from . import permutohedra
from . import workers


LOGGER_NAME = 'pdualvol.families.associahedra'

log = logging.getLogger(LOGGER_NAME)

# Catalan(12) = 208012 trees
MAX_TREE_NODES = 12


class InvalidTree(common.InputError):
    """Tree data is malformed."""


class PlaneBinaryTree(object):
    """Plane binary tree on nodes labelled in-order.

    Every node `k` spans the interval [lo, hi] of labels in its subtree.
    """

    def __init__(self, label, left=None, right=None):
        self.label = label
        self.left = left
        self.right = right
        self.lo = left.lo if left else label
        self.hi = right.hi if right else label
        if left and left.hi != label - 1 or right and right.lo != label + 1:
            raise InvalidTree('labels of node %d are not in-order' % (label,))

    @classmethod
    def enumerate(cls, lo, hi):
        """All trees on the labels lo..hi, in a fixed order."""
        if lo > hi:
            return [None]
        trees = []
        for root in range(lo, hi + 1):
            for left in cls.enumerate(lo, root - 1):
                for right in cls.enumerate(root + 1, hi):
                    trees.append(cls(root, left, right))
        return trees

    @classmethod
    def from_nested(cls, nested, lo=1):
        """Build from `None` or `(left, right)` pairs, labelled in-order."""
        if nested is None:
            return None
        if len(nested) != 2:
            raise InvalidTree('node must be a (left, right) pair')
        left = cls.from_nested(nested[0], lo)
        label = left.hi + 1 if left else lo
        right = cls.from_nested(nested[1], label + 1)
        return cls(label, left, right)

    def to_nested(self):
        return (
            self.left.to_nested() if self.left else None,
            self.right.to_nested() if self.right else None,
        )

    def nodes(self):
        """Nodes in-order."""
        result = self.left.nodes() if self.left else []
        result.append(self)
        if self.right:
            result.extend(self.right.nodes())
        return result

    def intervals(self):
        return {node.label: (node.lo, node.hi) for node in self.nodes()}

    def edges(self):
        """(parent, child) label pairs."""
        result = []
        for node in self.nodes():
            for child in (node.left, node.right):
                if child:
                    result.append((node.label, child.label))
        return result

    def lower_intervals(self):
        """Interval of the lower end of every edge."""
        intervals = self.intervals()
        return [intervals[child] for _, child in self.edges()]

    def __eq__(self, other):
        return (
            isinstance(other, PlaneBinaryTree)
            and self.to_nested() == other.to_nested()
            and self.lo == other.lo
        )

    def __hash__(self):
        return hash((self.lo, self.to_nested()))

    def __repr__(self):
        return 'PlaneBinaryTree(%r)' % (self.to_nested(),)


def enumerate_plane_binary_trees(n):
    """All Catalan(n) plane binary trees on n nodes."""
    if not 1 <= n <= MAX_TREE_NODES:
        raise common.InputError(
            'trees are enumerated for 1 <= n <= %d, got %d' % (
                MAX_TREE_NODES, n
            )
        )
    return PlaneBinaryTree.enumerate(1, n)


def interval_name(i, j, prefix='x'):
    return '%s%d_%d' % (prefix, i, j)


def associahedron_intervals(n, include_full=False):
    intervals = [
        (i, j) for i in range(1, n + 1) for j in range(i, n + 1)
        if include_full or (i, j) != (1, n)
    ]
    return sorted(intervals, key=lambda ij: (ij[1] - ij[0], ij[0]))


def associahedron_names(n, include_full=False):
    return tuple(
        interval_name(i, j)
        for i, j in associahedron_intervals(n, include_full)
    )


def _interval_form(lo, hi):
    return LinearForm(0, {
        interval_name(i, j): ONE
        for i in range(lo, hi + 1) for j in range(i, hi + 1)
    })


def _tree_term(n, tree):
    factors = tuple(
        _interval_form(lo, hi) for lo, hi in tree.lower_intervals()
    )
    return (ONE if n % 2 == 1 else -ONE, (), factors)


def associahedron_dmv(n, threads=1):
    """(-1)^(n-1) sum over trees of prod_edges 1 / sum_{[i,j] in L} x_ij."""
    if n < 1:
        raise common.InputError('n must be positive')
    table = VariableTable(associahedron_names(n))
    trees = enumerate_plane_binary_trees(n)
    terms = workers.ordered_map(
        lambda tree: _tree_term(n, tree), trees, threads
    )
    log.debug('Associahedron n=%d: %d trees', n, len(terms))
    return RationalFunction(table, terms)


def loday_vertex(tree, x=None):
    """p_k = sum of x_ij over lo_k <= i <= k <= j <= hi_k.

    `x` maps (i, j) to a value; missing entries default to 1.
    """
    x = x or {}
    point = []
    for node in tree.nodes():
        k = node.label
        total = ZERO
        for i in range(node.lo, k + 1):
            for j in range(k, node.hi + 1):
                total += Rational(x.get((i, j), 1))
        point.append(total)
    return tuple(point)


def associahedron_sequence(n):
    """Delta_[i,j] for every interval, on level 1."""
    return mixed.MinkowskiSequence(
        geometry.Polytope(
            [exactnum.unit_vector(n, k - 1) for k in range(i, j + 1)]
        )
        for i, j in associahedron_intervals(n, include_full=True)
    )


def associahedron_geometric_dmv(n):
    """m~ of the interval simplices at z = 0 with x_1n eliminated."""
    xs = associahedron_names(n, include_full=True)
    zs = dualvol.z_names(n)
    function = affine.hyperplane_dual_mixed_volume(
        associahedron_sequence(n), xs, zs
    )
    full = interval_name(1, n)
    rest = LinearForm(0, {name: -ONE for name in xs if name != full})
    mapping = {full: rest}
    mapping.update({name: LinearForm(0) for name in zs})
    reduced = VariableTable(associahedron_names(n))
    return symfun.rf_substitute(function, mapping, reduced)


def genperm_specialization(n):
    """Generalized permutohedron closed form with x_T = 0 off intervals."""
    closed = permutohedra.genperm_dmv_closed_form(n)
    mapping = {}
    for subset in permutohedra.nonempty_subsets(n)[:-1]:
        name = permutohedra.subset_name(subset)
        lo, hi = subset[0], subset[-1]
        if hi - lo + 1 == len(subset):
            mapping[name] = LinearForm.variable(interval_name(lo, hi))
        else:
            mapping[name] = LinearForm(0)
    return symfun.rf_substitute(
        closed, mapping, VariableTable(associahedron_names(n))
    )


class PlanarCubicTree(object):
    """Trivalent tree with leaves 1..n in planar order.

    Vertices are ('leaf', k) or ('node', k); edges are unordered pairs.
    """

    def __init__(self, leaves, edges):
        self.leaves = leaves
        self.edges = tuple(tuple(edge) for edge in edges)
        self._adjacency = collections.defaultdict(set)
        for a, b in self.edges:
            self._adjacency[a].add(b)
            self._adjacency[b].add(a)
        self.validate()

    def validate(self):
        vertices = set(self._adjacency)
        for k in range(1, self.leaves + 1):
            if len(self._adjacency.get(('leaf', k), ())) != 1:
                raise InvalidTree('leaf %d must have degree 1' % (k,))
        for vertex in vertices:
            kind, label = vertex
            if kind == 'leaf' and not 1 <= label <= self.leaves:
                raise InvalidTree('unknown leaf %d' % (label,))
            if kind == 'node' and len(self._adjacency[vertex]) != 3:
                raise InvalidTree('node %d is not trivalent' % (label,))
        if len(self.edges) != len(vertices) - 1 or len(self._reach(
                next(iter(vertices)), None)) != len(vertices):
            raise InvalidTree('edges do not form a tree')

    def _reach(self, start, blocked):
        seen = {start}
        stack = [start]
        while stack:
            vertex = stack.pop()
            for other in self._adjacency[vertex]:
                if {vertex, other} == blocked or other in seen:
                    continue
                seen.add(other)
                stack.append(other)
        return seen

    def interior_edges(self):
        return [
            (a, b) for a, b in self.edges
            if a[0] == 'node' and b[0] == 'node'
        ]

    def splits(self):
        """Leaf sets cut off by interior edges, on the side without leaf n."""
        result = []
        for a, b in self.interior_edges():
            side = self._reach(a, {a, b})
            if ('leaf', self.leaves) in side:
                side = self._reach(b, {a, b})
            result.append(frozenset(
                label for kind, label in side if kind == 'leaf'
            ))
        return sorted(result, key=lambda leaves: (min(leaves), max(leaves)))


def pb_to_pc(tree):
    """Planar cubic tree of a plane binary tree on m nodes.

    Empty child slots become leaves 1..m+1 in planar order, the stem of the
    root is leaf m+2; the edge above node k cuts off leaves lo_k..hi_k+1.
    """
    m = tree.hi
    edges = []
    for node in tree.nodes():
        k = node.label
        if node.left:
            edges.append((('node', k), ('node', node.left.label)))
        else:
            edges.append((('node', k), ('leaf', k)))
        if node.right:
            edges.append((('node', k), ('node', node.right.label)))
        else:
            edges.append((('node', k), ('leaf', k + 1)))
    edges.append((('node', tree.label), ('leaf', m + 2)))
    return PlanarCubicTree(m + 2, edges)


def planar_cubic_trees(n):
    """All planar cubic trees with n leaves, through the binary trees."""
    if n < 3:
        raise common.InputError('cubic trees need at least 3 leaves')
    return [pb_to_pc(tree) for tree in enumerate_plane_binary_trees(n - 2)]


class MandelstamTable(object):
    """Independent Mandelstam variables for n massless particles.

    Momentum conservation gives sum_{j != i} s_ij = 0. Variables s_ij with
    i < j <= n - 1 except s_{n-2,n-1} are kept, the rest are reduced.
    """

    def __init__(self, n):
        if n < 4:
            raise common.InputError('amplitudes need n >= 4')
        self.n = n
        self.pairs = tuple(
            (i, j) for i in range(1, n) for j in range(i + 1, n)
            if (i, j) != (n - 2, n - 1)
        )
        self.table = VariableTable(
            tuple(interval_name(i, j, 's') for i, j in self.pairs)
        )

    def form(self, i, j):
        """s_ij as a linear form in the independent variables."""
        n = self.n
        i, j = min(i, j), max(i, j)
        if i == j or i < 1 or j > n:
            raise common.InputError('bad Mandelstam pair (%d, %d)' % (i, j))
        if j == n:
            total = LinearForm(0)
            for k in range(1, n):
                if k != i:
                    total = total - self.form(i, k)
            return total
        if (i, j) == (n - 2, n - 1):
            return LinearForm(0, {
                interval_name(a, b, 's'): -ONE for a, b in self.pairs
            })
        return LinearForm.variable(interval_name(i, j, 's'))

    def planar(self, lo, hi):
        """X = sum of s_ij over lo <= i < j <= hi."""
        total = LinearForm(0)
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                total = total + self.form(i, j)
        return total


def phi3_amplitude(n, threads=1):
    """Sum over planar cubic trees of prod_edges 1 / X_e."""
    mandelstam = MandelstamTable(n)

    def term(tree):
        factors = []
        for leaves in tree.splits():
            factors.append(mandelstam.planar(min(leaves), max(leaves)))
        return (ONE, (), tuple(factors))

    terms = workers.ordered_map(term, planar_cubic_trees(n), threads)
    log.debug('Amplitude n=%d: %d cubic trees', n, len(terms))
    return RationalFunction(mandelstam.table, terms)


def associahedron_in_mandelstams(n):
    """Associahedron closed form on n - 2 nodes with x_ij -> s_{i, j+1}."""
    mandelstam = MandelstamTable(n)
    closed = associahedron_dmv(n - 2)
    mapping = {
        interval_name(i, j): mandelstam.form(i, j + 1)
        for i, j in associahedron_intervals(n - 2)
    }
    return symfun.rf_substitute(closed, mapping, mandelstam.table)


def amplitude_sign(n, seed=0, samples=6, bound=997):
    """Sign relating the amplitude to the associahedron closed form."""
    amplitude = phi3_amplitude(n)
    closed = associahedron_in_mandelstams(n)
    options = dict(seed=seed, samples=samples, bound=bound)
    if symfun.rf_equal(amplitude, closed, **options):
        return 1
    if symfun.rf_equal(amplitude, symfun.rf_neg(closed), **options):
        return -1
    raise common.PreconditionError(
        'amplitude and associahedron disagree for n=%d' % (n,)
    )
