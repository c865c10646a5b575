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

"""Generalized permutohedra built from simplices Delta_T, T in [n]."""

import collections
import itertools
import logging
import math

from .. import affine
from .. import common
from .. import dualvol
from .. import exactnum
from .. import geometry
from .. import mixed
from .. import symfun
from ..exactnum import ONE, ZERO, Rational
from ..symfun import LinearForm, RationalFunction, VariableTable
from . import workers


LOGGER_NAME = 'pdualvol.families.permutohedra'

log = logging.getLogger(LOGGER_NAME)


class NotSpanningTree(common.PreconditionError):
    """Cell data does not describe a spanning tree of K_{N,n}."""


def nonempty_subsets(n):
    """Nonempty subsets of [n] ordered by size, then lexicographically."""
    return [
        subset
        for size in range(1, n + 1)
        for subset in itertools.combinations(range(1, n + 1), size)
    ]


def subset_name(subset, prefix='x'):
    return prefix + ''.join(str(k) for k in subset)


def genperm_names(n, include_full=False):
    subsets = nonempty_subsets(n)
    if not include_full:
        subsets = subsets[:-1]
    return tuple(subset_name(t) for t in subsets)


def _full_substitution(n):
    """x_[n] = -(sum of the other x_T)."""
    others = genperm_names(n)
    return {
        subset_name(tuple(range(1, n + 1))):
            LinearForm(0, {name: -ONE for name in others})
    }


def _order_term(n, order):
    factors = []
    prefix = set()
    for k in order[:-1]:
        prefix.add(k)
        factors.append(LinearForm(0, {
            subset_name(t): ONE
            for t in nonempty_subsets(n)
            if set(t) <= prefix
        }))
    return (ONE if n % 2 == 1 else -ONE, (), tuple(factors))


def genperm_dmv_closed_form(n, threads=1):
    """(-1)^(n-1) sum over orders of prod_a 1 / sum_{T in first a} x_T."""
    if n < 1:
        raise common.InputError('n must be positive')
    table = VariableTable(genperm_names(n))
    orders = list(itertools.permutations(range(1, n + 1)))
    terms = workers.ordered_map(
        lambda order: _order_term(n, order), orders, threads
    )
    log.debug('Closed form for n=%d with %d orders', n, len(terms))
    return RationalFunction(table, terms)


def genperm_sequence(n):
    """Delta_T = conv(e_j : j in T) for every nonempty T, on level 1."""
    return mixed.MinkowskiSequence(
        geometry.Polytope([exactnum.unit_vector(n, j - 1) for j in subset])
        for subset in nonempty_subsets(n)
    )


def genperm_geometric_dmv(n):
    """m~ of the simplex sequence at z = 0 with x_[n] eliminated."""
    xs = genperm_names(n, include_full=True)
    zs = dualvol.z_names(n)
    function = affine.hyperplane_dual_mixed_volume(genperm_sequence(n), xs, zs)
    mapping = _full_substitution(n)
    mapping.update({name: LinearForm(0) for name in zs})
    return symfun.rf_substitute(function, mapping, VariableTable(xs[:-1]))


def _normalize_cell(n, cell):
    subsets = nonempty_subsets(n)
    if len(cell) != len(subsets):
        raise mixed.MalformedCell(
            'cell with %d parts for %d subsets' % (len(cell), len(subsets))
        )
    normalized = []
    for subset, part in zip(subsets, cell):
        part = tuple(sorted(set(int(j) for j in part)))
        if not part or not set(part) <= set(subset):
            raise mixed.MalformedCell(
                'part %s is not a nonempty subset of %s'
                % (list(part), list(subset))
            )
        normalized.append(part)
    return tuple(normalized)


def _components(n, cell, removed):
    """Connected components of the bipartite graph after removing left vertex
    `removed`, as (left vertices, right vertices) pairs."""
    adjacency = collections.defaultdict(set)
    for i, part in enumerate(cell):
        if i == removed:
            continue
        for j in part:
            adjacency[('L', i)].add(('R', j))
            adjacency[('R', j)].add(('L', i))
    seen = set()
    components = []
    nodes = [('L', i) for i in range(len(cell)) if i != removed]
    nodes += [('R', j) for j in range(1, n + 1)]
    for start in nodes:
        if start in seen:
            continue
        stack, component = [start], set()
        while stack:
            node = stack.pop()
            if node in component:
                continue
            component.add(node)
            stack.extend(adjacency[node] - component)
        seen |= component
        components.append(component)
    return components


def check_spanning_tree(n, cell):
    """Edges (i, j), j in J_i, must form a spanning tree of K_{N,n}."""
    cell = _normalize_cell(n, cell)
    edges = sum(len(part) for part in cell)
    if edges != len(cell) + n - 1 or len(_components(n, cell, None)) != 1:
        raise NotSpanningTree(
            'cell %s is not a spanning tree' % (
                [''.join(map(str, part)) for part in cell],
            ),
            certificate=[list(part) for part in cell]
        )
    return cell


def _component_of(components, j):
    for component in components:
        if ('R', j) in component:
            return sorted(i for kind, i in component if kind == 'L')
    raise ValueError('right vertex %d missing' % (j,))


def genperm_cell_dmv(n, cell, eliminate_full=True):
    """(-1)^(n-1) prod_{|J_i| > 1} (-x_{T_i}) / prod_{j in J_i} h_{i,j}.

    h_{i,j} sums x_{T_k} over the left vertices k of the component that
    contains j once left vertex i is removed.
    """
    cell = check_spanning_tree(n, cell)
    subsets = nonempty_subsets(n)
    names = [subset_name(t) for t in subsets]
    numerator, denominator = [], []
    for i, part in enumerate(cell):
        if len(part) == 1:
            continue
        numerator.append(LinearForm.variable(names[i], -ONE))
        components = _components(n, cell, i)
        for j in part:
            left = _component_of(components, j)
            denominator.append(LinearForm(0, {names[k]: ONE for k in left}))
    sign = ONE if n % 2 == 1 else -ONE
    function = RationalFunction(
        VariableTable(names), [(sign, tuple(numerator), tuple(denominator))]
    )
    if not eliminate_full:
        return function
    return symfun.rf_substitute(
        function, _full_substitution(n), VariableTable(names[:-1])
    )


def genperm_subdivision(n, cells):
    """Mixed cells (Delta_{J_1}, .., Delta_{J_N}) in R^n."""
    return mixed.MixedSubdivision(
        mixed.MixedCell(
            [exactnum.unit_vector(n, j - 1) for j in part]
            for part in _normalize_cell(n, cell)
        )
        for cell in cells
    )


def cells_from_subdivision(n, sub):
    cells = []
    for cell in sub:
        cells.append(tuple(
            tuple(sorted(p.index(ONE) + 1 for p in part))
            for part in cell.parts
        ))
    return cells


def generate_genperm_cells(n, seed=0, **kwargs):
    """Cells of a random regular fine mixed subdivision of the sequence."""
    sub, _ = affine.generate_fine_subdivision(
        genperm_sequence(n), seed=seed, **kwargs
    )
    return cells_from_subdivision(n, sub)


def count_identity_total(n):
    """n! / prod_{k=1}^{n-1} (2^k - 1)."""
    value = Rational(math.factorial(n))
    for k in range(1, n):
        value /= 2 ** k - 1
    return value


def count_identity_cell(n, cell):
    """Cell contribution at x_T = 1, x_[n] = -(2^n - 2).

    Sizes alpha_{i,j} count the left vertices of the component of j, with
    the full set counted as 2^n - 1 - |A| when it lies in the component.
    """
    cell = check_spanning_tree(n, cell)
    full = len(cell) - 1
    top = 2 ** n - 1
    value = Rational(top - 1) if len(cell[full]) > 1 else ONE
    for i, part in enumerate(cell):
        if len(part) == 1:
            continue
        components = _components(n, cell, i)
        for j in part:
            left = _component_of(components, j)
            size = top - len(left) if full in left else len(left)
            value /= size
    return value


GenpermReport = collections.namedtuple(
    'GenpermReport',
    ('valid', 'closed_form', 'sum_identity', 'count_identity', 'count_left',
     'count_right')
)


def _point_ones(n):
    return {name: ONE for name in genperm_names(n)}


def verify_genperm_identities(n, cells, validate=True, seed=0, samples=6,
                              bound=997):
    """Check a cell list against the closed form and both sum identities."""
    if validate:
        sub = genperm_subdivision(n, cells)
        valid = affine.validate_mixed_subdivision(genperm_sequence(n), sub)
    else:
        valid = None
    closed = genperm_dmv_closed_form(n)
    pieces = [genperm_cell_dmv(n, cell) for cell in cells]
    total = symfun.rf_sum(closed.table, pieces)
    sum_identity = symfun.rf_equal(
        closed, total, seed=seed, samples=samples, bound=bound
    )
    left = count_identity_total(n)
    right = sum((count_identity_cell(n, cell) for cell in cells), ZERO)
    sign = ONE if n % 2 == 1 else -ONE
    evaluated = symfun.rf_eval(total, _point_ones(n)) * sign
    count_identity = left == right == evaluated
    log.info(
        'Identities for n=%d over %d cells: sum %s, count %s', n, len(cells),
        'holds' if sum_identity else 'FAILS',
        'holds' if count_identity else 'FAILS'
    )
    return GenpermReport(
        valid, symfun.rf_render(closed),
        sum_identity, count_identity, left, right
    )


def verify_geometric_closed_form(n, seed=0, samples=6, bound=997):
    """Closed form against the boundary-fan computation of m~."""
    return symfun.rf_equal(
        genperm_dmv_closed_form(n), genperm_geometric_dmv(n),
        seed=seed, samples=samples, bound=bound
    )
