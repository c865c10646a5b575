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

"""Minkowski sequences, dual mixed volumes and mixed subdivisions.

For a sequence P = (P_1, .., P_r) of polytopes in R^d the dual mixed volume
is the fan function of the normal fan of P_1 + .. + P_r with values
`sum_i x_i h_{P_i}(v) (+ <v, z>)`. Mixed subdivisions are handled through
the Cayley trick: a cell (Q_1, .., Q_r) is the Cayley polytope of its parts.
"""

import collections
import itertools
import logging
import random

from . import affine
from . import common
from . import dualvol
from . import exactnum
from . import geometry
from . import symfun
from .exactnum import ONE, ZERO, Rational
from .symfun import LinearForm, RationalFunction, VariableTable


LOGGER_NAME = 'pdualvol.mixed'

log = logging.getLogger(LOGGER_NAME)


class NotRegular(common.PreconditionError):
    """A ray of the normal fan has zero support value on every part."""


class SingularCellGeometry(common.PreconditionError):
    """The ray system of a fine mixed cell is singular."""


class NonGenericLifting(common.PreconditionError):
    """Lifting heights do not induce a fine mixed subdivision."""


class MalformedCell(common.InputError):
    """Cell data do not reference vertices of the sequence."""


def x_names(r, prefix='x'):
    return tuple('%s%d' % (prefix, k + 1) for k in range(r))


class MinkowskiSequence(object):
    """Ordered polytopes P_1, .., P_r in a common R^d."""

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise exactnum.DimensionError('empty Minkowski sequence')
        if len({p.dim for p in parts}) != 1:
            raise exactnum.DimensionError('parts of different dimensions')
        self.parts = parts
        self._total = None

    @property
    def dim(self):
        """Ambient dimension."""
        return self.parts[0].dim

    @property
    def r(self):
        """Number of parts."""
        return len(self.parts)

    def total(self):
        """P_1 + .. + P_r, cached."""
        if self._total is None:
            self._total = geometry.minkowski_sum(self.parts)
        return self._total

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return (
            isinstance(other, MinkowskiSequence) and self.parts == other.parts
        )

    def __hash__(self):
        return hash(self.parts)


def _irregular_ray(seq, fan):
    for index, v in enumerate(fan.rays):
        if all(part.support_value(v) == 0 for part in seq):
            return index
    return None


def is_regular(seq):
    """Every ray of the normal fan of the sum sees a nonzero h_{P_j}."""
    total = seq.total()
    if not total.is_full_dimensional():
        raise geometry.NotFullDimensional(
            'Minkowski sum of dimension %d in R^%d' % (
                total.affine_dim, total.dim
            ),
            certificate={'affine_dim': total.affine_dim, 'dim': total.dim}
        )
    return _irregular_ray(seq, geometry.normal_fan(total)) is None


def _dmv_forms(seq, fan, xs, zs=None):
    forms = []
    for v in fan.rays:
        coeffs = {
            name: part.support_value(v) for name, part in zip(xs, seq)
        }
        form = LinearForm(0, coeffs)
        if zs is not None:
            form = form + LinearForm.combination(v, zs)
        forms.append(form)
    return forms


def _dmv(seq, xs, zs):
    table = VariableTable(xs + (zs or ()))
    total = seq.total()
    if not total.is_full_dimensional():
        return RationalFunction.zero(table), None, None
    fan = geometry.normal_fan(total)
    bad = _irregular_ray(seq, fan)
    if bad is not None and zs is None:
        raise NotRegular(
            'sequence is not regular at ray %s' % (list(fan.rays[bad]),),
            certificate=[exactnum.format_rational(a) for a in fan.rays[bad]]
        )
    forms = _dmv_forms(seq, fan, xs, zs)
    function = dualvol.f_fan(dualvol.SupportData(fan, forms, table))
    log.debug(
        'Dual mixed volume of %d parts: %d rays, %d terms',
        seq.r, len(fan.rays), len(function.terms)
    )
    return function, fan, forms


def dual_mixed_volume(seq, names=None):
    """m_P(x) as a rational function of x_1, .., x_r."""
    xs = tuple(names or x_names(seq.r))
    return _dmv(seq, xs, None)[0]


def dual_mixed_volume_z(seq, names=None, z=None):
    """m_P(x, z) = Vol^_z(x_1 P_1 + .. + x_r P_r) over (x.., z..)."""
    xs = tuple(names or x_names(seq.r))
    zs = tuple(z or dualvol.z_names(seq.dim))
    return _dmv(seq, xs, zs)[0]


def dmv_numerator(seq, names=None):
    """Numerator A_P(x) over B = prod_rays h_{xP}(v), and the factors of B."""
    xs = tuple(names or x_names(seq.r))
    function, _, forms = _dmv(seq, xs, None)
    if forms is None:
        return symfun.SparsePolynomial(function.table), ()
    return dualvol._aligned_numerator(function, forms), tuple(forms)


def in_polar_cone(seq, x):
    """Membership of x in the open polar cone: all h_{xP}(v) > 0."""
    x = exactnum.vector(x)
    fan = geometry.normal_fan(seq.total())
    return all(
        sum((xi * part.support_value(v) for xi, part in zip(x, seq)), ZERO) > 0
        for v in fan.rays
    )


class MixedCell(object):
    """Cell (Q_1, .., Q_r) with Q_i given by vertices of P_i."""

    def __init__(self, parts):
        self.parts = tuple(
            tuple(sorted(exactnum.vector(p) for p in part)) for part in parts
        )
        if any(not part for part in self.parts):
            raise MalformedCell('cell part without vertices')
        self._rays = None

    @property
    def dim(self):
        """Ambient dimension."""
        return len(self.parts[0][0])

    def part_dims(self):
        return tuple(geometry.affine_dimension(part) for part in self.parts)

    def sequence(self):
        return MinkowskiSequence(
            geometry.Polytope(part) for part in self.parts
        )

    def is_fine(self, dim=None):
        """Every part is a simplex and the dimensions add up to `dim`
        (default: the ambient dimension).
        """
        dims = self.part_dims()
        if any(d != len(part) - 1 for d, part in zip(dims, self.parts)):
            return False
        return sum(dims) == (self.dim if dim is None else dim)

    def cayley_points(self):
        return _cayley(self.parts)

    def __eq__(self, other):
        return isinstance(other, MixedCell) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return 'MixedCell(%d parts)' % (len(self.parts),)


class MixedSubdivision(object):
    """Collection of mixed cells of one sequence."""

    def __init__(self, cells):
        self.cells = tuple(cells)

    @classmethod
    def from_indices(cls, seq, index_lists):
        """Cells as vertex indices into each part's sorted vertex list."""
        cells = []
        for cell in index_lists:
            if len(cell) != seq.r:
                raise MalformedCell(
                    'cell with %d parts for %d polytopes' % (len(cell), seq.r)
                )
            parts = []
            for part, indices in zip(seq, cell):
                try:
                    parts.append([part.vertices[k] for k in indices])
                except (IndexError, TypeError) as ex:
                    raise MalformedCell(
                        'bad vertex reference %s' % (indices,)
                    ) from ex
            cells.append(MixedCell(parts))
        return cls(cells)

    def to_indices(self, seq):
        return [
            [sorted(part.vertex_index(p) for p in cell_part)
             for part, cell_part in zip(seq, cell.parts)]
            for cell in self.cells
        ]

    def is_fine(self):
        return all(cell.is_fine() for cell in self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)


def _cayley(parts):
    r = len(parts)
    points = []
    for i, part in enumerate(parts):
        tail = exactnum.unit_vector(r, i)
        points.extend(tuple(p) + tail for p in part)
    return points


def cayley_polytope(seq):
    """C(P) = conv of (p, e_i) for the vertices p of P_i, in R^(d+r)."""
    return geometry.Polytope(_cayley([part.vertices for part in seq]))


def validate_mixed_subdivision(seq, sub):
    """Exact check that `sub` is a mixed subdivision of `seq`.

    Cells must reference vertices of the parts, have full-dimensional sums
    whose normalized volumes add up to that of the whole sum, and their
    Cayley polytopes must meet pairwise in common faces.
    """
    for cell in sub:
        if len(cell.parts) != seq.r:
            raise MalformedCell('cell with a wrong number of parts')
        for part, cell_part in zip(seq, cell.parts):
            missing = [p for p in cell_part if p not in part.vertices]
            if missing:
                raise MalformedCell(
                    'point %s is not a vertex of its part'
                    % (list(missing[0]),)
                )
    volume = geometry.normalized_volume(seq.total())
    covered = ZERO
    for cell in sub:
        total = cell.sequence().total()
        if not total.is_full_dimensional():
            log.info('Cell with lower-dimensional sum')
            return False
        covered += geometry.normalized_volume(total)
    if covered != volume:
        log.info('Cells cover volume %s of %s', covered, volume)
        return False
    cayley = [cell.cayley_points() for cell in sub]
    for (k, a), (l, b) in itertools.combinations(enumerate(cayley), 2):
        if geometry.separating_hyperplane(a, b) is None:
            log.info('Cells %d and %d do not meet properly', k, l)
            return False
    return True


FineCellRays = collections.namedtuple('FineCellRays', ('rays', 'kappa'))


def fine_cell_rays(cell):
    """Rays v_{i,a} of a fine cell and its volume factor kappa.

    v_{i,a} is orthogonal to the affine span of every other part and
    `<v, p_{i,a}> - <v, p_{i,b}> = 1` for b != a. Cached on the cell.
    """
    if cell._rays is not None:
        return cell._rays
    if not cell.is_fine():
        raise SingularCellGeometry('cell is not fine')
    rays = collections.OrderedDict()
    for i, part in enumerate(cell.parts):
        if len(part) == 1:
            continue
        others = []
        for k, other in enumerate(cell.parts):
            if k != i:
                others.extend(
                    (exactnum.sub(p, other[0]), ZERO) for p in other[1:]
                )
        for a, apex in enumerate(part):
            rows = list(others)
            rows.extend(
                (exactnum.sub(apex, p), ONE)
                for b, p in enumerate(part) if b != a
            )
            solution = exactnum.solve_linear(
                [row for row, _ in rows], [rhs for _, rhs in rows]
            )
            if isinstance(solution, exactnum.SolveOutcome):
                raise SingularCellGeometry(
                    'ray system of part %d is %s' % (i, solution.value),
                    certificate={'part': i, 'vertex': a}
                )
            rays[(i, a)] = solution
        total = exactnum.vector_sum(
            [rays[(i, a)] for a in range(len(part))], cell.dim
        )
        if not exactnum.is_zero(total):
            raise SingularCellGeometry('cell rays do not sum to zero')
    basis = [
        v for (i, a), v in rays.items() if a < len(cell.parts[i]) - 1
    ]
    kappa = abs(exactnum.det(basis)) if basis else ONE
    cell._rays = FineCellRays(rays, kappa)
    return cell._rays


def fine_cell_kappa(cell):
    return fine_cell_rays(cell).kappa


def _cell_support(cell, v):
    return [
        -min(exactnum.dot(v, p) for p in part) for part in cell.parts
    ]


def fine_cell_dmv(cell, names=None, z=None):
    """kappa * prod_{d_i > 0} x_i / prod h_{xQ - z}(v_{i,a}).

    With `z` set to False the function is m_Q(x) without translation.
    """
    xs = tuple(names or x_names(len(cell.parts)))
    zs = None if z is False else tuple(z or dualvol.z_names(cell.dim))
    table = VariableTable(xs + (zs or ()))
    info = fine_cell_rays(cell)
    denominator = []
    sums = collections.defaultdict(LinearForm)
    for (i, a), v in info.rays.items():
        support = _cell_support(cell, v)
        form = LinearForm(0, dict(zip(xs, support)))
        if zs is not None:
            form = form + LinearForm.combination(v, zs)
        sums[i] = sums[i] + form
        denominator.append(form)
    for i, total in sums.items():
        if total != LinearForm.variable(xs[i]):
            raise SingularCellGeometry(
                'support values of part %d do not telescope' % (i,)
            )
    numerator = tuple(
        LinearForm.variable(xs[i]) for i in sorted(sums)
    )
    return RationalFunction(
        table, [(info.kappa, numerator, tuple(denominator))]
    )


def cell_dmv(cell, names=None, z=None):
    """Dual mixed volume of a cell, by the closed form when it is fine."""
    if cell.is_fine():
        return fine_cell_dmv(cell, names, z)
    seq = cell.sequence()
    if z is False:
        return dual_mixed_volume(seq, names)
    return dual_mixed_volume_z(seq, names, z)


def verify_subdivision_additivity(seq, sub, seed=0, samples=6, bound=997):
    """m_P(x, z) equals the sum of the cell dual mixed volumes."""
    whole = dual_mixed_volume_z(seq)
    parts = symfun.rf_sum(whole.table, [cell_dmv(cell) for cell in sub])
    verdict = symfun.rf_equal(
        whole, parts, seed=seed, samples=samples, bound=bound
    )
    log.info(
        'Additivity over %d cells %s',
        len(sub), 'holds' if verdict else 'FAILS'
    )
    return verdict


def verify_cayley_identity(seq, seed=0, samples=6, bound=997):
    """m_P(x, z) = prod(x) / sum(x) * EVol_{(z, x)}(C(P)).

    The Cayley polytope lives in the hyperplane <u, .> = 1 with
    u = (0, .., 0, 1, .., 1); its dual volume is taken with normal u over
    the variables (z, x).
    """
    xs = x_names(seq.r)
    zs = dualvol.z_names(seq.dim)
    whole = dual_mixed_volume_z(seq, xs, zs)
    normal = (ZERO,) * seq.dim + (ONE,) * seq.r
    cayley = affine.AffinePolytope(cayley_polytope(seq), ONE, normal)
    evol = affine.hyperplane_dual_volume(cayley, zs + xs)
    x_forms = tuple(LinearForm.variable(name) for name in xs)
    x_sum = LinearForm(0, {name: ONE for name in xs})
    candidate = symfun.rf_multiply(evol, ONE, x_forms, (x_sum,))
    candidate = symfun.rf_retable(candidate, whole.table)
    verdict = symfun.rf_equal(
        whole, candidate, seed=seed, samples=samples, bound=bound
    )
    log.info('Cayley identity %s', 'holds' if verdict else 'FAILS')
    return verdict


class FineSubdivisionGenerator(object):
    """Regular fine mixed subdivisions from lifting heights.

    Heights `w_{i,p}` lift the Cayley points (p, e_i). A lower facet of the
    lifted configuration has a normal (v, lambda, 1); on it the tight points
    of part i are the minimizers of <v, p> + w_{i,p}. Such a facet is a
    Cayley simplex exactly when the tie sets carry d independent ties, so
    lower facets are found by solving every choice of d tie equations.
    """

    DEFAULT_LOG_NAME = 'pdualvol.FineSubdivisionGenerator'

    def __init__(self, height_range=(1, 10000), max_retries=16, logger=None):
        self._height_range = tuple(height_range)
        self._max_retries = max_retries
        self._log = logger or logging.getLogger(self.DEFAULT_LOG_NAME)

    def random_heights(self, seq, rng):
        low, high = self._height_range
        return [
            [rng.randint(low, high) for _ in part.vertices] for part in seq
        ]

    def generate(self, seq, heights=None, seed=0):
        """Return `(MixedSubdivision, heights)`.

        Explicit heights are used as given and must be generic; otherwise
        heights are drawn from `random.Random(seed)` until the subdivision
        is fine.
        """
        total = seq.total()
        if not total.is_full_dimensional():
            raise geometry.NotFullDimensional(
                'Minkowski sum is not full-dimensional'
            )
        if heights is not None:
            heights = [[Rational(h) for h in row] for row in heights]
            if [len(row) for row in heights] != [len(p.vertices) for p in seq]:
                raise exactnum.DimensionError('heights do not match vertices')
            cells = self._lower_cells(seq, heights)
            if cells is None:
                raise NonGenericLifting(
                    'heights do not induce a fine subdivision'
                )
            return MixedSubdivision(cells), heights
        rng = random.Random(seed)
        for attempt in range(self._max_retries):
            candidate = self.random_heights(seq, rng)
            cells = self._lower_cells(seq, candidate)
            if cells is not None:
                self._log.debug(
                    'Fine subdivision with %d cells after %d attempt(s)',
                    len(cells), attempt + 1
                )
                return MixedSubdivision(cells), candidate
            self._log.debug('Lifting attempt %d is not generic', attempt + 1)
        raise NonGenericLifting(
            'no generic lifting after %d attempts' % (self._max_retries,)
        )

    def _lower_cells(self, seq, heights):
        dim = seq.dim
        ties = []
        for i, part in enumerate(seq):
            for a, b in itertools.combinations(range(len(part.vertices)), 2):
                ties.append((i, a, b))
        cells = collections.OrderedDict()
        for choice in itertools.combinations(ties, dim):
            rows, rhs = [], []
            for i, a, b in choice:
                p, q = seq.parts[i].vertices[a], seq.parts[i].vertices[b]
                rows.append(exactnum.sub(p, q))
                rhs.append(heights[i][b] - heights[i][a])
            v = exactnum.solve_linear(rows, rhs)
            if isinstance(v, exactnum.SolveOutcome):
                continue
            parts = []
            for i, part in enumerate(seq):
                values = [
                    exactnum.dot(v, p) + heights[i][k]
                    for k, p in enumerate(part.vertices)
                ]
                low = min(values)
                parts.append([
                    p for p, value in zip(part.vertices, values)
                    if value == low
                ])
            extra = sum(len(part) - 1 for part in parts)
            if extra < dim:
                continue
            if extra > dim:
                return None
            cell = MixedCell(parts)
            if not cell.is_fine():
                return None
            cells[cell] = None
        result = list(cells)
        covered = sum(
            (geometry.normalized_volume(cell.sequence().total())
             for cell in result), ZERO
        )
        if covered != geometry.normalized_volume(seq.total()):
            return None
        return result


def generate_fine_subdivision(seq, heights=None, seed=0, **kwargs):
    generator = FineSubdivisionGenerator(**kwargs)
    return generator.generate(seq, heights, seed)
