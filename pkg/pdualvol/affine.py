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

"""Dual volumes of polytopes lying in an affine hyperplane.

A polytope P in H_k = {y : <n, y> = k}, k != 0, spans a full-dimensional
cone Cone(P) in R^d. Its dual cone has generators v with min_P <v, .> = 0,
and the cones of Cone(P)^* lying over the vertices of P form a fan in
R^d / R*n. Dual volumes in the hyperplane are fan functions of that fan,
determinants taken with n appended.
"""

import collections
import logging

from . import common
from . import dualvol
from . import exactnum
from . import geometry
from . import mixed
from . import symfun
from .exactnum import ONE, ZERO, Rational
from .symfun import LinearForm, RationalFunction, VariableTable


LOGGER_NAME = 'pdualvol.affine'

log = logging.getLogger(LOGGER_NAME)


class NotFullDimensionalInHyperplane(common.PreconditionError):
    """Polytope does not span its hyperplane."""


class LevelMismatch(common.InputError):
    """Vertex off the declared hyperplane, or a zero level."""


class AffinePolytope(object):
    """Polytope with all vertices on <normal, y> = level."""

    def __init__(self, base, level, normal=None):
        level = exactnum.parse_rational(level)
        if level == 0:
            raise LevelMismatch('hyperplane must not pass through the origin')
        normal = (
            exactnum.vector(normal) if normal is not None
            else (ONE,) * base.dim
        )
        if len(normal) != base.dim:
            raise exactnum.DimensionError('normal of wrong dimension')
        for y in base.vertices:
            if exactnum.dot(normal, y) != level:
                raise LevelMismatch(
                    'vertex %s is not on level %s' % (
                        [exactnum.format_rational(a) for a in y],
                        exactnum.format_rational(level)
                    )
                )
        self.base = base
        self.level = level
        self.normal = normal

    @property
    def dim(self):
        """Ambient dimension d of R^d."""
        return self.base.dim

    @property
    def vertices(self):
        """Sorted vertices of the base polytope."""
        return self.base.vertices

    def is_full_dimensional_in_hyperplane(self):
        return self.base.affine_dim == self.dim - 1


def level_of(polytope, normal=None):
    """Common value of <normal, y> on the vertices, or None."""
    normal = normal or (ONE,) * polytope.dim
    levels = {exactnum.dot(normal, y) for y in polytope.vertices}
    return levels.pop() if len(levels) == 1 else None


def boundary_cone_rays(ap):
    """Fan of boundary cones of Cone(P)^*, one maximal cone per vertex."""
    if not ap.is_full_dimensional_in_hyperplane():
        raise NotFullDimensionalInHyperplane(
            'polytope of dimension %d in a hyperplane of R^%d' % (
                ap.base.affine_dim, ap.dim
            )
        )
    vertices = list(ap.vertices)
    found = geometry._cone_facets(vertices)
    found.sort(key=lambda item: item[0])
    rays = [normal for normal, _ in found]
    cones = []
    for k in range(len(vertices)):
        cones.append(tuple(
            index for index, (_, tight) in enumerate(found) if k in tight
        ))
    return geometry.Fan(ap.dim, rays, cones, pure_dim=ap.dim - 1)


def hyperplane_dual_volume(ap, names=None):
    """EVol_z(P) = sum |det(v.., n)| / prod <v, z> over boundary cones."""
    names = tuple(names or dualvol.z_names(ap.dim))
    table = VariableTable(names)
    if not ap.is_full_dimensional_in_hyperplane():
        return RationalFunction.zero(table)
    fan = boundary_cone_rays(ap)
    forms = [LinearForm.combination(v, names) for v in fan.rays]
    return dualvol.f_fan(
        dualvol.SupportData(fan, forms, table), normal=ap.normal
    )


def _check_sequence(seq, normal):
    for part in seq:
        if level_of(part, normal) != ONE:
            raise LevelMismatch('every part must lie on level 1')


def hyperplane_dual_mixed_volume(seq, names=None, z=None, normal=None):
    """m~_P(x, z) for a sequence of polytopes on level 1.

    Rays come from the boundary fan of Cone(P_1 + .. + P_r), values are
    sum_i x_i h_{P_i}(v) + <v, z>.
    """
    normal = exactnum.vector(normal) if normal else (ONE,) * seq.dim
    _check_sequence(seq, normal)
    xs = tuple(names or mixed.x_names(seq.r))
    zs = tuple(z or dualvol.z_names(seq.dim))
    table = VariableTable(xs + zs)
    total = AffinePolytope(seq.total(), Rational(seq.r), normal)
    if not total.is_full_dimensional_in_hyperplane():
        return RationalFunction.zero(table)
    fan = boundary_cone_rays(total)
    forms = []
    for v in fan.rays:
        form = LinearForm(0, {
            name: part.support_value(v) for name, part in zip(xs, seq)
        })
        forms.append(form + LinearForm.combination(v, zs))
    function = dualvol.f_fan(
        dualvol.SupportData(fan, forms, table), normal=normal
    )
    log.debug(
        'Hyperplane dual mixed volume of %d parts: %d rays', seq.r,
        len(fan.rays)
    )
    return function


AffineCellRays = collections.namedtuple('AffineCellRays', ('rays', 'kappa'))


def affine_fine_cell_rays(cell):
    """Rays v_{i,a} of a fine cell on level 1 and its factor kappa.

    v_{i,a} is orthogonal to the span of every other part and takes the
    value 1 on p_{i,a} + s, 0 on p_{i,b} + s, where s is the sum of the
    first vertices of the other parts.
    """
    r = len(cell.parts)
    d = cell.dim
    if not cell.is_fine(d - 1):
        raise mixed.SingularCellGeometry('cell is not fine in its hyperplane')
    uniform = tuple(Rational(1, r) for _ in range(d))
    rays = collections.OrderedDict()
    for i, part in enumerate(cell.parts):
        if len(part) == 1:
            continue
        rows, base = [], exactnum.zero_vector(d)
        for k, other in enumerate(cell.parts):
            if k == i:
                continue
            base = exactnum.add(base, other[0])
            rows.extend(
                (exactnum.sub(p, other[0]), ZERO) for p in other[1:]
            )
        for a in range(len(part)):
            system = list(rows)
            for b, p in enumerate(part):
                system.append(
                    (exactnum.add(p, base), ONE if a == b else ZERO)
                )
            solution = exactnum.solve_linear(
                [row for row, _ in system], [rhs for _, rhs in system]
            )
            if isinstance(solution, exactnum.SolveOutcome):
                raise mixed.SingularCellGeometry(
                    'ray system of part %d is %s' % (i, solution.value),
                    certificate={'part': i, 'vertex': a}
                )
            rays[(i, a)] = solution
        total = exactnum.vector_sum(
            [rays[(i, a)] for a in range(len(part))], d
        )
        if total != uniform:
            raise mixed.SingularCellGeometry(
                'rays of part %d do not sum to 1/r' % (i,)
            )
    basis = [v for (i, a), v in rays.items() if a < len(cell.parts[i]) - 1]
    kappa = abs(exactnum.det(basis + [(ONE,) * d]))
    return AffineCellRays(rays, kappa)


def affine_fine_cell_dmv(cell, names=None, z=None, on_slice=False):
    """Closed form of m~ for a fine cell in the hyperplane.

    kappa * prod_{d_i > 0} (x_i - <x, 1>/r + <z, 1>/r) / prod h_{xQ - z}(v);
    with `on_slice` the numerator is the product of the x_i, valid where
    <x, 1> = <z, 1>.
    """
    r = len(cell.parts)
    xs = tuple(names or mixed.x_names(r))
    zs = tuple(z or dualvol.z_names(cell.dim))
    table = VariableTable(xs + zs)
    info = affine_fine_cell_rays(cell)
    shift = (
        LinearForm(0, {name: Rational(-1, r) for name in xs})
        + LinearForm(0, {name: Rational(1, r) for name in zs})
    )
    numerator = []
    denominator = []
    for i, part in enumerate(cell.parts):
        if len(part) == 1:
            continue
        x_i = LinearForm.variable(xs[i])
        numerator.append(x_i if on_slice else x_i + shift)
    for (i, a), v in info.rays.items():
        support = [
            -min(exactnum.dot(v, p) for p in part) for part in cell.parts
        ]
        form = LinearForm(0, dict(zip(xs, support)))
        denominator.append(form + LinearForm.combination(v, zs))
    return RationalFunction(
        table, [(info.kappa, tuple(numerator), tuple(denominator))]
    )


def chart(points):
    """Drop the last coordinate."""
    return [tuple(p[:-1]) for p in points]


def lift(points, level=ONE):
    """Inverse of `chart` on the hyperplane <1, y> = level."""
    return [tuple(p) + (level - sum(p, ZERO),) for p in points]


def chart_sequence(seq):
    return mixed.MinkowskiSequence(
        geometry.Polytope(chart(part.vertices)) for part in seq
    )


def _lift_subdivision(sub):
    return mixed.MixedSubdivision(
        mixed.MixedCell(lift(part) for part in cell.parts) for cell in sub
    )


def _chart_subdivision(sub):
    return mixed.MixedSubdivision(
        mixed.MixedCell(chart(part) for part in cell.parts) for cell in sub
    )


def generate_fine_subdivision(seq, heights=None, seed=0, **kwargs):
    """Fine mixed subdivision of a level-1 sequence, computed in the chart."""
    _check_sequence(seq, (ONE,) * seq.dim)
    sub, used = mixed.generate_fine_subdivision(
        chart_sequence(seq), heights, seed, **kwargs
    )
    return _lift_subdivision(sub), used


def validate_mixed_subdivision(seq, sub):
    _check_sequence(seq, (ONE,) * seq.dim)
    return mixed.validate_mixed_subdivision(
        chart_sequence(seq), _chart_subdivision(sub)
    )


def slice_substitution(xs, zs):
    """Map z_d to <x, 1> - z_1 - .. - z_{d-1}, and the reduced table."""
    image = LinearForm(0, {name: ONE for name in xs}) - LinearForm(
        0, {name: ONE for name in zs[:-1]}
    )
    return {zs[-1]: image}, VariableTable(tuple(xs) + tuple(zs[:-1]))


def verify_affine_additivity(seq, sub, seed=0, samples=6, bound=997):
    """m~_P equals the sum over cells on the slice <x, 1> = <z, 1>."""
    xs = mixed.x_names(seq.r)
    zs = dualvol.z_names(seq.dim)
    whole = hyperplane_dual_mixed_volume(seq, xs, zs)
    pieces = []
    for cell in sub:
        if cell.is_fine(seq.dim - 1):
            pieces.append(affine_fine_cell_dmv(cell, xs, zs))
        else:
            pieces.append(
                hyperplane_dual_mixed_volume(cell.sequence(), xs, zs)
            )
    mapping, table = slice_substitution(xs, zs)
    left = symfun.rf_substitute(whole, mapping, table)
    right = symfun.rf_substitute(
        symfun.rf_sum(whole.table, pieces), mapping, table
    )
    verdict = symfun.rf_equal(
        left, right, seed=seed, samples=samples, bound=bound
    )
    log.info(
        'Hyperplane additivity over %d cells %s', len(sub),
        'holds' if verdict else 'FAILS'
    )
    return verdict
