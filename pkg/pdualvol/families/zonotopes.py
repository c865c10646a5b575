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

"""Zonotopes: tilings, deletion-contraction and contraction limits."""

import collections
import itertools
import logging

from .. import common
from .. import dualvol
from .. import exactnum
from .. import geometry
from .. import mixed
from .. import symfun
from ..exactnum import ONE, ZERO, Rational
from ..symfun import LinearForm, RationalFunction, VariableTable


LOGGER_NAME = 'pdualvol.families.zonotopes'

log = logging.getLogger(LOGGER_NAME)


class InvalidTiling(common.PreconditionError):
    """Sign vectors do not describe a fine zonotopal tiling."""


class InvalidGenerators(common.InputError):
    """Zonotope generators are empty, zero, parallel, of mixed dimensions or
    do not span the space.
    """


class Zonotope(object):
    """Z = [-p_1, p_1] + .. + [-p_r, p_r]."""

    def __init__(self, generators):
        generators = [exactnum.vector(g) for g in generators]
        if not generators:
            raise InvalidGenerators('zonotope needs generators')
        if len({len(g) for g in generators}) != 1:
            raise InvalidGenerators('generators of different dimensions')
        if any(exactnum.is_zero(g) for g in generators):
            raise InvalidGenerators('zero generator')
        self.generators = tuple(generators)
        for i, j in itertools.combinations(range(len(generators)), 2):
            if exactnum.rank([generators[i], generators[j]]) < 2:
                raise InvalidGenerators(
                    'generators %d and %d are parallel' % (i, j)
                )
        if not self.spans():
            raise InvalidGenerators(
                'generators span a subspace of dimension %d in R^%d' % (
                    exactnum.rank(self.generators), self.dim
                )
            )

    @property
    def dim(self):
        """Ambient dimension."""
        return len(self.generators[0])

    @property
    def r(self):
        """Number of generators."""
        return len(self.generators)

    def segment(self, i):
        p = self.generators[i]
        return geometry.Polytope([exactnum.scale(-1, p), p])

    def sequence(self):
        return mixed.MinkowskiSequence(self.segment(i) for i in range(self.r))

    def spans(self):
        return exactnum.rank(self.generators) == self.dim


def zonotope_dmv(zonotope, names=None, z=None):
    """m_Z(x), or m_Z(x, z) with `z`."""
    seq = zonotope.sequence()
    if z:
        return mixed.dual_mixed_volume_z(seq, names, z)
    return mixed.dual_mixed_volume(seq, names)


def sign_vector_cell(zonotope, signs):
    parts = []
    for p, sign in zip(zonotope.generators, signs):
        if sign == 0:
            parts.append([exactnum.scale(-1, p), p])
        elif sign in (1, -1):
            parts.append([exactnum.scale(sign, p)])
        else:
            raise InvalidTiling('sign entries must be -1, 0 or 1')
    return mixed.MixedCell(parts)


def validate_tiling(zonotope, tiling):
    """Every tile is a parallelotope and the tiles form a subdivision."""
    for signs in tiling:
        if len(signs) != zonotope.r:
            raise InvalidTiling('sign vector of length %d' % (len(signs),))
        basis = [p for p, s in zip(zonotope.generators, signs) if s == 0]
        if len(basis) != zonotope.dim or exactnum.rank(basis) != zonotope.dim:
            raise InvalidTiling(
                'zero set of %s is not a basis' % (list(signs),),
                certificate=list(signs)
            )
    sub = mixed.MixedSubdivision(
        sign_vector_cell(zonotope, signs) for signs in tiling
    )
    if not mixed.validate_mixed_subdivision(zonotope.sequence(), sub):
        raise InvalidTiling('tiles do not form a subdivision of the zonotope')
    return True


def parallelotope_dmv(zonotope, signs, names=None, z=None):
    """Closed form for the tile of `signs`.

    With dual vectors v_i (<v_i, p_j> = delta_ij / 2 on the zero set) and
    y = sum_{j not in zero set} signs_j x_j p_j the tile contributes
    kappa * prod x_i / prod (x_i / 2 + w_i)(x_i / 2 - w_i) with
    w_i = <v_i, z - y>.
    """
    xs = tuple(names or mixed.x_names(zonotope.r))
    zs = tuple(z) if z else None
    table = VariableTable(xs + (zs or ()))
    zero_set = [i for i, s in enumerate(signs) if s == 0]
    basis = [zonotope.generators[i] for i in zero_set]
    duals = []
    for k in range(len(zero_set)):
        target = [
            Rational(1, 2) if j == k else ZERO for j in range(len(basis))
        ]
        solution = exactnum.solve_linear(basis, target)
        if isinstance(solution, exactnum.SolveOutcome):
            raise InvalidTiling('zero set is not a basis')
        duals.append(solution)
    kappa = abs(exactnum.det(duals))
    numerator, denominator = [], []
    for k, i in enumerate(zero_set):
        v = duals[k]
        w = LinearForm(0)
        if zs:
            w = w + LinearForm.combination(v, zs)
        for j, s in enumerate(signs):
            if s != 0:
                w = w - LinearForm.variable(
                    xs[j], s * exactnum.dot(v, zonotope.generators[j])
                )
        half = LinearForm.variable(xs[i], Rational(1, 2))
        numerator.append(LinearForm.variable(xs[i]))
        denominator.extend([half + w, half - w])
    return RationalFunction(
        table, [(kappa, tuple(numerator), tuple(denominator))]
    )


def tiling_dmv(zonotope, tiling, names=None, z=None, validate=True):
    """Sum of the tile closed forms, validated geometrically first."""
    if validate:
        validate_tiling(zonotope, tiling)
    pieces = [parallelotope_dmv(zonotope, signs, names, z) for signs in tiling]
    xs = tuple(names or mixed.x_names(zonotope.r))
    table = VariableTable(xs + (tuple(z) if z else ()))
    return symfun.rf_sum(table, pieces)


def tiling_from_subdivision(zonotope, sub):
    """Sign vectors of a fine mixed subdivision of the segment sequence."""
    tiling = []
    for cell in sub:
        signs = []
        for p, part in zip(zonotope.generators, cell.parts):
            if len(part) == 2:
                signs.append(0)
            elif part[0] == tuple(p):
                signs.append(1)
            else:
                signs.append(-1)
        tiling.append(tuple(signs))
    return sorted(tiling)


def generate_tiling(zonotope, seed=0, **kwargs):
    sub, _ = mixed.generate_fine_subdivision(
        zonotope.sequence(), seed=seed, **kwargs
    )
    return tiling_from_subdivision(zonotope, sub)


SplitResult = collections.namedtuple('SplitResult', ('w_plus', 'w_minus'))


def _sign(a):
    return (a > 0) - (a < 0)


def _segment(p):
    return geometry.Polytope([exactnum.scale(-1, p), p])


def deletion_contraction_split(polytope, direction, names=None):
    """W_+ and W_- over the cones of N(P + [-p, p]) on either side of p^perp.

    Both use the support values h_{P - z}, so rays new to the refined fan
    carry h_P(v) + <v, z> as well.
    """
    p = exactnum.vector(direction)
    if exactnum.is_zero(p):
        raise InvalidGenerators('zero split direction')
    zs = tuple(names or dualvol.z_names(polytope.dim))
    table = VariableTable(zs)
    refined = geometry.minkowski_sum([polytope, _segment(p)])
    fan = geometry.normal_fan(refined)
    forms = [
        LinearForm.combination(v, zs, polytope.support_value(v))
        for v in fan.rays
    ]
    plus, minus = [], []
    for cone in fan.cones:
        signs = {_sign(exactnum.dot(p, fan.rays[i])) for i in cone}
        if 1 in signs and -1 in signs:
            raise ValueError('refined cone crosses the splitting hyperplane')
        (plus if 1 in signs else minus).append(cone)
    result = []
    for cones in (plus, minus):
        side = geometry.Fan(fan.dim, fan.rays, cones, pure_dim=fan.pure_dim)
        result.append(
            dualvol.f_fan(dualvol.SupportData(side, forms, table))
            if cones else RationalFunction.zero(table)
        )
    log.debug(
        'Split into %d cones on the positive and %d on the negative side',
        len(plus), len(minus)
    )
    return SplitResult(*result)


def dilation_dual_volume(polytope, direction, x_name='x', names=None):
    """V(x, z) = Vol^_z(P + x [-p, p]) over (x, z..)."""
    p = exactnum.vector(direction)
    zs = tuple(names or dualvol.z_names(polytope.dim))
    seq = mixed.MinkowskiSequence([polytope, _segment(p)])
    scale_name = '_'.join((x_name, 'base'))
    function = mixed.dual_mixed_volume_z(seq, (scale_name, x_name), zs)
    return symfun.rf_substitute(
        function, {scale_name: LinearForm(1)},
        VariableTable((x_name,) + zs)
    )


def verify_deletion_contraction(polytope, direction, seed=0, samples=6,
                                bound=997):
    """V(x, z) = W_+(z + x p) + W_-(z - x p)."""
    p = exactnum.vector(direction)
    zs = dualvol.z_names(polytope.dim)
    target = VariableTable(('x',) + zs)
    split = deletion_contraction_split(polytope, p, zs)
    shifted = []
    for sign, part in ((1, split.w_plus), (-1, split.w_minus)):
        mapping = {
            name:
                LinearForm.variable(name) + LinearForm.variable('x', sign * pk)
            for name, pk in zip(zs, p)
        }
        shifted.append(symfun.rf_substitute(part, mapping, target))
    whole = dilation_dual_volume(polytope, p, 'x', zs)
    return symfun.rf_equal(
        whole, symfun.rf_sum(target, shifted),
        seed=seed, samples=samples, bound=bound
    )


def contraction_limits(polytope, direction):
    """lim t W_+(z + t p) and lim t W_-(z + t p) as t -> infinity."""
    p = exactnum.vector(direction)
    split = deletion_contraction_split(polytope, p)
    shift = dict(zip(split.w_plus.table.names, p))
    return (
        symfun.rf_leading_inverse(split.w_plus, shift),
        symfun.rf_leading_inverse(split.w_minus, shift),
    )


def _hyperplane_basis(p):
    return exactnum.nullspace([p], len(p))


def contraction_dual_volume(polytope, direction, names=None):
    """Vol^_z(P / p) in p^perp, normalized by |det(v.., p)|.

    P / p is computed as the orthogonal projection in coordinates of a
    basis B of p^perp; the result is a function of z, meaningful for z in
    p^perp.
    """
    p = exactnum.vector(direction)
    zs = tuple(names or dualvol.z_names(polytope.dim))
    basis = _hyperplane_basis(p)
    gram = [[exactnum.dot(a, b) for b in basis] for a in basis]
    norm = exactnum.dot(p, p)

    def coordinates(y):
        along = exactnum.scale(exactnum.dot(y, p) / norm, p)
        projected = exactnum.sub(y, along)
        rhs = [exactnum.dot(b, projected) for b in basis]
        return exactnum.solve_linear(gram, rhs)

    projection = geometry.Polytope([coordinates(y) for y in polytope.vertices])
    cs = dualvol.z_names(len(basis), prefix='c')
    local = dualvol.dual_volume_function(projection, cs).function
    lifted = []
    for k in range(len(basis)):
        target = [ONE if j == k else ZERO for j in range(len(basis))]
        coeffs = exactnum.solve_linear(gram, target)
        lifted.append(exactnum.vector_sum(
            [exactnum.scale(c, b) for c, b in zip(coeffs, basis)], len(p)
        ))
    ratio = abs(exactnum.det(lifted + [p]))
    mapping = {}
    for k, name in enumerate(cs):
        mapping[name] = LinearForm.combination(lifted[k], zs)
    function = symfun.rf_substitute(local, mapping, VariableTable(zs))
    return symfun.rf_scale(function, ratio)


def verify_contraction_limit(polytope, direction, seed=0, samples=6,
                             bound=997):
    """t W_+(z + t p) -> Vol^_z(P/p) / |p|^2, t W_- -> its negative.

    Both limits live on p^perp.
    """
    p = exactnum.vector(direction)
    zs = dualvol.z_names(polytope.dim)
    plus, minus = contraction_limits(polytope, p)
    expected = symfun.rf_scale(
        contraction_dual_volume(polytope, p, zs), 1 / exactnum.dot(p, p)
    )
    basis = _hyperplane_basis(p)
    cs = dualvol.z_names(len(basis), prefix='c')
    table = VariableTable(cs)
    mapping = {
        name: LinearForm(0, {c: b[k] for c, b in zip(cs, basis)})
        for k, name in enumerate(zs)
    }

    def restrict(function):
        return symfun.rf_substitute(function, mapping, table)

    return (
        symfun.rf_equal(restrict(plus), restrict(expected),
                        seed=seed, samples=samples, bound=bound)
        and symfun.rf_equal(restrict(minus), restrict(symfun.rf_neg(expected)),
                            seed=seed, samples=samples, bound=bound)
    )
