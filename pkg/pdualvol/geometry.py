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

"""Exact polytopes, cones and fans.

Polytopes are V-polytopes with rational vertices. Facet normals are inward:
a facet with normal `v` is `{y : <v, y> = -h_P(v)}` where
`h_P(v) = -min_{y in P} <v, y>` is the support value used throughout the
package.
"""

import itertools
import logging

from . import common
from . import exactnum
from .exactnum import ONE, ZERO, Rational


LOGGER_NAME = 'pdualvol.geometry'

log = logging.getLogger(LOGGER_NAME)


class NotFullDimensional(common.PreconditionError):
    """Polytope or cone does not span its ambient space."""


class NotPointed(common.PreconditionError):
    """Cone contains a line."""


class OriginNotInterior(common.PreconditionError):
    """Origin is not an interior point of the polytope."""


class InvalidFan(common.InputError):
    """Fan data are inconsistent: parallel rays, bad indices or cones that
    do not meet in common faces.
    """


class InvalidWeight(common.InputError):
    """Minkowski weight is zero or negative."""


def affine_dimension(points):
    points = list(points)
    if not points:
        return -1
    base = points[0]
    return exactnum.rank([exactnum.sub(p, base) for p in points[1:]])


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _planar_hull(points):
    """Andrew's monotone chain without collinear points."""
    points = sorted(points)
    if len(points) <= 2:
        return points
    lower, upper = [], []
    for p in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(points):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def extreme_points(points):
    """Vertices of conv(points), sorted lexicographically."""
    points = sorted(set(tuple(p) for p in points))
    if len(points) <= 1:
        return points
    dim = len(points[0])
    if dim == 1:
        return [points[0], points[-1]]
    if dim == 2:
        return sorted(_planar_hull(points))
    return [
        p for k, p in enumerate(points)
        if exactnum.is_extreme_point(p, points[:k] + points[k + 1:])
    ]


class Polytope(object):
    """Convex hull of finitely many rational points.

    Only extreme points are kept, sorted lexicographically, so the vertex
    list is a canonical description of the polytope.
    """

    def __init__(self, points, dim=None):
        points = [exactnum.vector(p) for p in points]
        if not points:
            raise exactnum.DimensionError('polytope needs at least one point')
        dims = {len(p) for p in points}
        if len(dims) != 1 or (dim is not None and dims != {dim}):
            raise exactnum.DimensionError('points of different dimensions')
        self._dim = dims.pop()
        self._vertices = tuple(extreme_points(points))
        self._affine_dim = None
        self._facets = None

    @property
    def dim(self):
        """Ambient dimension."""
        return self._dim

    @property
    def vertices(self):
        """Sorted vertex tuple."""
        return self._vertices

    @property
    def affine_dim(self):
        """Dimension of the affine hull."""
        if self._affine_dim is None:
            self._affine_dim = affine_dimension(self._vertices)
        return self._affine_dim

    def is_full_dimensional(self):
        return self.affine_dim == self._dim

    def support_value(self, v):
        """h_P(v) = -min <v, y> over the vertices."""
        return -min(exactnum.dot(v, y) for y in self._vertices)

    def vertex_index(self, point):
        return self._vertices.index(tuple(point))

    def translated(self, t):
        return Polytope([exactnum.add(y, t) for y in self._vertices])

    def scaled(self, c):
        c = Rational(c)
        return Polytope([exactnum.scale(c, y) for y in self._vertices])

    def __eq__(self, other):
        return (
            isinstance(other, Polytope) and self._vertices == other._vertices
        )

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return 'Polytope(%s)' % (
            [[exactnum.format_rational(a) for a in y] for y in self._vertices],
        )


def support_value(p, v):
    return p.support_value(v)


def _span_basis(vectors):
    rref, _ = exactnum.row_reduce(vectors)
    return rref


def _cone_facets(vectors):
    """Facets of the cone spanned by `vectors`, inside their linear span.

    Returns `(normal, tight_indices)` pairs: `normal` lies in the span, is
    nonnegative on every vector and vanishes exactly on `tight_indices`.
    """
    basis = _span_basis(vectors)
    k = len(basis)
    if k == 0:
        return []
    gram = [
        tuple(exactnum.dot(b, vec) for b in basis) for vec in vectors
    ]
    found = {}
    for subset in itertools.combinations(range(len(vectors)), k - 1):
        rows = [gram[i] for i in subset]
        if k > 1 and exactnum.rank(rows) != k - 1:
            continue
        kernel = exactnum.nullspace(rows, k)
        if len(kernel) != 1:
            continue
        coords = kernel[0]
        values = [exactnum.dot(coords, g) for g in gram]
        if all(val >= 0 for val in values):
            sign = 1
        elif all(val <= 0 for val in values):
            sign = -1
        else:
            continue
        tight = frozenset(i for i, val in enumerate(values) if val == 0)
        if tight in found or len(tight) == len(vectors):
            continue
        normal = [ZERO] * len(vectors[0])
        for c, b in zip(coords, basis):
            normal = exactnum.add(normal, exactnum.scale(sign * c, b))
        found[tight] = exactnum.primitive(normal)
    return [(normal, tight) for tight, normal in found.items()]


class Cone(object):
    """Polyhedral cone spanned by finitely many generators."""

    def __init__(self, generators):
        generators = [exactnum.vector(g) for g in generators]
        if not generators:
            raise exactnum.DimensionError('cone needs generators')
        if len({len(g) for g in generators}) != 1:
            raise exactnum.DimensionError('generators of different dimensions')
        self.generators = tuple(generators)
        self.dim = len(generators[0])

    def rank(self):
        return exactnum.rank(self.generators)

    def is_full_dimensional(self):
        return self.rank() == self.dim

    def is_pointed(self):
        return exactnum.convex_combination(
            exactnum.zero_vector(self.dim), self.generators
        ) is None

    def facets(self):
        """Primitive inward normals of the facets, sorted."""
        if not self.is_full_dimensional():
            raise NotFullDimensional(
                'cone of rank %d in dimension %d' % (self.rank(), self.dim)
            )
        return tuple(sorted(
            normal for normal, _ in _cone_facets(list(self.generators))
        ))

    def dual(self):
        """C* = {w : <w, g> >= 0 for all generators g}."""
        return Cone(self.facets())


def cone_over(p):
    """C(P) spanned by the homogenized vertices (1, y)."""
    return Cone([(ONE,) + tuple(y) for y in p.vertices])


def dual_cone(cone):
    return cone.dual()


def facets(p):
    """Facets as `(normal, offset)` pairs with `offset = h_P(normal)`.

    Normals are primitive and inward, the list is sorted by normal.
    """
    if p._facets is not None:
        return p._facets
    if not p.is_full_dimensional():
        raise NotFullDimensional(
            'polytope of dimension %d in R^%d' % (p.affine_dim, p.dim),
            certificate={'affine_dim': p.affine_dim, 'dim': p.dim}
        )
    homogenized = [(ONE,) + tuple(y) for y in p.vertices]
    normals = set()
    for normal, _ in _cone_facets(homogenized):
        normals.add(exactnum.primitive(normal[1:]))
    result = tuple((v, p.support_value(v)) for v in sorted(normals))
    p._facets = result
    return result


class Fan(object):
    """Polyhedral fan given by primitive rays and maximal cones.

    `cones` are sorted tuples of ray indices; `pure_dim` is the common
    dimension of the maximal cones.
    """

    def __init__(self, dim, rays, cones, pure_dim=None):
        self.dim = dim
        self.rays = tuple(exactnum.vector(r) for r in rays)
        self.cones = tuple(tuple(sorted(cone)) for cone in cones)
        if any(len(r) != dim for r in self.rays):
            raise exactnum.DimensionError('ray of wrong dimension')
        for cone in self.cones:
            if any(i < 0 or i >= len(self.rays) for i in cone):
                raise InvalidFan('cone references a missing ray')
        if pure_dim is None:
            pure_dim = max(
                (exactnum.rank([self.rays[i] for i in cone])
                 for cone in self.cones),
                default=0
            )
        self.pure_dim = pure_dim

    def cone_rays(self, cone):
        return [self.rays[i] for i in cone]

    def check(self):
        """Validate fan axioms for ingested data."""
        for i, j in itertools.combinations(range(len(self.rays)), 2):
            if exactnum.rank([self.rays[i], self.rays[j]]) < 2 and (
                    exactnum.dot(self.rays[i], self.rays[j]) > 0):
                raise InvalidFan(
                    'rays %d and %d are parallel' % (i, j),
                )
        for cone in self.cones:
            if exactnum.rank(self.cone_rays(cone)) != self.pure_dim:
                raise InvalidFan(
                    'cone %s is not of dimension %d' % (list(cone),
                                                        self.pure_dim)
                )
            if not Cone(self.cone_rays(cone)).is_pointed():
                raise NotPointed(
                    'cone %s contains a line' % (list(cone),),
                    certificate=list(cone)
                )
        for a, b in itertools.combinations(self.cones, 2):
            separation = separating_hyperplane(
                self.cone_rays(a), self.cone_rays(b), through_origin=True,
                common=[self.rays[i] for i in set(a) & set(b)]
            )
            if separation is None:
                raise InvalidFan(
                    'cones %s and %s overlap' % (list(a), list(b))
                )
        return self


def normal_fan(p):
    """Inner normal fan: one maximal cone per vertex."""
    facet_list = facets(p)
    rays = [v for v, _ in facet_list]
    cones = []
    for y in p.vertices:
        cones.append(tuple(
            i for i, (v, h) in enumerate(facet_list)
            if exactnum.dot(v, y) == -h
        ))
    return Fan(p.dim, rays, cones, pure_dim=p.dim)


def _pulling(ids, vectors):
    """Pulling triangulation of the cone spanned by `vectors[ids]`."""
    ids = tuple(sorted(ids))
    local = [vectors[i] for i in ids]
    k = exactnum.rank(local)
    if len(ids) == k:
        return [ids]
    apex = ids[0]
    simplices = []
    for _, tight in _cone_facets(local):
        facet = tuple(ids[i] for i in sorted(tight))
        if apex in facet:
            continue
        for simplex in _pulling(facet, vectors):
            simplices.append(tuple(sorted((apex,) + simplex)))
    return simplices


def triangulate_cone(vectors):
    """Simplicial cones (index tuples) covering the cone of `vectors`."""
    return sorted(_pulling(range(len(vectors)), list(vectors)))


def triangulate_fan(fan):
    """Refine every maximal cone into simplicial ones without new rays.

    Cones are pulled from their first ray, which needs pointed cones.
    """
    simplicial = []
    for cone in fan.cones:
        rays = fan.cone_rays(cone)
        if len(rays) > exactnum.rank(rays) and not Cone(rays).is_pointed():
            raise NotPointed(
                'cone %s contains a line' % (list(cone),),
                certificate=list(cone)
            )
        for simplex in triangulate_cone(rays):
            simplicial.append(tuple(cone[i] for i in simplex))
    log.debug(
        'Triangulated %d cones into %d simplicial cones',
        len(fan.cones), len(simplicial)
    )
    return Fan(fan.dim, fan.rays, simplicial, pure_dim=fan.pure_dim)


def triangulate_polytope(p):
    """Pulling triangulation into simplices (vertex index tuples)."""
    homogenized = [(ONE,) + tuple(y) for y in p.vertices]
    return triangulate_cone(homogenized)


def simplices(p):
    return [
        Polytope([p.vertices[i] for i in simplex])
        for simplex in triangulate_polytope(p)
    ]


def normalized_volume(p):
    """d! times the Euclidean volume, zero for lower-dimensional input."""
    if not p.is_full_dimensional():
        return ZERO
    homogenized = [(ONE,) + tuple(y) for y in p.vertices]
    total = ZERO
    for simplex in triangulate_cone(homogenized):
        total += abs(exactnum.det([homogenized[i] for i in simplex]))
    return total


def polar_dual(p):
    """P^ = {v : <v, y> >= -1 on P}, vertices v_i / h_P(v_i)."""
    facet_list = facets(p)
    bad = [v for v, h in facet_list if h <= 0]
    if bad:
        raise OriginNotInterior(
            'origin is not interior, facet normal %s' % (list(bad[0]),),
            certificate=[exactnum.format_rational(a) for a in bad[0]]
        )
    return Polytope([exactnum.scale(1 / h, v) for v, h in facet_list])


def minkowski_sum(polytopes, weights=None):
    """Weighted Minkowski sum, vertex-filtered after every summand."""
    polytopes = list(polytopes)
    if not polytopes:
        raise exactnum.DimensionError('empty Minkowski sum')
    if weights is None:
        weights = [ONE] * len(polytopes)
    weights = [exactnum.parse_rational(w) for w in weights]
    if len(weights) != len(polytopes):
        raise exactnum.DimensionError('weights do not match summands')
    dim = polytopes[0].dim
    if any(q.dim != dim for q in polytopes):
        raise exactnum.DimensionError('summands of different dimensions')
    points = [exactnum.zero_vector(dim)]
    for q, weight in zip(polytopes, weights):
        if weight <= 0:
            raise InvalidWeight(
                'Minkowski weights must be positive, got %s' % (
                    exactnum.format_rational(weight),
                )
            )
        scaled = [exactnum.scale(weight, y) for y in q.vertices]
        points = extreme_points(
            exactnum.add(a, b) for a in points for b in scaled
        )
    return Polytope(points)


def separating_hyperplane(a, b, through_origin=False, common=None):
    """Exact certificate that conv(a) and conv(b) meet in conv(common).

    Looks for `(w, c)` with `<w, x> - c >= 1` on the points of `a` not in
    `common`, `<= -1` on those of `b` and `= 0` on `common`. With
    `through_origin` the offset is fixed to zero (cones). Returns the pair
    or None when no such hyperplane exists.
    """
    a = [tuple(x) for x in a]
    b = [tuple(x) for x in b]
    if common is None:
        common = set(a) & set(b)
    common = set(tuple(x) for x in common)
    dim = len((a or b)[0])
    width = dim if through_origin else dim + 1

    def row(x, sign):
        values = [sign * v for v in x]
        if not through_origin:
            values.append(Rational(-sign))
        return values

    inequalities = []
    equalities = []
    for x in a:
        if x not in common:
            inequalities.append((row(x, -1), Rational(-1)))
    for x in b:
        if x not in common:
            inequalities.append((row(x, 1), Rational(-1)))
    for x in common:
        equalities.append((row(x, 1), ZERO))
    solution = exactnum.find_feasible_point(width, equalities, inequalities)
    if solution is None:
        return None
    if through_origin:
        return solution, ZERO
    return solution[:dim], solution[dim]
