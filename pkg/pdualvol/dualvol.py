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

"""Dual volumes, dual volume functions, canonical forms and adjoints.

Everything is driven by one fan function: for a simplicial fan with a value
`u(v)` on every ray, sum `|det(cone rays)| / prod(u)` over the maximal
cones. Numeric values give numbers, linear-form values give rational
functions.
"""

import collections
import enum
import logging
import math

import numpy
import scipy.integrate

from . import common
from . import exactnum
from . import geometry
from . import symfun
from .exactnum import ONE, ZERO, Rational
from .symfun import LinearForm, RationalFunction, VariableTable


LOGGER_NAME = 'pdualvol.dualvol'

log = logging.getLogger(LOGGER_NAME)


class ZeroSupportValue(common.PreconditionError):
    """A ray of the fan carries a zero value."""


class Codegenerate(common.PreconditionError):
    """Origin lies on the span of a facet of the polytope."""


class DimensionTooLarge(common.PreconditionError):
    """Numeric integration is only available up to dimension two."""


class Marker(enum.Enum):
    POLE_AT_ORIGIN = 'pole_at_origin'


POLE_AT_ORIGIN = Marker.POLE_AT_ORIGIN


def z_names(dim, prefix='z'):
    return tuple('%s%d' % (prefix, k + 1) for k in range(dim))


class SupportData(object):
    """Fan plus one value per ray.

    Values are rationals, or linear forms over `table`.
    """

    def __init__(self, fan, values, table=None):
        values = list(values)
        if len(values) != len(fan.rays):
            raise exactnum.DimensionError(
                '%d values for %d rays' % (len(values), len(fan.rays))
            )
        self.fan = fan
        self.values = tuple(
            value if isinstance(value, LinearForm)
            else exactnum.parse_rational(value)
            for value in values
        )
        self.table = table

    def is_symbolic(self):
        return any(isinstance(value, LinearForm) for value in self.values)


def _is_zero_value(value):
    if isinstance(value, LinearForm):
        return value.is_zero()
    return value == 0


def f_fan(data, normal=None):
    """Fan function of `data`.

    Without `normal` the fan lives in R^d and determinants are of the d
    cone rays. With `normal` the fan is read in R^d / R*normal: cones have
    d - 1 rays and `normal` is appended to every determinant. Fans of
    deficient dimension evaluate to exact zero.
    """
    fan = data.fan
    effective = fan.dim if normal is None else fan.dim - 1
    symbolic = data.is_symbolic()
    if fan.pure_dim < effective or not fan.cones:
        if symbolic:
            return RationalFunction.zero(data.table)
        return ZERO
    for index, value in enumerate(data.values):
        if _is_zero_value(value):
            raise ZeroSupportValue(
                'zero value on ray %s' % (list(fan.rays[index]),),
                certificate={
                    'ray_index': index,
                    'ray': [exactnum.format_rational(a)
                            for a in fan.rays[index]]
                }
            )
    simplicial = geometry.triangulate_fan(fan)
    total = ZERO
    terms = []
    for cone in simplicial.cones:
        rays = simplicial.cone_rays(cone)
        if normal is not None:
            rays = rays + [tuple(normal)]
        weight = abs(exactnum.det(rays))
        if symbolic:
            forms = tuple(
                data.values[i] if isinstance(data.values[i], LinearForm)
                else LinearForm(data.values[i])
                for i in cone
            )
            terms.append((weight, (), forms))
        else:
            product = ONE
            for i in cone:
                product *= data.values[i]
            total += weight / product
    if symbolic:
        return RationalFunction(data.table, terms)
    return total


def simplicial_cone_integral(rays, values):
    """Exact value of the integral of exp(-u) over one simplicial cone."""
    product = ONE
    for value in values:
        product *= Rational(value)
    return abs(exactnum.det(list(rays))) / product


def _support_forms(fan, offsets, names):
    return [
        LinearForm.combination(v, names, h)
        for v, h in zip(fan.rays, offsets)
    ]


def dual_volume(p):
    """Vol^(P) as an exact rational; zero when P is lower-dimensional."""
    if not p.is_full_dimensional():
        return ZERO
    fan = geometry.normal_fan(p)
    offsets = [p.support_value(v) for v in fan.rays]
    for v, h in zip(fan.rays, offsets):
        if h == 0:
            raise Codegenerate(
                'origin lies on the facet with normal %s' % (list(v),),
                certificate=[exactnum.format_rational(a) for a in v]
            )
    return f_fan(SupportData(fan, offsets))


class DualVolumeResult(object):
    """Dual volume function of a polytope.

    `function` is Vol^_z(P) as a sum over cones, `numerator` the adjoint
    numerator A_z and `denominator` the factors h_P(v) + <v, z> of B_z, one
    per ray of the normal fan, so that `function == numerator / prod(B_z)`.
    """

    def __init__(self, kind, function, numerator, denominator,
                 value_at_origin):
        self.kind = kind
        self.function = function
        self.numerator = numerator
        self.denominator = tuple(denominator)
        self.value_at_origin = value_at_origin

    @property
    def table(self):
        """Variable table of the function."""
        return self.function.table


def _aligned_numerator(function, raw_factors):
    """Numerator over the product of `raw_factors` (not monic)."""
    table = function.table
    numerator, normal_factors = symfun.rf_normalize(function)
    normal_counts = collections.Counter(dict(normal_factors))
    raw_counts = collections.Counter()
    scale = ONE
    for form in raw_factors:
        s, monic = form.canonical(table)
        scale *= s
        raw_counts[monic] += 1
    if normal_counts - raw_counts:
        raise ValueError('normal form has factors outside the ray product')
    element = numerator.element
    for form, count in (raw_counts - normal_counts).items():
        element = element * form.to_poly(table) ** count
    return symfun.SparsePolynomial(table, element * symfun.to_qq(scale))


def dual_volume_function(p, names=None, kind='dual_volume'):
    """Vol^_z(P) = Vol^(P - z) as a rational function of z."""
    names = tuple(names or z_names(p.dim))
    table = VariableTable(names)
    if not p.is_full_dimensional():
        zero = RationalFunction.zero(table)
        return DualVolumeResult(
            kind, zero, symfun.SparsePolynomial(table), (), ZERO
        )
    fan = geometry.normal_fan(p)
    offsets = [p.support_value(v) for v in fan.rays]
    forms = _support_forms(fan, offsets, names)
    function = f_fan(SupportData(fan, forms, table))
    numerator = _aligned_numerator(function, forms)
    if any(h == 0 for h in offsets):
        value = POLE_AT_ORIGIN
    else:
        value = symfun.rf_eval(function, [ZERO] * len(names))
    log.debug(
        'Dual volume function: %d rays, %d terms', len(fan.rays),
        len(function.terms)
    )
    return DualVolumeResult(kind, function, numerator, forms, value)


def canonical_form(p, names=None):
    """Canonical form Omega(P) - the same function as Vol^_z(P)."""
    return dual_volume_function(p, names, kind='canonical_form')


def adjoint_polynomial(generators, names=None):
    """adj_C(z) = sum_F |det F| prod_{v not in F} <v, (1, z)>.

    `generators` are the extreme rays of a pointed full-dimensional cone in
    R^(d+1); the result is a polynomial in d variables.
    """
    cone = geometry.Cone(generators)
    if not cone.is_full_dimensional():
        raise geometry.NotFullDimensional(
            'cone of rank %d in dimension %d' % (cone.rank(), cone.dim)
        )
    if not cone.is_pointed():
        raise geometry.NotPointed('cone contains a line')
    dim = cone.dim - 1
    names = tuple(names or z_names(dim))
    table = VariableTable(names)
    forms = [
        LinearForm.combination(g[1:], names, g[0]) for g in cone.generators
    ]
    polys = [form.to_poly(table) for form in forms]
    total = table.ring.zero
    for simplex in geometry.triangulate_cone(cone.generators):
        weight = abs(exactnum.det([cone.generators[i] for i in simplex]))
        term = table.ring.ground_new(symfun.to_qq(weight))
        for i, poly in enumerate(polys):
            if i not in simplex:
                term *= poly
        total += term
    return symfun.SparsePolynomial(table, total)


def scaled_dual_generators(p):
    """Generators (h_P(v), v) of C(P)^* with v the primitive fan ray."""
    generators = []
    for w in geometry.dual_cone(geometry.cone_over(p)).generators:
        tail = w[1:]
        ray = exactnum.primitive(tail)
        k = next(i for i, a in enumerate(tail) if a != 0)
        generators.append(exactnum.scale(ray[k] / tail[k], w))
    return generators


def verify_adjoint_identity(p):
    """Adjoint of C(P)^* equals the numerator A_z of Vol^_z(P)."""
    result = dual_volume_function(p)
    adjoint = adjoint_polynomial(scaled_dual_generators(p), result.table.names)
    verdict = adjoint == result.numerator
    log.info('Adjoint identity %s', 'holds' if verdict else 'FAILS')
    return verdict


def dual_brunn_minkowski_holds(p, q):
    """Vol^((P + Q) / 2)^2 <= Vol^(P) * Vol^(Q)."""
    half = Rational(1, 2)
    mean = geometry.minkowski_sum([p, q], [half, half])
    return dual_volume(mean) ** 2 <= dual_volume(p) * dual_volume(q)


IntegralComparison = collections.namedtuple(
    'IntegralComparison', ('exact', 'numeric', 'within_tolerance')
)


def _support_function(p, z):
    vertices = numpy.array(
        [[float(a) for a in y] for y in p.vertices], dtype=float
    )
    shift = numpy.array([float(a) for a in z], dtype=float)
    shifted = shift[numpy.newaxis, :] - vertices

    def h(v):
        return float(numpy.max(shifted @ v))
    return h


def integral_comparison(p, z, tolerance=1e-6):
    """Compare Vol^_z(P) with the integral of exp(-h_{P-z}) over R^d."""
    if p.dim > 2:
        raise DimensionTooLarge(
            'numeric integration supports d <= 2, got %d' % (p.dim,)
        )
    z = exactnum.vector(z)
    shifted = p.translated(exactnum.scale(-1, z))
    exact = dual_volume(shifted)
    if any(shifted.support_value(v) <= 0
           for v, _ in geometry.facets(shifted)):
        raise geometry.OriginNotInterior('z is not an interior point')
    h = _support_function(p, z)
    fan = geometry.triangulate_fan(geometry.normal_fan(p))
    numeric = 0.0
    for cone in fan.cones:
        rays = numpy.array(
            [[float(a) for a in r] for r in fan.cone_rays(cone)], dtype=float
        )
        jacobian = abs(numpy.linalg.det(rays))
        if p.dim == 1:
            value, _ = scipy.integrate.quad(
                lambda t: math.exp(-h(t * rays[0])), 0, numpy.inf
            )
        else:
            value, _ = scipy.integrate.dblquad(
                lambda t2, t1: math.exp(-h(t1 * rays[0] + t2 * rays[1])),
                0, numpy.inf, 0, numpy.inf
            )
        numeric += jacobian * value
    scale = max(1.0, abs(float(exact)))
    within = abs(numeric - float(exact)) <= tolerance * scale
    log.debug('Integral check: exact %s, numeric %r', exact, numeric)
    return IntegralComparison(exact, numeric, within)


def integral_check(p, z, tolerance=1e-6):
    return integral_comparison(p, z, tolerance).within_tolerance
