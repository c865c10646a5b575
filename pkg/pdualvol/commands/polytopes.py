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

"""Handlers for single polytopes, cones and fans."""

from .. import dualvol
from .. import exactnum
from .. import serialization
from . import common


def dualvol_value(args, config):
    """Exact dual volume."""
    polytope = common.load_polytope(args.polytope)
    value = dualvol.dual_volume(polytope)
    return common.respond({'value': exactnum.format_rational(value)})


def _value_at_origin(value):
    if value is dualvol.POLE_AT_ORIGIN:
        return value.value
    return exactnum.format_rational(value)


def dualvol_function(args, config):
    """Vol^_z with its adjoint numerator and the ray denominator."""
    polytope = common.load_polytope(args.polytope)
    if args.canonical:
        result = dualvol.canonical_form(polytope)
    else:
        result = dualvol.dual_volume_function(polytope)
    payload = common.function_payload(result.function, normal=True)
    payload.update({
        'kind': result.kind,
        'numerator': serialization.dump_polynomial(result.numerator),
        'denominator': [
            serialization.dump_form(form) for form in result.denominator
        ],
        'value_at_origin': _value_at_origin(result.value_at_origin)
    })
    return common.respond(payload)


def adjoint(args, config):
    """Adjoint of C(P)^* (checked against A_z) or of given cone generators."""
    if args.polytope:
        polytope = common.load_polytope(args.polytope)
        generators = dualvol.scaled_dual_generators(polytope)
        polynomial = dualvol.adjoint_polynomial(generators)
        verified = dualvol.verify_adjoint_identity(polytope)
        return common.respond({
            'adjoint': serialization.dump_polynomial(polynomial),
            'rendered': polynomial.render(),
            'verified': verified
        }, verified)
    generators = serialization.load_cone_generators(
        serialization.read_json(args.cone, serialization.CONE)
    )
    polynomial = dualvol.adjoint_polynomial(generators)
    return common.respond({
        'adjoint': serialization.dump_polynomial(polynomial),
        'rendered': polynomial.render()
    })


def fan_value(args, config):
    """f_fan of directly ingested numeric support data."""
    data = serialization.load_support_data(
        serialization.read_json(args.support, serialization.SUPPORT_DATA)
    )
    value = dualvol.f_fan(data)
    return common.respond({'value': exactnum.format_rational(value)})


def check_integral(args, config):
    """Exact Vol^_z(P) against numeric integration of exp(-h)."""
    polytope = common.load_polytope(args.polytope)
    z = common.vector_option(args.z, 'z', polytope.dim)
    tolerance = args.tolerance or config['integral']['tolerance']
    comparison = dualvol.integral_comparison(polytope, z, tolerance)
    return common.respond({
        'exact': exactnum.format_rational(comparison.exact),
        'numeric': comparison.numeric,
        'within_tolerance': comparison.within_tolerance
    }, comparison.within_tolerance)
