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

"""Handlers for zonotopes, permutohedra, associahedra and amplitudes."""

from .. import exactnum
from .. import families
from .. import serialization
from .. import symfun
from . import common


def _threads(config):
    return config['threads']


def genperm(args, config):
    function = families.genperm_dmv_closed_form(args.n, _threads(config))
    payload = common.function_payload(function)
    verified = None
    if args.verify:
        verified = families.verify_geometric_closed_form(
            args.n, **common.equality_options(config)
        )
        payload['verified'] = verified
    return common.respond(payload, verified)


def permutohedron_cell(args, config):
    """Cell formulas of a J-list, with the sum identities on --verify."""
    n, cells = serialization.load_genperm_cells(
        serialization.read_json(args.cells, serialization.GENPERM_CELLS)
    )
    n = args.n or n
    if n is None:
        raise common.InvalidRequestData('--n missing and not given in file')
    functions = [families.genperm_cell_dmv(n, cell) for cell in cells]
    payload = {
        'cells': [common.function_payload(f) for f in functions],
        'total': common.function_payload(
            symfun.rf_sum(functions[0].table, functions)
        )
    }
    verified = None
    if args.verify:
        report = families.verify_genperm_identities(
            n, cells, **common.equality_options(config)
        )
        payload.update({
            'valid': report.valid,
            'sum_identity': report.sum_identity,
            'count_identity': {
                'holds': report.count_identity,
                'left': exactnum.format_rational(report.count_left),
                'right': exactnum.format_rational(report.count_right)
            }
        })
        verified = bool(
            report.valid and report.sum_identity and report.count_identity
        )
    return common.respond(payload, verified)


def associahedron(args, config):
    function = families.associahedron_dmv(args.n, _threads(config))
    payload = common.function_payload(function)
    verified = None
    if args.verify:
        options = common.equality_options(config)
        verified = symfun.rf_equal(
            function, families.genperm_specialization(args.n), **options
        ) and symfun.rf_equal(
            function, families.associahedron_geometric_dmv(args.n), **options
        )
        payload['verified'] = verified
    return common.respond(payload, verified)


def amplitude(args, config):
    """phi^3 amplitude and its sign against the associahedron."""
    if args.n < 4:
        raise common.InvalidRequestData('amplitudes need --n 4 or more')
    function = families.phi3_amplitude(args.n, _threads(config))
    payload = common.function_payload(function)
    payload['associahedron_sign'] = families.amplitude_sign(
        args.n, **common.equality_options(config)
    )
    return common.respond(payload)


def zonotope(args, config):
    """m_Z(x), optionally with a split and a tiling check."""
    generators = serialization.load_generators(
        serialization.read_json(args.generators, serialization.GENERATORS)
    )
    zono = families.Zonotope(generators)
    function = families.zonotope_dmv(zono)
    payload = common.function_payload(function)
    verified = None
    if args.tiling:
        tiling = serialization.load_tiling(
            serialization.read_json(args.tiling, serialization.TILING)
        )
        tiled = families.tiling_dmv(zono, tiling)
        verified = symfun.rf_equal(
            function, tiled, **common.equality_options(config)
        )
        payload['tiling_verified'] = verified
    if args.split_dir:
        direction = common.vector_option(args.split_dir, 'split-dir', zono.dim)
        payload['split'] = _split_payload(zono.sequence().total(), direction)
    return common.respond(payload, verified)


def _split_payload(polytope, direction):
    result = families.deletion_contraction_split(polytope, direction)
    return {
        'w_plus': common.function_payload(result.w_plus),
        'w_minus': common.function_payload(result.w_minus)
    }


def split(args, config):
    """W_+ and W_-, checked by the dilation identity and the limits."""
    polytope = common.load_polytope(args.polytope)
    direction = common.vector_option(args.dir, 'dir', polytope.dim)
    payload = _split_payload(polytope, direction)
    options = common.equality_options(config)
    verified = families.verify_deletion_contraction(
        polytope, direction, **options
    ) and families.verify_contraction_limit(polytope, direction, **options)
    plus, minus = families.contraction_limits(polytope, direction)
    payload.update({
        'verified': verified,
        'limit_plus': common.function_payload(plus),
        'limit_minus': common.function_payload(minus)
    })
    return common.respond(payload, verified)
