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

"""Handlers for Minkowski sequences and the hyperplane variant."""

import logging

from .. import affine
from .. import mixed
from .. import serialization
from . import common


log = logging.getLogger('pdualvol.commands.sequences')


def mixed_volume(args, config):
    """m_P(x), or m_P(x, z) with --with-z."""
    seq = common.load_sequence(args.seq)
    if args.with_z:
        function = mixed.dual_mixed_volume_z(seq)
    else:
        function = mixed.dual_mixed_volume(seq)
    payload = common.function_payload(function, normal=True)
    # a flat sum has the formal value 0 and no regularity
    payload['regular'] = (
        mixed.is_regular(seq) if seq.total().is_full_dimensional() else None
    )
    return common.respond(payload)


def verify_subdivision(args, config):
    """Validate a mixed subdivision, then check additivity over its cells."""
    seq = common.load_sequence(args.seq)
    sub = serialization.load_subdivision(
        seq, serialization.read_json(args.sub, serialization.SUBDIVISION)
    )
    options = common.equality_options(config)
    if args.hyperplane:
        valid = affine.validate_mixed_subdivision(seq, sub)
        additive = valid and affine.verify_affine_additivity(
            seq, sub, **options
        )
    else:
        valid = mixed.validate_mixed_subdivision(seq, sub)
        additive = valid and mixed.verify_subdivision_additivity(
            seq, sub, **options
        )
    if not valid:
        log.info('Subdivision rejected, additivity not checked')
    return common.respond(
        {'valid': valid, 'additive': additive, 'cells': len(sub)},
        valid and additive
    )


def verify_cayley(args, config):
    seq = common.load_sequence(args.seq)
    verified = mixed.verify_cayley_identity(
        seq, **common.equality_options(config)
    )
    return common.respond({'verified': verified}, verified)


def subdivide(args, config):
    """Regular fine mixed subdivision from given or seeded heights."""
    seq = common.load_sequence(args.seq)
    heights = None
    if args.heights:
        heights = serialization.load_heights(
            serialization.read_json(args.heights, serialization.HEIGHTS)
        )
    generate = (
        affine.generate_fine_subdivision if args.hyperplane
        else mixed.generate_fine_subdivision
    )
    sub, used = generate(
        seq, heights, config['random']['seed'],
        **common.lifting_options(config)
    )
    if args.hyperplane:
        fine = all(cell.is_fine(seq.dim - 1) for cell in sub)
    else:
        fine = sub.is_fine()
    return common.respond({
        'subdivision': serialization.dump_subdivision(seq, sub)['cells'],
        'heights': serialization.dump_heights(used)['heights'],
        'fine': fine
    })


def hyperplane_volume(args, config):
    """EVol_z of a polytope on a level, or m~ of a level-1 sequence."""
    if args.polytope:
        polytope = serialization.load_affine_polytope(
            serialization.read_json(args.polytope, serialization.POLYTOPE)
        )
        function = affine.hyperplane_dual_volume(polytope)
    else:
        seq = common.load_sequence(args.seq)
        function = affine.hyperplane_dual_mixed_volume(seq)
    return common.respond(common.function_payload(function))
