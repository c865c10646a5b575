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

"""Command dispatch: command name -> handler(args, config)."""

from .. import __version__
from . import families
from . import middleware
from . import polytopes
from . import sequences


HANDLERS = {
    'dualvol': polytopes.dualvol_value,
    'dualvol-fn': polytopes.dualvol_function,
    'adjoint': polytopes.adjoint,
    'fan': polytopes.fan_value,
    'check-integral': polytopes.check_integral,
    'mixedvol': sequences.mixed_volume,
    'verify-subdivision': sequences.verify_subdivision,
    'verify-cayley': sequences.verify_cayley,
    'subdivide': sequences.subdivide,
    'evol': sequences.hyperplane_volume,
    'genperm': families.genperm,
    'permutohedron-cell': families.permutohedron_cell,
    'associahedron': families.associahedron,
    'amplitude': families.amplitude,
    'zonotope': families.zonotope,
    'split': families.split,
}


def run(args, config, stream=None):
    """Run the selected command, returns the exit status."""
    meta = {
        'command': args.command,
        'seed': config['random']['seed'],
        'version': __version__
    }
    return middleware.run_guarded(
        HANDLERS[args.command], args, config, meta, stream
    )
