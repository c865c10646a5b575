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


import argparse

from . import schemas
from . import utils


COMMANDS = (
    'dualvol', 'dualvol-fn', 'adjoint', 'fan', 'mixedvol',
    'verify-subdivision', 'verify-cayley', 'subdivide', 'evol', 'genperm',
    'permutohedron-cell', 'associahedron', 'amplitude', 'zonotope', 'split',
    'check-integral'
)


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError('expected a positive integer')
    return number


def _add_commands(parser):
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    sub = commands.add_parser('dualvol', help='dual volume of a polytope')
    sub.add_argument('--polytope', required=True, help='polytope JSON file')

    sub = commands.add_parser(
        'dualvol-fn', help='dual volume function Vol^_z of a polytope'
    )
    sub.add_argument('--polytope', required=True, help='polytope JSON file')
    sub.add_argument(
        '--canonical', action='store_true',
        help='report it as the canonical form of the polytope'
    )

    sub = commands.add_parser('adjoint', help='adjoint polynomial')
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument(
        '--polytope', help='polytope JSON file, the cone is C(P)^*'
    )
    source.add_argument('--cone', help='cone generators JSON file')

    sub = commands.add_parser('fan', help='f_fan of numeric support data')
    sub.add_argument('--support', required=True, help='support data JSON file')

    sub = commands.add_parser('mixedvol', help='dual mixed volume')
    sub.add_argument('--seq', required=True, help='sequence JSON file')
    sub.add_argument(
        '--with-z', action='store_true',
        help='keep the translation variables z'
    )

    sub = commands.add_parser(
        'verify-subdivision', help='validate a mixed subdivision and '
        'check additivity of the dual mixed volume'
    )
    sub.add_argument('--seq', required=True, help='sequence JSON file')
    sub.add_argument('--sub', required=True, help='subdivision JSON file')
    sub.add_argument(
        '--hyperplane', action='store_true',
        help='parts lie on <y, 1> = 1, use the hyperplane variant'
    )

    sub = commands.add_parser('verify-cayley', help='check the Cayley trick')
    sub.add_argument('--seq', required=True, help='sequence JSON file')

    sub = commands.add_parser(
        'subdivide', help='regular fine mixed subdivision from a lifting'
    )
    sub.add_argument('--seq', required=True, help='sequence JSON file')
    sub.add_argument('--heights', help='lifting heights JSON file')
    sub.add_argument(
        '--hyperplane', action='store_true',
        help='parts lie on <y, 1> = 1, subdivide in the hyperplane'
    )

    sub = commands.add_parser(
        'evol', help='hyperplane dual (mixed) volume'
    )
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument('--polytope', help='polytope JSON file with level')
    source.add_argument('--seq', help='sequence JSON file on level 1')

    for name, text in (
            ('genperm', 'generalized permutohedron closed form'),
            ('associahedron', 'associahedron closed form'),
            ('amplitude', 'planar phi^3 amplitude')):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('--n', type=_positive_int, required=True)
        if name != 'amplitude':
            sub.add_argument(
                '--verify', action='store_true',
                help='cross-check against the geometric computation'
            )

    sub = commands.add_parser(
        'permutohedron-cell', help='spanning-tree cell formula'
    )
    sub.add_argument('--n', type=_positive_int, help='number of coordinates')
    sub.add_argument('--J', dest='cells', required=True, help='cells JSON file')
    sub.add_argument(
        '--verify', action='store_true',
        help='check the cells against the closed form and the sum identities'
    )

    sub = commands.add_parser('zonotope', help='zonotope dual mixed volume')
    sub.add_argument('--generators', required=True, help='generators JSON file')
    sub.add_argument('--split-dir', help='direction p, e.g. 1,0')
    sub.add_argument('--tiling', help='sign vector tiling JSON file')

    sub = commands.add_parser('split', help='deletion-contraction split')
    sub.add_argument('--polytope', required=True, help='polytope JSON file')
    sub.add_argument('--dir', required=True, help='direction p, e.g. 1,0')

    sub = commands.add_parser(
        'check-integral', help='compare with numeric integration'
    )
    sub.add_argument('--polytope', required=True, help='polytope JSON file')
    sub.add_argument('--z', required=True, help='evaluation point, e.g. 1/2,0')
    sub.add_argument('--tolerance', type=float, help='relative tolerance')


def parse(args=None):
    """Parse command line arguments and return resulting namespace."""
    parser = argparse.ArgumentParser(
        prog='pdualvol',
        description='pDualVol - exact dual volumes and dual mixed volumes.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=utils.config_description(schemas.CONFIG)
    )
    parser.add_argument('--config', type=str, help='config file')
    parser.add_argument(
        '--log-level', type=lambda val: str(val).lower(),
        choices={'debug', 'info', 'warning', 'error', 'fatal'},
        default='warning',
        help='output log level'
    )
    parser.add_argument(
        '--log-format',
        default=(
            '[%(process)d] [%(asctime)s] [%(name)s] [%(levelname)s] %(message)s'
        ),
        help='log format string'
    )
    parser.add_argument(
        '--set', action='append',
        help=(
            'set config parameter, format is \'config_key=value\', '
            'values are interpreted as python literals, '
            'may appear multiple times'
        )
    )
    parser.add_argument(
        '--seed', type=int, default=None,
        help='seed of all pseudo-random choices (random.seed)'
    )
    parser.add_argument(
        '--threads', type=_positive_int, default=None,
        help='worker threads hint (threads)'
    )
    parser.add_argument(
        '--pretty', action='store_true',
        help='indented JSON output'
    )
    _add_commands(parser)
    return parser.parse_args(args)
