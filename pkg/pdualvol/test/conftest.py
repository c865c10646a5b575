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

import json
import logging
import pathlib
import random
import sys

import pytest

from pdualvol import geometry
from pdualvol import mixed

from . import helper_polytopes


DATA_DIR = pathlib.Path(__file__).absolute().parent.joinpath('data')


@pytest.fixture(scope='session', autouse=True)
def setup_logging():
    """Session-wide logging setup."""
    root_logger = logging.getLogger()
    # root logger accepts all messages, filter on handlers level
    root_logger.setLevel(logging.DEBUG)
    for handler in [logging.StreamHandler(sys.stdout)]:
        handler.setFormatter(
            logging.Formatter(
                '[%(process)d] [%(asctime)s] '
                '[%(name)s] [%(levelname)s] %(message)s'
            )
        )
        root_logger.addHandler(handler)


@pytest.fixture(scope='function')
def test_log(request):
    logger = logging.getLogger('pytest:' + request.function.__name__)
    # write a single log line to circumvent absence of \n at the end of the test
    # name in 'pytest -sv' output
    logger.info('Logger initialized')
    return logger


@pytest.fixture
def data_file():
    """Path of a JSON fixture in test/data."""
    def factory(name):
        return str(DATA_DIR.joinpath(name))
    return factory


@pytest.fixture
def write_json(tmp_path):
    """Dump an object to a temporary JSON file and return its path."""
    def factory(name, data):
        path = tmp_path.joinpath(name)
        path.write_text(json.dumps(data))
        return str(path)
    return factory


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def random_polytope(rng):
    def factory(dim, max_vertices):
        return helper_polytopes.random_polytope(rng, dim, max_vertices)
    return factory


@pytest.fixture
def quadrilateral():
    """conv((1, 1), (2, 1), (3, -1), (1, -1))."""
    return geometry.Polytope([(1, 1), (2, 1), (3, -1), (1, -1)])


@pytest.fixture
def two_triangles():
    """P1 = conv((1,0), (0,2), (-1,-1)), P2 = conv((0,0), (2,0), (0,2))."""
    return mixed.MinkowskiSequence([
        geometry.Polytope([(1, 0), (0, 2), (-1, -1)]),
        geometry.Polytope([(0, 0), (2, 0), (0, 2)]),
    ])


# vertex indices into the sorted vertex lists of `two_triangles`
TWO_TRIANGLES_CELLS = [
    [[0, 1], [0, 1]],
    [[1], [0, 1, 2]],
    [[0, 1, 2], [0]],
    [[1, 2], [0, 2]],
    [[0, 2], [0, 2]],
]


@pytest.fixture
def two_triangles_subdivision(two_triangles):
    """Fine mixed subdivision of the hexagon P1 + P2 into five cells."""
    return mixed.MixedSubdivision.from_indices(
        two_triangles, TWO_TRIANGLES_CELLS
    )
