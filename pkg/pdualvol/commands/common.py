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

import collections

from .. import common
from .. import exactnum
from .. import serialization
from .. import symfun


class InvalidRequestData(common.InputError):
    """Command options are invalid - bad vectors, missing sizes etc."""


Response = collections.namedtuple('Response', ('payload', 'verified'))


def respond(payload, verified=None):
    """Handler result; `verified` False turns into exit status 1."""
    return Response(payload, verified)


def equality_options(config):
    return {
        'seed': config['random']['seed'],
        'samples': config['equality']['sample_points'],
        'bound': config['equality']['sample_bound']
    }


def lifting_options(config):
    lifting = config['lifting']
    return {
        'height_range': (lifting['height_min'], lifting['height_max']),
        'max_retries': lifting['max_retries']
    }


def function_payload(function, normal=False):
    return {
        'function': serialization.dump_function(function, normal),
        'rendered': symfun.rf_render(function)
    }


def vector_option(text, name, dim=None):
    try:
        vector = serialization.parse_vector_argument(text)
    except exactnum.InvalidNumber as ex:
        raise InvalidRequestData('invalid --%s: %s' % (name, ex)) from ex
    if not vector or dim is not None and len(vector) != dim:
        raise InvalidRequestData(
            '--%s must have %s entries' % (name, dim or 'some')
        )
    return vector


def load_polytope(path):
    return serialization.load_polytope(
        serialization.read_json(path, serialization.POLYTOPE)
    )


def load_sequence(path):
    return serialization.load_sequence(
        serialization.read_json(path, serialization.SEQUENCE)
    )
