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


def nullable(schema):
    return {
        'anyOf': [
            {'type': 'null'},
            schema
        ]
    }


def fixed_object(properties):
    assert isinstance(properties, dict)
    return {
        'type': 'object',
        'properties': properties,
        'additionalProperties': False,
        'required': list(properties.keys())
    }


RANDOM = fixed_object(
    {
        'seed': {
            'type': 'integer',
            'minimum': 0,
            'description': (
                'Seed of equality spot checks and lifting heights. '
                'Overridden by --seed.'
            )
        }
    }
)


EQUALITY = fixed_object(
    {
        'sample_points': {
            'type': 'integer',
            'minimum': 0,
            'description': (
                'Random points evaluated before exact reduction '
                'of a rational function identity.'
            )
        },
        'sample_bound': {
            'type': 'integer',
            'minimum': 1,
            'description': (
                'Numerators and denominators of sample coordinates '
                'are drawn from [-bound, bound].'
            )
        }
    }
)


LIFTING = fixed_object(
    {
        'height_min': {
            'type': 'integer',
            'description': 'Smallest pseudo-random lifting height.'
        },
        'height_max': {
            'type': 'integer',
            'description': 'Largest pseudo-random lifting height.'
        },
        'max_retries': {
            'type': 'integer',
            'minimum': 1,
            'description': (
                'Liftings tried before giving up on a fine subdivision.'
            )
        }
    }
)


INTEGRAL = fixed_object(
    {
        'tolerance': {
            'type': 'number',
            'exclusiveMinimum': True,
            'minimum': 0,
            'description': (
                'Relative tolerance of the numeric integral cross-check.'
            )
        }
    }
)


OUTPUT = fixed_object(
    {
        'indent': nullable({
            'type': 'integer',
            'minimum': 0,
            'description': 'JSON indentation, null for compact output.'
        })
    }
)


CONFIG = fixed_object(
    {
        'equality': EQUALITY,
        'integral': INTEGRAL,
        'lifting': LIFTING,
        'output': OUTPUT,
        'random': RANDOM,
        'threads': {
            'type': 'integer',
            'minimum': 1,
            'description': (
                'Worker threads for tree and permutation sums. '
                'Overridden by --threads.'
            )
        }
    }
)
