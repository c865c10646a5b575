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

"""JSON codecs for the exact objects exchanged by the command line."""

import json

import jsonschema

from . import affine
from . import dualvol
from . import exactnum
from . import geometry
from . import mixed
from . import symfun
from .exactnum import format_rational, parse_rational
from .symfun import LinearForm, RationalFunction, VariableTable


RATIONAL = {
    'type': ['string', 'integer'],
    'pattern': r'^-?[0-9]+(/[0-9]+)?$',
    'description': 'Exact rational, "p/q" or "p", sign on the numerator.'
}

VECTOR = {
    'type': 'array',
    'items': RATIONAL
}

LINEAR_FORM = {
    'type': 'object',
    'properties': {
        'constant': RATIONAL,
        'coeffs': {
            'type': 'object',
            'patternProperties': {'.*': RATIONAL}
        }
    },
    'additionalProperties': False,
    'required': ['constant', 'coeffs']
}

TERM = {
    'type': 'object',
    'properties': {
        'coeff': RATIONAL,
        'factors': {'type': 'array', 'items': LINEAR_FORM},
        'numerator': {'type': 'array', 'items': LINEAR_FORM}
    },
    'additionalProperties': False,
    'required': ['coeff', 'factors']
}

MONOMIAL_TERM = {
    'type': 'object',
    'properties': {
        'coeff': RATIONAL,
        'monomial': {
            'type': 'object',
            'patternProperties': {'.*': {'type': 'integer', 'minimum': 0}}
        }
    },
    'additionalProperties': False,
    'required': ['coeff', 'monomial']
}

POLYNOMIAL = {
    'type': 'object',
    'properties': {
        'variables': {'type': 'array', 'items': {'type': 'string'}},
        'terms': {'type': 'array', 'items': MONOMIAL_TERM}
    },
    'additionalProperties': False,
    'required': ['variables', 'terms']
}

RATIONAL_FUNCTION = {
    'type': 'object',
    'properties': {
        'variables': {'type': 'array', 'items': {'type': 'string'}},
        'terms': {'type': 'array', 'items': TERM},
        'normal': {
            'type': 'object',
            'properties': {
                'numerator': {'type': 'array', 'items': MONOMIAL_TERM},
                'denominator': {
                    'type': 'array',
                    'items': {
                        'type': 'object',
                        'properties': {
                            'factor': LINEAR_FORM,
                            'mult': {'type': 'integer', 'minimum': 1}
                        },
                        'additionalProperties': False,
                        'required': ['factor', 'mult']
                    }
                }
            },
            'required': ['numerator', 'denominator']
        }
    },
    'additionalProperties': False,
    'required': ['terms']
}

POLYTOPE = {
    'type': 'object',
    'properties': {
        'dim': {'type': 'integer', 'minimum': 1},
        'vertices': {'type': 'array', 'items': VECTOR, 'minItems': 1},
        'level': RATIONAL
    },
    'additionalProperties': False,
    'required': ['dim', 'vertices']
}

FAN = {
    'type': 'object',
    'properties': {
        'dim': {'type': 'integer', 'minimum': 1},
        'rays': {'type': 'array', 'items': VECTOR},
        'cones': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {'type': 'integer', 'minimum': 0}
            }
        },
        'pure_dim': {'type': 'integer', 'minimum': 0}
    },
    'additionalProperties': False,
    'required': ['dim', 'rays', 'cones']
}

SUPPORT_DATA = {
    'type': 'object',
    'properties': {
        'fan': FAN,
        'values': VECTOR
    },
    'additionalProperties': False,
    'required': ['fan', 'values']
}

CONE = {
    'type': 'object',
    'properties': {
        'generators': {'type': 'array', 'items': VECTOR, 'minItems': 1}
    },
    'additionalProperties': False,
    'required': ['generators']
}

SEQUENCE = {
    'type': 'object',
    'properties': {
        'dim': {'type': 'integer', 'minimum': 1},
        'parts': {'type': 'array', 'items': POLYTOPE, 'minItems': 1}
    },
    'additionalProperties': False,
    'required': ['dim', 'parts']
}

SUBDIVISION = {
    'type': 'object',
    'properties': {
        'cells': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {
                    'type': 'array',
                    'items': {'type': 'integer', 'minimum': 0},
                    'minItems': 1
                }
            }
        }
    },
    'additionalProperties': False,
    'required': ['cells']
}

HEIGHTS = {
    'type': 'object',
    'properties': {
        'heights': {'type': 'array', 'items': VECTOR}
    },
    'additionalProperties': False,
    'required': ['heights']
}

GENERATORS = {
    'type': 'object',
    'properties': {
        'generators': {'type': 'array', 'items': VECTOR, 'minItems': 1}
    },
    'additionalProperties': False,
    'required': ['generators']
}

TILING = {
    'type': 'object',
    'properties': {
        'tiling': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {'type': 'string', 'enum': ['+', '-', '0']}
            }
        }
    },
    'additionalProperties': False,
    'required': ['tiling']
}

CELL_PART = {
    'oneOf': [
        {'type': 'string', 'pattern': '^[1-9]+$'},
        {
            'type': 'array',
            'items': {'type': 'integer', 'minimum': 1},
            'minItems': 1
        }
    ]
}

GENPERM_CELLS = {
    'type': 'object',
    'properties': {
        'n': {'type': 'integer', 'minimum': 1},
        'cells': {
            'type': 'array',
            'items': {'type': 'array', 'items': CELL_PART},
            'minItems': 1
        }
    },
    'additionalProperties': False,
    'required': ['cells']
}


def read_json(path, schema):
    """Load a JSON file and validate it against `schema`."""
    with open(path) as f:
        data = json.load(f)
    jsonschema.validate(data, schema)
    return data


def dump_vector(v):
    return [format_rational(a) for a in v]


def load_vector(data):
    return exactnum.vector(data)


def dump_form(form):
    return {
        'constant': format_rational(form.constant),
        'coeffs': {
            name: format_rational(value)
            for name, value in sorted(form.coeffs.items())
        }
    }


def load_form(data):
    return LinearForm(
        parse_rational(data['constant']),
        {name: parse_rational(v) for name, v in data['coeffs'].items()}
    )


def dump_polynomial(poly):
    names = poly.table.names
    terms = []
    for monom, coeff in sorted(poly.terms().items(), reverse=True):
        terms.append({
            'coeff': format_rational(coeff),
            'monomial': {
                name: exp for name, exp in zip(names, monom) if exp
            }
        })
    return {'variables': list(names), 'terms': terms}


def _load_monomials(table, items):
    terms = {}
    for item in items:
        monom = [0] * len(table)
        for name, exp in item['monomial'].items():
            try:
                monom[table.index(name)] = exp
            except KeyError as ex:
                raise symfun.VariableTableMismatch(
                    'unknown variable %s' % (name,)
                ) from ex
        monom = tuple(monom)
        terms[monom] = terms.get(monom, 0) + parse_rational(item['coeff'])
    return terms


def load_polynomial(data):
    jsonschema.validate(data, POLYNOMIAL)
    table = VariableTable(data['variables'])
    return symfun.SparsePolynomial.from_terms(
        table, _load_monomials(table, data['terms'])
    )


def dump_function(function, normal=False):
    """RationalFunction record; `normal` adds the common-denominator form."""
    terms = []
    for term in function.terms:
        record = {
            'coeff': format_rational(term.coeff),
            'factors': [dump_form(form) for form in term.denominator]
        }
        if term.numerator:
            record['numerator'] = [dump_form(form) for form in term.numerator]
        terms.append(record)
    result = {'variables': list(function.table.names), 'terms': terms}
    if normal:
        numerator, denominator = symfun.rf_normalize(function)
        result['normal'] = {
            'numerator': dump_polynomial(numerator)['terms'],
            'denominator': [
                {'factor': dump_form(form), 'mult': count}
                for form, count in denominator
            ]
        }
    return result


def load_function(data, table=None):
    """RationalFunction from its record.

    Without a `variables` list the table is the sorted set of names used.
    """
    jsonschema.validate(data, RATIONAL_FUNCTION)
    terms = []
    names = set()
    for record in data['terms']:
        den = tuple(load_form(form) for form in record['factors'])
        num = tuple(load_form(form) for form in record.get('numerator', ()))
        for form in den + num:
            names.update(form.variables())
        terms.append((parse_rational(record['coeff']), num, den))
    if table is None:
        table = VariableTable(data.get('variables') or sorted(names))
    unknown = names - set(table.names)
    if unknown:
        raise symfun.VariableTableMismatch(
            'variables outside the table: %s' % (', '.join(sorted(unknown)),)
        )
    return RationalFunction(table, terms)


def _check_dim(dim, vectors, what):
    for v in vectors:
        if len(v) != dim:
            raise exactnum.DimensionError(
                '%s of dimension %d, expected %d' % (what, len(v), dim)
            )


def load_polytope(data):
    jsonschema.validate(data, POLYTOPE)
    vertices = [load_vector(v) for v in data['vertices']]
    _check_dim(data['dim'], vertices, 'vertex')
    return geometry.Polytope(vertices, data['dim'])


def load_affine_polytope(data):
    """Polytope record with a `level` on <y, 1> = level."""
    polytope = load_polytope(data)
    if 'level' not in data:
        level = affine.level_of(polytope)
        if level is None:
            raise affine.LevelMismatch('vertices are not on one level')
    else:
        level = parse_rational(data['level'])
    return affine.AffinePolytope(polytope, level)


def dump_polytope(polytope, level=None):
    result = {
        'dim': polytope.dim,
        'vertices': [dump_vector(v) for v in polytope.vertices]
    }
    if level is not None:
        result['level'] = format_rational(level)
    return result


def load_fan(data):
    jsonschema.validate(data, FAN)
    rays = [load_vector(r) for r in data['rays']]
    _check_dim(data['dim'], rays, 'ray')
    fan = geometry.Fan(data['dim'], rays, data['cones'], data.get('pure_dim'))
    fan.check()
    return fan


def dump_fan(fan):
    return {
        'dim': fan.dim,
        'rays': [dump_vector(r) for r in fan.rays],
        'cones': [list(cone) for cone in fan.cones],
        'pure_dim': fan.pure_dim
    }


def load_support_data(data):
    jsonschema.validate(data, SUPPORT_DATA)
    fan = load_fan(data['fan'])
    values = [parse_rational(v) for v in data['values']]
    return dualvol.SupportData(fan, values)


def load_cone_generators(data):
    jsonschema.validate(data, CONE)
    return [load_vector(g) for g in data['generators']]


def load_sequence(data):
    jsonschema.validate(data, SEQUENCE)
    parts = [load_polytope(part) for part in data['parts']]
    for part in parts:
        if part.dim != data['dim']:
            raise exactnum.DimensionError('part of a different dimension')
    return mixed.MinkowskiSequence(parts)


def dump_sequence(seq):
    return {'dim': seq.dim, 'parts': [dump_polytope(p) for p in seq]}


def load_subdivision(seq, data):
    jsonschema.validate(data, SUBDIVISION)
    return mixed.MixedSubdivision.from_indices(seq, data['cells'])


def dump_subdivision(seq, sub):
    return {'cells': sub.to_indices(seq)}


def load_heights(data):
    jsonschema.validate(data, HEIGHTS)
    return [[parse_rational(h) for h in row] for row in data['heights']]


def dump_heights(heights):
    return {'heights': [[format_rational(h) for h in row] for row in heights]}


def load_generators(data):
    jsonschema.validate(data, GENERATORS)
    return [load_vector(g) for g in data['generators']]


_SIGNS = {'+': 1, '-': -1, '0': 0}


def load_tiling(data):
    jsonschema.validate(data, TILING)
    return [tuple(_SIGNS[s] for s in signs) for signs in data['tiling']]


def dump_tiling(tiling):
    symbols = {value: key for key, value in _SIGNS.items()}
    return {'tiling': [[symbols[s] for s in signs] for signs in tiling]}


def load_genperm_cells(data):
    """`(n, cells)`; parts are digit strings like "23" or integer lists."""
    jsonschema.validate(data, GENPERM_CELLS)
    cells = []
    for cell in data['cells']:
        cells.append(tuple(
            tuple(int(c) for c in part) if isinstance(part, str)
            else tuple(part)
            for part in cell
        ))
    return data.get('n'), cells


def parse_vector_argument(text):
    """Comma separated rationals from the command line."""
    return exactnum.vector(
        parse_rational(item) for item in text.split(',') if item.strip()
    )
