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

"""Exact symbolic rational functions built from linear forms.

A `RationalFunction` is kept as a sum of terms, every term being a rational
coefficient times a product of linear forms divided by another product of
linear forms. Factors are canonical (monic in the variable order of the
owning `VariableTable`), so equal factors compare equal across terms.
Expanded numerators are handled by sympy sparse polynomial rings over QQ.
"""

import collections
import logging
import random

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from . import common
from .exactnum import ZERO, Rational, det, format_rational


LOGGER_NAME = 'pdualvol.symfun'

log = logging.getLogger(LOGGER_NAME)


class VariableTableMismatch(common.InputError):
    """Operands live over different variable tables."""


class PoleError(common.PreconditionError):
    """Evaluation point lies on a denominator factor."""


class DegenerateSubstitution(common.PreconditionError):
    """Substitution sends a denominator factor to zero identically."""


def to_qq(value):
    value = Rational(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Rational(int(value.numerator), int(value.denominator))


class VariableTable(object):
    """Ordered set of variable names."""

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError('variable table must not be empty')
        if len(set(names)) != len(names):
            raise ValueError('duplicate variable names')
        self._names = names
        self._index = {name: k for k, name in enumerate(names)}
        self._ring = None

    @property
    def names(self):
        """Variable names in table order."""
        return self._names

    @property
    def ring(self):
        """Polynomial ring QQ[names] with lex order."""
        if self._ring is None:
            self._ring = ring(self._names, QQ, lex)[0]
        return self._ring

    def index(self, name):
        return self._index[name]

    def extend(self, names):
        return VariableTable(self._names + tuple(names))

    def __contains__(self, name):
        return name in self._index

    def __iter__(self):
        return iter(self._names)

    def __len__(self):
        return len(self._names)

    def __eq__(self, other):
        return isinstance(other, VariableTable) and self._names == other._names

    def __hash__(self):
        return hash(self._names)

    def __repr__(self):
        return 'VariableTable(%s)' % (', '.join(self._names),)


class LinearForm(object):
    """Affine-linear form `constant + sum(coeffs[name] * name)`."""

    __slots__ = ('constant', 'coeffs', '_key')

    def __init__(self, constant=0, coeffs=None):
        self.constant = Rational(constant)
        self.coeffs = {
            name: Rational(value)
            for name, value in (coeffs or {}).items()
            if value != 0
        }
        self._key = (self.constant, tuple(sorted(self.coeffs.items())))

    @classmethod
    def variable(cls, name, coeff=1):
        return cls(0, {name: coeff})

    @classmethod
    def combination(cls, vector, names, constant=0):
        """Form `constant + sum(vector[k] * names[k])`."""
        return cls(constant, dict(zip(names, vector)))

    def is_constant(self):
        return not self.coeffs

    def is_zero(self):
        return not self.coeffs and self.constant == 0

    def variables(self):
        return set(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, LinearForm):
            return LinearForm(self.constant + other, self.coeffs)
        coeffs = dict(self.coeffs)
        for name, value in other.coeffs.items():
            coeffs[name] = coeffs.get(name, ZERO) + value
        return LinearForm(self.constant + other.constant, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = Rational(c)
        return LinearForm(
            self.constant * c,
            {name: value * c for name, value in self.coeffs.items()}
        )

    def evaluate(self, point):
        total = self.constant
        for name, value in self.coeffs.items():
            total += value * point[name]
        return total

    def substitute(self, mapping):
        """Replace variables by linear forms, unmapped ones stay."""
        result = LinearForm(self.constant)
        for name, value in self.coeffs.items():
            image = mapping.get(name)
            if image is None:
                image = LinearForm.variable(name)
            elif not isinstance(image, LinearForm):
                image = LinearForm(image)
            result = result + image.scaled(value)
        return result

    def leading_variable(self, table):
        names = [name for name in table if name in self.coeffs]
        return names[0] if names else None

    def canonical(self, table):
        """Split into `(scale, monic_form)` with `scale * monic == self`.

        The monic form has coefficient 1 at its first variable in table
        order. Constant forms return `(constant, None)`.
        """
        missing = set(self.coeffs) - set(table.names)
        if missing:
            raise VariableTableMismatch(
                'variables %s are not in %r' % (sorted(missing), table)
            )
        lead = self.leading_variable(table)
        if lead is None:
            return self.constant, None
        scale = self.coeffs[lead]
        return scale, self.scaled(1 / scale)

    def sort_key(self, table):
        return (
            tuple(self.coeffs.get(name, ZERO) for name in table),
            self.constant
        )

    def to_poly(self, table):
        r = table.ring
        poly = r.ground_new(to_qq(self.constant))
        for name, value in self.coeffs.items():
            poly += r.gens[table.index(name)] * to_qq(value)
        return poly

    def render(self, table=None):
        names = table.names if table is not None else sorted(self.coeffs)
        parts = []
        for name in names:
            value = self.coeffs.get(name)
            if not value:
                continue
            sign = '-' if value < 0 else '+'
            magnitude = abs(value)
            text = name if magnitude == 1 else '%s*%s' % (
                format_rational(magnitude), name
            )
            parts.append((sign, text))
        if self.constant or not parts:
            sign = '-' if self.constant < 0 else '+'
            parts.append((sign, format_rational(abs(self.constant))))
        first_sign, first_text = parts[0]
        rendered = ('-' if first_sign == '-' else '') + first_text
        for sign, text in parts[1:]:
            rendered += ' %s %s' % (sign, text)
        return rendered

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return 'LinearForm(%s)' % (self.render(),)


Term = collections.namedtuple('Term', ('coeff', 'numerator', 'denominator'))


class RationalFunction(object):
    """Sum of `coeff * prod(numerator) / prod(denominator)` terms.

    Terms are canonicalized on construction: constant factors fold into the
    coefficient, factors become monic, factors shared by numerator and
    denominator cancel and terms with equal factor lists merge. Term order
    is the order of first appearance.
    """

    def __init__(self, table, terms=()):
        self.table = table
        merged = collections.OrderedDict()
        for raw in terms:
            term = self._canonical_term(raw)
            if term is None:
                continue
            key = (term.numerator, term.denominator)
            merged[key] = merged.get(key, ZERO) + term.coeff
        self.terms = tuple(
            Term(coeff, num, den)
            for (num, den), coeff in merged.items()
            if coeff != 0
        )
        self._normal = None

    def _canonical_term(self, raw):
        if isinstance(raw, Term):
            coeff, numerator, denominator = raw
        else:
            coeff, numerator, denominator = (tuple(raw) + ((), ()))[:3]
        coeff = Rational(coeff)
        num, den = [], []
        for form in numerator:
            scale, monic = form.canonical(self.table)
            coeff *= scale
            if monic is not None:
                num.append(monic)
        for form in denominator:
            scale, monic = form.canonical(self.table)
            if scale == 0:
                raise PoleError(
                    'identically zero denominator factor',
                    certificate=form.render()
                )
            coeff /= scale
            if monic is not None:
                den.append(monic)
        if coeff == 0:
            return None
        num_count = collections.Counter(num)
        den_count = collections.Counter(den)
        common_count = num_count & den_count
        num_count -= common_count
        den_count -= common_count
        key = lambda form: form.sort_key(self.table)
        return Term(
            coeff,
            tuple(sorted(num_count.elements(), key=key)),
            tuple(sorted(den_count.elements(), key=key))
        )

    @classmethod
    def zero(cls, table):
        return cls(table)

    @classmethod
    def constant(cls, table, value):
        return cls(table, [(value, (), ())])

    def is_trivially_zero(self):
        """No terms at all - exact zero without normalization."""
        return not self.terms

    def factors(self):
        """Distinct denominator factors over all terms."""
        seen = collections.OrderedDict()
        for term in self.terms:
            for form in term.denominator:
                seen[form] = None
        return tuple(seen)

    def __add__(self, other):
        return rf_add(self, other)

    def __sub__(self, other):
        return rf_add(self, rf_neg(other))

    def __neg__(self):
        return rf_neg(self)

    def __repr__(self):
        return 'RationalFunction(%s)' % (rf_render(self),)


class SparsePolynomial(object):
    """Polynomial over QQ in the variables of a table."""

    def __init__(self, table, element=None):
        self.table = table
        self.element = table.ring.zero if element is None else element

    @classmethod
    def from_terms(cls, table, terms):
        poly = table.ring.from_dict(
            {tuple(monom): to_qq(coeff) for monom, coeff in terms.items()}
        )
        return cls(table, poly)

    @classmethod
    def from_form(cls, table, form):
        return cls(table, form.to_poly(table))

    def terms(self):
        """Mapping exponent tuple -> Fraction."""
        return {
            tuple(monom): from_qq(coeff)
            for monom, coeff in self.element.terms()
        }

    def is_zero(self):
        return not self.element

    def total_degree(self):
        if not self.element:
            return -1
        return max(sum(monom) for monom in self.element.monoms())

    def evaluate(self, point):
        values = [Rational(point[name]) for name in self.table]
        total = ZERO
        for monom, coeff in self.terms().items():
            value = coeff
            for base, exp in zip(values, monom):
                if exp:
                    value *= base ** exp
            total += value
        return total

    def _wrap(self, element):
        return SparsePolynomial(self.table, element)

    def _check(self, other):
        if other.table != self.table:
            raise VariableTableMismatch('polynomials over different tables')

    def __add__(self, other):
        self._check(other)
        return self._wrap(self.element + other.element)

    def __sub__(self, other):
        self._check(other)
        return self._wrap(self.element - other.element)

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return self._wrap(self.element * other.element)
        return self._wrap(self.element * to_qq(other))

    def __neg__(self):
        return self._wrap(-self.element)

    def __eq__(self, other):
        return (
            isinstance(other, SparsePolynomial)
            and self.table == other.table
            and self.element == other.element
        )

    def __hash__(self):
        return hash((self.table, tuple(sorted(self.terms().items()))))

    def render(self):
        if not self.element:
            return '0'
        return str(self.element.as_expr())

    def __repr__(self):
        return 'SparsePolynomial(%s)' % (self.render(),)


def _check_tables(a, b):
    if a.table != b.table:
        raise VariableTableMismatch(
            'different variable tables: %r vs %r' % (a.table, b.table)
        )


def rf_add(a, b):
    _check_tables(a, b)
    return RationalFunction(a.table, a.terms + b.terms)


def rf_sum(table, functions):
    terms = []
    for function in functions:
        if function.table != table:
            raise VariableTableMismatch('summand over a different table')
        terms.extend(function.terms)
    return RationalFunction(table, terms)


def rf_scale(a, c):
    c = Rational(c)
    return RationalFunction(
        a.table, [Term(term.coeff * c, term.numerator, term.denominator)
                  for term in a.terms]
    )


def rf_neg(a):
    return rf_scale(a, -1)


def rf_multiply(a, coeff=1, numerator=(), denominator=()):
    """Multiply every term by `coeff * prod(numerator) / prod(denominator)`."""
    numerator = tuple(numerator)
    denominator = tuple(denominator)
    return RationalFunction(
        a.table,
        [
            (term.coeff * Rational(coeff),
             term.numerator + numerator,
             term.denominator + denominator)
            for term in a.terms
        ]
    )


def _power_product(polys, counts):
    r = None
    for form, count in counts.items():
        for _ in range(count):
            r = polys[form] if r is None else r * polys[form]
    return r


def _poly_cache(table):
    cache = {}

    def get(form):
        poly = cache.get(form)
        if poly is None:
            poly = cache[form] = form.to_poly(table)
        return poly
    return get


def rf_normalize(a):
    """Single fraction over the common denominator.

    The denominator is the product of the distinct canonical factors, each
    at the maximal multiplicity it has in any term. The numerator is
    expanded exactly, no cancellation takes place. Returns
    `(SparsePolynomial, ((LinearForm, multiplicity), ...))`, cached.
    """
    if a._normal is not None:
        return a._normal
    table = a.table
    r = table.ring
    get = _poly_cache(table)
    common_den = collections.Counter()
    for term in a.terms:
        common_den |= collections.Counter(term.denominator)
    numerator = r.zero
    for term in a.terms:
        missing = common_den - collections.Counter(term.denominator)
        value = r.ground_new(to_qq(term.coeff))
        for form in term.numerator:
            value *= get(form)
        for form, count in missing.items():
            value *= get(form) ** count
        numerator += value
    if not numerator:
        result = (SparsePolynomial(table), ())
    else:
        ordered = sorted(
            common_den.items(), key=lambda item: item[0].sort_key(table)
        )
        result = (SparsePolynomial(table, numerator), tuple(ordered))
    a._normal = result
    return result


def _cancel(numerator, denominator, get):
    if not numerator:
        return numerator, collections.Counter()
    for form in list(denominator):
        divisor = get(form)
        while denominator[form] > 0:
            quotient, remainder = numerator.div(divisor)
            if remainder:
                break
            numerator = quotient
            denominator[form] -= 1
    return numerator, +denominator


def rf_reduce(a):
    """Fully reduced single fraction.

    Terms are added one by one, every denominator factor dividing the
    running numerator is cancelled right away. Since all denominator
    factors are linear the result is in lowest terms, with monic factors it
    is unique. Returns the same shape as `rf_normalize`.
    """
    table = a.table
    r = table.ring
    get = _poly_cache(table)
    numerator = r.zero
    denominator = collections.Counter()
    for term in a.terms:
        term_den = collections.Counter(term.denominator)
        merged = denominator | term_den
        value = r.ground_new(to_qq(term.coeff))
        for form in term.numerator:
            value *= get(form)
        extra = merged - term_den
        for form, count in extra.items():
            value *= get(form) ** count
        grow = merged - denominator
        for form, count in grow.items():
            numerator *= get(form) ** count
        numerator += value
        numerator, denominator = _cancel(numerator, merged, get)
    ordered = sorted(
        denominator.items(), key=lambda item: item[0].sort_key(table)
    )
    return SparsePolynomial(table, numerator), tuple(ordered)


def _point_dict(table, point):
    if isinstance(point, dict):
        missing = [name for name in table if name not in point]
        if missing:
            raise ValueError('unbound variables: %s' % (', '.join(missing),))
        return {name: Rational(point[name]) for name in table}
    point = tuple(point)
    if len(point) != len(table):
        raise ValueError('point does not match variable table')
    return {name: Rational(value) for name, value in zip(table, point)}


def rf_eval(a, point):
    """Exact value at a point (dict by name or sequence in table order)."""
    values = _point_dict(a.table, point)
    total = ZERO
    for term in a.terms:
        value = term.coeff
        for form in term.numerator:
            value *= form.evaluate(values)
        for form in term.denominator:
            den = form.evaluate(values)
            if den == 0:
                raise PoleError(
                    'point lies on the pole of %s' % (form.render(a.table),),
                    certificate=form.render(a.table)
                )
            value /= den
        total += value
    return total


def rf_substitute(a, mapping, target=None):
    """Substitute variables by linear forms over the `target` table.

    Unmapped variables are kept and must belong to `target`.
    """
    target = target or a.table
    terms = []
    for term in a.terms:
        num = tuple(form.substitute(mapping) for form in term.numerator)
        den = tuple(form.substitute(mapping) for form in term.denominator)
        for image, form in zip(den, term.denominator):
            if image.is_zero():
                raise DegenerateSubstitution(
                    'factor %s vanishes identically' % (form.render(a.table),),
                    certificate=form.render(a.table)
                )
        terms.append((term.coeff, num, den))
    return RationalFunction(target, terms)


def rf_retable(a, target):
    """Same function re-expressed over another table."""
    return rf_substitute(a, {}, target)


def _random_point(table, rng, bound):
    return {
        name: Rational(rng.randint(-bound, bound), rng.randint(1, bound))
        for name in table
    }


def rf_equal(a, b, seed=0, samples=6, bound=997):
    """Exact equality of two rational functions over one table.

    A few seeded random evaluations can refute equality quickly, a positive
    answer always comes from the reduced form of `a - b`.
    """
    _check_tables(a, b)
    rng = random.Random(seed)
    checked = 0
    attempts = 0
    while checked < samples and attempts < 4 * samples:
        attempts += 1
        point = _random_point(a.table, rng, bound)
        try:
            left = rf_eval(a, point)
            right = rf_eval(b, point)
        except PoleError:
            continue
        checked += 1
        if left != right:
            log.debug('Equality refuted at a sample point')
            return False
    numerator, _ = rf_reduce(rf_add(a, rf_neg(b)))
    return numerator.is_zero()


def projective_pullback(a, transform, target=None):
    """Pull a top-degree form back along a projective map.

    `transform` is a (d+1) x (d+1) matrix acting on `(z_1, .., z_d, 1)`:
    the first d rows give the numerators of `z'`, the last row the common
    denominator `e(z)`. The result is `det(M) / e^(d+1) * a(z')` over the
    `target` table (default: the table of `a`), with `a` read in the
    variables of its own table.
    """
    target = target or a.table
    source = a.table.names
    d = len(source)
    rows = [tuple(Rational(v) for v in row) for row in transform]
    if len(rows) != d + 1 or any(len(row) != d + 1 for row in rows):
        raise ValueError('transform must be a %dx%d matrix' % (d + 1, d + 1))
    names = target.names
    if len(names) != d:
        raise VariableTableMismatch('target table has a different size')
    images = [LinearForm.combination(row[:d], names, row[d]) for row in rows]
    denominator = images[d]
    jacobian = det(rows)
    if jacobian == 0:
        raise DegenerateSubstitution('singular projective transform')

    def lift(form):
        lifted = denominator.scaled(form.constant)
        for name, value in form.coeffs.items():
            lifted = lifted + images[source.index(name)].scaled(value)
        return lifted

    terms = []
    for term in a.terms:
        num = [lift(form) for form in term.numerator]
        den = [lift(form) for form in term.denominator]
        for image, form in zip(den, term.denominator):
            if image.is_zero():
                raise DegenerateSubstitution(
                    'factor %s vanishes identically' % (form.render(a.table),)
                )
        power = len(term.denominator) - len(term.numerator) - (d + 1)
        if power > 0:
            num.extend([denominator] * power)
        else:
            den.extend([denominator] * (-power))
        terms.append((term.coeff * jacobian, tuple(num), tuple(den)))
    return RationalFunction(target, terms)


def rf_leading_inverse(a, shift):
    """Limit of `t * a(z + t * shift)` for t -> infinity.

    `shift` maps variable names to rationals. Terms decaying faster than
    1/t drop out, a term decaying slower makes the limit diverge.
    """
    terms = []
    for term in a.terms:
        exponent = 0
        num, den, coeff = [], [], term.coeff
        for form in term.numerator:
            slope = sum(
                (value * Rational(shift.get(name, 0))
                 for name, value in form.coeffs.items()), ZERO
            )
            if slope:
                exponent += 1
                coeff *= slope
            else:
                num.append(form)
        for form in term.denominator:
            slope = sum(
                (value * Rational(shift.get(name, 0))
                 for name, value in form.coeffs.items()), ZERO
            )
            if slope:
                exponent -= 1
                coeff /= slope
            else:
                den.append(form)
        if exponent > -1:
            raise common.PreconditionError(
                'limit diverges along the shift',
                certificate=[form.render(a.table) for form in term.denominator]
            )
        if exponent == -1:
            terms.append((coeff, tuple(num), tuple(den)))
    return RationalFunction(a.table, terms)


def rf_render(a):
    """Stable human readable sum of fractions."""
    if not a.terms:
        return '0'
    table = a.table

    def key(term):
        return (
            tuple(form.sort_key(table) for form in term.denominator),
            tuple(form.sort_key(table) for form in term.numerator)
        )

    rendered = []
    for term in sorted(a.terms, key=key):
        coeff = term.coeff
        sign = '-' if coeff < 0 else '+'
        top = [format_rational(abs(coeff).numerator)]
        top.extend('(%s)' % (form.render(table),) for form in term.numerator)
        if top[0] == '1' and len(top) > 1:
            top = top[1:]
        bottom = []
        if abs(coeff).denominator != 1:
            bottom.append(str(abs(coeff).denominator))
        bottom.extend(
            '(%s)' % (form.render(table),) for form in term.denominator
        )
        text = '*'.join(top)
        if bottom:
            text += '/' + (
                bottom[0] if len(bottom) == 1 else '(%s)' % ('*'.join(bottom),)
            )
        rendered.append((sign, text))
    first_sign, first_text = rendered[0]
    result = ('-' if first_sign == '-' else '') + first_text
    for sign, text in rendered[1:]:
        result += ' %s %s' % (sign, text)
    return result
