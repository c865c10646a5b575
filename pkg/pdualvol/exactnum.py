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

"""Exact rational scalars, vectors and matrices.

Scalars are `fractions.Fraction`, vectors are tuples of fractions and
matrices are tuples of row vectors. Nothing here ever touches floats.
"""

import enum
import fractions
import math

from . import common


Rational = fractions.Fraction

ZERO = Rational(0)
ONE = Rational(1)


class DimensionError(common.InputError):
    """Vector or matrix shapes do not match."""


class InvalidNumber(common.InputError):
    """Value can not be interpreted as an exact rational number."""


class SolveOutcome(enum.Enum):
    """Non-unique outcomes of `solve_linear`."""
    NO_SOLUTION = 'no_solution'
    UNDERDETERMINED = 'underdetermined'


def parse_rational(value):
    """Convert int, Fraction or a 'p/q' string to a Fraction.

    Floats are rejected, exact input is required.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidNumber('inexact value \'%s\'' % (value,))
    if isinstance(value, (int, Rational)):
        return Rational(value)
    if isinstance(value, str):
        try:
            return Rational(value.strip())
        except (ValueError, ZeroDivisionError) as ex:
            raise InvalidNumber('invalid rational \'%s\'' % (value,)) from ex
    raise InvalidNumber('unsupported number type \'%s\'' % (type(value),))


def format_rational(value):
    value = Rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def vector(values):
    return tuple(parse_rational(value) for value in values)


def matrix(rows):
    rows = tuple(vector(row) for row in rows)
    if rows and len({len(row) for row in rows}) != 1:
        raise DimensionError('ragged matrix rows')
    return rows


def zero_vector(dim):
    return (ZERO,) * dim


def unit_vector(dim, index):
    return tuple(ONE if i == index else ZERO for i in range(dim))


def _check_same_length(u, v):
    if len(u) != len(v):
        raise DimensionError(
            'vector dimensions differ: %d vs %d' % (len(u), len(v))
        )


def dot(u, v):
    _check_same_length(u, v)
    return sum((a * b for a, b in zip(u, v)), ZERO)


def add(u, v):
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def vector_sum(vectors, dim):
    total = zero_vector(dim)
    for v in vectors:
        total = add(total, v)
    return total


def is_zero(v):
    return all(a == 0 for a in v)


def primitive(v):
    """Positive multiple of `v` with coprime integer entries."""
    if is_zero(v):
        raise ValueError('zero vector has no primitive multiple')
    lcm = 1
    for a in v:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    ints = [int(a * lcm) for a in v]
    gcd = 0
    for a in ints:
        gcd = math.gcd(gcd, a)
    return tuple(Rational(a, gcd) for a in ints)


def transpose(rows):
    return tuple(zip(*rows))


def det(rows):
    """Determinant by fraction Gaussian elimination."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionError('determinant of a non-square matrix')
    if n == 0:
        return ONE
    work = [list(row) for row in rows]
    result = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        pivot_value = work[col][col]
        result *= pivot_value
        for r in range(col + 1, n):
            factor = work[r][col] / pivot_value
            if factor:
                for c in range(col, n):
                    work[r][c] -= factor * work[col][c]
    return result


def row_reduce(rows, ncols=None):
    """Reduced row echelon form.

    Returns `(rref, pivot_columns)`, zero rows are dropped from `rref`.
    """
    work = [list(row) for row in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(work):
            break
        pivot = next(
            (r for r in range(row, len(work)) if work[r][col] != 0), None
        )
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pivot_value = work[row][col]
        work[row] = [a / pivot_value for a in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    return tuple(tuple(r) for r in work[:row]), tuple(pivots)


def rank(rows):
    if not rows:
        return 0
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows * x = 0}, one vector per free column."""
    rref, pivots = row_reduce(rows, ncols) if rows else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, p in zip(rref, pivots):
            x[p] = -r[f]
        basis.append(tuple(x))
    return tuple(basis)


def solve_linear(a, b):
    """Solve `a * x = b` exactly.

    Returns the unique solution as a vector, or one of the `SolveOutcome`
    members when there is no solution or infinitely many of them.
    """
    if len(a) != len(b):
        raise DimensionError('right-hand side does not match matrix rows')
    ncols = len(a[0]) if a else 0
    augmented = [tuple(row) + (rhs,) for row, rhs in zip(a, b)]
    rref, pivots = row_reduce(augmented, ncols + 1)
    if ncols in pivots:
        return SolveOutcome.NO_SOLUTION
    if len(pivots) < ncols:
        return SolveOutcome.UNDERDETERMINED
    solution = [ZERO] * ncols
    for row, col in zip(rref, pivots):
        solution[col] = row[ncols]
    return tuple(solution)


class SimplexTableau(object):
    """Condensed simplex tableau over the rationals.

    Row i reads `basic_i + sum_j A[i][j] * nonbasic_j = b[i]`, the objective
    `sum_j c[j] * nonbasic_j` is maximized. Variables are integer labels,
    Bland's rule picks the smallest label, so the method never cycles.
    """

    def __init__(self, a, b):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        self.A = [list(row) for row in a]
        self.b = list(b)
        self.c = [ZERO] * self.n
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))

    def pivot(self, i, j):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k != i:
                f = self.A[k][j]
                if not f:
                    continue
                for l in range(self.n):
                    self.A[k][l] = (
                        -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
                    )
                self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self):
        try:
            _, j = min(
                (self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0
            )
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min(
                (self.b[i] / self.A[i][j], self.b_vars[i], i)
                for i in range(self.m)
                if self.A[i][j] > 0
            )
        except ValueError:
            return 'unbounded'
        self.pivot(i, j)
        return 'go_on'

    def bland_primal(self):
        while True:
            ret = self.bland_primal_step()
            if ret in ('optimal', 'unbounded'):
                return ret

    def first_phase_cost(self):
        for j in range(self.n):
            self.c[j] = sum((self.A[i][j] for i in range(self.m)), ZERO)

    def basic_solution(self):
        """Values of the structural variables 0..n-1."""
        values = [ZERO] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                values[var] = self.b[i]
        return values


def _phase_one(a, b):
    """Find x >= 0 with a * x = b, or None."""
    a = [list(row) for row in a]
    b = list(b)
    for i, rhs in enumerate(b):
        if rhs < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -rhs
    tableau = SimplexTableau(a, b)
    tableau.first_phase_cost()
    tableau.bland_primal()
    n = tableau.n
    for i, var in enumerate(tableau.b_vars):
        if var >= n and tableau.b[i] != 0:
            return None
    return tuple(tableau.basic_solution())


def find_feasible_point(dim, equalities=(), inequalities=(),
                        nonnegative=False):
    """Exact LP feasibility.

    `equalities` is a sequence of `(row, rhs)` pairs meaning `row . x = rhs`,
    `inequalities` pairs mean `row . x <= rhs`. Variables are free unless
    `nonnegative` is set. Returns a feasible point or None.
    """
    equalities = list(equalities)
    inequalities = list(inequalities)
    for row, _ in equalities + inequalities:
        if len(row) != dim:
            raise DimensionError('constraint row of wrong dimension')
    nslack = len(inequalities)
    a, b = [], []

    def expand(row):
        row = list(row)
        return row if nonnegative else row + [-v for v in row]

    for row, rhs in equalities:
        a.append(expand(row) + [ZERO] * nslack)
        b.append(Rational(rhs))
    for k, (row, rhs) in enumerate(inequalities):
        slack = [ZERO] * nslack
        slack[k] = ONE
        a.append(expand(row) + slack)
        b.append(Rational(rhs))
    if not a:
        return zero_vector(dim)
    solution = _phase_one(a, b)
    if solution is None:
        return None
    if nonnegative:
        return solution[:dim]
    return tuple(solution[k] - solution[dim + k] for k in range(dim))


def convex_combination(p, points):
    """Coefficients expressing p as a convex combination of points, or None."""
    points = list(points)
    if not points:
        return None
    dim = len(p)
    rows = []
    for k in range(dim):
        rows.append(([pt[k] for pt in points], p[k]))
    rows.append(([ONE] * len(points), ONE))
    return find_feasible_point(len(points), equalities=rows, nonnegative=True)


def is_extreme_point(p, others):
    """True iff p is not a convex combination of `others`."""
    return convex_combination(p, others) is None
