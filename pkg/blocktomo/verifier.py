# Copyright (C) 2026 python-blocktomo contributors

# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.

import collections

from .defs import *
from .errors import InputError
from .grid import (
    compare, pattern_member, pattern_of, region_and_projections, window_cells)


# Violation records.
RowSum = collections.namedtuple('RowSum', ('q', 'expected', 'actual'))
ColSum = collections.namedtuple('ColSum', ('p', 'expected', 'actual'))
BlockCap = collections.namedtuple('BlockCap', ('i', 'j', 'cap', 'actual'))
BlockCount = collections.namedtuple('BlockCount', ('i', 'j', 'expected', 'actual'))
PatternViolation = collections.namedtuple('PatternViolation', ('i', 'j', 'pattern'))
WindowRel = collections.namedtuple('WindowRel', ('i', 'j', 'rel', 'value', 'actual'))
OutsideSupport = collections.namedtuple('OutsideSupport', ('p', 'q'))
ColorSum = collections.namedtuple('ColorSum', ('color', 'axis', 'index', 'expected', 'actual'))
Overlap = collections.namedtuple('Overlap', ('p', 'q'))


def _describe(violation):
    kind = type(violation).__name__
    fields = ' '.join('%s=%s' % item for item in violation._asdict().items())
    return '%s %s' % (kind, fields)


class ViolationReport(object):
    '''
    Every violated constraint of a candidate solution, in check order.
    An empty report means the candidate is feasible.
    '''
    __slots__ = ('_violations',)

    def __init__(self, violations=()):
        self._violations = tuple(violations)

    violations = property(lambda self: self._violations)
    feasible = property(lambda self: not self._violations)

    def of_type(self, kind):
        return [v for v in self._violations if isinstance(v, kind)]

    def __len__(self):
        return len(self._violations)

    def __iter__(self):
        return iter(self._violations)

    def __eq__(self, other):
        if not isinstance(other, ViolationReport):
            return NotImplemented
        return self._violations == other._violations

    def __str__(self):
        return ''.join('%s\n' % _describe(v) for v in self._violations)

    def __repr__(self):
        return 'ViolationReport(%r)' % (self._violations,)


def _check_sums(inst, x, violations):
    for q, (expected, actual) in enumerate(zip(inst.row_sums, x.row_sums()), 1):
        if expected != actual:
            violations.append(RowSum(q, expected, actual))
    for p, (expected, actual) in enumerate(zip(inst.col_sums, x.col_sums()), 1):
        if expected != actual:
            violations.append(ColSum(p, expected, actual))


def verify_rec(inst, x):
    '''
    Check x against every constraint of a Rec instance: row and column
    sums, block caps sum(B_k(i,j)) <= v(i,j) and pattern membership.

    @type inst: RecInstance
    @type x: BinaryImage
    @rtype: ViolationReport
    '''
    inst.check_image(x)
    violations = []
    _check_sums(inst, x, violations)
    cls = inst.pattern_class
    for (i, j), cap in inst.block_values.items():
        actual = x.window_sum(i, j, inst.k)
        if actual > cap:
            violations.append(BlockCap(i, j, cap, actual))
        if inst.t != PAT_FREE:
            pattern = pattern_of(x, i, j, inst.k)
            if not pattern_member(pattern, cls):
                violations.append(PatternViolation(i, j, pattern))
    return ViolationReport(violations)


def verify_wrec(inst, x):
    '''
    Check x against a WRec instance. Overlapping windows are checked
    independently of each other.

    @type inst: WRecInstance
    @type x: BinaryImage
    @rtype: ViolationReport
    '''
    inst.check_image(x)
    violations = []
    _check_sums(inst, x, violations)
    cls = inst.pattern_class
    for (i, j), (rel, value) in inst.windows.items():
        actual = x.window_sum(i, j, inst.k)
        if not compare(rel, actual, value):
            violations.append(WindowRel(i, j, rel, value, actual))
        if inst.t != PAT_FREE:
            pattern = pattern_of(x, i, j, inst.k)
            if not pattern_member(pattern, cls):
                violations.append(PatternViolation(i, j, pattern))
    return ViolationReport(violations)


def verify_dr1(inst, x):
    '''
    Check x against a DR(1) instance: one 1 in every selected block,
    strip-restricted row and column sums over G(I), nothing outside G(I).

    @type inst: DR1Instance
    @type x: BinaryImage
    @rtype: ViolationReport
    '''
    if (x.m, x.n) != (inst.m, inst.n):
        raise InputError(
            'image is %dx%d, instance is %dx%d' % (x.m, x.n, inst.m, inst.n))
    region, xs, ys = region_and_projections(inst.corners, inst.k)
    ones = x.ones()
    violations = []
    row_actual = collections.Counter(q for p, q in ones if (p, q) in region)
    for q, expected in sorted(inst.row_sums.items()):
        if row_actual[q] != expected:
            violations.append(RowSum(q, expected, row_actual[q]))
    col_actual = collections.Counter(p for p, q in ones if (p, q) in region)
    for p, expected in sorted(inst.col_sums.items()):
        if col_actual[p] != expected:
            violations.append(ColSum(p, expected, col_actual[p]))
    for i, j in sorted(inst.corners, key=lambda ij: (ij[1], ij[0])):
        actual = sum(x[cell] for cell in window_cells(i, j, inst.k))
        if actual != 1:
            violations.append(BlockCount(i, j, 1, actual))
    for p, q in ones:
        if (p, q) not in region:
            violations.append(OutsideSupport(p, q))
    return ViolationReport(violations)


def verify_three_color(tc, sol):
    '''
    Check a 3-color solution: per-color row and column sums and the
    disjointness condition xi1 + xi2 <= 1.

    @type tc: ThreeColorInstance
    @type sol: ThreeColorSolution
    @rtype: ViolationReport
    '''
    violations = []
    sums = ((1, sol.xi1, tc.r1, tc.c1), (2, sol.xi2, tc.r2, tc.c2))
    for color, image, rows, cols in sums:
        if (image.m, image.n) != (tc.m, tc.n):
            raise InputError(
                'color %d image is %dx%d, instance is %dx%d' %
                (color, image.m, image.n, tc.m, tc.n))
        for q, (expected, actual) in enumerate(zip(rows, image.row_sums()), 1):
            if expected != actual:
                violations.append(ColorSum(color, HORIZONTAL, q, expected, actual))
        for p, (expected, actual) in enumerate(zip(cols, image.col_sums()), 1):
            if expected != actual:
                violations.append(ColorSum(color, VERTICAL, p, expected, actual))
    for p, q in sorted(set(sol.xi1.ones()) & set(sol.xi2.ones()), key=lambda pq: (pq[1], pq[0])):
        violations.append(Overlap(p, q))
    return ViolationReport(violations)
