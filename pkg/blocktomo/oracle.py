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
import logging
import os

import numpy

from .defs import *
from .errors import InputError, ResourceError
from .grid import (
    BinaryImage, RecInstance, WRecInstance, check_count, pattern_enumerate)
from .reductions import ThreeColorSolution

LOG = logging.getLogger('blocktomo')

OracleResult = collections.namedtuple('OracleResult', ('status', 'image', 'nodes'))
ThreeColorResult = collections.namedtuple(
    'ThreeColorResult', ('status', 'solution', 'nodes'))


class OracleLimits(object):
    '''
    Size guard and search budget of the exact solver.
    '''
    __slots__ = ('_max_cells', '_max_nodes')

    def __init__(self, max_cells=ORACLE_MAX_CELLS, max_nodes=ORACLE_MAX_NODES):
        self._max_cells = check_count('max_cells', max_cells, 1)
        self._max_nodes = check_count('max_nodes', max_nodes, 1)

    max_cells = property(lambda self: self._max_cells)
    max_nodes = property(lambda self: self._max_nodes)

    @classmethod
    def from_env(cls, environ=None, **kwargs):
        '''
        Defaults overridden by TOMO_MAX_NODES, then by keyword arguments.
        '''
        environ = os.environ if environ is None else environ
        value = environ.get(ENV_MAX_NODES)
        if value is not None and 'max_nodes' not in kwargs:
            try:
                kwargs['max_nodes'] = int(value)
            except ValueError:
                raise InputError('%s must be an integer, got %r' % (ENV_MAX_NODES, value))
        return cls(**kwargs)

    def __repr__(self):
        return 'OracleLimits(max_cells=%d, max_nodes=%d)' % (
            self._max_cells, self._max_nodes)


class _BudgetExceeded(Exception):
    pass


class _Window(object):
    __slots__ = ('i', 'j', 'lower', 'upper', 'count', 'patterns')

    def __init__(self, i, j, lower, upper, patterns):
        self.i = i
        self.j = j
        self.lower = lower
        self.upper = upper
        self.count = 0
        # Stack of the pattern masks still compatible with the decided cells.
        self.patterns = [patterns] if patterns is not None else None


def _bounds(rel, value, area):
    if rel == REL_LE:
        return 0, value
    elif rel == REL_GE:
        return value, area
    return value, value


class _Search(object):
    '''
    Depth-first search over the cells in (q,p) order. A cell takes 0
    before 1. Every tried assignment counts as one node.
    '''
    def __init__(self, inst, max_nodes):
        self.m = m = inst.m
        self.n = n = inst.n
        self.k = k = inst.k
        self.row_sums = inst.row_sums
        self.col_sums = inst.col_sums
        self.max_nodes = max_nodes
        self.nodes = 0
        self.rows = [0] * n
        self.cols = [0] * m
        self.bits = numpy.zeros((n, m), dtype=numpy.uint8)

        allowed = None
        if inst.t != PAT_FREE:
            allowed = [p.mask(k) for p in pattern_enumerate(inst.pattern_class)]
        if isinstance(inst, RecInstance):
            specs = [(i, j, 0, v) for (i, j), v in inst.block_values.items()]
        else:
            specs = [(i, j) + _bounds(rel, value, k * k)
                     for (i, j), (rel, value) in inst.windows.items()]
        self.windows = [_Window(i, j, lo, hi, allowed) for i, j, lo, hi in specs]

        # Per cell: (window, bit of the cell in the window mask, window
        # cells still undecided after this one).
        self.cover = [[] for _ in range(m * n)]
        for window in self.windows:
            for b in range(k):
                for a in range(k):
                    p, q = window.i + a, window.j + b
                    rest = (k - 1 - b) * k + (k - 1 - a)
                    self.cover[(q - 1) * m + p - 1].append((window, b * k + a, rest))

    def _assign(self, p, q, value, cover):
        ok = True
        self.bits[q - 1, p - 1] = value
        self.rows[q - 1] += value
        self.cols[p - 1] += value
        row, col = self.rows[q - 1], self.cols[p - 1]
        if row > self.row_sums[q - 1] or row + self.m - p < self.row_sums[q - 1]:
            ok = False
        if col > self.col_sums[p - 1] or col + self.n - q < self.col_sums[p - 1]:
            ok = False
        for window, bit, rest in cover:
            window.count += value
            if window.count > window.upper or window.count + rest < window.lower:
                ok = False
            if window.patterns is not None:
                want = value << bit
                left = [mask for mask in window.patterns[-1] if mask & (1 << bit) == want]
                window.patterns.append(left)
                if not left:
                    ok = False
        return ok

    def _undo(self, p, q, value, cover):
        self.bits[q - 1, p - 1] = 0
        self.rows[q - 1] -= value
        self.cols[p - 1] -= value
        for window, bit, rest in cover:
            window.count -= value
            if window.patterns is not None:
                window.patterns.pop()

    def _dfs(self, index, visit):
        if index == self.m * self.n:
            return visit(BinaryImage(self.bits.copy()))
        q, p = divmod(index, self.m)
        p, q = p + 1, q + 1
        cover = self.cover[index]
        for value in (0, 1):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _BudgetExceeded()
            ok = self._assign(p, q, value, cover)
            if ok and self._dfs(index + 1, visit):
                return True
            self._undo(p, q, value, cover)
        return False

    def run(self, visit):
        '''
        @param visit: called with every solution; returning True stops
        @returns: True if visit stopped the search
        '''
        if sum(self.row_sums) != sum(self.col_sums):
            return False
        return self._dfs(0, visit)


def _check_inst(inst):
    if not isinstance(inst, (RecInstance, WRecInstance)):
        raise InputError('expected a Rec or WRec instance, got %r' % (inst,))


def oracle_solve(inst, lim=None):
    '''
    Exact search for one solution of a Rec or WRec instance.

    @type inst: RecInstance or WRecInstance
    @type lim: OracleLimits
    @returns: the first solution in search order, INFEASIBLE after an
              exhaustive search, LIMIT if the grid or the budget is too big
    @rtype: OracleResult
    '''
    _check_inst(inst)
    lim = lim or OracleLimits()
    if inst.m * inst.n > lim.max_cells:
        LOG.debug('oracle: %dx%d grid exceeds %d cells', inst.m, inst.n, lim.max_cells)
        return OracleResult(STATUS_LIMIT, None, 0)
    search = _Search(inst, lim.max_nodes)
    found = []
    try:
        search.run(lambda image: found.append(image) or True)
    except _BudgetExceeded:
        LOG.debug('oracle: node budget %d exhausted', lim.max_nodes)
        return OracleResult(STATUS_LIMIT, None, search.nodes)
    LOG.debug('oracle: %d nodes, %s', search.nodes, 'found' if found else 'none')
    if found:
        return OracleResult(STATUS_FEASIBLE, found[0], search.nodes)
    return OracleResult(STATUS_INFEASIBLE, None, search.nodes)


def oracle_enumerate(inst, lim=None, cap=None):
    '''
    All solutions in search order, at most cap of them.

    @rtype: list of BinaryImage
    @raise ResourceError: the grid exceeds max_cells or the budget ran out
    '''
    _check_inst(inst)
    lim = lim or OracleLimits()
    if cap is not None:
        cap = check_count('cap', cap)
    if inst.m * inst.n > lim.max_cells:
        raise ResourceError(
            '%dx%d grid exceeds the oracle limit of %d cells' %
            (inst.m, inst.n, lim.max_cells))
    solutions = []
    if cap == 0:
        return solutions

    def visit(image):
        solutions.append(image)
        return cap is not None and len(solutions) >= cap

    search = _Search(inst, lim.max_nodes)
    try:
        search.run(visit)
    except _BudgetExceeded:
        raise ResourceError('oracle node budget of %d exhausted' % lim.max_nodes)
    return solutions


def oracle_three_color(tc, lim=None):
    '''
    Exact search for a 3-color solution. Cells are visited row by row and
    try empty, color 1 and color 2 in that order.

    @type tc: ThreeColorInstance
    @rtype: ThreeColorResult
    '''
    lim = lim or OracleLimits()
    m, n = tc.m, tc.n
    if m * n > lim.max_cells:
        return ThreeColorResult(STATUS_LIMIT, None, 0)
    if sum(tc.r1) != sum(tc.c1) or sum(tc.r2) != sum(tc.c2):
        return ThreeColorResult(STATUS_INFEASIBLE, None, 0)
    rows = {1: tc.r1, 2: tc.r2}
    cols = {1: tc.c1, 2: tc.c2}
    row_count = {1: [0] * n, 2: [0] * n}
    col_count = {1: [0] * m, 2: [0] * m}
    colors = numpy.zeros((n, m), dtype=numpy.uint8)
    nodes = [0]

    def fits(p, q):
        for a in (1, 2):
            row, col = row_count[a][q - 1], col_count[a][p - 1]
            if row > rows[a][q - 1] or row + m - p < rows[a][q - 1]:
                return False
            if col > cols[a][p - 1] or col + n - q < cols[a][p - 1]:
                return False
        return True

    def dfs(index):
        if index == m * n:
            return True
        q, p = divmod(index, m)
        p, q = p + 1, q + 1
        for color in (0, 1, 2):
            nodes[0] += 1
            if nodes[0] > lim.max_nodes:
                raise _BudgetExceeded()
            colors[q - 1, p - 1] = color
            if color:
                row_count[color][q - 1] += 1
                col_count[color][p - 1] += 1
            if fits(p, q) and dfs(index + 1):
                return True
            if color:
                row_count[color][q - 1] -= 1
                col_count[color][p - 1] -= 1
        colors[q - 1, p - 1] = 0
        return False

    try:
        found = dfs(0)
    except _BudgetExceeded:
        return ThreeColorResult(STATUS_LIMIT, None, nodes[0])
    if not found:
        return ThreeColorResult(STATUS_INFEASIBLE, None, nodes[0])
    solution = ThreeColorSolution(
        BinaryImage(colors == 1), BinaryImage(colors == 2))
    return ThreeColorResult(STATUS_FEASIBLE, solution, nodes[0])
