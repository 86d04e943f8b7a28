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

import numpy

from .errors import InputError
from .grid import BinaryImage, check_count, check_sums

LOG = logging.getLogger('blocktomo')

SOURCE = 0
SINK = 1


class TransportProblem(object):
    '''
    Binary reconstruction from row and column sums with forbidden cells and
    capacity groups. Every group is a set of cells of a single row; groups
    are pairwise disjoint. A forbidden cell stays 0 even inside a group.
    '''
    __slots__ = ('_m', '_n', '_row_sums', '_col_sums', '_forbidden', '_groups')

    def __init__(self, m, n, row_sums, col_sums, forbidden=(), groups=()):
        self._m = check_count('m', m, 1)
        self._n = check_count('n', n, 1)
        self._row_sums = check_sums('row_sums', row_sums, self._n)
        self._col_sums = check_sums('col_sums', col_sums, self._m)
        self._forbidden = frozenset(self._check_cell(cell) for cell in forbidden)
        seen = set()
        checked = []
        for cells, cap in groups:
            cells = frozenset(self._check_cell(cell) for cell in cells)
            if len(set(q for p, q in cells)) > 1:
                raise InputError('group %r spans more than one row' % (sorted(cells),))
            if cells & seen:
                raise InputError('groups must be pairwise disjoint')
            seen |= cells
            checked.append((cells, check_count('group cap', cap)))
        self._groups = tuple(checked)

    m = property(lambda self: self._m)
    n = property(lambda self: self._n)
    row_sums = property(lambda self: self._row_sums)
    col_sums = property(lambda self: self._col_sums)
    forbidden = property(lambda self: self._forbidden)
    groups = property(lambda self: self._groups)

    def _check_cell(self, cell):
        p, q = cell
        if not (1 <= p <= self._m and 1 <= q <= self._n):
            raise InputError(
                'cell (%d,%d) outside %dx%d grid' % (p, q, self._m, self._n))
        return (p, q)


class FlowNetwork(object):
    '''
    Residual network with paired arcs (arc e and its reverse e ^ 1) and a
    Dinic max-flow. Adjacency lists keep insertion order, which makes the
    resulting flow deterministic.
    '''
    def __init__(self, size):
        self.adj = [[] for _ in range(size)]
        self.head = []
        self.cap = []
        self.level = None
        self.it = None

    def add_arc(self, u, v, cap):
        arc = len(self.head)
        self.head.append(v)
        self.cap.append(cap)
        self.adj[u].append(arc)
        self.head.append(u)
        self.cap.append(0)
        self.adj[v].append(arc + 1)
        return arc

    def _bfs(self, source, sink):
        level = [-1] * len(self.adj)
        level[source] = 0
        queue = collections.deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.adj[u]:
                v = self.head[arc]
                if self.cap[arc] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        self.level = level
        return level[sink] >= 0

    def _dfs(self, u, sink, limit):
        if u == sink:
            return limit
        adj = self.adj[u]
        while self.it[u] < len(adj):
            arc = adj[self.it[u]]
            v = self.head[arc]
            if self.cap[arc] > 0 and self.level[v] == self.level[u] + 1:
                pushed = self._dfs(v, sink, min(limit, self.cap[arc]))
                if pushed:
                    self.cap[arc] -= pushed
                    self.cap[arc ^ 1] += pushed
                    return pushed
            self.it[u] += 1
        return 0

    def max_flow(self, source, sink):
        flow = 0
        while self._bfs(source, sink):
            self.it = [0] * len(self.adj)
            while True:
                pushed = self._dfs(source, sink, float('inf'))
                if not pushed:
                    break
                flow += pushed
        return flow


def solve_transport(tp):
    '''
    Layered network: source -> column p (cap c_p) -> group node (one arc per
    allowed cell, cap 1) -> row q (cap = group cap) -> sink (cap r_q).
    Allowed cells outside every group get a direct column -> row arc.

    @type tp: TransportProblem
    @returns: a solution, or None if the problem is infeasible
    @rtype: BinaryImage
    '''
    m, n = tp.m, tp.n
    total = sum(tp.row_sums)
    if total != sum(tp.col_sums):
        return None
    if max(tp.row_sums) > m or max(tp.col_sums) > n:
        return None

    col_node = lambda p: 1 + p
    row_node = lambda q: 1 + m + q
    group_of = {}
    groups = [(cells, cap) for cells, cap in tp.groups if cells]
    for index, (cells, cap) in enumerate(groups):
        for cell in cells:
            group_of[cell] = 2 + m + n + index

    net = FlowNetwork(2 + m + n + len(groups))
    for p in range(1, m + 1):
        net.add_arc(SOURCE, col_node(p), tp.col_sums[p - 1])
    cell_arcs = {}
    for p in range(1, m + 1):
        for q in range(1, n + 1):
            if (p, q) in tp.forbidden:
                continue
            target = group_of.get((p, q), row_node(q))
            cell_arcs[(p, q)] = net.add_arc(col_node(p), target, 1)
    for index, (cells, cap) in enumerate(groups):
        q = next(iter(cells))[1]
        net.add_arc(2 + m + n + index, row_node(q), cap)
    for q in range(1, n + 1):
        net.add_arc(row_node(q), SINK, tp.row_sums[q - 1])

    flow = net.max_flow(SOURCE, SINK)
    LOG.debug('transport %dx%d: flow %d of %d', m, n, flow, total)
    if flow != total:
        return None
    bits = numpy.zeros((n, m), dtype=numpy.uint8)
    for (p, q), arc in cell_arcs.items():
        if net.cap[arc] == 0:
            bits[q - 1, p - 1] = 1
    return BinaryImage(bits)
