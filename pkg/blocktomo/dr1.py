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
import itertools
import types

import numpy

from .errors import ContractError, InputError
from .grid import (
    BinaryImage, check_count, check_grid, corner_points, region_and_projections)


class DR1Instance(object):
    '''
    Instance of DR(1): a set I of corner points and the row/column sums of
    the strips touched by I. A solution puts exactly one 1 into every block
    of I and nothing elsewhere.
    '''
    __slots__ = ('_k', '_m', '_n', '_corners', '_row_sums', '_col_sums')

    def __init__(self, k, m, n, corners, row_sums, col_sums):
        self._m, self._n, self._k = check_grid(m, n, k)
        corners = frozenset(corners)
        if not corners <= set(corner_points(self._m, self._n, self._k)):
            raise InputError('selected blocks must be corner points of C(m,n,k)')
        self._corners = corners
        region, xs, ys = region_and_projections(corners, self._k)
        rows = set(j + l for j in ys for l in range(self._k))
        cols = set(i + l for i in xs for l in range(self._k))
        if set(row_sums) != rows:
            raise InputError('row sums must cover exactly the rows of the selected strips')
        if set(col_sums) != cols:
            raise InputError('column sums must cover exactly the columns of the selected strips')
        self._row_sums = types.MappingProxyType(
            {q: check_count('r[%d]' % q, row_sums[q]) for q in sorted(rows)})
        self._col_sums = types.MappingProxyType(
            {p: check_count('c[%d]' % p, col_sums[p]) for p in sorted(cols)})

    k = property(lambda self: self._k)
    m = property(lambda self: self._m)
    n = property(lambda self: self._n)
    corners = property(lambda self: self._corners)
    row_sums = property(lambda self: self._row_sums)
    col_sums = property(lambda self: self._col_sums)

    @classmethod
    def from_sums(cls, k, m, n, corners, row_sums, col_sums):
        '''
        Build the instance from full-length sums r_1..r_n and c_1..c_m,
        keeping only the entries of the strips touched by I.
        '''
        region, xs, ys = region_and_projections(corners, k)
        return cls(
            k, m, n, corners,
            {j + l: row_sums[j + l - 1] for j in ys for l in range(k)},
            {i + l: col_sums[i + l - 1] for i in xs for l in range(k)})

    def __repr__(self):
        return 'DR1Instance(k=%d, m=%d, n=%d, I=%r, r=%r, c=%r)' % (
            self._k, self._m, self._n, sorted(self._corners),
            dict(self._row_sums), dict(self._col_sums))


def strip_ranks(corners):
    '''
    sigma_i(j) and rho_j(i) for every (i,j) in I, plus the strip totals
    sigma_i(n) and rho_j(m), in one pass over I.

    @returns: (sigma, rho, sigma_total, rho_total)
    @rtype: tuple of dict
    '''
    vertical = collections.defaultdict(list)
    horizontal = collections.defaultdict(list)
    for i, j in corners:
        vertical[i].append(j)
        horizontal[j].append(i)
    sigma = {}
    for i, js in vertical.items():
        for rank, j in enumerate(sorted(js), 1):
            sigma[(i, j)] = rank
    rho = {}
    for j, is_ in horizontal.items():
        for rank, i in enumerate(sorted(is_), 1):
            rho[(i, j)] = rank
    sigma_total = {i: len(js) for i, js in vertical.items()}
    rho_total = {j: len(is_) for j, is_ in horizontal.items()}
    return sigma, rho, sigma_total, rho_total


def dr1_feasible(inst):
    '''
    A DR(1) instance is feasible if, and only if, for every (i,j) in I the
    row strip j carries rho_j(m) ones and the column strip i carries
    sigma_i(n) ones.

    @type inst: DR1Instance
    @rtype: bool
    '''
    k = inst.k
    sigma, rho, sigma_total, rho_total = strip_ranks(inst.corners)
    for i, j in inst.corners:
        if sum(inst.row_sums[j + l] for l in range(k)) != rho_total[j]:
            return False
        if sum(inst.col_sums[i + l] for l in range(k)) != sigma_total[i]:
            return False
    return True


def _first_offset(rank, sums):
    for l, total in enumerate(itertools.accumulate(sums)):
        if rank <= total:
            return l
    raise ContractError('rank %d exceeds strip total %d' % (rank, sum(sums)))


def dr1_construct(inst):
    '''
    Explicit DR(1) solution: the block at (i,j) gets its single 1 at
    (a_{i,j}, b_{i,j}) with

        a_{i,j} = i + min{l : sigma_i(j) <= c_i + ... + c_{i+l}}
        b_{i,j} = j + min{l : rho_j(i) <= r_j + ... + r_{j+l}}

    for l in [k-1]_0.

    @type inst: DR1Instance
    @rtype: BinaryImage
    '''
    if not dr1_feasible(inst):
        raise ContractError('DR(1) instance is infeasible: %r' % (inst,))
    k = inst.k
    sigma, rho, sigma_total, rho_total = strip_ranks(inst.corners)
    bits = numpy.zeros((inst.n, inst.m), dtype=numpy.uint8)
    for i, j in sorted(inst.corners, key=lambda ij: (ij[1], ij[0])):
        a = i + _first_offset(sigma[(i, j)], [inst.col_sums[i + l] for l in range(k)])
        b = j + _first_offset(rho[(i, j)], [inst.row_sums[j + l] for l in range(k)])
        bits[b - 1, a - 1] = 1
    return BinaryImage(bits)
