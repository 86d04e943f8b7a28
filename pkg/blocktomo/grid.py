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
import functools
import numbers
import types

import numpy

from .defs import *
from .errors import InputError, ResourceError


def check_count(name, value, minimum=0):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InputError('%s must be an integer, got %r' % (name, value))
    if value < minimum:
        raise InputError('%s must be >= %d, got %d' % (name, minimum, value))
    return int(value)


def check_grid(m, n, k):
    k = check_count('k', k, 1)
    m = check_count('m', m, 1)
    n = check_count('n', n, 1)
    if m % k or n % k:
        raise InputError('m=%d and n=%d must be divisible by k=%d' % (m, n, k))
    return m, n, k


def check_sums(name, sums, length):
    sums = tuple(sums)
    if len(sums) != length:
        raise InputError(
            '%s: expected %d values, got %d' % (name, length, len(sums)))
    return tuple(
        check_count('%s[%d]' % (name, index + 1), value)
        for index, value in enumerate(sums))


def compare(rel, actual, value):
    '''
    Evaluate "actual rel value" for a window relation.
    '''
    if rel == REL_LE:
        return actual <= value
    elif rel == REL_GE:
        return actual >= value
    elif rel == REL_EQ:
        return actual == value
    raise InputError('unknown relation %r' % (rel,))


class BinaryImage(object):
    '''
    The unknown 0/1 grid x = (xi_{p,q}), (p,q) in [m] x [n].

    Indexing is Cartesian and 1-based: p is the column, q the row.
    Row q is kept at array index q-1, column p at index p-1, so the
    backing array reads bottom row first.
    '''
    __slots__ = ('_bits',)

    def __init__(self, bits):
        raw = numpy.asarray(bits)
        if raw.ndim != 2 or 0 in raw.shape:
            raise InputError('image must be a non-empty 2-d array')
        if not numpy.isin(raw, (0, 1)).all():
            raise InputError('image entries must be 0 or 1')
        bits = raw.astype(numpy.uint8)
        bits.setflags(write=False)
        self._bits = bits

    m = property(lambda self: self._bits.shape[1])
    n = property(lambda self: self._bits.shape[0])
    bits = property(lambda self: self._bits)

    @classmethod
    def zeros(cls, m, n):
        return cls(numpy.zeros((n, m), dtype=numpy.uint8))

    @classmethod
    def from_ones(cls, m, n, cells):
        '''
        @param cells: cells (p,q) holding a 1
        @type cells: iterable
        '''
        bits = numpy.zeros((n, m), dtype=numpy.uint8)
        for p, q in cells:
            if not (1 <= p <= m and 1 <= q <= n):
                raise InputError('cell (%d,%d) outside %dx%d grid' % (p, q, m, n))
            bits[q - 1, p - 1] = 1
        return cls(bits)

    def __getitem__(self, cell):
        p, q = cell
        if not (1 <= p <= self.m and 1 <= q <= self.n):
            raise InputError('cell (%d,%d) outside %dx%d grid' % (p, q, self.m, self.n))
        return int(self._bits[q - 1, p - 1])

    def contains_window(self, i, j, k):
        return i >= 1 and j >= 1 and i + k - 1 <= self.m and j + k - 1 <= self.n

    def window_sum(self, i, j, k):
        if not self.contains_window(i, j, k):
            raise InputError(
                'window (%d,%d) of side %d exceeds %dx%d grid' %
                (i, j, k, self.m, self.n))
        return int(self._bits[j - 1:j - 1 + k, i - 1:i - 1 + k].sum())

    def ones(self):
        '''
        @returns: cells holding a 1, ordered by (q,p)
        @rtype: list
        '''
        rows, cols = numpy.nonzero(self._bits)
        return [(int(p) + 1, int(q) + 1) for q, p in zip(rows, cols)]

    def row_sums(self):
        return tuple(int(s) for s in self._bits.sum(axis=1))

    def col_sums(self):
        return tuple(int(s) for s in self._bits.sum(axis=0))

    def complement(self):
        return BinaryImage(1 - self._bits)

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return (self._bits.shape == other._bits.shape and
                numpy.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash((self._bits.shape, self._bits.tobytes()))

    def __repr__(self):
        return 'BinaryImage(m=%d, n=%d, ones=%r)' % (self.m, self.n, self.ones())


def corner_points(m, n, k):
    '''
    The (lower-left) corner points C(m,n,k), ordered by (j,i).

    @returns: list of (i,j)
    @rtype: list
    '''
    m, n, k = check_grid(m, n, k)
    return [(i, j) for j in range(1, n + 1, k) for i in range(1, m + 1, k)]


def window_cells(i, j, k):
    '''
    The k*k cells of the window (block) anchored at (i,j).
    '''
    return frozenset((i + a, j + b) for b in range(k) for a in range(k))


def block_of(p, q, k):
    '''
    Corner point of the block B_k(i,j) holding cell (p,q).
    '''
    return ((p - 1) // k * k + 1, (q - 1) // k * k + 1)


class Pattern(frozenset):
    '''
    Offsets of the nonzero cells of a window, translated to (0,0).
    '''
    def fits(self, k):
        return all(0 <= a < k and 0 <= b < k for a, b in self)

    def row_counts(self, k):
        counts = [0] * k
        for a, b in self:
            counts[b] += 1
        return counts

    def complement(self, k):
        return Pattern(window_cells(0, 0, k) - self)

    def mask(self, k):
        return sum(1 << (b * k + a) for a, b in self)

    @classmethod
    def from_mask(cls, mask, k):
        return cls((bit % k, bit // k) for bit in range(k * k) if mask >> bit & 1)

    def __repr__(self):
        return 'Pattern(%r)' % (sorted(self, key=lambda ab: (ab[1], ab[0])),)


class PatternClass(collections.namedtuple('PatternClass', ('k', 't'))):
    '''
    The pattern family P(k,t).
    '''
    __slots__ = ()

    def __new__(cls, k, t):
        k = check_count('k', k, 1)
        if t not in WREC_PATTERNS:
            raise InputError('pattern class t must be one of %r, got %r' % (WREC_PATTERNS, t))
        if t == PAT_ROWFULL and k < 2:
            raise InputError('pattern class t=3 requires k >= 2')
        return super().__new__(cls, k, int(t))


def pattern_of(x, i, j, k):
    '''
    pat_k(x,i,j): offsets of the 1s of x inside W_k(i,j).
    '''
    if not x.contains_window(i, j, k):
        raise InputError(
            'window (%d,%d) of side %d exceeds %dx%d grid' % (i, j, k, x.m, x.n))
    window = x.bits[j - 1:j - 1 + k, i - 1:i - 1 + k]
    rows, cols = numpy.nonzero(window)
    return Pattern((int(a), int(b)) for b, a in zip(rows, cols))


def pattern_member(pattern, cls):
    '''
    @param pattern: offsets inside [k-1]_0^2
    @type pattern: Pattern
    @param cls: pattern family
    @type cls: PatternClass
    @returns: True if pattern is in P(k,t)
    @rtype: bool
    '''
    k, t = cls
    pattern = Pattern(pattern)
    if not pattern.fits(k):
        raise InputError('pattern %r has offsets outside [%d]_0^2' % (pattern, k - 1))
    if t == PAT_FREE:
        return True
    if t == PAT_CORNER:
        # The empty block is admitted along with the two corner singletons.
        return len(pattern) == 0 or pattern in (
            frozenset([(0, 0)]), frozenset([(k - 1, k - 1)]))
    counts = pattern.row_counts(k)
    if t == PAT_ROWSINGLE:
        return all(count <= 1 for count in counts)
    return all(count >= k - 1 for count in counts)


@functools.lru_cache(maxsize=None)
def pattern_enumerate(cls):
    '''
    All members of P(k,t), ordered by their bit mask (row-major from the
    lower-left offset).

    @rtype: tuple of Pattern
    '''
    k, t = cls
    if k > PATTERN_MAX_K:
        raise ResourceError(
            'pattern enumeration is limited to k <= %d, got %d' % (PATTERN_MAX_K, k))
    patterns = (Pattern.from_mask(mask, k) for mask in range(1 << (k * k)))
    return tuple(pattern for pattern in patterns if pattern_member(pattern, cls))


def strip_rank(corners, axis, i, j):
    '''
    sigma_i(j) for the VERTICAL axis, rho_j(i) for the HORIZONTAL one.

    @param corners: selected corner points I
    @type corners: set
    '''
    if axis == VERTICAL:
        return sum(1 for a, b in corners if a == i and b <= j)
    elif axis == HORIZONTAL:
        return sum(1 for a, b in corners if b == j and a <= i)
    raise InputError('unknown strip axis %r' % (axis,))


def region_and_projections(corners, k):
    '''
    @returns: G(I), Pi_x(I), Pi_y(I)
    @rtype: tuple of frozenset
    '''
    region = frozenset().union(*(window_cells(i, j, k) for i, j in corners))
    return (
        region,
        frozenset(i for i, j in corners),
        frozenset(j for i, j in corners))


class _GridInstance(object):
    '''
    Data shared by Rec and WRec instances: grid, block side, pattern class
    and the row/column sum measurements.
    '''
    __slots__ = ('_k', '_t', '_m', '_n', '_row_sums', '_col_sums')

    def __init__(self, k, t, m, n, row_sums, col_sums):
        self._m, self._n, self._k = check_grid(m, n, k)
        self._t = PatternClass(k, t).t
        self._row_sums = check_sums('row_sums', row_sums, self._n)
        self._col_sums = check_sums('col_sums', col_sums, self._m)

    k = property(lambda self: self._k)
    t = property(lambda self: self._t)
    m = property(lambda self: self._m)
    n = property(lambda self: self._n)
    row_sums = property(lambda self: self._row_sums)
    col_sums = property(lambda self: self._col_sums)

    @property
    def pattern_class(self):
        return PatternClass(self._k, self._t)

    def corners(self):
        return corner_points(self._m, self._n, self._k)

    def check_image(self, x):
        if (x.m, x.n) != (self._m, self._n):
            raise InputError(
                'image is %dx%d, instance is %dx%d' % (x.m, x.n, self._m, self._n))

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class RecInstance(_GridInstance):
    '''
    Instance of Rec(k,nu,t): row sums r_1..r_n, column sums c_1..c_m and
    block values v(i,j) in {0,nu} for every corner point.
    '''
    __slots__ = ('_nu', '_block_values')

    def __init__(self, k, nu, t, m, n, row_sums, col_sums, block_values):
        if t not in REC_PATTERNS:
            raise InputError('Rec pattern class t must be one of %r, got %r' % (REC_PATTERNS, t))
        super().__init__(k, t, m, n, row_sums, col_sums)
        self._nu = check_count('nu', nu, 1)
        corners = self.corners()
        if set(block_values) != set(corners):
            raise InputError('block values must cover exactly the corner points C(m,n,k)')
        values = collections.OrderedDict()
        for corner in corners:
            value = check_count('v%r' % (corner,), block_values[corner])
            if value not in (0, self._nu):
                raise InputError(
                    'block value v%r=%d not in {0,%d}' % (corner, value, self._nu))
            values[corner] = value
        self._block_values = types.MappingProxyType(values)

    nu = property(lambda self: self._nu)
    block_values = property(lambda self: self._block_values)

    def value(self, i, j):
        return self._block_values[(i, j)]

    def replace(self, **fields):
        '''
        Copy of the instance with some fields changed.
        '''
        args = {
            'k': self._k, 'nu': self._nu, 't': self._t, 'm': self._m, 'n': self._n,
            'row_sums': self._row_sums, 'col_sums': self._col_sums,
            'block_values': self._block_values,
        }
        args.update(fields)
        return RecInstance(**args)

    def _key(self):
        return (self._k, self._nu, self._t, self._m, self._n, self._row_sums,
                self._col_sums, tuple(self._block_values.items()))

    def __repr__(self):
        return 'RecInstance(k=%d, nu=%d, t=%d, m=%d, n=%d, r=%r, c=%r, v=%r)' % (
            self._k, self._nu, self._t, self._m, self._n, self._row_sums,
            self._col_sums, dict(self._block_values))


class WRecInstance(_GridInstance):
    '''
    Instance of the window problem WRec: row and column sums plus a
    (relation, value) measurement for every anchor (i,j) of L. Windows
    W_k(i,j) may overlap; each must lie inside the grid.
    '''
    __slots__ = ('_windows',)

    def __init__(self, k, t, m, n, row_sums, col_sums, windows):
        super().__init__(k, t, m, n, row_sums, col_sums)
        checked = {}
        for anchor, measurement in windows.items():
            i, j = anchor
            i = check_count('anchor i', i, 1)
            j = check_count('anchor j', j, 1)
            if i + self._k - 1 > self._m or j + self._k - 1 > self._n:
                raise InputError(
                    'window (%d,%d) of side %d exceeds %dx%d grid' %
                    (i, j, self._k, self._m, self._n))
            rel, value = measurement
            if rel not in RELATIONS:
                raise InputError('unknown relation %r at window (%d,%d)' % (rel, i, j))
            checked[(i, j)] = (rel, check_count('window value', value))
        self._windows = types.MappingProxyType(collections.OrderedDict(
            (anchor, checked[anchor])
            for anchor in sorted(checked, key=lambda ij: (ij[1], ij[0]))))

    windows = property(lambda self: self._windows)

    def anchors(self):
        return list(self._windows)

    def is_block_aligned(self):
        return all((i - 1) % self._k == 0 and (j - 1) % self._k == 0
                   for i, j in self._windows)

    def replace(self, **fields):
        args = {
            'k': self._k, 't': self._t, 'm': self._m, 'n': self._n,
            'row_sums': self._row_sums, 'col_sums': self._col_sums,
            'windows': self._windows,
        }
        args.update(fields)
        return WRecInstance(**args)

    def _key(self):
        return (self._k, self._t, self._m, self._n, self._row_sums,
                self._col_sums, tuple(self._windows.items()))

    def __repr__(self):
        return 'WRecInstance(k=%d, t=%d, m=%d, n=%d, r=%r, c=%r, windows=%r)' % (
            self._k, self._t, self._m, self._n, self._row_sums, self._col_sums,
            dict(self._windows))
