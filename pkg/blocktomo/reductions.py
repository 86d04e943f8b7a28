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

import numpy

from .defs import *
from .errors import InputError, UnsupportedClassError
from .grid import (
    BinaryImage, RecInstance, WRecInstance, check_count, check_sums, pattern_of)


class ThreeColorInstance(object):
    '''
    3-color tomography: row sums r1, r2 (length n) and column sums c1, c2
    (length m) of two disjoint binary images; the third color fills the rest.
    '''
    __slots__ = ('_m', '_n', '_r1', '_r2', '_c1', '_c2')

    def __init__(self, m, n, r1, r2, c1, c2):
        self._m = check_count('m', m, 1)
        self._n = check_count('n', n, 1)
        self._r1 = check_sums('r1', r1, self._n)
        self._r2 = check_sums('r2', r2, self._n)
        self._c1 = check_sums('c1', c1, self._m)
        self._c2 = check_sums('c2', c2, self._m)

    m = property(lambda self: self._m)
    n = property(lambda self: self._n)
    r1 = property(lambda self: self._r1)
    r2 = property(lambda self: self._r2)
    c1 = property(lambda self: self._c1)
    c2 = property(lambda self: self._c2)

    def _key(self):
        return (self._m, self._n, self._r1, self._r2, self._c1, self._c2)

    def __eq__(self, other):
        if not isinstance(other, ThreeColorInstance):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'ThreeColorInstance(m=%d, n=%d, r1=%r, r2=%r, c1=%r, c2=%r)' % self._key()


class ThreeColorSolution(object):
    '''
    Two binary images of the same size with disjoint supports.
    '''
    __slots__ = ('_xi1', '_xi2')

    def __init__(self, xi1, xi2):
        if (xi1.m, xi1.n) != (xi2.m, xi2.n):
            raise InputError('color images differ in size')
        if (xi1.bits & xi2.bits).any():
            raise InputError('color images must have disjoint supports')
        self._xi1 = xi1
        self._xi2 = xi2

    xi1 = property(lambda self: self._xi1)
    xi2 = property(lambda self: self._xi2)
    m = property(lambda self: self._xi1.m)
    n = property(lambda self: self._xi1.n)

    def __eq__(self, other):
        if not isinstance(other, ThreeColorSolution):
            return NotImplemented
        return self._xi1 == other._xi1 and self._xi2 == other._xi2

    def __hash__(self):
        return hash((self._xi1, self._xi2))

    def __repr__(self):
        return 'ThreeColorSolution(xi1=%r, xi2=%r)' % (self._xi1, self._xi2)


def three_color_to_rec(tc):
    '''
    Rec(2,1,1) instance on a 2m x 2n grid: cell (p,q) of the 3-color grid
    becomes the block at (2p-1, 2q-1), color 1 its lower-left 1 and
    color 2 its upper-right 1. Sums interleave as r_{2q+a-2} = r^(a)_q and
    c_{2p+a-2} = c^(a)_p; every block value is 1.

    @type tc: ThreeColorInstance
    @rtype: RecInstance
    '''
    rows = [s for pair in zip(tc.r1, tc.r2) for s in pair]
    cols = [s for pair in zip(tc.c1, tc.c2) for s in pair]
    values = {(i, j): 1 for j in range(1, 2 * tc.n, 2) for i in range(1, 2 * tc.m, 2)}
    return RecInstance(2, 1, PAT_CORNER, 2 * tc.m, 2 * tc.n, rows, cols, values)


def decode_three_color(x):
    '''
    @type x: BinaryImage
    @rtype: ThreeColorSolution
    '''
    if x.m % 2 or x.n % 2:
        raise InputError('image %dx%d is not a 2-block image' % (x.m, x.n))
    m, n = x.m // 2, x.n // 2
    xi1 = numpy.zeros((n, m), dtype=numpy.uint8)
    xi2 = numpy.zeros((n, m), dtype=numpy.uint8)
    for q in range(1, n + 1):
        for p in range(1, m + 1):
            pattern = pattern_of(x, 2 * p - 1, 2 * q - 1, 2)
            if pattern == {(0, 0)}:
                xi1[q - 1, p - 1] = 1
            elif pattern == {(1, 1)}:
                xi2[q - 1, p - 1] = 1
            elif pattern:
                raise InputError(
                    'block (%d,%d) holds %r, not a 3-color block' %
                    (2 * p - 1, 2 * q - 1, pattern))
    return ThreeColorSolution(BinaryImage(xi1), BinaryImage(xi2))


def encode_three_color(tc, sol):
    '''
    Image of the reduced instance for a 3-color solution.

    @rtype: BinaryImage
    '''
    if (sol.m, sol.n) != (tc.m, tc.n):
        raise InputError(
            'solution is %dx%d, instance is %dx%d' % (sol.m, sol.n, tc.m, tc.n))
    bits = numpy.zeros((2 * tc.n, 2 * tc.m), dtype=numpy.uint8)
    bits[0::2, 0::2] = sol.xi1.bits
    bits[1::2, 1::2] = sol.xi2.bits
    return BinaryImage(bits)


def _check_target(target_k):
    return check_count('target_k', target_k, 2)


def _offsets(t, target_k):
    # P(k,1) only has the two corner offsets.
    if t == PAT_CORNER:
        return (0, target_k - 1)
    return (0, 1)


def _data_lines(count, target_k, offsets):
    '''
    0-based target indices of the source lines 1..count.
    '''
    return [(b // 2) * target_k + offsets[b % 2] for b in range(count)]


def _spread(sums, target_k, offsets, fill):
    data = _data_lines(len(sums), target_k, offsets)
    spread = [fill] * (len(sums) // 2 * target_k)
    for index, value in zip(data, sums):
        spread[index] = value
    return spread


def _move_anchor(anchor, target_k):
    i, j = anchor
    return ((i - 1) // 2 * target_k + 1, (j - 1) // 2 * target_k + 1)


def _embed(x, target_k, offsets, fill):
    if x.m % 2 or x.n % 2:
        raise InputError('image %dx%d is not a 2-block image' % (x.m, x.n))
    bits = numpy.full((x.n // 2 * target_k, x.m // 2 * target_k), fill, dtype=numpy.uint8)
    rows = _data_lines(x.n, target_k, offsets)
    cols = _data_lines(x.m, target_k, offsets)
    bits[numpy.ix_(rows, cols)] = x.bits
    return BinaryImage(bits)


def _extract(x, target_k, offsets):
    if x.m % target_k or x.n % target_k:
        raise InputError('image %dx%d is not a %d-block image' % (x.m, x.n, target_k))
    rows = _data_lines(x.n // target_k * 2, target_k, offsets)
    cols = _data_lines(x.m // target_k * 2, target_k, offsets)
    return BinaryImage(x.bits[numpy.ix_(rows, cols)])


def pad_to_k(inst, target_k):
    '''
    Zero-padding of a Rec instance with k=2 to block side target_k: every
    2x2 block lands in a target_k block, the rows and columns that do not
    carry source data get sum 0.

    @type inst: RecInstance
    @rtype: RecInstance
    '''
    target_k = _check_target(target_k)
    if inst.k != 2:
        raise InputError('pad_to_k expects k=2, got k=%d' % inst.k)
    offsets = _offsets(inst.t, target_k)
    return RecInstance(
        target_k, inst.nu, inst.t,
        inst.m // 2 * target_k, inst.n // 2 * target_k,
        _spread(inst.row_sums, target_k, offsets, 0),
        _spread(inst.col_sums, target_k, offsets, 0),
        {_move_anchor(anchor, target_k): v for anchor, v in inst.block_values.items()})


def pad_embed(x, target_k, t=PAT_FREE):
    return _embed(x, target_k, _offsets(t, _check_target(target_k)), 0)


def pad_extract(x, target_k, t=PAT_FREE):
    return _extract(x, target_k, _offsets(t, _check_target(target_k)))


_T1_RELATIONS = {REL_LE: REL_GE, REL_GE: REL_LE, REL_EQ: REL_EQ}
_T1_PATTERNS = {PAT_FREE: PAT_FREE, PAT_ROWSINGLE: PAT_ROWFULL, PAT_ROWFULL: PAT_ROWSINGLE}


def t1_invert(inst):
    '''
    Color inversion: reconstruct the zeros instead of the ones.
    r'_q = m - r_q, c'_p = n - c_p, a window (rel, v) becomes
    (inverse rel, k^2 - v) and the pattern class is complemented.

    @type inst: WRecInstance
    @rtype: WRecInstance
    @raise UnsupportedClassError: for t=1
    '''
    if inst.t == PAT_CORNER:
        raise UnsupportedClassError(
            'the complement of P(k,1) is not one of the pattern classes')
    area = inst.k * inst.k
    if any(r > inst.m for r in inst.row_sums) or any(c > inst.n for c in inst.col_sums):
        raise InputError('row or column sum exceeds the grid size')
    windows = {}
    for anchor, (rel, value) in inst.windows.items():
        if value > area:
            raise InputError('window value %d at %r exceeds k^2=%d' % (value, anchor, area))
        windows[anchor] = (_T1_RELATIONS[rel], area - value)
    return WRecInstance(
        inst.k, _T1_PATTERNS[inst.t], inst.m, inst.n,
        [inst.m - r for r in inst.row_sums],
        [inst.n - c for c in inst.col_sums],
        windows)


def _check_padding_source(inst, name):
    if inst.k != 2 or inst.t != PAT_FREE:
        raise InputError('%s expects k=2 and t=0, got k=%d t=%d' % (name, inst.k, inst.t))
    if not inst.is_block_aligned():
        raise InputError('%s expects block-aligned windows' % name)


def t2_zero_pad(inst, target_k):
    '''
    Adds empty rows and columns: m' = m k/2, n' = n k/2, the first two
    rows/columns of each strip carry the source sums, window values are
    kept.

    @type inst: WRecInstance
    @rtype: WRecInstance
    '''
    target_k = _check_target(target_k)
    _check_padding_source(inst, 't2_zero_pad')
    offsets = (0, 1)
    return WRecInstance(
        target_k, PAT_FREE, inst.m // 2 * target_k, inst.n // 2 * target_k,
        _spread(inst.row_sums, target_k, offsets, 0),
        _spread(inst.col_sums, target_k, offsets, 0),
        {_move_anchor(anchor, target_k): w for anchor, w in inst.windows.items()})


def t2_embed(x, target_k):
    return _embed(x, _check_target(target_k), (0, 1), 0)


def t2_extract(x, target_k):
    return _extract(x, _check_target(target_k), (0, 1))


def t3_one_pad(inst, target_k):
    '''
    Adds rows and columns filled by ones. Padding rows carry m' ones,
    padding columns n'; data rows and columns also pick up the ones of
    the padding lines crossing them. A window value v becomes k^2 + v - 4.

    @type inst: WRecInstance
    @rtype: WRecInstance
    '''
    target_k = _check_target(target_k)
    _check_padding_source(inst, 't3_one_pad')
    offsets = (0, 1)
    m, n = inst.m // 2 * target_k, inst.n // 2 * target_k
    extra = target_k * target_k - 4
    return WRecInstance(
        target_k, PAT_FREE, m, n,
        _spread([r + m - inst.m for r in inst.row_sums], target_k, offsets, m),
        _spread([c + n - inst.n for c in inst.col_sums], target_k, offsets, n),
        {_move_anchor(anchor, target_k): (rel, value + extra)
         for anchor, (rel, value) in inst.windows.items()})


def t3_embed(x, target_k):
    return _embed(x, _check_target(target_k), (0, 1), 1)


def t3_extract(x, target_k):
    return _extract(x, _check_target(target_k), (0, 1))


def rec_to_wrec(inst):
    '''
    The WRec form of a Rec instance: a "<=" window at every corner point.
    Rec's nu has no WRec counterpart and is dropped.

    @type inst: RecInstance
    @rtype: WRecInstance
    '''
    return WRecInstance(
        inst.k, inst.t, inst.m, inst.n, inst.row_sums, inst.col_sums,
        {anchor: (REL_LE, v) for anchor, v in inst.block_values.items()})


def wrec_to_rec(inst):
    '''
    The Rec instance with the same data, or None if the WRec instance is
    not of that shape: windows exactly at the corner points, relations
    "<=" (or "= 0"), t in {0,1,2} and one common nonzero cap nu. Caps of
    k^2 or more are read as k^2, for t=2 caps of k or more as k.

    @type inst: WRecInstance
    @rtype: RecInstance or None
    '''
    if inst.t not in REC_PATTERNS:
        return None
    if set(inst.anchors()) != set(inst.corners()):
        return None
    values = {}
    for anchor, (rel, value) in inst.windows.items():
        if rel == REL_EQ and value == 0:
            rel = REL_LE
        if rel != REL_LE:
            return None
        value = min(value, inst.k * inst.k)
        if inst.t == PAT_ROWSINGLE:
            value = min(value, inst.k)
        values[anchor] = value
    caps = set(values.values()) - {0}
    if len(caps) > 1:
        return None
    nu = caps.pop() if caps else 1
    return RecInstance(
        inst.k, nu, inst.t, inst.m, inst.n, inst.row_sums, inst.col_sums, values)


ForcedRec = collections.namedtuple('ForcedRec', ('rec', 'forced'))


def wrec_force_full(inst):
    '''
    Rec(k,1,0) form of a t=0 WRec instance whose windows sit exactly at
    the corner points and read "<= 0", "<= 1", "= 0", ">= k^2" or "= k^2".
    Blocks measured at k^2 are fixed to ones and get v = 0 in the Rec
    instance, whose row and column sums lose those ones.

    @type inst: WRecInstance
    @returns: ForcedRec(rec, forced) with the fixed ones as an image and
              rec None if they already exceed a sum; None if the instance
              is not of that shape
    @rtype: ForcedRec
    '''
    if inst.t != PAT_FREE or set(inst.anchors()) != set(inst.corners()):
        return None
    k = inst.k
    area = k * k
    bits = numpy.zeros((inst.n, inst.m), dtype=numpy.uint8)
    values = {}
    for (i, j), (rel, value) in inst.windows.items():
        if rel in (REL_GE, REL_EQ) and value == area:
            bits[j - 1:j - 1 + k, i - 1:i - 1 + k] = 1
            values[(i, j)] = 0
        elif rel == REL_LE and min(value, area) <= 1:
            values[(i, j)] = min(value, area)
        elif rel == REL_EQ and value == 0:
            values[(i, j)] = 0
        else:
            return None
    forced = BinaryImage(bits)
    rows = [r - f for r, f in zip(inst.row_sums, forced.row_sums())]
    cols = [c - f for c, f in zip(inst.col_sums, forced.col_sums())]
    if min(rows) < 0 or min(cols) < 0:
        return ForcedRec(None, forced)
    rec = RecInstance(k, 1, PAT_FREE, inst.m, inst.n, rows, cols, values)
    return ForcedRec(rec, forced)
