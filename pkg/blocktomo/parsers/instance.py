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

from ..defs import *
from ..errors import InputError, ParseError
from ..grid import RecInstance, WRecInstance, check_grid, corner_points
from ..reductions import ThreeColorInstance
from .abstract import LineReader


def _grid(reader, m, n, k):
    try:
        check_grid(m, n, k)
    except InputError as e:
        raise reader.error(str(e))


def _build(reader, cls, *args):
    try:
        return cls(*args)
    except ParseError:
        raise
    except InputError as e:
        raise reader.error(str(e))


def _parse_rec(reader):
    k, nu, t = reader.params('k', 'nu', 't')
    m, n = reader.params('m', 'n')
    _grid(reader, m, n, k)
    if t not in REC_PATTERNS:
        raise reader.error('Rec pattern class t must be one of %r, got %d' % (REC_PATTERNS, t))
    row_sums = reader.values('R', n)
    col_sums = reader.values('C', m)
    reader.keyword('V')
    corners = set(corner_points(m, n, k))
    values = {}
    while True:
        tokens = reader.next_tokens()
        if tokens == [HDR_END]:
            break
        if len(tokens) != 3:
            raise reader.error('expected "<i> <j> <v>"')
        i, j, v = (reader.integer(token) for token in tokens)
        if (i, j) not in corners:
            raise reader.error('(%d,%d) is not a corner point of C(%d,%d,%d)' % (i, j, m, n, k))
        if (i, j) in values:
            raise reader.error('duplicate block value for (%d,%d)' % (i, j))
        if v not in (0, nu):
            raise reader.error('block value %d not in {0,%d}' % (v, nu))
        values[(i, j)] = v
    missing = corners - set(values)
    if missing:
        raise reader.error('missing block values for %r' % (sorted(missing),))
    return _build(reader, RecInstance, k, nu, t, m, n, row_sums, col_sums, values)


def _parse_wrec(reader):
    k, t = reader.params('k', 't')
    m, n = reader.params('m', 'n')
    _grid(reader, m, n, k)
    row_sums = reader.values('R', n)
    col_sums = reader.values('C', m)
    reader.keyword('W')
    windows = {}
    while True:
        tokens = reader.next_tokens()
        if tokens == [HDR_END]:
            break
        if len(tokens) != 4:
            raise reader.error('expected "<i> <j> <rel> <value>"')
        i, j = reader.integer(tokens[0]), reader.integer(tokens[1])
        rel, value = tokens[2], reader.integer(tokens[3])
        if rel not in RELATIONS:
            raise reader.error('unknown relation %r' % rel)
        if i < 1 or j < 1 or i + k - 1 > m or j + k - 1 > n:
            raise reader.error(
                'window (%d,%d) of side %d exceeds %dx%d grid' % (i, j, k, m, n))
        if (i, j) in windows:
            raise reader.error('duplicate window (%d,%d)' % (i, j))
        windows[(i, j)] = (rel, value)
    return _build(reader, WRecInstance, k, t, m, n, row_sums, col_sums, windows)


def _parse_tcol(reader):
    m, n = reader.params('m', 'n')
    if m < 1 or n < 1:
        raise reader.error('m and n must be positive')
    r1 = reader.values('R1', n)
    r2 = reader.values('R2', n)
    c1 = reader.values('C1', m)
    c2 = reader.values('C2', m)
    reader.keyword(HDR_END)
    return ThreeColorInstance(m, n, r1, r2, c1, c2)


_PARSERS = {
    HDR_REC: _parse_rec,
    HDR_WREC: _parse_wrec,
    HDR_TCOL: _parse_tcol,
}


def parse_instance(text, kinds=(HDR_REC, HDR_WREC)):
    '''
    @param text: REC or WREC file contents
    @type text: str
    @param kinds: accepted headers
    @returns: the validated instance
    @rtype: RecInstance or WRecInstance
    @raise ParseError: syntax error or invariant breach, with line number
    '''
    reader = LineReader(text)
    tokens = reader.next_tokens()
    if len(tokens) != 1 or tokens[0] not in kinds:
        raise reader.error('expected one of %s, got %r' % (', '.join(kinds), ' '.join(tokens)))
    inst = _PARSERS[tokens[0]](reader)
    reader.finish()
    return inst


def parse_three_color(text):
    '''
    @rtype: ThreeColorInstance
    '''
    return parse_instance(text, kinds=(HDR_TCOL,))


def _join(*items):
    return ' '.join(str(item) for item in items)


def serialize_instance(inst):
    '''
    Canonical text of an instance; parse_instance(serialize_instance(x)) == x.
    '''
    if isinstance(inst, RecInstance):
        lines = [
            HDR_REC,
            _join('k', inst.k, 'nu', inst.nu, 't', inst.t),
            _join('m', inst.m, 'n', inst.n),
            _join('R', *inst.row_sums),
            _join('C', *inst.col_sums),
            'V',
        ]
        lines.extend(_join(i, j, v) for (i, j), v in inst.block_values.items())
    elif isinstance(inst, WRecInstance):
        lines = [
            HDR_WREC,
            _join('k', inst.k, 't', inst.t),
            _join('m', inst.m, 'n', inst.n),
            _join('R', *inst.row_sums),
            _join('C', *inst.col_sums),
            'W',
        ]
        lines.extend(_join(i, j, rel, v) for (i, j), (rel, v) in inst.windows.items())
    elif isinstance(inst, ThreeColorInstance):
        lines = [
            HDR_TCOL,
            _join('m', inst.m, 'n', inst.n),
            _join('R1', *inst.r1),
            _join('R2', *inst.r2),
            _join('C1', *inst.c1),
            _join('C2', *inst.c2),
        ]
    else:
        raise InputError('cannot serialize %r' % (inst,))
    lines.append(HDR_END)
    return ''.join('%s\n' % line for line in lines)


def read_instance(path, kinds=(HDR_REC, HDR_WREC)):
    with open(path, 'r') as f:
        return parse_instance(f.read(), kinds)


def write_instance(path, inst):
    with open(path, 'w') as f:
        f.write(serialize_instance(inst))
