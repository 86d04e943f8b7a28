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

import numpy

from ..defs import *
from ..grid import BinaryImage
from .abstract import LineReader


def write_solution(x):
    '''
    "SOL m n", then the rows from q=n down to q=1 as '0'/'1' strings.

    @type x: BinaryImage
    @rtype: str
    '''
    lines = ['%s %d %d' % (HDR_SOL, x.m, x.n)]
    for row in x.bits[::-1]:
        lines.append(''.join('1' if bit else '0' for bit in row))
    return ''.join('%s\n' % line for line in lines)


def parse_solution(text):
    '''
    @rtype: BinaryImage
    @raise ParseError: bad header, dimensions or characters
    '''
    reader = LineReader(text, comments=False)
    tokens = reader.next_tokens()
    if len(tokens) != 3 or tokens[0] != HDR_SOL:
        raise reader.error('expected "%s <m> <n>"' % HDR_SOL)
    m, n = reader.integer(tokens[1]), reader.integer(tokens[2])
    if m < 1 or n < 1:
        raise reader.error('m and n must be positive')
    bits = numpy.zeros((n, m), dtype=numpy.uint8)
    for q in range(n, 0, -1):
        line = reader.next_line().strip()
        if len(line) != m or set(line) - set('01'):
            raise reader.error('expected %d characters 0/1, got %r' % (m, line))
        bits[q - 1] = [ch == '1' for ch in line]
    reader.finish()
    return BinaryImage(bits)


def read_solution(path):
    with open(path, 'r') as f:
        return parse_solution(f.read())
