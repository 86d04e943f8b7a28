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

from .defs import *
from .errors import InputError


def render_ascii(x):
    '''
    '#' for ones, '.' for zeros, top row first.
    '''
    return ''.join(
        '%s\n' % ''.join('#' if bit else '.' for bit in row) for row in x.bits[::-1])


def render_pgm(x):
    '''
    Binary PGM (P5, maxval 255): ones are black, top row first.
    '''
    header = ('P5\n%d %d\n255\n' % (x.m, x.n)).encode()
    payload = numpy.where(x.bits[::-1] == 1, 0, 255).astype(numpy.uint8)
    return header + payload.tobytes()


def render(x, fmt=FMT_ASCII):
    '''
    @type x: BinaryImage
    @param fmt: FMT_ASCII or FMT_PGM
    @returns: str for ASCII, bytes for PGM
    '''
    if fmt == FMT_ASCII:
        return render_ascii(x)
    elif fmt == FMT_PGM:
        return render_pgm(x)
    raise InputError('unknown render format %r' % (fmt,))
