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

import numbers

import numpy

from .defs import *
from .errors import InputError
from .grid import (
    BinaryImage, Pattern, PatternClass, RecInstance, check_count, check_grid)
from .reductions import ThreeColorInstance, ThreeColorSolution


def _check_density(density):
    if not isinstance(density, numbers.Real) or not 0 <= density <= 1:
        raise InputError('density must be a number in [0,1], got %r' % (density,))
    return float(density)


def _draw_pattern(rng, k, nu, t):
    '''
    A nonempty member of P(k,t) with at most nu ones. The size is drawn
    first, then the cells.
    '''
    if t == PAT_CORNER:
        return Pattern([(0, 0)] if rng.random() < 0.5 else [(k - 1, k - 1)])
    if t == PAT_ROWSINGLE:
        size = int(rng.integers(1, min(nu, k) + 1))
        rows = rng.choice(k, size, replace=False)
        return Pattern((int(rng.integers(k)), int(b)) for b in rows)
    size = int(rng.integers(1, min(nu, k * k) + 1))
    return Pattern.from_mask(
        sum(1 << int(bit) for bit in rng.choice(k * k, size, replace=False)), k)


def gen_planted(m, n, k, nu, t, density, seed):
    '''
    Planted Rec instance: a witness is drawn first, the sums are read off
    it. Every block is occupied with probability density, by a nonempty
    pattern of P(k,t) with at most nu ones; occupied blocks get v = nu,
    empty ones v = 0 or nu with equal probability.

    @returns: (instance, witness)
    @rtype: tuple
    '''
    if t not in REC_PATTERNS:
        raise InputError('Rec pattern class t must be one of %r, got %r' % (REC_PATTERNS, t))
    m, n, k = check_grid(m, n, k)
    t = PatternClass(k, t).t
    nu = check_count('nu', nu, 1)
    density = _check_density(density)
    rng = numpy.random.default_rng(seed)
    bits = numpy.zeros((n, m), dtype=numpy.uint8)
    values = {}
    for j in range(1, n + 1, k):
        for i in range(1, m + 1, k):
            if rng.random() < density:
                for a, b in _draw_pattern(rng, k, nu, t):
                    bits[j - 1 + b, i - 1 + a] = 1
                values[(i, j)] = nu
            else:
                values[(i, j)] = nu * int(rng.integers(2))
    witness = BinaryImage(bits)
    inst = RecInstance(
        k, nu, t, m, n, witness.row_sums(), witness.col_sums(), values)
    return inst, witness


def gen_perturbed(inst, seed):
    '''
    The instance with one row or column sum moved by one, staying
    nonnegative.
    '''
    rng = numpy.random.default_rng(seed)
    sums = [list(inst.row_sums), list(inst.col_sums)]
    index = int(rng.integers(inst.n + inst.m))
    axis, index = (0, index) if index < inst.n else (1, index - inst.n)
    step = 1 if rng.random() < 0.5 else -1
    if sums[axis][index] + step < 0:
        step = 1
    sums[axis][index] += step
    return inst.replace(row_sums=sums[0], col_sums=sums[1])


def gen_three_color(m, n, density, seed):
    '''
    Planted 3-color instance: each cell is colored with probability
    density, by color 1 or 2 with equal probability.

    @returns: (instance, witness)
    '''
    density = _check_density(density)
    rng = numpy.random.default_rng(seed)
    colored = rng.random((n, m)) < density
    colors = numpy.where(colored, rng.integers(1, 3, size=(n, m)), 0)
    sol = ThreeColorSolution(BinaryImage(colors == 1), BinaryImage(colors == 2))
    tc = ThreeColorInstance(
        m, n, sol.xi1.row_sums(), sol.xi2.row_sums(),
        sol.xi1.col_sums(), sol.xi2.col_sums())
    return tc, sol
