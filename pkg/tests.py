#!/usr/bin/env python3
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

import io
import os
import sys
import tempfile
import time

from fractions import Fraction

import numpy
import pytest

from hypothesis import given, settings, strategies as st

from blocktomo.common import CommonMixin
from blocktomo.conf import ConfMixin, TOMOCONFIG
from blocktomo.defs import *
from blocktomo.dr1 import DR1Instance, dr1_construct, dr1_feasible, strip_ranks
from blocktomo.errors import (
    ContractError, InputError, ParseError, ResourceError, UnsupportedClassError)
from blocktomo.flow import TransportProblem, solve_transport
from blocktomo.generator import gen_perturbed, gen_planted, gen_three_color
from blocktomo.grid import (
    BinaryImage, Pattern, PatternClass, RecInstance, WRecInstance, block_of,
    corner_points, pattern_enumerate, pattern_member, pattern_of,
    region_and_projections, strip_rank, window_cells)
from blocktomo.oracle import (
    OracleLimits, oracle_enumerate, oracle_solve, oracle_three_color)
from blocktomo.parsers.instance import (
    parse_instance, parse_three_color, serialize_instance)
from blocktomo.parsers.solution import parse_solution, write_solution
from blocktomo.reductions import (
    ThreeColorInstance, ThreeColorSolution, decode_three_color,
    encode_three_color, pad_embed, pad_extract, pad_to_k, rec_to_wrec,
    t1_invert, t2_embed, t2_extract, t2_zero_pad, t3_embed, t3_extract,
    t3_one_pad, three_color_to_rec, wrec_force_full, wrec_to_rec)
from blocktomo.render import render
from blocktomo.solvers import (
    BlockOccupancy, classify, solve, solve_rec1, solve_rec_k10, solve_rec_kv2,
    solve_wrec)
from blocktomo.tomoctl import TomoCtl
from blocktomo.tomolog import LOG, TomoLogMixin
from blocktomo.verifier import (
    BlockCap, PatternViolation, RowSum, WindowRel, verify_dr1, verify_rec,
    verify_three_color, verify_wrec)


BIG = OracleLimits(max_cells=64)


def rec(k, nu, t, m, n, row_sums, col_sums, values=None, default=None):
    '''
    Rec instance with every block at `default` (nu if not given) unless
    listed in values.
    '''
    default = nu if default is None else default
    block_values = {corner: default for corner in corner_points(m, n, k)}
    block_values.update(values or {})
    return RecInstance(k, nu, t, m, n, row_sums, col_sums, block_values)


def image(m, n, *ones):
    return BinaryImage.from_ones(m, n, ones)


def random_image(rng, m, n, density=0.5):
    return BinaryImage(rng.random((n, m)) < density)


def all_images(m, n):
    size = m * n
    codes = numpy.arange(1 << size, dtype=numpy.int64)
    bits = (codes[:, None] >> numpy.arange(size)) & 1
    return bits.reshape(-1, n, m).astype(numpy.uint8)


def naive_solutions(inst):
    '''
    Every image of the grid accepted by the verifier.
    '''
    images = all_images(inst.m, inst.n)
    rows = (images.sum(axis=2) == numpy.array(inst.row_sums)).all(axis=1)
    cols = (images.sum(axis=1) == numpy.array(inst.col_sums)).all(axis=1)
    verify = verify_rec if isinstance(inst, RecInstance) else verify_wrec
    found = set()
    for bits in images[rows & cols]:
        x = BinaryImage(bits)
        if verify(inst, x).feasible:
            found.add(x)
    return found


def balanced_perturbation(inst, rng):
    '''
    One row sum and one column sum moved together, keeping the totals equal.
    '''
    rows, cols = list(inst.row_sums), list(inst.col_sums)
    q, p = int(rng.integers(inst.n)), int(rng.integers(inst.m))
    step = -1 if rows[q] > 0 and cols[p] > 0 and rng.random() < 0.5 else 1
    rows[q] += step
    cols[p] += step
    return inst.replace(row_sums=rows, col_sums=cols)


# grid

def test_corner_points():
    corners = corner_points(6, 4, 2)
    assert corners == [(1, 1), (3, 1), (5, 1), (1, 3), (3, 3), (5, 3)]
    assert corner_points(2, 2, 2) == [(1, 1)]
    assert len(corner_points(3, 3, 1)) == 9
    with pytest.raises(InputError):
        corner_points(5, 4, 2)


def test_window_cells_and_blocks():
    assert window_cells(1, 1, 2) == {(1, 1), (2, 1), (1, 2), (2, 2)}
    assert window_cells(3, 1, 2) == {(3, 1), (4, 1), (3, 2), (4, 2)}
    assert window_cells(5, 7, 1) == {(5, 7)}
    assert block_of(4, 2, 2) == (3, 1)
    assert block_of(6, 6, 3) == (4, 4)


def test_binary_image():
    x = image(3, 2, (1, 1), (3, 2))
    assert (x.m, x.n) == (3, 2)
    assert x[(1, 1)] == 1 and x[(2, 1)] == 0 and x[(3, 2)] == 1
    assert x.ones() == [(1, 1), (3, 2)]
    assert x.row_sums() == (1, 1)
    assert x.col_sums() == (1, 0, 1)
    assert x.complement().ones() == [(2, 1), (3, 1), (1, 2), (2, 2)]
    assert x == image(3, 2, (3, 2), (1, 1))
    assert len({x, image(3, 2, (1, 1), (3, 2))}) == 1
    with pytest.raises(InputError):
        BinaryImage([[0, 2]])
    with pytest.raises(InputError):
        x[(4, 1)]


def test_pattern_of():
    x = image(4, 2, (3, 2), (4, 1))
    assert pattern_of(x, 3, 1, 2) == {(0, 1), (1, 0)}
    assert pattern_of(BinaryImage.zeros(4, 4), 1, 1, 2) == set()
    ones = BinaryImage(numpy.ones((3, 3)))
    assert pattern_of(ones, 1, 1, 3) == window_cells(0, 0, 3)
    with pytest.raises(InputError):
        pattern_of(x, 4, 1, 2)


def test_pattern_member():
    assert pattern_member(Pattern(), PatternClass(2, PAT_CORNER))
    assert not pattern_member(Pattern({(0, 0), (1, 0)}), PatternClass(2, PAT_ROWSINGLE))
    assert pattern_member(Pattern({(0, 0), (0, 1)}), PatternClass(2, PAT_ROWFULL))
    assert pattern_member(Pattern({(1, 1)}), PatternClass(2, PAT_CORNER))
    assert not pattern_member(Pattern({(1, 0)}), PatternClass(2, PAT_CORNER))
    assert pattern_member(Pattern({(2, 2)}), PatternClass(3, PAT_CORNER))
    with pytest.raises(InputError):
        PatternClass(1, PAT_ROWFULL)
    with pytest.raises(InputError):
        pattern_member(Pattern({(2, 0)}), PatternClass(2, PAT_FREE))


def test_pattern_counts():
    assert len(pattern_enumerate(PatternClass(2, PAT_ROWSINGLE))) == 9
    assert len(pattern_enumerate(PatternClass(2, PAT_FREE))) == 16
    assert len(pattern_enumerate(PatternClass(2, PAT_CORNER))) == 3
    assert len(pattern_enumerate(PatternClass(2, PAT_ROWFULL))) == 9
    assert len(pattern_enumerate(PatternClass(3, PAT_ROWSINGLE))) == 4 ** 3
    with pytest.raises(ResourceError):
        pattern_enumerate(PatternClass(5, PAT_FREE))


def test_pattern_complement_classes():
    for k in (2, 3):
        single = set(pattern_enumerate(PatternClass(k, PAT_ROWSINGLE)))
        full = set(pattern_enumerate(PatternClass(k, PAT_ROWFULL)))
        assert {p.complement(k) for p in single} == full


def test_strip_rank():
    corners = {(1, 1), (1, 3)}
    assert strip_rank(corners, VERTICAL, 1, 1) == 1
    assert strip_rank(corners, VERTICAL, 1, 3) == 2
    assert strip_rank({(1, 1), (3, 1), (5, 1)}, HORIZONTAL, 5, 1) == 3
    assert strip_rank(set(), VERTICAL, 3, 3) == 0
    assert strip_rank(set(), HORIZONTAL, 3, 3) == 0


def test_region_and_projections():
    region, xs, ys = region_and_projections({(1, 1)}, 2)
    assert region == window_cells(1, 1, 2) and xs == {1} and ys == {1}
    region, xs, ys = region_and_projections({(1, 1), (3, 1)}, 2)
    assert len(region) == 8 and xs == {1, 3} and ys == {1}
    assert region_and_projections(set(), 2) == (set(), set(), set())


def test_instance_validation():
    with pytest.raises(InputError):
        rec(2, 1, 0, 2, 2, (1, 0), (1, 0), {(1, 1): 2})
    with pytest.raises(InputError):
        rec(2, 1, 3, 2, 2, (0, 0), (0, 0))
    with pytest.raises(InputError):
        rec(2, 1, 0, 2, 2, (0, 0, 0), (0, 0))
    with pytest.raises(InputError):
        RecInstance(2, 1, 0, 2, 2, (0, 0), (0, 0), {})
    with pytest.raises(InputError):
        WRecInstance(2, 0, 2, 2, (0, 0), (0, 0), {(2, 1): (REL_LE, 1)})
    with pytest.raises(InputError):
        WRecInstance(2, 0, 2, 2, (0, 0), (0, 0), {(1, 1): ('<', 1)})
    inst = WRecInstance(2, 3, 4, 2, (0, 0), (0, 0, 0, 0),
                        {(3, 1): (REL_GE, 2), (1, 1): (REL_EQ, 1)})
    assert inst.anchors() == [(1, 1), (3, 1)]
    assert inst.is_block_aligned()
    assert not inst.replace(windows={(2, 1): (REL_LE, 0)}).is_block_aligned()


# verifier

def test_verify_rec():
    for t in REC_PATTERNS:
        inst = rec(2, 1, t, 4, 2, (0, 0), (0, 0, 0, 0), {(3, 1): 0})
        assert verify_rec(inst, BinaryImage.zeros(4, 2)).feasible
    x = image(2, 2, (1, 2), (2, 1))
    assert verify_rec(rec(2, 2, PAT_ROWSINGLE, 2, 2, (1, 1), (1, 1)), x).feasible
    report = verify_rec(rec(2, 2, PAT_CORNER, 2, 2, (1, 1), (1, 1)), x)
    assert len(report) == 1
    assert report.of_type(PatternViolation)[0][:2] == (1, 1)
    report = verify_rec(rec(2, 1, PAT_FREE, 2, 2, (1, 0), (1, 0), default=0), image(2, 2, (1, 1)))
    assert report.of_type(BlockCap) == [BlockCap(1, 1, 0, 1)]
    assert 'BlockCap i=1 j=1 cap=0 actual=1' in str(report)
    with pytest.raises(InputError):
        verify_rec(rec(2, 1, 0, 2, 2, (0, 0), (0, 0)), BinaryImage.zeros(4, 2))


def test_verify_wrec():
    x = image(4, 2, (2, 1))
    inst = WRecInstance(2, 0, 4, 2, (1, 0), (0, 1, 0, 0),
                        {(1, 1): (REL_EQ, 1), (2, 1): (REL_EQ, 1)})
    assert verify_wrec(inst, x).feasible
    x = image(2, 2, (1, 1), (2, 2))
    inst = WRecInstance(2, 0, 2, 2, (1, 1), (1, 1), {(1, 1): (REL_GE, 3)})
    assert verify_wrec(inst, x).violations == (WindowRel(1, 1, REL_GE, 3, 2),)
    inst = WRecInstance(2, PAT_ROWFULL, 2, 2, (1, 1), (1, 1), {(1, 1): (REL_LE, 4)})
    assert verify_wrec(inst, x).feasible


def test_verify_dr1():
    inst = DR1Instance.from_sums(2, 4, 2, {(1, 1)}, (1, 0), (0, 1, 0, 0))
    assert verify_dr1(inst, image(4, 2, (2, 1))).feasible
    report = verify_dr1(inst, image(4, 2, (2, 1), (3, 1)))
    assert [type(v).__name__ for v in report] == ['OutsideSupport']
    report = verify_dr1(inst, BinaryImage.zeros(4, 2))
    assert 'BlockCount' in str(report)


def test_verify_three_color():
    tc = ThreeColorInstance(2, 1, (1,), (1,), (1, 0), (0, 1))
    sol = ThreeColorSolution(image(2, 1, (1, 1)), image(2, 1, (2, 1)))
    assert verify_three_color(tc, sol).feasible
    with pytest.raises(InputError):
        ThreeColorSolution(image(2, 1, (1, 1)), image(2, 1, (1, 1)))

    class Pair(object):
        xi1 = image(2, 1, (1, 1))
        xi2 = image(2, 1, (1, 1))

    report = verify_three_color(tc, Pair())
    assert [type(v).__name__ for v in report].count('Overlap') == 1


def numpy_rec_check(inst, bits):
    '''
    Feasibility of an image under a Rec instance and the corner points of
    its over-cap blocks, read directly off the bit array.
    '''
    k = inst.k
    blocks = bits.reshape(inst.n // k, k, inst.m // k, k)
    counts = blocks.sum(axis=(1, 3))
    caps = numpy.array([[inst.value(i, j) for i in range(1, inst.m + 1, k)]
                        for j in range(1, inst.n + 1, k)])
    ok = ((bits.sum(axis=1) == inst.row_sums).all() and
          (bits.sum(axis=0) == inst.col_sums).all() and
          (counts <= caps).all())
    if inst.t == PAT_CORNER:
        corner = (blocks[:, 0, :, 0] == 1) | (blocks[:, k - 1, :, k - 1] == 1)
        ok = ok and ((counts == 0) | ((counts == 1) & corner)).all()
    elif inst.t == PAT_ROWSINGLE:
        ok = ok and (blocks.sum(axis=3) <= 1).all()
    over = set((int(b) * k + 1, int(a) * k + 1) for a, b in zip(*numpy.nonzero(counts > caps)))
    return bool(ok), over


def verifier_cases(count, seed):
    '''
    Rec instances up to 4x4 with their planted witness or a random image.
    '''
    rng = numpy.random.default_rng(seed)
    for index in range(count):
        k = int(rng.choice((1, 2, 4)))
        m = k * int(rng.integers(1, 4 // k + 1))
        n = k * int(rng.integers(1, 4 // k + 1))
        nu = int(rng.integers(1, k * k + 1))
        density = Fraction(int(rng.integers(0, 5)), 4)
        inst, witness = gen_planted(
            m, n, k, nu, int(rng.integers(3)), density, seed * 1000 + index)
        yield inst, witness if index % 3 == 0 else random_image(rng, m, n)


def test_verify_rec_against_numpy():
    feasible = 0
    for inst, x in verifier_cases(600, 5):
        report = verify_rec(inst, x)
        ok, over = numpy_rec_check(inst, x.bits)
        assert report.feasible == ok, (inst, x)
        assert set((v.i, v.j) for v in report.of_type(BlockCap)) == over
        if inst.t == PAT_FREE:
            assert not report.of_type(PatternViolation)
        feasible += ok
    assert 0 < feasible < 600


def test_verify_rec_after_removing_a_one():
    rng = numpy.random.default_rng(7)
    blocks = lambda report, kind: set((v.i, v.j) for v in report.of_type(kind))
    checked = 0
    for inst, x in verifier_cases(300, 6):
        ones = x.ones()
        if not ones:
            continue
        p, q = ones[int(rng.integers(len(ones)))]
        bits = x.bits.copy()
        bits[q - 1, p - 1] = 0
        before, after = verify_rec(inst, x), verify_rec(inst, BinaryImage(bits))
        assert blocks(after, BlockCap) <= blocks(before, BlockCap)
        assert blocks(after, PatternViolation) <= blocks(before, PatternViolation)
        rows = set(v.q for v in after.of_type(RowSum))
        # Row q lost a one: excess survives if it was at least two.
        assert set(v.q for v in before.of_type(RowSum)
                   if v.actual > v.expected + (v.q == q)) <= rows
        assert set(v.q for v in before.of_type(RowSum) if v.actual < v.expected) <= rows
        checked += 1
    assert checked > 100


# flow

def test_transport_examples():
    x = solve_transport(TransportProblem(2, 2, (1, 1), (1, 1)))
    assert x.row_sums() == (1, 1) and x.col_sums() == (1, 1)
    x = solve_transport(TransportProblem(2, 2, (1, 1), (1, 1), forbidden=[(1, 1)]))
    assert x == image(2, 2, (2, 1), (1, 2))
    tp = TransportProblem(2, 2, (2, 0), (1, 1), groups=[([(1, 1), (2, 1)], 1)])
    assert solve_transport(tp) is None
    assert solve_transport(TransportProblem(2, 2, (1, 0), (1, 1))) is None
    with pytest.raises(InputError):
        TransportProblem(2, 2, (0, 0), (0, 0), groups=[([(1, 1), (1, 2)], 1)])
    with pytest.raises(InputError):
        TransportProblem(2, 2, (0, 0), (0, 0), groups=[([(1, 1)], 1), ([(1, 1)], 1)])


def transport_case(rng):
    '''
    Transport problem up to 4x4: forbidden cells, disjoint capped groups
    inside rows and sums read off a random image, sometimes shifted.
    '''
    m, n = int(rng.integers(1, 5)), int(rng.integers(1, 5))
    forbidden = [(p, q) for q in range(1, n + 1) for p in range(1, m + 1)
                 if rng.random() < 0.2]
    groups = []
    for q in range(1, n + 1):
        order = [int(p) + 1 for p in rng.permutation(m)]
        while order:
            size = int(rng.integers(1, len(order) + 1))
            chunk, order = order[:size], order[size:]
            if rng.random() < 0.5:
                groups.append(([(p, q) for p in chunk], int(rng.integers(0, size + 1))))
    x = random_image(rng, m, n)
    rows, cols = list(x.row_sums()), list(x.col_sums())
    if rng.random() < 0.3:
        rows[int(rng.integers(n))] += 1
        cols[int(rng.integers(m))] += 1
    return m, n, rows, cols, forbidden, groups


def transport_naive(m, n, rows, cols, forbidden, groups):
    images = all_images(m, n)
    ok = ((images.sum(axis=2) == rows).all(axis=1) &
          (images.sum(axis=1) == cols).all(axis=1))
    for p, q in forbidden:
        ok &= images[:, q - 1, p - 1] == 0
    for cells, cap in groups:
        ok &= images[:, [q - 1 for p, q in cells], [p - 1 for p, q in cells]].sum(axis=1) <= cap
    return bool(ok.any())


def test_transport_against_naive():
    rng = numpy.random.default_rng(11)
    feasible = 0
    for _ in range(600):
        m, n, rows, cols, forbidden, groups = transport_case(rng)
        found = solve_transport(TransportProblem(m, n, rows, cols, forbidden, groups))
        assert (found is not None) == transport_naive(m, n, rows, cols, forbidden, groups)
        if found is None:
            continue
        feasible += 1
        assert found.row_sums() == tuple(rows) and found.col_sums() == tuple(cols)
        assert all(found[cell] == 0 for cell in forbidden)
        for cells, cap in groups:
            assert sum(found[cell] for cell in cells) <= cap
    assert 0 < feasible < 600


def test_transport_relaxation_keeps_feasible():
    rng = numpy.random.default_rng(12)
    checked = 0
    for _ in range(300):
        m, n, rows, cols, forbidden, groups = transport_case(rng)
        if solve_transport(TransportProblem(m, n, rows, cols, forbidden, groups)) is None:
            continue
        checked += 1
        if forbidden:
            tp = TransportProblem(m, n, rows, cols, forbidden[1:], groups)
            assert solve_transport(tp) is not None
        if groups:
            (cells, cap), rest = groups[0], groups[1:]
            tp = TransportProblem(m, n, rows, cols, forbidden, [(cells, cap + 1)] + rest)
            assert solve_transport(tp) is not None
    assert checked > 20


def test_transport_determinism():
    rng = numpy.random.default_rng(13)
    for _ in range(100):
        case = transport_case(rng)
        first = solve_transport(TransportProblem(*case))
        assert solve_transport(TransportProblem(*case)) == first


# dr1

def test_dr1_feasible():
    assert dr1_feasible(DR1Instance.from_sums(2, 2, 2, {(1, 1)}, (1, 0), (1, 0)))
    assert not dr1_feasible(DR1Instance.from_sums(2, 2, 2, {(1, 1)}, (2, 0), (1, 0)))
    assert dr1_feasible(DR1Instance(2, 4, 4, set(), {}, {}))
    with pytest.raises(InputError):
        DR1Instance(2, 4, 4, {(2, 1)}, {}, {})
    with pytest.raises(InputError):
        DR1Instance(2, 4, 4, {(1, 1)}, {1: 1, 2: 0, 3: 0}, {1: 1, 2: 0})


def test_dr1_construct():
    inst = DR1Instance.from_sums(2, 2, 2, {(1, 1)}, (0, 1), (0, 1))
    assert dr1_construct(inst) == image(2, 2, (2, 2))
    inst = DR1Instance.from_sums(2, 2, 4, {(1, 1), (1, 3)}, (1, 0, 0, 1), (1, 1))
    assert dr1_construct(inst) == image(2, 4, (1, 1), (2, 4))
    inst = DR1Instance.from_sums(2, 4, 2, {(1, 1), (3, 1)}, (2, 0), (1, 0, 1, 0))
    assert dr1_construct(inst) == image(4, 2, (1, 1), (3, 1))
    with pytest.raises(ContractError):
        dr1_construct(DR1Instance.from_sums(2, 2, 2, {(1, 1)}, (2, 0), (1, 0)))


def test_strip_ranks_match_strip_rank():
    corners = {(1, 1), (1, 5), (3, 3), (5, 3), (1, 3)}
    sigma, rho, sigma_total, rho_total = strip_ranks(corners)
    for i, j in corners:
        assert sigma[(i, j)] == strip_rank(corners, VERTICAL, i, j)
        assert rho[(i, j)] == strip_rank(corners, HORIZONTAL, i, j)
    assert sigma_total == {1: 3, 3: 1, 5: 1}
    assert rho_total == {1: 1, 3: 3, 5: 1}


def dr1_as_wrec(inst, row_sums, col_sums):
    '''
    The DR(1) constraints as a WRec instance: "= 1" on the selected blocks,
    "= 0" on every other block.
    '''
    windows = {corner: (REL_EQ, int(corner in inst.corners))
               for corner in corner_points(inst.m, inst.n, inst.k)}
    return WRecInstance(inst.k, PAT_FREE, inst.m, inst.n, row_sums, col_sums, windows)


def dr1_corpus(count, seed):
    rng = numpy.random.default_rng(seed)
    for index in range(count):
        m, n = 2 * int(rng.integers(1, 4)), 2 * int(rng.integers(1, 4))
        corners = {c for c in corner_points(m, n, 2) if rng.random() < 0.5}
        planted = numpy.zeros((n, m), dtype=numpy.uint8)
        for i, j in corners:
            planted[j - 1 + int(rng.integers(2)), i - 1 + int(rng.integers(2))] = 1
        rows = [int(s) for s in planted.sum(axis=1)]
        cols = [int(s) for s in planted.sum(axis=0)]
        kind = index % 3
        if kind == 1:
            # Move a unit inside a strip.
            sums = rows if rng.random() < 0.5 else cols
            a = int(rng.integers(len(sums) // 2)) * 2
            if sums[a]:
                sums[a] -= 1
                sums[a + 1] += 1
            elif sums[a + 1]:
                sums[a + 1] -= 1
                sums[a] += 1
        elif kind == 2:
            sums = rows if rng.random() < 0.5 else cols
            a = int(rng.integers(len(sums)))
            sums[a] += 1 if sums[a] == 0 or rng.random() < 0.5 else -1
        region, xs, ys = region_and_projections(corners, 2)
        strip_rows = {j + l for j in ys for l in range(2)}
        strip_cols = {i + l for i in xs for l in range(2)}
        inst = DR1Instance(
            2, m, n, corners,
            {q: rows[q - 1] for q in strip_rows},
            {p: cols[p - 1] for p in strip_cols})
        # Lines outside the selected strips carry nothing.
        rows = [s if q in strip_rows else 0 for q, s in enumerate(rows, 1)]
        cols = [s if p in strip_cols else 0 for p, s in enumerate(cols, 1)]
        yield inst, rows, cols


def test_dr1_oracle_equivalence():
    feasible = 0
    for inst, rows, cols in dr1_corpus(510, 5):
        verdict = dr1_feasible(inst)
        found = oracle_solve(dr1_as_wrec(inst, rows, cols))
        assert found.status != STATUS_LIMIT
        assert verdict == (found.status == STATUS_FEASIBLE), inst
        if verdict:
            feasible += 1
            x = dr1_construct(inst)
            assert verify_dr1(inst, x).feasible
            region = region_and_projections(inst.corners, inst.k)[0]
            assert set(x.ones()) <= region
    assert 0 < feasible < 510


# solvers

def test_classify():
    assert classify(rec(1, 7, 2, 2, 2, (0, 0), (0, 0))) == METHOD_REC1
    assert classify(rec(3, 1, 0, 3, 3, (0,) * 3, (0,) * 3)) == METHOD_K10
    assert classify(rec(2, 2, 0, 2, 2, (0, 0), (0, 0))) == METHOD_UNKNOWN
    assert classify(rec(2, 2, 2, 2, 2, (0, 0), (0, 0))) == METHOD_KV2
    assert classify(rec(3, 2, 2, 3, 3, (0,) * 3, (0,) * 3)) == METHOD_UNKNOWN
    assert classify(rec(2, 1, 1, 2, 2, (0, 0), (0, 0))) == METHOD_UNKNOWN


def test_solve_rec1():
    inst = rec(1, 1, 0, 2, 2, (1, 1), (1, 1), {(1, 1): 0})
    result = solve_rec1(inst)
    assert result.feasible and result.image == image(2, 2, (2, 1), (1, 2))
    inst = rec(1, 3, 2, 3, 2, (0, 0), (0, 0, 0), default=0)
    assert solve_rec1(inst).image == BinaryImage.zeros(3, 2)
    assert solve_rec1(rec(1, 1, 0, 2, 2, (1, 1), (1, 0))).status == STATUS_INFEASIBLE


def test_solve_rec_k10():
    result = solve_rec_k10(rec(2, 1, 0, 2, 2, (1, 0), (0, 1)))
    assert result.image == image(2, 2, (2, 1))
    inst = rec(2, 1, 0, 4, 4, (1, 1, 0, 1), (1, 0, 1, 1), {(1, 3): 0})
    result = solve_rec_k10(inst)
    assert result.image == image(4, 4, (1, 1), (3, 2), (4, 4))
    assert result.occupancy.selected() == {(1, 1), (3, 1), (3, 3)}
    assert BlockOccupancy.from_image(result.image, 2) == result.occupancy
    inst = rec(2, 1, 0, 4, 4, (1, 0, 0, 0), (1, 0, 0, 0), default=0)
    assert solve_rec_k10(inst).status == STATUS_INFEASIBLE
    with pytest.raises(InputError):
        solve_rec_k10(rec(2, 2, 0, 2, 2, (0, 0), (0, 0)))


def test_solve_rec_kv2():
    result = solve_rec_kv2(rec(2, 2, 2, 2, 2, (1, 1), (1, 1)))
    assert result.feasible
    assert verify_rec(rec(2, 2, 2, 2, 2, (1, 1), (1, 1)), result.image).feasible
    assert solve_rec_kv2(rec(2, 2, 2, 2, 2, (2, 0), (1, 1))).status == STATUS_INFEASIBLE
    result = solve_rec_kv2(rec(2, 2, 2, 2, 2, (0, 0), (0, 0), default=0))
    assert result.image == BinaryImage.zeros(2, 2)


def test_solve_dispatch():
    assert solve(rec(1, 1, 0, 2, 2, (1, 1), (1, 1))).method == METHOD_REC1
    inst = rec(2, 2, 0, 2, 2, (1, 1), (2, 0))
    result = solve(inst)
    assert result.method == METHOD_ORACLE
    assert result.image == image(2, 2, (1, 1), (1, 2))
    assert result.nodes > 0
    with pytest.raises(InputError):
        solve(rec(2, 2, 2, 2, 2, (0, 0), (0, 0)), METHOD_K10)
    with pytest.raises(InputError):
        solve(inst, 'simplex')
    assert solve(rec(2, 1, 0, 2, 2, (1, 0), (0, 1)), METHOD_ORACLE).image == image(2, 2, (2, 1))
    limited = solve(inst, limits=OracleLimits(max_nodes=1))
    assert limited.status == STATUS_LIMIT and limited.image is None


def solver_corpus(count, params, seed):
    '''
    Planted instances, sum-shifted ones and, on small grids, balanced
    perturbations of planted ones.
    '''
    rng = numpy.random.default_rng(seed)
    for index in range(count):
        k, nu, t = params(rng)
        kind = index % 3
        top = 4 if kind == 2 else 6
        m = k * int(rng.integers(1, max(1, top // k) + 1))
        n = k * int(rng.integers(1, max(1, top // k) + 1))
        density = Fraction(int(rng.integers(0, 5)), 4)
        inst, witness = gen_planted(m, n, k, nu, t, density, seed * 10000 + index)
        if kind == 1:
            inst = gen_perturbed(inst, index)
        elif kind == 2:
            inst = balanced_perturbation(inst, rng)
        yield inst


def check_against_oracle(params, method, seed):
    feasible = infeasible = 0
    for inst in solver_corpus(510, params, seed):
        assert classify(inst) == method
        result = solve(inst, method)
        found = oracle_solve(inst)
        assert found.status != STATUS_LIMIT
        assert result.status == found.status, inst
        if result.feasible:
            feasible += 1
            assert verify_rec(inst, result.image).feasible
        else:
            infeasible += 1
    assert feasible and infeasible


def test_rec1_matches_oracle():
    check_against_oracle(
        lambda rng: (1, int(rng.integers(1, 4)), int(rng.integers(0, 3))), METHOD_REC1, 1)


def test_k10_matches_oracle():
    check_against_oracle(
        lambda rng: (int(rng.integers(2, 4)), 1, PAT_FREE), METHOD_K10, 2)


def test_kv2_matches_oracle():
    check_against_oracle(
        lambda rng: (2, int(rng.integers(2, 4)), PAT_ROWSINGLE), METHOD_KV2, 3)


def test_k10_scaling():
    timings = []
    for size in (32, 64, 128, 256):
        inst, witness = gen_planted(size, size, 2, 1, PAT_FREE, Fraction(1, 2), size)
        started = time.perf_counter()
        result = solve_rec_k10(inst)
        timings.append(max(time.perf_counter() - started, 0.01))
        assert result.feasible
    assert timings[-1] < 5
    for small, large in zip(timings, timings[1:]):
        assert large <= 10 * small


def test_solve_wrec():
    inst = rec_to_wrec(rec(2, 1, 0, 4, 4, (1, 1, 0, 1), (1, 0, 1, 1), {(1, 3): 0}))
    result = solve_wrec(inst)
    assert result.method == METHOD_K10
    assert result.image == image(4, 4, (1, 1), (3, 2), (4, 4))
    # ">=" windows with t=3: the color inversion is a kv2 instance.
    x = image(2, 2, (1, 1), (2, 1), (2, 2))
    inst = WRecInstance(2, PAT_ROWFULL, 2, 2, x.row_sums(), x.col_sums(),
                        {(1, 1): (REL_GE, 2)})
    result = solve_wrec(inst)
    assert result.method == METHOD_KV2
    assert verify_wrec(inst, result.image).feasible
    # Overlapping windows go to the oracle.
    inst = WRecInstance(2, 0, 4, 2, (1, 0), (0, 1, 0, 0),
                        {(1, 1): (REL_EQ, 1), (2, 1): (REL_EQ, 1)})
    result = solve_wrec(inst)
    assert result.method == METHOD_ORACLE and result.image == image(4, 2, (2, 1))
    with pytest.raises(InputError):
        solve_wrec(inst, METHOD_K10)


def test_wrec_rec_shapes():
    inst = rec(2, 2, PAT_ROWSINGLE, 4, 2, (1, 1), (1, 0, 1, 0), {(3, 1): 0})
    assert wrec_to_rec(rec_to_wrec(inst)) == inst
    windows = {(1, 1): (REL_LE, 4), (3, 1): (REL_EQ, 0)}
    shaped = wrec_to_rec(WRecInstance(2, PAT_ROWSINGLE, 4, 2, (0, 0), (0,) * 4, windows))
    assert shaped.nu == 2 and shaped.block_values == {(1, 1): 2, (3, 1): 0}
    windows = {(1, 1): (REL_LE, 1), (3, 1): (REL_LE, 2)}
    assert wrec_to_rec(WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, windows)) is None
    windows = {(1, 1): (REL_LE, 9), (3, 1): (REL_LE, 4)}
    shaped = wrec_to_rec(WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, windows))
    assert shaped.nu == 4 and shaped.block_values == {(1, 1): 4, (3, 1): 4}
    windows = {(1, 1): (REL_LE, 3), (2, 1): (REL_LE, 1)}
    assert wrec_to_rec(WRecInstance(1, 0, 2, 1, (0,), (0, 0), windows)).nu == 1
    windows = {(1, 1): (REL_GE, 1), (3, 1): (REL_LE, 1)}
    assert wrec_to_rec(WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, windows)) is None
    assert wrec_to_rec(WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, {(1, 1): (REL_LE, 1)})) is None


def full_block_case(rng, m, n):
    '''
    k=2 WRec instance with t=0 whose corner windows are full (">= 4" or
    "= 4"), hold at most one 1 ("<= 1") or are empty ("<= 0" or "= 0"),
    with the sums of an image meeting them.
    '''
    bits = numpy.zeros((n, m), dtype=numpy.uint8)
    windows = {}
    for i, j in corner_points(m, n, 2):
        kind = int(rng.integers(3))
        if kind == 0:
            bits[j - 1:j + 1, i - 1:i + 1] = 1
            windows[(i, j)] = (REL_GE if rng.random() < 0.5 else REL_EQ, 4)
        elif kind == 1:
            if rng.random() < 0.7:
                bits[j - 1 + int(rng.integers(2)), i - 1 + int(rng.integers(2))] = 1
            windows[(i, j)] = (REL_LE, 1)
        else:
            windows[(i, j)] = (REL_LE if rng.random() < 0.5 else REL_EQ, 0)
    x = BinaryImage(bits)
    return WRecInstance(2, PAT_FREE, m, n, x.row_sums(), x.col_sums(), windows), x


def test_wrec_force_full():
    windows = {(1, 1): (REL_GE, 4), (3, 1): (REL_LE, 1)}
    inst = WRecInstance(2, PAT_FREE, 4, 2, (2, 3), (2, 2, 0, 1), windows)
    shaped = wrec_force_full(inst)
    assert shaped.forced == image(4, 2, (1, 1), (2, 1), (1, 2), (2, 2))
    assert shaped.rec == rec(2, 1, PAT_FREE, 4, 2, (0, 1), (0, 0, 0, 1), {(1, 1): 0})
    shaped = wrec_force_full(inst.replace(row_sums=(1, 3), col_sums=(2, 2, 0, 0)))
    assert shaped.rec is None
    assert wrec_force_full(inst.replace(t=PAT_ROWSINGLE)) is None
    assert wrec_force_full(inst.replace(windows={(1, 1): (REL_EQ, 4), (3, 1): (REL_LE, 2)})) is None
    assert wrec_force_full(inst.replace(windows={(1, 1): (REL_GE, 3), (3, 1): (REL_LE, 1)})) is None
    assert wrec_force_full(inst.replace(windows={(1, 1): (REL_GE, 4)})) is None


def test_solve_wrec_full_blocks():
    windows = {(1, 1): (REL_GE, 4), (3, 1): (REL_LE, 1)}
    inst = WRecInstance(2, PAT_FREE, 4, 2, (2, 3), (2, 2, 0, 1), windows)
    expected = image(4, 2, (1, 1), (2, 1), (1, 2), (2, 2), (4, 2))
    result = solve_wrec(inst)
    assert result.method == METHOD_K10 and result.image == expected
    assert solve_wrec(inst, METHOD_K10).image == expected
    result = solve_wrec(t1_invert(inst))
    assert result.method == METHOD_K10 and result.image == expected.complement()
    result = solve_wrec(inst.replace(row_sums=(1, 3), col_sums=(2, 2, 0, 0)))
    assert result.status == STATUS_INFEASIBLE and result.method == METHOD_K10
    with pytest.raises(InputError):
        solve_wrec(inst, METHOD_KV2)


def test_full_blocks_match_oracle():
    rng = numpy.random.default_rng(31)
    statuses = set()
    for index in range(120):
        m, n = int(rng.choice((2, 4, 6))), int(rng.choice((2, 4, 6)))
        inst, x = full_block_case(rng, m, n)
        if index % 2:
            inst = t1_invert(inst)
        perturbed = index % 3 == 2
        if perturbed:
            inst = balanced_perturbation(inst, rng)
        result = solve_wrec(inst, limits=BIG)
        found = oracle_solve(inst, BIG)
        assert found.status != STATUS_LIMIT
        assert result.status == found.status, inst
        if not perturbed:
            assert result.feasible and result.method == METHOD_K10
        statuses.add(result.status)
    assert statuses == {STATUS_FEASIBLE, STATUS_INFEASIBLE}


def test_full_blocks_beyond_oracle_size():
    rng = numpy.random.default_rng(32)
    for _ in range(5):
        inst, x = full_block_case(rng, 8, 8)
        for case in (inst, t1_invert(inst)):
            result = solve_wrec(case)
            assert result.method == METHOD_K10
            assert verify_wrec(case, result.image).feasible


def test_solve_wrec_single_cells():
    rng = numpy.random.default_rng(33)
    for _ in range(10):
        x = random_image(rng, 7, 6)
        windows = {cell: (REL_LE, int(rng.integers(1, 3))) for cell in corner_points(7, 6, 1)}
        inst = WRecInstance(1, PAT_FREE, 7, 6, x.row_sums(), x.col_sums(), windows)
        assert wrec_to_rec(inst).nu == 1
        result = solve_wrec(inst)
        assert result.method == METHOD_REC1 and result.feasible


# oracle

def test_oracle_examples():
    found = oracle_solve(rec(2, 1, 1, 2, 2, (1, 0), (1, 0)))
    assert found.status == STATUS_FEASIBLE and found.image == image(2, 2, (1, 1))
    found = oracle_solve(rec(2, 2, 0, 2, 2, (1, 1), (2, 0)))
    assert found.image == image(2, 2, (1, 1), (1, 2))
    found = oracle_solve(rec(2, 1, 0, 2, 2, (1, 0), (0, 0)))
    assert found.status == STATUS_INFEASIBLE and found.nodes == 0
    assert oracle_solve(rec(1, 1, 0, 7, 6, (0,) * 6, (0,) * 7)).status == STATUS_LIMIT


def test_oracle_enumerate():
    solutions = oracle_enumerate(rec(1, 1, 0, 2, 2, (1, 1), (1, 1)))
    assert solutions == [image(2, 2, (2, 1), (1, 2)), image(2, 2, (1, 1), (2, 2))]
    assert oracle_enumerate(rec(2, 1, 1, 2, 2, (1, 0), (1, 0))) == [image(2, 2, (1, 1))]
    assert oracle_enumerate(rec(2, 1, 0, 4, 2, (0, 0), (0,) * 4)) == [BinaryImage.zeros(4, 2)]
    assert len(oracle_enumerate(rec(1, 1, 0, 3, 3, (1, 1, 1), (1, 1, 1)), cap=4)) == 4
    with pytest.raises(ResourceError):
        oracle_enumerate(rec(1, 1, 0, 7, 6, (0,) * 6, (0,) * 7))
    with pytest.raises(ResourceError):
        oracle_enumerate(rec(1, 1, 0, 3, 3, (1, 1, 1), (1, 1, 1)), OracleLimits(max_nodes=5))


def test_oracle_determinism():
    inst, witness = gen_planted(4, 4, 2, 2, PAT_ROWSINGLE, Fraction(3, 4), 9)
    first, second = oracle_solve(inst), oracle_solve(inst)
    assert first == second
    assert verify_rec(inst, first.image).feasible


def test_oracle_limits_from_env():
    assert OracleLimits.from_env({}).max_nodes == ORACLE_MAX_NODES
    assert OracleLimits.from_env({ENV_MAX_NODES: '500'}).max_nodes == 500
    assert OracleLimits.from_env({ENV_MAX_NODES: '500'}, max_nodes=7).max_nodes == 7
    with pytest.raises(InputError):
        OracleLimits.from_env({ENV_MAX_NODES: 'many'})
    with pytest.raises(InputError):
        OracleLimits(max_cells=0)


def exhaustive_corpus():
    rng = numpy.random.default_rng(21)
    planted = [
        (2, 2, 1, 1, 0), (3, 3, 1, 1, 2), (4, 3, 1, 2, 1), (4, 4, 2, 1, 0),
        (4, 4, 2, 1, 1), (4, 4, 2, 2, 2), (4, 2, 2, 2, 0), (2, 4, 2, 1, 1),
        (3, 3, 3, 2, 0), (2, 6, 2, 1, 0), (6, 2, 2, 3, 2), (3, 3, 3, 1, 1),
    ]
    for seed, (m, n, k, nu, t) in enumerate(planted):
        inst, witness = gen_planted(m, n, k, nu, t, Fraction(1, 2), seed)
        yield inst if seed % 4 else balanced_perturbation(inst, rng)
    shapes = [
        (2, PAT_FREE, 4, 2, {(1, 1): (REL_EQ, 1), (2, 1): (REL_EQ, 1), (3, 1): (REL_LE, 1)}),
        (2, PAT_ROWSINGLE, 4, 4, {(1, 1): (REL_LE, 2), (2, 2): (REL_GE, 1)}),
        (2, PAT_ROWFULL, 4, 4, {(1, 1): (REL_GE, 2), (3, 3): (REL_LE, 3), (2, 2): (REL_EQ, 3)}),
        (2, PAT_FREE, 4, 2, {(1, 1): (REL_GE, 2), (2, 1): (REL_LE, 1), (3, 1): (REL_GE, 1)}),
        (3, PAT_CORNER, 3, 3, {(1, 1): (REL_LE, 1)}),
        (2, PAT_CORNER, 4, 2, {(1, 1): (REL_LE, 1), (2, 1): (REL_LE, 1), (3, 1): (REL_LE, 1)}),
        (1, PAT_FREE, 4, 3, {(1, 1): (REL_EQ, 1), (4, 3): (REL_EQ, 0)}),
        (2, PAT_ROWSINGLE, 2, 6, {(1, 1): (REL_LE, 1), (1, 3): (REL_GE, 2), (1, 5): (REL_LE, 2)}),
    ]
    for k, t, m, n, windows in shapes:
        x = random_image(rng, m, n)
        yield WRecInstance(k, t, m, n, x.row_sums(), x.col_sums(), windows)


def test_oracle_exhaustive_baseline():
    corpus = list(exhaustive_corpus())
    assert len(corpus) == 20
    for inst in corpus:
        assert inst.m * inst.n <= 16
        assert set(oracle_enumerate(inst)) == naive_solutions(inst), inst


# reductions

def test_three_color_to_rec():
    tc = ThreeColorInstance(1, 1, (1,), (0,), (1,), (0,))
    inst = three_color_to_rec(tc)
    assert (inst.k, inst.nu, inst.t, inst.m, inst.n) == (2, 1, PAT_CORNER, 2, 2)
    assert inst.row_sums == (1, 0) and inst.col_sums == (1, 0)
    assert inst.block_values == {(1, 1): 1}
    assert oracle_solve(inst).status == STATUS_FEASIBLE
    assert oracle_three_color(tc).status == STATUS_FEASIBLE
    tc = ThreeColorInstance(1, 1, (1,), (1,), (1,), (1,))
    assert three_color_to_rec(tc).row_sums == (1, 1)
    assert oracle_solve(three_color_to_rec(tc)).status == STATUS_INFEASIBLE
    assert oracle_three_color(tc).status == STATUS_INFEASIBLE


def test_decode_three_color():
    sol = decode_three_color(image(2, 2, (1, 1)))
    assert sol.xi1.ones() == [(1, 1)] and sol.xi2.ones() == []
    sol = decode_three_color(image(2, 2, (2, 2)))
    assert sol.xi1.ones() == [] and sol.xi2.ones() == [(1, 1)]
    sol = decode_three_color(BinaryImage.zeros(2, 2))
    assert not sol.xi1.ones() and not sol.xi2.ones()
    with pytest.raises(InputError):
        decode_three_color(image(2, 2, (2, 1)))
    tc, witness = gen_three_color(3, 2, 0.7, 4)
    assert decode_three_color(encode_three_color(tc, witness)) == witness
    assert verify_rec(three_color_to_rec(tc), encode_three_color(tc, witness)).feasible


def three_color_corpus(count, seed):
    rng = numpy.random.default_rng(seed)
    for index in range(count):
        m, n = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        tc, witness = gen_three_color(m, n, float(rng.random()), seed * 10000 + index)
        kind = index % 3
        if kind:
            sums = [list(tc.r1), list(tc.r2), list(tc.c1), list(tc.c2)]
            color = int(rng.integers(2))
            q, p = int(rng.integers(n)), int(rng.integers(m))
            step = -1 if sums[color][q] and sums[2 + color][p] and rng.random() < 0.5 else 1
            sums[color][q] += step
            if kind == 2:
                sums[2 + color][p] += step
            tc = ThreeColorInstance(m, n, *sums)
        yield tc


def test_three_color_reduction_equivalence():
    feasible = 0
    for tc in three_color_corpus(510, 6):
        source = oracle_three_color(tc)
        target = oracle_solve(three_color_to_rec(tc))
        assert STATUS_LIMIT not in (source.status, target.status)
        assert source.status == target.status, tc
        if target.status == STATUS_FEASIBLE:
            feasible += 1
            assert verify_three_color(tc, decode_three_color(target.image)).feasible
            assert verify_three_color(tc, source.solution).feasible
    assert 0 < feasible < 510


def test_pad_to_k():
    inst = rec(2, 1, 0, 2, 2, (1, 0), (1, 0))
    assert pad_to_k(inst, 2) == inst
    padded = pad_to_k(inst, 4)
    assert (padded.k, padded.m, padded.n) == (4, 4, 4)
    assert padded.row_sums == (1, 0, 0, 0)
    corner = rec(2, 1, PAT_CORNER, 2, 2, (0, 1), (0, 1))
    assert pad_to_k(corner, 4).row_sums == (0, 0, 0, 1)


def test_pad_to_k_equivalence():
    rng = numpy.random.default_rng(8)
    for index in range(54):
        t = index % 3
        m, n = 2 * int(rng.integers(1, 3)), 2 * int(rng.integers(1, 3))
        nu = 1 if t == PAT_CORNER else int(rng.integers(1, 3))
        inst, witness = gen_planted(m, n, 2, nu, t, Fraction(1, 2), index)
        if index % 2:
            inst = balanced_perturbation(inst, rng)
        else:
            assert verify_rec(pad_to_k(inst, 4), pad_embed(witness, 4, t)).feasible
            assert pad_extract(pad_embed(witness, 4, t), 4, t) == witness
        padded = pad_to_k(inst, 4)
        source, target = oracle_solve(inst, BIG), oracle_solve(padded, BIG)
        assert source.status == target.status, inst
        if target.status == STATUS_FEASIBLE:
            assert verify_rec(inst, pad_extract(target.image, 4, t)).feasible


def test_t1_examples():
    inst = WRecInstance(2, PAT_ROWSINGLE, 4, 4, (1, 0, 2, 1), (0, 1, 2, 1),
                        {(1, 1): (REL_LE, 1), (2, 2): (REL_GE, 1), (3, 3): (REL_EQ, 2)})
    inverted = t1_invert(inst)
    assert inverted.t == PAT_ROWFULL
    assert inverted.row_sums == (3, 4, 2, 3)
    assert inverted.col_sums == (4, 3, 2, 3)
    assert inverted.windows == {
        (1, 1): (REL_GE, 3), (2, 2): (REL_LE, 3), (3, 3): (REL_EQ, 2)}
    assert t1_invert(inverted) == inst
    with pytest.raises(UnsupportedClassError):
        t1_invert(inst.replace(t=PAT_CORNER))
    with pytest.raises(InputError):
        t1_invert(inst.replace(windows={(1, 1): (REL_LE, 5)}))
    with pytest.raises(InputError):
        t1_invert(inst.replace(row_sums=(5, 0, 0, 0)))


@st.composite
def wrec_and_image(draw):
    t = draw(st.sampled_from((PAT_FREE, PAT_ROWSINGLE, PAT_ROWFULL)))
    k = draw(st.integers(1 if t == PAT_FREE else 2, 3))
    m = k * draw(st.integers(1, 6 // k))
    n = k * draw(st.integers(1, 6 // k))
    bits = draw(st.lists(st.integers(0, 1), min_size=m * n, max_size=m * n))
    x = BinaryImage(numpy.array(bits, dtype=numpy.uint8).reshape(n, m))
    if draw(st.booleans()):
        rows, cols = x.row_sums(), x.col_sums()
    else:
        rows = draw(st.lists(st.integers(0, m), min_size=n, max_size=n))
        cols = draw(st.lists(st.integers(0, n), min_size=m, max_size=m))
    anchors = draw(st.sets(
        st.tuples(st.integers(1, m - k + 1), st.integers(1, n - k + 1)), max_size=6))
    windows = {}
    for anchor in sorted(anchors):
        windows[anchor] = (draw(st.sampled_from(RELATIONS)), draw(st.integers(0, k * k)))
    return WRecInstance(k, t, m, n, rows, cols, windows), x


@settings(max_examples=250, deadline=None)
@given(wrec_and_image())
def test_t1_complement_bijection(case):
    inst, x = case
    inverted = t1_invert(inst)
    assert t1_invert(inverted) == inst
    report = verify_wrec(inst, x)
    flipped = verify_wrec(inverted, x.complement())
    assert report.feasible == flipped.feasible
    assert len(report) == len(flipped)


def padding_sources(count, seed):
    rng = numpy.random.default_rng(seed)
    for index in range(count):
        m, n = 2 * int(rng.integers(1, 3)), 2 * int(rng.integers(1, 3))
        x = random_image(rng, m, n, float(rng.random()))
        windows = {}
        for corner in corner_points(m, n, 2):
            if rng.random() < 0.7:
                rel = RELATIONS[int(rng.integers(3))]
                windows[corner] = (rel, int(rng.integers(0, 5)))
        inst = WRecInstance(2, PAT_FREE, m, n, x.row_sums(), x.col_sums(), windows)
        if index % 2:
            inst = balanced_perturbation(inst, rng)
        yield inst, x


def test_t2_t3_examples():
    inst = WRecInstance(2, 0, 2, 2, (1, 0), (0, 1), {(1, 1): (REL_LE, 1)})
    assert t2_zero_pad(inst, 2) == inst
    assert t3_one_pad(inst, 2) == inst
    zero = t2_zero_pad(inst, 4)
    assert zero.row_sums == (1, 0, 0, 0) and zero.col_sums == (0, 1, 0, 0)
    assert zero.windows == {(1, 1): (REL_LE, 1)}
    one = t3_one_pad(inst, 4)
    assert one.windows == {(1, 1): (REL_LE, 13)}
    assert one.row_sums == (3, 2, 4, 4) and one.col_sums == (2, 3, 4, 4)
    x = image(2, 2, (2, 1))
    assert verify_wrec(one, t3_embed(x, 4)).feasible
    assert verify_wrec(zero, t2_embed(x, 4)).feasible
    with pytest.raises(InputError):
        t2_zero_pad(inst.replace(t=PAT_ROWSINGLE), 4)
    with pytest.raises(InputError):
        t3_one_pad(WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, {(2, 1): (REL_LE, 1)}), 4)


def check_padding(pad, embed, extract, seed):
    for inst, x in padding_sources(52, seed):
        target = pad(inst, 4)
        if verify_wrec(inst, x).feasible:
            assert verify_wrec(target, embed(x, 4)).feasible
        assert extract(embed(x, 4), 4) == x
        source_found, target_found = oracle_solve(inst, BIG), oracle_solve(target, BIG)
        assert STATUS_LIMIT not in (source_found.status, target_found.status)
        assert source_found.status == target_found.status, inst
        if target_found.status == STATUS_FEASIBLE:
            assert verify_wrec(inst, extract(target_found.image, 4)).feasible


def test_t2_equivalence():
    check_padding(t2_zero_pad, t2_embed, t2_extract, 12)


def test_t3_equivalence():
    check_padding(t3_one_pad, t3_embed, t3_extract, 13)


# io

REC_TEXT = '''REC
k 2 nu 1 t 0
m 2 n 2
R 1 0
C 0 1
V
1 1 1
END
'''


def test_parse_instance():
    inst = parse_instance(REC_TEXT)
    assert inst == rec(2, 1, 0, 2, 2, (1, 0), (0, 1))
    assert serialize_instance(inst) == REC_TEXT
    with pytest.raises(ParseError) as e:
        parse_instance(REC_TEXT.replace('1 1 1', '1 1 2'))
    assert e.value.lineno == 7
    wrec_text = 'WREC\nk 2 t 0\nm 2 n 2\nR 0 0\nC 0 0\nW\n2 1 <= 1\nEND\n'
    with pytest.raises(ParseError) as e:
        parse_instance(wrec_text)
    assert str(e.value).startswith('line 7:')
    with pytest.raises(ParseError):
        parse_instance(REC_TEXT.replace('R 1 0', 'R 1'))
    with pytest.raises(ParseError):
        parse_instance(REC_TEXT.replace('m 2 n 2', 'm 3 n 2'))
    with pytest.raises(ParseError):
        parse_instance(REC_TEXT + 'extra\n')
    commented = '# planted\n' + REC_TEXT
    assert parse_instance(commented) == inst


def test_instance_round_trip():
    for seed in range(30):
        inst, witness = gen_planted(4, 6, 2, 2, seed % 3, Fraction(1, 2), seed)
        assert parse_instance(serialize_instance(inst)) == inst
        wrec = t1_invert(rec_to_wrec(inst)) if inst.t != PAT_CORNER else rec_to_wrec(inst)
        assert parse_instance(serialize_instance(wrec)) == wrec
    tc, witness = gen_three_color(3, 2, 0.5, 1)
    assert parse_three_color(serialize_instance(tc)) == tc
    with pytest.raises(ParseError):
        parse_three_color(REC_TEXT)


def test_solutions():
    x = image(2, 2, (2, 1))
    assert write_solution(x) == 'SOL 2 2\n00\n01\n'
    assert write_solution(BinaryImage.zeros(3, 1)) == 'SOL 3 1\n000\n'
    assert parse_solution('SOL 2 2\n00\n01\n') == x
    rng = numpy.random.default_rng(2)
    for _ in range(20):
        x = random_image(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        assert parse_solution(write_solution(x)) == x
    with pytest.raises(ParseError):
        parse_solution('SOL 2 2\n00\n0x\n')
    with pytest.raises(ParseError):
        parse_solution('SOL 2 2\n00\n')


def test_generator():
    inst, witness = gen_planted(4, 4, 2, 1, 0, 0, 3)
    assert witness == BinaryImage.zeros(4, 4) and sum(inst.row_sums) == 0
    inst, witness = gen_planted(4, 4, 2, 1, PAT_CORNER, 1, 5)
    for i, j in inst.corners():
        assert pattern_of(witness, i, j, 2) in ({(0, 0)}, {(1, 1)})
    for seed in range(40):
        inst, witness = gen_planted(6, 6, 3, 2, seed % 3, Fraction(seed % 5, 4), seed)
        assert verify_rec(inst, witness).feasible
        assert gen_planted(6, 6, 3, 2, seed % 3, Fraction(seed % 5, 4), seed) == (inst, witness)
        shifted = gen_perturbed(inst, seed)
        moved = [a - b for a, b in zip(shifted.row_sums + shifted.col_sums,
                                       inst.row_sums + inst.col_sums)]
        assert sorted(map(abs, moved))[-1] == 1 and sum(map(abs, moved)) == 1
    tc, witness = gen_three_color(3, 3, 0.5, 2)
    assert verify_three_color(tc, witness).feasible


def test_generator_large_blocks():
    inst, witness = gen_planted(5, 5, 5, 1, PAT_FREE, Fraction(1, 2), 1)
    assert verify_rec(inst, witness).feasible
    for seed in range(10):
        for m, n, k, nu, t in ((10, 5, 5, 3, PAT_ROWSINGLE), (10, 10, 5, 1, PAT_CORNER),
                               (6, 6, 6, 20, PAT_FREE)):
            inst, witness = gen_planted(m, n, k, nu, t, Fraction(3, 4), seed)
            assert verify_rec(inst, witness).feasible
            for i, j in inst.corners():
                assert witness.window_sum(i, j, k) <= nu
    with pytest.raises(InputError):
        gen_planted(7, 5, 5, 1, PAT_FREE, 1, 0)


def test_render():
    x = image(2, 2, (1, 2))
    assert render(x, FMT_ASCII) == '#.\n..\n'
    data = render(BinaryImage.zeros(4, 2), FMT_PGM)
    assert data.startswith(b'P5\n4 2\n255\n')
    assert data[len(b'P5\n4 2\n255\n'):] == bytes([255] * 8)
    data = render(x, FMT_PGM)
    assert data.endswith(bytes([0, 255, 255, 255]))
    with pytest.raises(InputError):
        render(x, 'png')


# cli

def run(*args):
    out, err = io.StringIO(), io.StringIO()
    rc = TomoCtl(stdout=out, stderr=err).main(list(args))
    return rc, out.getvalue(), err.getvalue()


def test_cli_solve_and_verify():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'a.rec')
        log = os.path.join(tmp, 'tomo.log')
        with open(path, 'w') as f:
            f.write(REC_TEXT)
        rc, out, err = run('solve', path, '-logfile', log)
        assert rc == RC_OKAY and out == 'SOL 2 2\n00\n01\n'
        with open(log) as f:
            assert 'feasible by k10' in f.read()
        sol = os.path.join(tmp, 'a.sol')
        rc, out, err = run('solve', path, '-out', sol, '-logfile', log)
        assert rc == RC_OKAY and out == ''
        rc, out, err = run('verify', path, sol, '-logfile', log)
        assert rc == RC_OKAY and out == 'VALID\n'
        with open(sol, 'w') as f:
            f.write('SOL 2 2\n01\n00\n')
        rc, out, err = run('verify', path, sol, '-logfile', log)
        assert rc == RC_INFEASIBLE and out.startswith('INVALID\n')

        bad = os.path.join(tmp, 'b.rec')
        with open(bad, 'w') as f:
            f.write(REC_TEXT.replace('R 1 0', 'R 1 1'))
        rc, out, err = run('solve', path, bad, '-logfile', log)
        assert rc == RC_INFEASIBLE and out.endswith('INFEASIBLE\n')
        with open(bad, 'w') as f:
            f.write(REC_TEXT.replace('1 1 1', '1 1 2'))
        rc, out, err = run('solve', path, bad, '-logfile', log)
        assert rc == RC_BADINPUT and 'line 7' in err


def test_cli_oracle_and_limits():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'a.rec')
        log = os.path.join(tmp, 'tomo.log')
        with open(path, 'w') as f:
            f.write(serialize_instance(rec(2, 2, 0, 2, 2, (1, 1), (2, 0))))
        rc, out, err = run('solve', path, '-max-nodes', '1', '-logfile', log)
        assert rc == RC_LIMIT and out == 'LIMIT\n'
        rc, out, err = run('oracle', path, '-logfile', log)
        assert rc == RC_OKAY and out == write_solution(image(2, 2, (1, 1), (1, 2)))
        with open(path, 'w') as f:
            f.write(serialize_instance(rec(1, 1, 0, 2, 2, (1, 1), (1, 1))))
        rc, out, err = run('oracle', path, '-enumerate', '5', '-logfile', log)
        assert rc == RC_OKAY and out.startswith('COUNT 2\n')
        rc, out, err = run('oracle', path, '-enumerate', '5', '-max-nodes', '2', '-logfile', log)
        assert rc == RC_LIMIT


def test_cli_transform_reduce_gen_render():
    with tempfile.TemporaryDirectory() as tmp:
        log = os.path.join(tmp, 'tomo.log')
        tcol = os.path.join(tmp, 'a.tcol')
        tc = ThreeColorInstance(2, 1, (1,), (1,), (1, 0), (0, 1))
        with open(tcol, 'w') as f:
            f.write(serialize_instance(tc))
        rc, out, err = run('reduce', 'three-color', tcol, '-logfile', log)
        assert rc == RC_OKAY and parse_instance(out) == three_color_to_rec(tc)

        wrec = os.path.join(tmp, 'a.wrec')
        inst = WRecInstance(2, PAT_ROWSINGLE, 2, 2, (1, 0), (0, 1), {(1, 1): (REL_LE, 1)})
        with open(wrec, 'w') as f:
            f.write(serialize_instance(inst))
        rc, out, err = run('transform', 'invert', wrec, '-logfile', log)
        assert rc == RC_OKAY and parse_instance(out) == t1_invert(inst)
        rc, out, err = run('transform', 'one-pad', '-k', '4', wrec, '-logfile', log)
        assert rc == RC_BADINPUT
        rc, out, err = run('transform', 'rotate', wrec, '-logfile', log)
        assert rc == RC_BADINPUT

        prefix = os.path.join(tmp, 'planted')
        rc, out, err = run('gen', '-m', '4', '-n', '4', '-k', '2', '-nu', '1', '-t', '0',
                           '-density', '1/2', '-seed', '3', '-out-prefix', prefix,
                           '-logfile', log)
        assert rc == RC_OKAY
        rc, out, err = run('verify', prefix + '.rec', prefix + '.sol', '-logfile', log)
        assert rc == RC_OKAY
        rc, out, err = run('gen', '-m', '4', '-n', '4', '-k', '2', '-seed', '3', '-logfile', log)
        assert rc == RC_OKAY
        assert parse_instance(out) == gen_planted(4, 4, 2, 1, 0, Fraction(1, 2), 3)[0]

        pgm = os.path.join(tmp, 'planted.pgm')
        rc, out, err = run('render', prefix + '.sol', '-format', 'pgm', '-out', pgm,
                           '-logfile', log)
        assert rc == RC_OKAY
        with open(pgm, 'rb') as f:
            assert f.read().startswith(b'P5\n4 4\n255\n')
        rc, out, err = run('render', prefix + '.sol', '-logfile', log)
        assert rc == RC_OKAY and len(out.splitlines()) == 4


def test_cli_usage():
    rc, out, err = run('-help')
    assert rc == RC_OKAY and out.startswith('usage:')
    rc, out, err = run('-Version')
    assert rc == RC_OKAY and ME in out and out == TomoCtl.VERS + '\n'
    assert run()[0] == RC_BADINPUT
    assert run('frobnicate')[0] == RC_BADINPUT
    assert run('solve', '-bogus', 'x')[0] == RC_BADINPUT


def test_get_options():
    opts = {'k': 0, 'out': '', 'help': False}
    parsed, operands = CommonMixin().get_options(opts, ['transform', '-k', '4', 'a', '--help'])
    assert parsed == {'k': 4, 'out': '', 'help': True}
    assert operands == ['transform', 'a']
    assert CommonMixin().get_options(opts, ['-k', 'four']) is None
    assert CommonMixin().get_options(opts, ['-out']) is None
    assert CommonMixin().get_options(opts, ['-x']) is None


def test_config():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'blocktomo.conf')
        with open(path, 'w') as f:
            f.write('# comment\nmax_nodes 1000\nmethod oracle\n; note\ncolour blue\n')
        conf = ConfMixin()
        config = conf.loadconfig(path, environ={})
        assert config['max_nodes'] == 1000 and config['method'] == 'oracle'
        assert config['max_cells'] == TOMOCONFIG['max_cells']
        assert conf.unknown_keys == ['colour']
        config = conf.loadconfig(path, environ={ENV_MAX_NODES: '77'})
        assert config['max_nodes'] == 77
        with open(path, 'w') as f:
            f.write('max_cells lots\n')
        with pytest.raises(InputError):
            conf.loadconfig(path, environ={})


def test_log_levels():
    mixin = TomoLogMixin()
    assert mixin.tomolog_num('phase') == LOG.PHASE
    assert mixin.tomolog_num('8') == LOG.ERR
    assert mixin.tomolog_num('loud') == -1
    assert mixin.tomolog_level('tmi', False) == LOG.TMI
    assert mixin.tomolog_level('loud', False) == -1
    assert mixin.tomolog_settz('local') == 'local'
    assert mixin.tomolog_settz('mars') == ''


GROUPS = {
    'grid': (
        test_corner_points, test_window_cells_and_blocks, test_binary_image,
        test_pattern_of, test_pattern_member, test_pattern_counts,
        test_pattern_complement_classes, test_strip_rank,
        test_region_and_projections, test_instance_validation,
        test_verify_rec, test_verify_wrec, test_verify_dr1,
        test_verify_three_color, test_verify_rec_against_numpy,
        test_verify_rec_after_removing_a_one),
    'solvers': (
        test_transport_examples, test_transport_against_naive,
        test_transport_relaxation_keeps_feasible, test_transport_determinism,
        test_dr1_feasible, test_dr1_construct, test_strip_ranks_match_strip_rank,
        test_dr1_oracle_equivalence, test_classify, test_solve_rec1,
        test_solve_rec_k10, test_solve_rec_kv2, test_solve_dispatch,
        test_rec1_matches_oracle, test_k10_matches_oracle, test_kv2_matches_oracle,
        test_k10_scaling, test_solve_wrec, test_wrec_rec_shapes,
        test_wrec_force_full, test_solve_wrec_full_blocks,
        test_full_blocks_match_oracle, test_full_blocks_beyond_oracle_size,
        test_solve_wrec_single_cells),
    'oracle': (
        test_oracle_examples, test_oracle_enumerate, test_oracle_determinism,
        test_oracle_limits_from_env, test_oracle_exhaustive_baseline),
    'reductions': (
        test_three_color_to_rec, test_decode_three_color,
        test_three_color_reduction_equivalence, test_pad_to_k,
        test_pad_to_k_equivalence, test_t1_examples, test_t1_complement_bijection,
        test_t2_t3_examples, test_t2_equivalence, test_t3_equivalence),
    'io': (
        test_parse_instance, test_instance_round_trip, test_solutions,
        test_generator, test_generator_large_blocks, test_render),
    'cli': (
        test_cli_solve_and_verify, test_cli_oracle_and_limits,
        test_cli_transform_reduce_gen_render, test_cli_usage, test_get_options,
        test_config, test_log_levels),
}


if __name__ == '__main__':
    started = False

    for name, tests in sorted(GROUPS.items()):
        if name in sys.argv or 'all' in sys.argv:
            started = True
            for test in tests:
                test()
            print('%s: %d tests passed' % (name, len(tests)))

    if not started:
        print('Usage: ./tests.py <%s|all>' % '|'.join(sorted(GROUPS)))
