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

import logging
import types

from .defs import *
from .dr1 import DR1Instance, dr1_construct, dr1_feasible
from .errors import ContractError, InputError
from .flow import TransportProblem, solve_transport
from .grid import BinaryImage, RecInstance, WRecInstance, check_count
from .oracle import OracleLimits, oracle_solve
from .reductions import t1_invert, wrec_force_full, wrec_to_rec
from .verifier import verify_rec, verify_wrec

LOG = logging.getLogger('blocktomo')


class SolveResult(object):
    '''
    Outcome of a solve: a status, the method that produced it, the image
    for FEASIBLE results, the block occupancy for K10 results and the node
    count for oracle results.
    '''
    __slots__ = ('_status', '_method', '_image', '_occupancy', '_nodes')

    def __init__(self, status, method, image=None, occupancy=None, nodes=None):
        if (status == STATUS_FEASIBLE) != (image is not None):
            raise ContractError('a %s result with image %r' % (status, image))
        self._status = status
        self._method = method
        self._image = image
        self._occupancy = occupancy
        self._nodes = nodes

    status = property(lambda self: self._status)
    method = property(lambda self: self._method)
    image = property(lambda self: self._image)
    occupancy = property(lambda self: self._occupancy)
    nodes = property(lambda self: self._nodes)
    feasible = property(lambda self: self._status == STATUS_FEASIBLE)

    def __repr__(self):
        return 'SolveResult(%s, %s, %r)' % (self._status, self._method, self._image)


class BlockOccupancy(object):
    '''
    eta: which blocks hold a 1, defined on exactly the corner points.
    '''
    __slots__ = ('_k', '_eta')

    def __init__(self, k, eta):
        self._k = check_count('k', k, 1)
        for corner, value in eta.items():
            if value not in (0, 1):
                raise InputError('occupancy of %r must be 0 or 1, got %r' % (corner, value))
        self._eta = types.MappingProxyType(dict(eta))

    k = property(lambda self: self._k)
    eta = property(lambda self: self._eta)

    @classmethod
    def from_image(cls, x, k):
        '''
        eta* of a solution with at most one 1 per block.
        '''
        eta = {}
        for j in range(1, x.n + 1, k):
            for i in range(1, x.m + 1, k):
                eta[(i, j)] = x.window_sum(i, j, k)
        return cls(k, eta)

    def selected(self):
        return frozenset(corner for corner, value in self._eta.items() if value)

    def __eq__(self, other):
        if not isinstance(other, BlockOccupancy):
            return NotImplemented
        return self._k == other._k and dict(self._eta) == dict(other._eta)

    def __repr__(self):
        return 'BlockOccupancy(k=%d, I=%r)' % (self._k, sorted(self.selected()))


def classify(inst):
    '''
    @type inst: RecInstance
    @returns: METHOD_REC1, METHOD_K10, METHOD_KV2 or METHOD_UNKNOWN
    '''
    if inst.k == 1:
        return METHOD_REC1
    if inst.nu == 1 and inst.t == PAT_FREE:
        return METHOD_K10
    if inst.t == PAT_ROWSINGLE and inst.nu >= inst.k:
        return METHOD_KV2
    return METHOD_UNKNOWN


def _result(method, image):
    if image is None:
        return SolveResult(STATUS_INFEASIBLE, method)
    return SolveResult(STATUS_FEASIBLE, method, image)


def solve_rec1(inst):
    '''
    k=1: blocks are single cells, so v=0 forbids a cell and every pattern
    class admits both cell values.

    @type inst: RecInstance
    @rtype: SolveResult
    '''
    if inst.k != 1:
        raise InputError('rec1 needs k=1, got k=%d' % inst.k)
    forbidden = [cell for cell, v in inst.block_values.items() if v == 0]
    tp = TransportProblem(inst.m, inst.n, inst.row_sums, inst.col_sums, forbidden)
    return _result(METHOD_REC1, solve_transport(tp))


def _strip_sums(sums, k):
    return [sum(sums[s:s + k]) for s in range(0, len(sums), k)]


def solve_rec_k10(inst):
    '''
    k >= 2, nu = 1, t = 0 in two steps. Step 1 picks the occupied blocks
    eta* from the strip sums on the block grid, with eta forced to 0 where
    v = 0. Step 2 places the single 1 of every occupied block with the
    DR(1) construction.

    @type inst: RecInstance
    @rtype: SolveResult
    '''
    if classify(inst) != METHOD_K10:
        raise InputError('k10 needs k>=2, nu=1, t=0; got %r' % (inst,))
    k = inst.k
    forbidden = [((i - 1) // k + 1, (j - 1) // k + 1)
                 for (i, j), v in inst.block_values.items() if v == 0]
    blocks = TransportProblem(
        inst.m // k, inst.n // k,
        _strip_sums(inst.row_sums, k), _strip_sums(inst.col_sums, k), forbidden)
    eta_image = solve_transport(blocks)
    if eta_image is None:
        return SolveResult(STATUS_INFEASIBLE, METHOD_K10)
    eta = {(i, j): eta_image[((i - 1) // k + 1, (j - 1) // k + 1)] for i, j in inst.corners()}
    occupancy = BlockOccupancy(k, eta)
    selected = occupancy.selected()
    LOG.debug('k10: %d of %d blocks occupied', len(selected), len(eta))

    # Strips without an occupied block must have zero sums line by line.
    rows = set(j + l for i, j in selected for l in range(k))
    cols = set(i + l for i, j in selected for l in range(k))
    for q, r in enumerate(inst.row_sums, 1):
        if r and q not in rows:
            raise ContractError('row %d has sum %d outside every occupied strip' % (q, r))
    for p, c in enumerate(inst.col_sums, 1):
        if c and p not in cols:
            raise ContractError('column %d has sum %d outside every occupied strip' % (p, c))

    dr1 = DR1Instance.from_sums(k, inst.m, inst.n, selected, inst.row_sums, inst.col_sums)
    if not dr1_feasible(dr1):
        raise ContractError('DR(1) infeasible after block step: %r' % (dr1,))
    image = dr1_construct(dr1)
    return SolveResult(STATUS_FEASIBLE, METHOD_K10, image, occupancy=occupancy)


def solve_rec_kv2(inst):
    '''
    k >= 2, t = 2, nu >= k: block and pattern constraints become box
    constraints, at most min(1, v) ones in each block row.

    @type inst: RecInstance
    @rtype: SolveResult
    '''
    if classify(inst) != METHOD_KV2:
        raise InputError('kv2 needs k>=2, t=2, nu>=k; got %r' % (inst,))
    k = inst.k
    groups = []
    for (i, j), v in inst.block_values.items():
        for l in range(k):
            groups.append(([(i + a, j + l) for a in range(k)], min(1, v)))
    tp = TransportProblem(inst.m, inst.n, inst.row_sums, inst.col_sums, groups=groups)
    return _result(METHOD_KV2, solve_transport(tp))


_SOLVERS = {
    METHOD_REC1: solve_rec1,
    METHOD_K10: solve_rec_k10,
    METHOD_KV2: solve_rec_kv2,
}


def _oracle(inst, limits):
    found = oracle_solve(inst, limits or OracleLimits.from_env())
    return SolveResult(found.status, METHOD_ORACLE, found.image, nodes=found.nodes)


def solve(inst, method=METHOD_AUTO, limits=None):
    '''
    Solve a Rec instance. AUTO picks the polynomial method of the instance
    class and falls back to the oracle.

    @type inst: RecInstance
    @param method: one of METHODS
    @type limits: OracleLimits
    @rtype: SolveResult
    @raise InputError: the method does not apply to the instance
    '''
    if not isinstance(inst, RecInstance):
        raise InputError('solve expects a Rec instance, got %r' % (inst,))
    if method not in METHODS:
        raise InputError('unknown method %r' % (method,))
    kind = classify(inst)
    if method == METHOD_AUTO:
        method = kind if kind != METHOD_UNKNOWN else METHOD_ORACLE
    elif method != METHOD_ORACLE and method != kind:
        raise InputError('method %s does not apply to %r' % (method, inst))
    LOG.debug('solve: %dx%d k=%d nu=%d t=%d by %s',
              inst.m, inst.n, inst.k, inst.nu, inst.t, method)
    if method == METHOD_ORACLE:
        result = _oracle(inst, limits)
    else:
        result = _SOLVERS[method](inst)
    if result.feasible:
        report = verify_rec(inst, result.image)
        if not report.feasible:
            raise ContractError('%s returned an invalid image:\n%s' % (method, report))
    return result


def _solve_shaped(inst, method, limits):
    '''
    solve() on the Rec form of a WRec instance, or None if it has none.
    Blocks measured full are fixed to ones before the Rec form is built.
    '''
    rec = wrec_to_rec(inst)
    if rec is not None:
        return solve(rec, method, limits)
    shaped = wrec_force_full(inst)
    if shaped is None:
        return None
    if shaped.rec is None:
        kind = METHOD_REC1 if inst.k == 1 else METHOD_K10
        if method not in (METHOD_AUTO, kind):
            raise InputError('method %s does not apply to %r' % (method, inst))
        return SolveResult(STATUS_INFEASIBLE, kind)
    LOG.debug('solve_wrec: %d cells fixed by full blocks', len(shaped.forced.ones()))
    result = solve(shaped.rec, method, limits)
    if not result.feasible:
        return result
    return SolveResult(
        STATUS_FEASIBLE, result.method, BinaryImage(result.image.bits | shaped.forced.bits),
        nodes=result.nodes)


def solve_wrec(inst, method=METHOD_AUTO, limits=None):
    '''
    Solve a WRec instance. Instances of Rec shape go to solve(), as do
    instances whose full blocks can be fixed first and instances whose
    color inversion has one of those shapes (the image is then
    complemented); everything else is left to the oracle.

    @type inst: WRecInstance
    @rtype: SolveResult
    '''
    if not isinstance(inst, WRecInstance):
        raise InputError('solve_wrec expects a WRec instance, got %r' % (inst,))
    if method not in METHODS:
        raise InputError('unknown method %r' % (method,))
    result = None
    if method != METHOD_ORACLE:
        result = _solve_shaped(inst, method, limits)
        if result is None and inst.t != PAT_CORNER:
            try:
                inverted = t1_invert(inst)
            except InputError:
                inverted = None
            if inverted is not None:
                result = _solve_shaped(inverted, method, limits)
            if result is not None:
                LOG.debug('solve_wrec: solved the color-inverted instance')
                if result.feasible:
                    result = SolveResult(
                        STATUS_FEASIBLE, result.method, result.image.complement(),
                        nodes=result.nodes)
        if result is None and method != METHOD_AUTO:
            raise InputError('method %s does not apply to %r' % (method, inst))
    if result is None:
        result = _oracle(inst, limits)
    if result.feasible:
        report = verify_wrec(inst, result.image)
        if not report.feasible:
            raise ContractError('%s returned an invalid image:\n%s' % (result.method, report))
    return result
