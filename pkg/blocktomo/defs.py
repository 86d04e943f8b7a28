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

ME = 'tomoctl'

# Pattern classes P(k,t).
PAT_FREE = 0  # Unconstrained.
PAT_CORNER = 1  # Empty block or a single 1 in the lower-left/upper-right corner.
PAT_ROWSINGLE = 2  # At most one 1 in each block row.
PAT_ROWFULL = 3  # At least k-1 ones in each block row.

REC_PATTERNS = (PAT_FREE, PAT_CORNER, PAT_ROWSINGLE)
WREC_PATTERNS = (PAT_FREE, PAT_CORNER, PAT_ROWSINGLE, PAT_ROWFULL)

# Enumerating 2^(k*k) subsets is only done up to this block side.
PATTERN_MAX_K = 4

# Window relations, spelled as in instance files.
REL_LE = '<='
REL_GE = '>='
REL_EQ = '='
RELATIONS = (REL_LE, REL_GE, REL_EQ)

# Strip axes for strip_rank().
VERTICAL = 'vertical'  # sigma_i(j): blocks below (i,j) in vertical strip i.
HORIZONTAL = 'horizontal'  # rho_j(i): blocks left of (i,j) in horizontal strip j.

# Solver methods.
METHOD_AUTO = 'auto'
METHOD_REC1 = 'rec1'  # k = 1
METHOD_K10 = 'k10'  # k >= 2, nu = 1, t = 0
METHOD_KV2 = 'kv2'  # k >= 2, t = 2, nu >= k
METHOD_ORACLE = 'oracle'
METHOD_UNKNOWN = 'unknown'
METHODS = (METHOD_AUTO, METHOD_REC1, METHOD_K10, METHOD_KV2, METHOD_ORACLE)

# Solve statuses.
STATUS_FEASIBLE = 'feasible'
STATUS_INFEASIBLE = 'infeasible'
STATUS_LIMIT = 'limit'

# Oracle budget defaults.
ORACLE_MAX_CELLS = 36
ORACLE_MAX_NODES = 10 ** 7
ENV_MAX_NODES = 'TOMO_MAX_NODES'

# Instance file headers.
HDR_REC = 'REC'
HDR_WREC = 'WREC'
HDR_TCOL = 'TCOL'
HDR_SOL = 'SOL'
HDR_END = 'END'

# Render formats.
FMT_ASCII = 'ascii'
FMT_PGM = 'pgm'
FORMATS = (FMT_ASCII, FMT_PGM)

# Transformations accepted by "tomoctl transform".
TRANSFORM_INVERT = 'invert'
TRANSFORM_ZEROPAD = 'zero-pad'
TRANSFORM_ONEPAD = 'one-pad'
TRANSFORM_PADK = 'pad-k'
TRANSFORMS = (TRANSFORM_INVERT, TRANSFORM_ZEROPAD, TRANSFORM_ONEPAD, TRANSFORM_PADK)

# The RC_ entities are the exit codes of tomoctl.
RC_OKAY = 0  # Feasible / valid.
RC_INFEASIBLE = 1  # Infeasible / invalid.
RC_BADINPUT = 2  # Input error.
RC_LIMIT = 3  # Resource limit.
