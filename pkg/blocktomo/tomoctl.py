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

import fractions
import logging
import sys

from .common import *
from .conf import *
from .defs import *
from .errors import InputError, ResourceError
from .generator import gen_planted
from .grid import RecInstance
from .oracle import OracleLimits, oracle_enumerate, oracle_solve
from .parsers.instance import (
    parse_three_color, read_instance, serialize_instance, write_instance)
from .parsers.solution import parse_solution, read_solution, write_solution
from .reductions import (
    pad_to_k, rec_to_wrec, t1_invert, t2_zero_pad, t3_one_pad, three_color_to_rec)
from .render import render
from .solvers import solve, solve_wrec
from .tomolog import *
from .verifier import verify_rec, verify_wrec

_STATUS_RC = {
    STATUS_FEASIBLE: RC_OKAY,
    STATUS_INFEASIBLE: RC_INFEASIBLE,
    STATUS_LIMIT: RC_LIMIT,
}


class TomoCtl(ConfMixin, TomoLogMixin, CommonMixin):
    NAME = ME
    VERS = NAME + ' version: 0.1.0'

    # Data required for command line options.
    opts = {
        'config': '',  # Configuration file.
        'logfile': '',  # Log file, "-" for stderr.
        'loglevel': '',  # Logging level.
        'method': '',  # Solver method.
        'out': '',  # Output file instead of stdout.
        'max-nodes': 0,  # Oracle node budget.
        'enumerate': 0,  # Enumerate up to this many solutions.
        'k': 0,  # Block side (gen) or target block side (transform).
        'm': 0,  # Grid width (gen).
        'n': 0,  # Grid height (gen).
        'nu': 1,  # Block value (gen).
        't': 0,  # Pattern class (gen).
        'density': '1/2',  # Occupied block ratio (gen).
        'seed': 0,  # Generator seed.
        'out-prefix': '',  # Write <P>.rec and <P>.sol (gen).
        'format': FMT_ASCII,  # Render format.
        'Version': False,  # Display the version number.
        'help': False,  # Give a usage message and exit.
    }

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.config = dict(TOMOCONFIG)

    def usage(self):
        print('''usage:  tomoctl [options] <command> [arguments]
commands:
\tsolve <file> [<file> ...] [-method auto|rec1|k10|kv2|oracle] [-max-nodes N] [-out F]
\tverify <instance> <solution>
\toracle <file> [-enumerate CAP] [-max-nodes N]
\treduce three-color <file>
\ttransform invert|zero-pad|one-pad|pad-k -k K <file>
\tgen -m M -n N -k K -nu NU -t T -density D -seed S [-out-prefix P]
\trender <solution> [-format ascii|pgm] [-out F]
options:
\t-config <file>\t\tconfiguration file
\t-logfile <logfile>\tset log file ("-" for stderr)
\t-loglevel <loglevel>\tset logging level
\t-Version\t\tdisplay version number
\t-help\t\t\thelp message''', file=self.stdout)
        return RC_OKAY

    def fail(self, msg, rc=RC_BADINPUT):
        print('%s: %s' % (self.NAME, msg), file=self.stderr)
        self.tomolog_log(LOG.ERR, '', msg)
        return rc

    def emit(self, data):
        '''
        Write command output to -out or stdout.
        '''
        out = self.opts['out']
        if out:
            mode = 'ab' if isinstance(data, bytes) else 'a'
            with open(out, mode) as f:
                f.write(data)
        elif isinstance(data, bytes):
            buffer = getattr(self.stdout, 'buffer', None)
            if buffer is None:
                self.stdout.write(data.decode('latin-1'))
            else:
                self.stdout.flush()
                buffer.write(data)
                buffer.flush()
        else:
            self.stdout.write(data)

    def limits(self):
        max_nodes = self.opts['max-nodes'] or self.config['max_nodes']
        return OracleLimits(self.config['max_cells'], max_nodes)

    def setup(self):
        self.config = self.loadconfig(self.opts['config'])
        level = self.opts['loglevel'] or self.config['loglevel']
        self.loglevel = self.tomolog_level(level, True)
        self.usetz = self.tomolog_settz(self.config['logtz']) or DEFAULT_LOGTZ
        self.logfile = self.tomolog_file(self.opts['logfile'] or self.config['logfile'], True)
        # Library debug records only surface at the tmi level.
        lib = logging.getLogger('blocktomo')
        for handler in list(lib.handlers):
            lib.removeHandler(handler)
        if self.LOG and self.loglevel <= LOG.TMI:
            lib.setLevel(logging.DEBUG)
            for handler in self.LOG.handlers:
                lib.addHandler(handler)
        for key in self.unknown_keys:
            self.tomolog_log(LOG.ERR, 'config', 'unknown key "%s" ignored' % key)

    def cmd_solve(self, operands):
        if not operands:
            return self.fail('solve needs at least one instance file')
        method = self.opts['method'] or self.config['method']
        limits = self.limits()
        worst = RC_OKAY
        for path in operands:
            try:
                inst = read_instance(path)
                if isinstance(inst, RecInstance):
                    result = solve(inst, method, limits)
                else:
                    result = solve_wrec(inst, method, limits)
            except (InputError, OSError) as e:
                worst = max(worst, self.fail('%s: %s' % (path, e)))
                continue
            self.tomolog_log(LOG.PHASE, path, '%s by %s' % (result.status, result.method))
            if result.feasible:
                self.emit(write_solution(result.image))
            else:
                self.emit('%s\n' % result.status.upper())
            worst = max(worst, _STATUS_RC[result.status])
        return worst

    def cmd_verify(self, operands):
        if len(operands) != 2:
            return self.fail('verify needs an instance and a solution file')
        inst = read_instance(operands[0])
        x = read_solution(operands[1])
        if isinstance(inst, RecInstance):
            report = verify_rec(inst, x)
        else:
            report = verify_wrec(inst, x)
        if report.feasible:
            self.emit('VALID\n')
            return RC_OKAY
        self.emit('INVALID\n%s' % report)
        return RC_INFEASIBLE

    def cmd_oracle(self, operands):
        if len(operands) != 1:
            return self.fail('oracle needs one instance file')
        inst = read_instance(operands[0])
        limits = self.limits()
        if self.opts['enumerate']:
            solutions = oracle_enumerate(inst, limits, self.opts['enumerate'])
            self.emit('COUNT %d\n' % len(solutions))
            for x in solutions:
                self.emit(write_solution(x))
            return RC_OKAY if solutions else RC_INFEASIBLE
        found = oracle_solve(inst, limits)
        self.tomolog_log(LOG.PHASE, operands[0], '%s after %d nodes' % (found.status, found.nodes))
        if found.status == STATUS_FEASIBLE:
            self.emit(write_solution(found.image))
        else:
            self.emit('%s\n' % found.status.upper())
        return _STATUS_RC[found.status]

    def cmd_reduce(self, operands):
        if len(operands) != 2 or operands[0] != 'three-color':
            return self.fail('usage: reduce three-color <file>')
        with open(operands[1], 'r') as f:
            tc = parse_three_color(f.read())
        self.emit(serialize_instance(three_color_to_rec(tc)))
        return RC_OKAY

    def cmd_transform(self, operands):
        if len(operands) != 2 or operands[0] not in TRANSFORMS:
            return self.fail('usage: transform %s -k K <file>' % '|'.join(TRANSFORMS))
        name, path = operands
        inst = read_instance(path)
        if name == TRANSFORM_PADK:
            if not isinstance(inst, RecInstance):
                return self.fail('pad-k needs a REC instance')
            result = pad_to_k(inst, self.opts['k'])
        else:
            if isinstance(inst, RecInstance):
                inst = rec_to_wrec(inst)
            if name == TRANSFORM_INVERT:
                result = t1_invert(inst)
            elif name == TRANSFORM_ZEROPAD:
                result = t2_zero_pad(inst, self.opts['k'])
            else:
                result = t3_one_pad(inst, self.opts['k'])
        self.emit(serialize_instance(result))
        return RC_OKAY

    def cmd_gen(self, operands):
        try:
            density = fractions.Fraction(self.opts['density'])
        except (ValueError, ZeroDivisionError):
            return self.fail('bad density %r' % self.opts['density'])
        inst, witness = gen_planted(
            self.opts['m'], self.opts['n'], self.opts['k'] or 1, self.opts['nu'],
            self.opts['t'], density, self.opts['seed'])
        prefix = self.opts['out-prefix']
        if prefix:
            write_instance(prefix + '.rec', inst)
            with open(prefix + '.sol', 'w') as f:
                f.write(write_solution(witness))
            self.tomolog_log(LOG.INFO, 'gen', 'wrote %s.rec and %s.sol' % (prefix, prefix))
        else:
            self.emit(serialize_instance(inst))
        return RC_OKAY

    def cmd_render(self, operands):
        if len(operands) != 1:
            return self.fail('render needs one solution file')
        self.emit(render(read_solution(operands[0]), self.opts['format']))
        return RC_OKAY

    commands = {
        'solve': cmd_solve,
        'verify': cmd_verify,
        'oracle': cmd_oracle,
        'reduce': cmd_reduce,
        'transform': cmd_transform,
        'gen': cmd_gen,
        'render': cmd_render,
    }

    def main(self, args):
        '''
        Run one command.

        @param args: command line arguments, without the program name
        @returns: exit code, one of the RC_ constants
        @rtype: int
        '''
        if not args:
            self.usage()
            return RC_BADINPUT
        parsed = self.get_options(self.opts, args)
        if parsed is None:
            self.usage()
            return RC_BADINPUT
        self.opts, operands = parsed
        if self.opts['help']:
            return self.usage()
        if self.opts['Version']:
            print(self.VERS, file=self.stdout)
            return RC_OKAY
        if not operands or operands[0] not in self.commands:
            self.usage()
            return RC_BADINPUT
        command, operands = operands[0], operands[1:]
        try:
            self.setup()
            if self.opts['out']:
                open(self.opts['out'], 'w').close()
            return self.commands[command](self, operands)
        except ResourceError as e:
            return self.fail(str(e), RC_LIMIT)
        except (InputError, OSError) as e:
            return self.fail(str(e))
