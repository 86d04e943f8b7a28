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

import datetime
import logging
import sys


# Log levels. The first and last aren't selectable by a user.
class LOG(object):
    NEVER = 0  # Do not log this message.
    TMI = 1  # Overly verbose informational message.
    INFO = 4  # Informational message.
    PHASE = 6  # Solver choice and verdict.
    ERR = 8  # Non-fatal error message.
    FATAL = 9  # Fatal error.
    ALWAYS = 10  # Messages that should always be given.

    MIN = NEVER
    MAX = ALWAYS


DEFAULT_LOGLEVEL = LOG.INFO

DEFAULT_LOGTZ = 'gmt'


class TomoLogMixin(object):
    LOG = None
    loglevel = DEFAULT_LOGLEVEL
    logfile = ''

    logstrs = (  # Valid strings for levels.
        'never',
        'tmi',
        None,
        None,
        'info',
        None,
        'phase',
        None,
        'err',
        'fatal',
        'always',
    )
    usetz = DEFAULT_LOGTZ

    def tomolog_log(self, lvl, fld, msg):
        '''
        lvl - Message log level.
        fld - Message field (an input file, a command).
        msg - Message to log.
        '''
        if lvl < self.loglevel or not self.LOG:
            return
        if fld:
            fld = '%s: ' % fld
        if self.usetz == 'local':
            kronos = datetime.datetime.now()
        else:
            kronos = datetime.datetime.utcnow()
        self.LOG.info('%(kronos)s: %(fld)s%(msg)s' % {
            'kronos': kronos.strftime('%b %d %H:%M:%S'),
            'fld': fld or '',
            'msg': msg,
        })

    def tomolog_num(self, level):
        if type(level) == int:
            return level
        elif type(level) == str:
            if level.isdigit():
                return int(level)
            try:
                return self.logstrs.index(level)
            except ValueError:
                return -1
        return -1

    def tomolog_level(self, newlevel, useflag):
        '''
        Get/set the logging level. An unknown level gives -1, or the
        default level with a usage message if useflag is set.
        '''
        if not newlevel:
            return self.loglevel
        loglevel = self.tomolog_num(newlevel)
        if loglevel < LOG.MIN or loglevel > LOG.MAX:
            if useflag:
                print('''unknown logging level "%s"
valid logging levels (text and numeric forms):
\ttmi    1
\tinfo   4
\tphase  6
\terr    8
\tfatal  9''' % newlevel, file=sys.stderr)
                return DEFAULT_LOGLEVEL
            return -1
        return loglevel

    def tomolog_file(self, newlogfile, useflag):
        '''
        Get/set the log file. "-" is stderr.
        '''
        if not newlogfile:
            return self.logfile
        self.LOG = logging.getLogger('tomoctl')
        self.LOG.setLevel(logging.INFO)
        for handler in list(self.LOG.handlers):
            self.LOG.removeHandler(handler)
            handler.close()
        try:
            if newlogfile == '-':
                handler = logging.StreamHandler(sys.stderr)
            else:
                handler = logging.FileHandler(newlogfile)
        except IOError:
            if useflag:
                print('unable to open "%s"' % newlogfile, file=sys.stderr)
            self.LOG = None
            return ''
        handler.setLevel(logging.INFO)
        handler.setFormatter(logging.Formatter('%(message)s'))
        self.LOG.addHandler(handler)
        return newlogfile

    def tomolog_settz(self, newtz):
        '''
        'local' and 'gmt' are the acceptable timezone selectors.
        '''
        if newtz:
            return newtz if newtz in ('gmt', 'local') else ''
        return DEFAULT_LOGTZ
