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

import os

from .defs import *
from .errors import InputError

CONFFILE = 'blocktomo.conf'

# Built-in defaults, overridden by the config file, then TOMO_MAX_NODES,
# then command line options.
TOMOCONFIG = {
    'max_nodes': ORACLE_MAX_NODES,
    'max_cells': ORACLE_MAX_CELLS,
    'method': METHOD_AUTO,
    'loglevel': 'info',
    'logfile': '-',
    'logtz': 'gmt',
}


class ConfMixin(object):
    unknown_keys = ()

    def parseconfig(self, path):
        config = {}
        for line in open(path, 'r').readlines():
            line = line.strip()
            if line and not line.startswith('#') and not line.startswith(';'):
                key, sep, value = line.replace('\t', ' ').partition(' ')
                if key and value:
                    config[key.strip()] = value.strip()
        return config

    def loadconfig(self, path=None, environ=None):
        '''
        @param path: config file; ./blocktomo.conf is used when present
        @returns: merged configuration with typed values
        @rtype: dict
        '''
        environ = os.environ if environ is None else environ
        config = dict(TOMOCONFIG)
        if not path and os.path.isfile(CONFFILE):
            path = CONFFILE
        raw = self.parseconfig(path) if path else {}
        if environ.get(ENV_MAX_NODES) is not None:
            raw['max_nodes'] = environ[ENV_MAX_NODES]
        self.unknown_keys = sorted(set(raw) - set(TOMOCONFIG))
        for key, value in raw.items():
            if key not in TOMOCONFIG:
                continue
            if type(TOMOCONFIG[key]) == int:
                try:
                    value = int(value)
                except ValueError:
                    raise InputError('config value %s must be an integer, got %r' % (key, value))
            config[key] = value
        return config
