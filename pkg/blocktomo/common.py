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

import copy
import re


class CommonMixin(object):
    NAME = ''
    VERS = ''

    def get_options(self, opts, args):
        '''
        Parse "-opt value" / "--opt value" flags. A str or int option takes
        the next argument as its value, a bool option is a switch. Anything
        not starting with '-' is a positional operand.

        @param opts: options with default values
        @type opts: dict
        @param args: command line arguments
        @type args: list
        @returns: (parsed options, operands), or None on a bad option
        @rtype: tuple
        '''
        opts = copy.copy(opts)
        operands = []
        skip = False
        for i, key in enumerate(args):
            if skip:
                skip = False
                continue
            if not re.match(r'\-{1,2}[^\-]+', key):
                operands.append(key)
                continue
            if i < len(args) - 1:
                value = args[i + 1]
            else:
                value = None
            key = key.lstrip('-')
            if key not in opts:
                return None
            if type(opts[key]) == bool:
                opts[key] = True
            elif value is None:
                return None
            elif type(opts[key]) == int:
                try:
                    opts[key] = int(value)
                except ValueError:
                    return None
                skip = True
            else:
                opts[key] = value
                skip = True
        return opts, operands
