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


class TomoError(Exception):
    '''
    Base class of every error raised by blocktomo.
    '''


class InputError(TomoError, ValueError):
    '''
    Invalid instance, image or argument.
    '''


class ParseError(InputError):
    '''
    Malformed instance or solution text.
    '''
    def __init__(self, msg, lineno=None):
        super().__init__(msg)
        self.msg = msg
        self.lineno = lineno

    def __str__(self):
        if self.lineno is None:
            return self.msg
        return 'line %d: %s' % (self.lineno, self.msg)


class UnsupportedClassError(InputError):
    '''
    Pattern class with no counterpart under a transformation.
    '''


class ContractError(TomoError, RuntimeError):
    '''
    An internal invariant does not hold.
    '''


class ResourceError(TomoError):
    '''
    A size guard or search budget was exceeded.
    '''
