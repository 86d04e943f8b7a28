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

import re

from ..errors import ParseError

NUMBER = re.compile(r'^\d+$')


class LineReader(object):
    '''
    Token lines of an instance or solution text. Blank lines and lines
    starting with '#' are skipped; line numbers refer to the original text.
    '''
    def __init__(self, text, comments=True):
        self._lines = []
        lineno = 0
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            if comments and line.lstrip().startswith('#'):
                continue
            self._lines.append((lineno, line))
        self._last = lineno
        self._pos = 0
        self.lineno = 0

    def next_line(self):
        if self._pos >= len(self._lines):
            raise ParseError('unexpected end of input', self._last + 1)
        self.lineno, line = self._lines[self._pos]
        self._pos += 1
        return line

    def next_tokens(self):
        return self.next_line().split()

    def error(self, msg):
        return ParseError(msg, self.lineno)

    def integer(self, token):
        if not NUMBER.match(token):
            raise self.error('expected a nonnegative integer, got %r' % token)
        return int(token)

    def keyword(self, keyword):
        tokens = self.next_tokens()
        if tokens != [keyword]:
            raise self.error('expected "%s", got %r' % (keyword, ' '.join(tokens)))

    def params(self, *names):
        '''
        A line of the form "name1 <v1> name2 <v2> ...".
        '''
        tokens = self.next_tokens()
        if tokens[0::2] != list(names) or len(tokens) != 2 * len(names):
            raise self.error('expected "%s"' % ' '.join('%s <%s>' % (n, n) for n in names))
        return [self.integer(token) for token in tokens[1::2]]

    def values(self, keyword, count):
        '''
        A line of the form "keyword <v1> ... <vcount>".
        '''
        tokens = self.next_tokens()
        if not tokens or tokens[0] != keyword:
            raise self.error('expected a "%s" line' % keyword)
        if len(tokens) - 1 != count:
            raise self.error('"%s" needs %d values, got %d' % (keyword, count, len(tokens) - 1))
        return tuple(self.integer(token) for token in tokens[1:])

    def finish(self):
        if self._pos < len(self._lines):
            self.lineno = self._lines[self._pos][0]
            raise self.error('unexpected text after end of record')
