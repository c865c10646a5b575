#
# coding: utf-8
# Copyright (c) 2018 DATADVANCE
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.


def _walk(schema, path):
    if 'properties' in schema:
        for key in sorted(schema['properties']):
            yield from _walk(schema['properties'][key], path + (key,))
        return
    for option in schema.get('anyOf', ()):
        if option.get('type') != 'null':
            yield from _walk(option, path)
            return
    yield '.'.join(path), schema.get('description', '')


def config_description(schema):
    """Human readable list of config keys for the command line epilog."""
    lines = ['config keys (use with --set key=value):']
    for key, description in _walk(schema, ()):
        lines.append('  %s' % (key,))
        if description:
            lines.append('      %s' % (description,))
    return '\n'.join(lines)
