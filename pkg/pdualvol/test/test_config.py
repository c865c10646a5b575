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

"""Config layering: defaults, YAML file, --set overrides and options."""

import logging

import pytest

import pdualvol.config
from pdualvol.config import file as config_file
from pdualvol.config import schemas
from pdualvol.config import utils


COMMAND = ['dualvol', '--polytope', 'quadrilateral.json']


def test_defaults():
    args, config = pdualvol.config.initialize(COMMAND)
    assert args.command == 'dualvol'
    assert args.log_level == 'warning'
    assert config['random']['seed'] == 0
    assert config['threads'] == 1
    assert config['output']['indent'] is None
    assert config['lifting']['height_min'] < config['lifting']['height_max']
    pdualvol.config.validate(config)


def test_config_file_merge(tmp_path):
    path = tmp_path.joinpath('user.yaml')
    path.write_text('equality:\n  sample_points: 0\nthreads: 4\n')
    _, config = pdualvol.config.initialize(
        ['--config', str(path)] + COMMAND
    )
    assert config['equality']['sample_points'] == 0
    assert config['equality']['sample_bound'] == 997
    assert config['threads'] == 4
    empty = tmp_path.joinpath('empty.yaml')
    empty.write_text('')
    _, config = pdualvol.config.initialize(['--config', str(empty)] + COMMAND)
    assert config['threads'] == 1


def test_config_file_unknown_key(tmp_path):
    path = tmp_path.joinpath('user.yaml')
    path.write_text('lifting:\n  height: 5\n')
    with pytest.raises(ValueError):
        pdualvol.config.initialize(['--config', str(path)] + COMMAND)


def test_merge_keeps_siblings():
    base = {'a': {'b': 1, 'c': 2}, 'd': 3}
    merged = config_file.merge(base, {'a': {'b': 5}, 'd': None})
    assert merged == {'a': {'b': 5, 'c': 2}, 'd': None}
    assert base['a']['b'] == 1


def test_set_overrides():
    _, config = pdualvol.config.initialize([
        '--set', 'lifting.height_max=50',
        '--set', 'equality.sample_bound=11',
    ] + COMMAND)
    assert config['lifting']['height_max'] == 50
    assert config['equality']['sample_bound'] == 11


@pytest.mark.parametrize('override', [
    'threads',
    'threads=0',
    'threads=not a literal',
    'nothing.here=1',
    'lifting.height=3',
    'random.seed=-1',
])
def test_set_errors(override):
    with pytest.raises(ValueError):
        pdualvol.config.initialize(['--set', override] + COMMAND)


def test_command_line_options():
    _, config = pdualvol.config.initialize(
        ['--seed', '7', '--threads', '3', '--pretty'] + COMMAND
    )
    assert config['random']['seed'] == 7
    assert config['threads'] == 3
    assert config['output']['indent'] == 2


def test_command_line_errors():
    with pytest.raises(SystemExit):
        pdualvol.config.initialize([])
    with pytest.raises(SystemExit):
        pdualvol.config.initialize(['--threads', '0'] + COMMAND)
    with pytest.raises(SystemExit):
        pdualvol.config.initialize(['genperm'])


def test_validate_height_range(caplog):
    _, config = pdualvol.config.initialize(
        ['--set', 'lifting.height_max=20'] + COMMAND
    )
    with caplog.at_level(logging.WARNING, logger='pdualvol.config'):
        pdualvol.config.validate(config)
    assert 'Narrow lifting height range' in caplog.text
    config['lifting']['height_min'] = 30
    with pytest.raises(ValueError):
        pdualvol.config.validate(config)


def test_description_lists_keys():
    text = utils.config_description(schemas.CONFIG)
    for key in ('lifting.height_max', 'output.indent', 'random.seed',
                'threads'):
        assert '  %s\n' % (key,) in text
