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

import ast
import logging

import jsonschema

from . import cmdline
from . import file
from . import schemas


def initialize(argv=None):
    """Parse the command line and build the merged, validated config."""
    args = cmdline.parse(argv)
    config = file.load_default()
    if args.config:
        user_config = file.load(args.config)
        config = file.merge(config, user_config)
    _validate_schema(config, 'invalid config file parameter')
    if args.set:
        for arg in args.set:
            if '=' not in arg:
                raise ValueError('config override \'%s\' has no value' % (arg,))
            key, value = arg.split('=', 1)
            try:
                value = ast.literal_eval(value)
            except Exception:
                raise ValueError('invalid value for config key \'%s\'' % (key,))
            config_path = key.split('.')
            config_node = config
            for key_element in config_path[:-1]:
                if not isinstance(config_node.get(key_element), dict):
                    raise ValueError('unknown config key \'%s\'' % (key,))
                config_node = config_node[key_element]
            config_node[config_path[-1]] = value
        _validate_schema(config, 'invalid command line config parameter')
    if args.seed is not None:
        config['random']['seed'] = args.seed
    if args.threads is not None:
        config['threads'] = args.threads
    if args.pretty:
        config['output']['indent'] = 2
    _validate_schema(config, 'invalid command line option')
    return args, config


def validate(config):
    log = logging.getLogger('pdualvol.config')
    lifting = config['lifting']
    if lifting['height_min'] > lifting['height_max']:
        log.fatal('Empty lifting height range')
        raise ValueError(
            'incorrect config: lifting.height_min exceeds lifting.height_max'
        )
    if lifting['height_max'] - lifting['height_min'] < 100:
        log.warning(
            'Narrow lifting height range, generic liftings may be rare'
        )
    if not config['equality']['sample_points']:
        log.info('Equality spot checks disabled, exact reduction only')


def _validate_schema(config, message):
    validator = jsonschema.Draft4Validator(schemas.CONFIG)
    try:
        error = jsonschema.exceptions.best_match(validator.iter_errors(config))
        if error:
            raise error
    except Exception as ex:
        raise ValueError(message) from ex
