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

import logging
import sys

import pdualvol.commands
import pdualvol.config


LOGGER_NAME_ROOT = 'pdualvol'


def setup_logging(args):
    root_logger = logging.getLogger()
    # root logger accepts all messages, filter on handlers level
    root_logger.setLevel(logging.DEBUG)
    # standard output carries the JSON result
    for handler in [logging.StreamHandler(sys.stderr)]:
        handler.setFormatter(logging.Formatter(args.log_format))
        handler.setLevel(args.log_level.upper())
        root_logger.addHandler(handler)


def main(argv=None):
    try:
        args, config = pdualvol.config.initialize(argv)
    except ValueError as ex:
        sys.stderr.write('pdualvol: %s\n' % (ex,))
        if ex.__cause__ is not None:
            sys.stderr.write('  caused by: %s\n' % (ex.__cause__,))
        return 2
    setup_logging(args)
    main_log = logging.getLogger(LOGGER_NAME_ROOT)
    try:
        pdualvol.config.validate(config)
    except ValueError as ex:
        main_log.error('%s', ex)
        return 2
    main_log.info('Running \'%s\' with seed %d', args.command,
                  config['random']['seed'])
    return pdualvol.commands.run(args, config)


if __name__ == '__main__':
    sys.exit(main())
