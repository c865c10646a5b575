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

import json
import logging
import sys

import jsonschema

from .. import common as errors
from .. import exactnum
from . import common


LOGGER_NAME = 'pdualvol.commands'

EXIT_OK = 0
EXIT_NOT_VERIFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3


def _certificate(value):
    if isinstance(value, exactnum.Rational):
        return exactnum.format_rational(value)
    if isinstance(value, dict):
        return {str(k): _certificate(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_certificate(v) for v in value]
    return value


def emit(payload, config, stream):
    stream.write(json.dumps(
        payload, sort_keys=True, indent=config['output']['indent']
    ))
    stream.write('\n')


def run_guarded(handler, args, config, meta, stream=None):
    """Run a command handler and map its outcome to an exit status.

    Results and error payloads go to `stream` as JSON: a refuted
    verification exits with 1, input errors with 2 and failed mathematical
    preconditions with 3 along with their certificate.
    """
    stream = stream or sys.stdout
    log = logging.getLogger(LOGGER_NAME)
    try:
        response = handler(args, config)
    except errors.PreconditionError as ex:
        log.error('Precondition failed: %s', ex)
        emit({
            'error': type(ex).__name__,
            'message': str(ex),
            'certificate': _certificate(ex.certificate),
            'meta': meta
        }, config, stream)
        return EXIT_PRECONDITION
    except jsonschema.ValidationError as ex:
        log.error('Invalid input file: %s', ex.message)
        emit({
            'error': 'ValidationError',
            'message': 'Invalid input payload:\n' + ex.message,
            'meta': meta
        }, config, stream)
        return EXIT_INPUT_ERROR
    except (errors.InputError, ValueError, OSError) as ex:
        # json.JSONDecodeError is a ValueError
        log.error('Invalid input: %s', ex)
        emit({
            'error': type(ex).__name__,
            'message': str(ex),
            'meta': meta
        }, config, stream)
        return EXIT_INPUT_ERROR
    payload = dict(response.payload)
    payload['meta'] = meta
    emit(payload, config, stream)
    if response.verified is False:
        log.warning('Verification failed')
        return EXIT_NOT_VERIFIED
    return EXIT_OK
