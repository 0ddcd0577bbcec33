#    Copyright 2026 necklab developers
#
#    This file is part of necklab.
#
#    necklab is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Lesser General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    necklab is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Lesser General Public License for more details.
#
#    You should have received a copy of the GNU Lesser General Public License
#    along with necklab.  If not, see <http://www.gnu.org/licenses/>.

'''
Shared helpers: terminal colors, colored messages and the exception raised
when a cross-checked identity does not hold.
'''
import sys
import time

RED  = '\033[91m'
GREEN = '\033[92m'
YELLOW = '\033[93m'
PINK  = '\033[95m'
CYAN  = '\033[96m'
BOLD = '\033[1m'
UNDERLINE = '\033[4m'
ENDC  = '\033[0m'


class VerificationError(AssertionError):
    '''
    Raised when two routes that must compute the same object disagree.

    Parameters
    ----------

        message : str
            human readable description of the failed identity

        witness : object
            the smallest offending input found (a word pair, a partition,
            an index ``r``...), or :py:obj:`None`
    '''
    def __init__(self, message, witness=None):
        super().__init__(RED+message+ENDC)
        self.message = message
        self.witness = witness


def warn(message):
    print(YELLOW+'warning: '+message+ENDC, file=sys.stderr)


class Timer(object):
    '''
    Small context manager printing ``label ... ok (t s)`` when **verbose**.
    '''
    def __init__(self, label, verbose=False, stream=None):
        self.label = label
        self.verbose = verbose
        self.stream = stream if stream is not None else sys.stderr

    def __enter__(self):
        self.tic = time.perf_counter()
        if self.verbose: print('%s ... '%self.label, end='', file=self.stream, flush=True)
        return self

    def __exit__(self, exc_type, exc, tb):
        if not self.verbose: return False
        if exc_type is None:
            print(GREEN+'ok'+ENDC+' (%g s)'%(time.perf_counter()-self.tic), file=self.stream)
        else:
            print(RED+'failed'+ENDC, file=self.stream)
        return False
