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
Command-line surface of necklab.

Usage examples ::

    necklab kw --n 4
    necklab stembridge --nu 2,1 --format json
    necklab schocker --a 2 --b 2 --r 1 --kind trivial
    necklab wreath --a 2 --b 2 --ul '[[1],[1]]'
    necklab lie --shape 2,1
    necklab csp --alpha 2,1,1 --stat flex
    necklab verify --suite all --max-n 6

Results go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 failed identity (the witness is printed), 2 usage error.
'''
import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .. import __version__
from .. import misc as m
from ..combinat import csp
from ..combinat import liemodules as lm
from ..combinat import tables
from ..combinat import words as wd
from ..combinat.tableaux import Partition, PartitionTuple

MAX_N = 10
MAX_AB = 8
FORMATS = ('table', 'json')
STATISTICS = dict(maj=wd.maj, flex=wd.flex)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    '''
    Parsed invocation.

    Attributes
    ----------

        command : str
            subcommand name

        params : dict
            subcommand parameters, as echoed in JSON output

        format : str
            ``'table'`` or ``'json'``

        cache_dir : str
            directory of the per-degree table files, or :py:obj:`None`

        max_n, max_ab : int
            size caps, at most 10 and 8
    '''
    command: str
    params: dict = field(default_factory=dict)
    format: str = 'table'
    cache_dir: str = None
    max_n: int = 6
    max_ab: int = 8
    verbose: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(m.RED+'format must be one of %s'%str(FORMATS)+m.ENDC)
        if not 1 <= self.max_n <= MAX_N:
            raise ValueError(m.RED+'max-n must lie in [1,%d]'%MAX_N+m.ENDC)
        if not 1 <= self.max_ab <= MAX_AB:
            raise ValueError(m.RED+'max-ab must lie in [1,%d]'%MAX_AB+m.ENDC)


def parse_partition(text):
    '''``'2,1'`` -> Partition((2,1)); empty string is the empty partition'''
    text = text.strip().strip('()[]')
    if not text: return Partition(())
    try:
        parts = [int(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('%s is not a comma separated list of integers'%repr(text))
    try:
        return Partition(parts)
    except ValueError:
        raise argparse.ArgumentTypeError('%s is not a partition'%repr(text))


def parse_composition(text):
    try:
        parts = tuple(int(x) for x in text.strip().strip('()[]').split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('%s is not a comma separated list of integers'%repr(text))
    if any(x < 0 for x in parts) or sum(parts) < 1:
        raise argparse.ArgumentTypeError('%s is not a composition of a positive integer'%repr(text))
    return parts


def parse_partition_tuple(text):
    '''JSON list of partitions, e.g. ``[[1],[2,1],[]]``'''
    try:
        entries = json.loads(text)
        return PartitionTuple(entries)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError('%s is not a JSON list of partitions'%repr(text))


def positive(text):
    value = int(text)
    if value < 1: raise argparse.ArgumentTypeError('%s is not a positive integer'%text)
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='table',
                        help='output format (default: table)')
    common.add_argument('--cache-dir', default=None,
                        help='directory of the table cache files (default: $%s)'%tables.CACHE_ENV_VARIABLE)
    common.add_argument('--verbose', action='store_true',
                        help='print progress on standard error')

    parser = argparse.ArgumentParser(prog='necklab',
        description='Exact computations on necklaces, cyclic sieving and higher Lie characters.')
    parser.add_argument('--version', action='version', version='necklab %s'%__version__)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('kw', parents=[common], help='characters induced from the cyclic group C_n')
    p.add_argument('--n', type=positive, required=True)

    p = sub.add_parser('stembridge', parents=[common], help='characters induced from a cyclic subgroup of cycle type nu')
    p.add_argument('--nu', type=parse_partition, required=True, help='cycle type, e.g. 2,1')

    p = sub.add_parser('schocker', parents=[common], help='multisets or sets of necklaces')
    p.add_argument('--a', type=positive, required=True)
    p.add_argument('--b', type=positive, required=True)
    p.add_argument('--r', type=positive, required=True)
    p.add_argument('--kind', choices=lm.KINDS, default='trivial')

    p = sub.add_parser('wreath', parents=[common], help='wreath product characters (all of them without --ul)')
    p.add_argument('--a', type=positive, required=True)
    p.add_argument('--b', type=positive, required=True)
    p.add_argument('--ul', type=parse_partition_tuple, default=None, help='JSON list of a partitions')

    p = sub.add_parser('lie', parents=[common], help='higher Lie character')
    p.add_argument('--shape', type=parse_partition, required=True)

    p = sub.add_parser('csp', parents=[common], help='cyclic sieving on the words of a content')
    p.add_argument('--alpha', type=parse_composition, required=True)
    p.add_argument('--stat', choices=sorted(STATISTICS), default='maj')

    from .suites import SUITES
    p = sub.add_parser('verify', parents=[common], help='run verification suites')
    p.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    p.add_argument('--max-n', type=positive, default=6, help='size cap, at most %d'%MAX_N)
    p.add_argument('--max-ab', type=positive, default=MAX_AB, help='wreath size cap, at most %d'%MAX_AB)
    return parser


def _params(args):
    out = {}
    for key in ('n', 'nu', 'a', 'b', 'r', 'kind', 'ul', 'shape', 'alpha', 'stat', 'suite', 'max_n', 'max_ab'):
        if getattr(args, key, None) is None: continue
        value = getattr(args, key)
        if isinstance(value, PartitionTuple): value = [list(x) for x in value]
        elif isinstance(value, tuple): value = list(value)
        out[key] = value
    return out


def make_config(parser, args):
    cache_dir = args.cache_dir or os.environ.get(tables.CACHE_ENV_VARIABLE) or None
    try:
        config = RunConfig(args.command, _params(args), args.format, cache_dir,
                           getattr(args, 'max_n', 6), getattr(args, 'max_ab', MAX_AB), args.verbose)
    except ValueError as e:
        parser.error(str(e).replace(m.RED, '').replace(m.ENDC, ''))
    p = config.params
    size = None
    if config.command == 'kw': size = p['n']
    elif config.command == 'stembridge': size = sum(p['nu'])
    elif config.command == 'lie': size = sum(p['shape'])
    elif config.command == 'csp': size = sum(p['alpha'])
    if size is not None and size > MAX_N:
        parser.error('size %d exceeds the cap %d'%(size, MAX_N))
    if size == 0:
        parser.error('size must be positive')
    if config.command in ('schocker', 'wreath') and p['a'] * p['b'] > MAX_AB:
        parser.error('a*b = %d exceeds the cap %d'%(p['a'] * p['b'], MAX_AB))
    return config


# -- output -----------------------------------------------------------------

def partition_key(shape):
    return '[%s]'%','.join(str(x) for x in shape)


def schur_row(f):
    terms = ['%s:%d'%(str(shape), c) for shape, c in f.schurCoefficients().items()]
    return ' '.join(terms) if terms else '0'


def schur_json(f):
    return {partition_key(shape): c for shape, c in f.schurCoefficients().items()}


def index_json(index):
    if isinstance(index, PartitionTuple): return [list(x) for x in index]
    if isinstance(index, Partition): return list(index)
    return index


def index_label(index):
    if isinstance(index, (Partition, PartitionTuple)): return str(index)
    return 'r=%d'%index


def emit_series(config, series, extra=None, stream=None):
    '''
    Print ``index -> SymFunc`` pairs as ``label: (shape):coeff ...`` rows or
    as one JSON document.
    '''
    stream = stream or sys.stdout
    extra = extra or {}
    if config.format == 'json':
        entries = []
        for index, f in series:
            entry = dict(index=index_json(index), schur=schur_json(f))
            entry.update(extra.get(index, {}))
            entries.append(entry)
        document = dict(command=config.command, params=config.params, series=entries)
        print(json.dumps(document), file=stream)
        return
    for index, f in series:
        suffix = ''.join(' [%s=%s]'%(k, v) for k, v in extra.get(index, {}).items())
        print('%s: %s%s'%(index_label(index), schur_row(f), suffix), file=stream)


def emit_document(config, document, lines, stream=None):
    stream = stream or sys.stdout
    if config.format == 'json':
        full = dict(command=config.command, params=config.params)
        full.update(document)
        print(json.dumps(full), file=stream)
    else:
        for line in lines: print(line, file=stream)


def _witness_json(witness):
    if witness is None: return None
    if isinstance(witness, (int, str, bool)): return witness
    if isinstance(witness, (tuple, list)): return [_witness_json(w) for w in witness]
    return str(witness)


# -- commands ---------------------------------------------------------------

def cmd_kw(config):
    series = lm.kw_series(config.params['n'])
    emit_series(config, sorted(series.items()))
    return EXIT_OK


def cmd_stembridge(config):
    series = lm.stembridge_series(config.params['nu'])
    emit_series(config, sorted(series.items()))
    return EXIT_OK


def cmd_schocker(config):
    p = config.params
    f = lm.schocker(p['a'], p['b'], p['r'], p['kind'])
    emit_series(config, [(p['r'], f)])
    return EXIT_OK


def cmd_wreath(config):
    p = config.params
    a, b = p['a'], p['b']
    if 'ul' in p:
        ul = PartitionTuple(p['ul'])
        series = [(ul, lm.wreath_char(a, b, ul))]
    else:
        series = list(lm.graded_frobenius(a, b, check=False, verbose=config.verbose).items())
    dims = {ul: dict(dimension=lm.wreath_dim(ul)) for ul, _ in series}
    emit_series(config, series, dims)
    return EXIT_OK


def cmd_lie(config):
    shape = Partition(config.params['shape'])
    emit_series(config, [(shape, lm.higher_lie(shape))])
    return EXIT_OK


def cmd_csp(config):
    alpha = tuple(config.params['alpha'])
    n = sum(alpha)
    words = list(wd.enumerate_words_by_content(alpha))
    report = csp.verify_csp(words, n, STATISTICS[config.params['stat']])
    profile = {str(k): v for k, v in report.orbit_profile.items()}
    lines = ['holds: %s'%report.holds,
             'orbit profile: %s'%' '.join('%s:%d'%(k, v) for k, v in profile.items())]
    if report.witness is not None:
        lines.append('witness (r, fixed points, evaluation): %s'%str(report.witness))
    emit_document(config, dict(holds=report.holds, orbit_profile=profile,
                               witness=_witness_json(report.witness)), lines)
    if not report.holds:
        print(m.RED+'cyclic sieving fails at r=%d: %d fixed points, evaluation %s'%(
              report.witness[0], report.witness[1], str(report.witness[2]))+m.ENDC, file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_verify(config):
    from .suites import run_suite
    results = run_suite(config.params['suite'], config)
    lines, reports = [], []
    for suite, report in results:
        status = 'ok' if report.holds else 'FAILED'
        lines.append('%s: %s ... %s (%d cases)'%(suite, report.name, status, report.checked))
        reports.append(dict(suite=suite, name=report.name, holds=report.holds,
                            checked=report.checked, witness=_witness_json(report.witness)))
    emit_document(config, dict(reports=reports), lines)
    failed = [r for _, r in results if not r.holds]
    if failed:
        print(m.RED+'%s fails, witness: %s'%(failed[0].name, str(failed[0].witness))+m.ENDC, file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


COMMANDS = dict(kw=cmd_kw, stembridge=cmd_stembridge, schocker=cmd_schocker,
                wreath=cmd_wreath, lie=cmd_lie, csp=cmd_csp, verify=cmd_verify)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = make_config(parser, args)
    if config.cache_dir is not None: tables.setCacheDir(config.cache_dir)
    try:
        return COMMANDS[config.command](config)
    except m.VerificationError as e:
        print(m.RED+'identity fails: %s'%e.message+m.ENDC, file=sys.stderr)
        print('witness: %s'%str(e.witness), file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print('necklab %s: error: %s'%(config.command, str(e)), file=sys.stderr)
        return EXIT_USAGE


def launch():
    sys.exit(main())


if __name__ == '__main__':
    launch()
