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
Verification suites run by ``necklab verify``. Each suite takes a
:py:class:`~necklab.cli.main.RunConfig` and returns a list of
:py:class:`~necklab.combinat.liemodules.VerificationReport`; sizes are
bounded by the ``max_n`` and ``max_ab`` caps of the configuration.
'''
import itertools
from collections import OrderedDict
from math import factorial

from .. import misc as m
from ..math_tools import divisors, lcm
from ..combinat import characters as ch
from ..combinat import csp
from ..combinat import liemodules as lm
from ..combinat import symfunc as sf
from ..combinat import words as wd
from ..combinat.tableaux import Partition, partitions

# pairs (a, b) exercised by the Schocker and graded Frobenius suites
SCHOCKER_PAIRS = ((2, 2), (2, 3), (3, 2), (4, 2), (2, 4))
FROBENIUS_PAIRS = ((2, 2), (3, 2), (2, 3))
RANDOM_SETS_PER_LENGTH = 200
MASH_WITNESS = (wd.Word('2314'), wd.Word('1423'))


def compositions(n):
    '''compositions of n with positive parts'''
    for cuts in itertools.product((False, True), repeat=max(n - 1, 0)):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def suite_kernel(config):
    report = lm.VerificationReport('kernel identities')
    p, h, e, s = sf.p, sf.h, sf.e, sf.s
    report.record(sf.plethysm(p(2), p(3)) == p(6), 'p2[p3]')
    report.record(sf.plethysm(h(2), h(2)) == s(4) + s(2, 2), 'h2[h2]')
    report.record(sf.plethysm(e(2), e(2)) == s(2, 1, 1), 'e2[e2]')
    for n in range(1, config.max_n + 1):
        for shape in partitions(n):
            f = sf.SymFunc.basisElement('schur', shape)
            for basis in sf.BASES:
                report.record(f.convert(basis).convert('schur') == f, (shape, basis))
        report.record(ch.check_column_orthogonality(n), ('orthogonality', n))
    mobius = lm.VerificationReport('mobius_f divisor sum and closed form')
    for e_ in range(1, 37):
        for d in divisors(e_):
            for f_ in divisors(e_):
                mobius.record(lm._mobius_f_sum(f_, d, e_) == lm._mobius_f_closed(f_, d, e_), (f_, d, e_))
    return [report, mobius]


def suite_words(config):
    report = lm.VerificationReport('necklace counts')
    for n in range(1, config.max_n + 1):
        for letters in (1, 2, 3):
            report.record(len(wd.enumerate_necklaces(n, letters)) == wd.count_necklaces(n, letters), (n, letters, 'all'))
            for r in divisors(n):
                report.record(len(wd.enumerate_necklaces(n, letters, 'freq_eq', r)) == wd.count_necklaces(n, letters, 'freq_eq', r), (n, letters, 'freq_eq', r))
                report.record(len(wd.enumerate_necklaces(n, letters, 'freq_div', r)) == wd.count_necklaces(n, letters, 'freq_div', r), (n, letters, 'freq_div', r))
    equi = lm.VerificationReport('maj_n and flex equidistribution')
    for n in range(1, min(config.max_n, 8) + 1):
        for alpha in compositions(n):
            equi.record(csp.verify_equidistribution(alpha).holds, alpha)
    return [report, equi]


def suite_kw(config):
    oracle = lm.VerificationReport('KW series against induced characters')
    reports = [oracle]
    for n in range(1, min(config.max_n, 8) + 1):
        series, expected = lm.kw_series(n), lm.kw_oracle(n)
        for r in range(1, n + 1):
            oracle.record(series[r] == expected[r], (n, r))
        reports.append(lm.check_kw_series(n, verbose=config.verbose))
    dims = lm.VerificationReport('Lie module dimension')
    for n in range(1, min(config.max_n, 8) + 1):
        dims.record(lm.kw_dimension(n, 1) * n == factorial(n), n)
    reports.append(dims)
    return reports


def suite_nfd(config):
    report = lm.VerificationReport('power-sum plethysm of NFD')
    for a in range(1, config.max_n + 1):
        for k in range(1, config.max_n // a + 1):
            for r in range(1, a + 1):
                report.record(lm.check_nfd_power_plethysm(a, r, k), (a, r, k))
    bold = lm.VerificationReport('NFD tuples and bold maj counts')
    for n in range(1, min(config.max_n, 6) + 1):
        for nu in partitions(n):
            for tau in itertools.product(*[range(1, x + 1) for x in nu]):
                bold.record(lm.check_bold_a(nu, tau), (nu, tau))
    return [report, bold]


def suite_csp(config, seed=0):
    maj = lm.VerificationReport('CSP for (W_alpha, C_n, maj)')
    for n in range(1, min(config.max_n, 8) + 1):
        for alpha in compositions(n):
            words = list(wd.enumerate_words_by_content(alpha))
            report = csp.verify_csp(words, n, wd.maj)
            maj.record(report.holds, (alpha, report.witness))
    flex = lm.VerificationReport('CSP for random rotation-closed sets with flex')
    for n in range(1, min(config.max_n, 6) + 1):
        for i in range(RANDOM_SETS_PER_LENGTH):
            W = csp.random_rotation_closed_set(n, 3, rng=seed + 1000 * n + i)
            if not W: continue
            report = csp.verify_csp(W, n, wd.flex)
            flex.record(report.holds, (n, i, report.witness))
    return [maj, flex]


def suite_syt_eval(config):
    report = lm.VerificationReport('SYT maj evaluations at roots of unity')
    for n in range(1, config.max_n + 1):
        for shape in partitions(n):
            poly = ch.syt_maj_polynomial(shape, n)
            exponents = lm.cyclic_exponents(shape)
            report.record(exponents == poly, (shape, 'cyclic exponents'))
            for r in range(1, n + 1):
                value = ch.mn_character(shape, ch.power_cycle_type((n,), r))
                report.record(ch.eval_at_root(poly, n, r) == value, (shape, r))
    return [report]


def suite_stembridge(config):
    reports = []
    for n in range(1, min(config.max_n, 7) + 1):
        for nu in partitions(n):
            reports.append(lm.check_stembridge(nu, verbose=config.verbose))
    frequency = lm.VerificationReport('orbit generating function by frequency')
    for n in range(1, min(config.max_n, 5) + 1):
        for nu in partitions(n):
            for r in range(1, lcm(*nu) + 1):
                frequency.record(lm.ofd_orbit_gf(nu, r) == lm.ofd_gf_by_frequency(nu, r), (nu, r))
    reports.append(frequency)
    return reports


def suite_schocker(config):
    reports = []
    for a, b in SCHOCKER_PAIRS:
        if a * b > min(config.max_n, config.max_ab): continue
        for r in range(1, a + 1):
            for kind in lm.KINDS:
                reports.append(lm.check_schocker(a, b, r, kind, verbose=config.verbose))
    columns = lm.VerificationReport('even column sizes')
    for b in range(1, 5):
        if 2 * b > min(config.max_n, config.max_ab): break
        columns.record(lm.schocker(2, b, 1, 'trivial') == lm.even_column_sum(2 * b), b)
    reports.append(columns)
    return reports


def suite_frobenius(config):
    reports = []
    for a, b in FROBENIUS_PAIRS:
        if a * b > min(config.max_n, config.max_ab): continue
        # raises VerificationError when the word statistics disagree
        series = lm.graded_frobenius(a, b, check=True, verbose=config.verbose)
        total = sf.SymFunc(a * b)
        for f in series.values(): total = total + f
        report = lm.VerificationReport('graded Frobenius a=%d b=%d'%(a, b), checked=len(series))
        report.record(total == lm.regular_character(a * b), (a, b, 'specialization'))
        reports.append(report)
    return reports


def suite_lie(config):
    reports = []
    for n in range(1, min(config.max_n, 6) + 1):
        for shape in partitions(n):
            reports.append(lm.check_higher_lie(shape))
    return reports


def suite_symmetry(config):
    reports = [lm.symmetry_checks(max_n=min(config.max_n, 8),
                                  max_nu_n=min(config.max_n, 6),
                                  max_perm_n=min(config.max_n, 6))]
    for n in range(1, min(config.max_n, 7) + 1):
        report = lm.omega_identities(n=n)
        report.name = 'omega on KW series n=%d'%n
        reports.append(report)
    for a, b in ((1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 2), (2, 4)):
        if a * b > min(config.max_n, config.max_ab): continue
        report = lm.omega_identities(a=a, b=b)
        report.name = 'omega on Schocker a=%d b=%d'%(a, b)
        reports.append(report)
    return reports


def suite_mash(config):
    known = lm.VerificationReport('maj_2^2 fails fiber constancy with the known pair')
    outcome = lm.check_mash_candidate(lambda w: wd.maj_ab(w, 2, 2), 2, 2)
    known.record(outcome.equidistributed and outcome.witness_fibers == MASH_WITNESS, outcome.witness_fibers)
    trivial = lm.VerificationReport('one-block mash candidates')
    for n in range(1, min(config.max_n, 5) + 1):
        for a, b in ((1, n), (n, 1)):
            outcome = lm.check_mash_candidate(lambda w, a=a, b=b: wd.maj_ab(w, a, b), a, b)
            trivial.record(outcome.holds, (a, b, outcome.witness_equidistribution, outcome.witness_fibers))
    return [known, trivial]


SUITES = OrderedDict([
    ('kernel', suite_kernel),
    ('words', suite_words),
    ('kw', suite_kw),
    ('nfd', suite_nfd),
    ('csp', suite_csp),
    ('syt-eval', suite_syt_eval),
    ('stembridge', suite_stembridge),
    ('schocker', suite_schocker),
    ('frobenius', suite_frobenius),
    ('lie', suite_lie),
    ('symmetry', suite_symmetry),
    ('mash', suite_mash),
])


def run_suite(name, config):
    '''
    Run one suite (or every suite for ``'all'``) and return the reports as
    ``(suite name, report)`` pairs, stopping after the first failed report.
    '''
    names = list(SUITES) if name == 'all' else [name]
    out = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(m.RED+'unknown suite %s'%repr(suite)+m.ENDC)
        try:
            with m.Timer('suite %s'%suite, config.verbose):
                reports = SUITES[suite](config)
        except m.VerificationError as e:
            failed = lm.VerificationReport(e.message)
            failed.record(False, e.witness)
            reports = [failed]
        for report in reports:
            out.append((suite, report))
            if not report.holds: return out
    return out
