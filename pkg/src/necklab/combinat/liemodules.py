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
Characters of the modules induced from cyclic subgroups and of higher Lie
modules, each computed by a tableau formula and cross-checked against
independent routes (necklace generating functions, plethysm, direct orbit
enumeration, the Murnaghan-Nakayama oracle).

Content generating functions of degree ``d`` are always reconstructed from
their monomial coefficients on partitions, over the alphabet
``{1,...,d}``.
'''
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from .. import misc as m
from ..math_tools import (divisors, divisor_tuples, lcm, moebius, multinomial,
                          rad, reduce_to_range, z_lambda)
from .characters import CycleType, IntPolyModQn, induced_multiplicity
from .symfunc import (SymFunc, e, from_content_counts, h, multiply, omega, one,
                      plethysm, rearranged_content)
from .tableaux import (Partition, PartitionTuple, a_coeff, partition_tuples,
                       partitions, rsk, syt_bfmaj_counts)
from .words import (Word, enumerate_necklaces, enumerate_necklaces_by_content,
                    enumerate_words, enumerate_words_by_content, flex_ab,
                    maj_ab, maj_nu_from_bfmaj)

KINDS = ('trivial', 'sign')


@dataclass
class VerificationReport:
    '''
    Outcome of a family of identity checks.

    Attributes
    ----------

        name : str
            which identity was checked

        holds : bool
            :py:obj:`True` if every case passed

        checked : int
            number of cases compared

        witness : object
            first failing case, :py:obj:`None` if **holds**
    '''
    name: str
    holds: bool = True
    checked: int = 0
    witness: object = None

    def record(self, ok, witness):
        self.checked += 1
        if not ok and self.holds:
            self.holds = False
            self.witness = witness
        return ok

    def raiseOnFailure(self):
        if not self.holds:
            raise m.VerificationError('%s fails at %s'%(self.name, str(self.witness)), self.witness)
        return self


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(m.RED+'kind must be one of %s, got %s'%(str(KINDS), repr(kind))+m.ENDC)


def _schur_series(degree, coeffs):
    return SymFunc(degree, 'schur', {k: v for k, v in coeffs.items() if v})


def _integral_schur(f, what):
    '''checks nonnegative integer Schur coefficients'''
    coeffs = f.schurCoefficients()
    for shape, c in coeffs.items():
        if c < 0:
            raise ArithmeticError(m.RED+'%s has negative Schur coefficient at %s'%(what, str(shape))+m.ENDC)
    return SymFunc(f.degree, 'schur', coeffs)


def content_keys(degree, validate=False):
    '''partition contents of the degree, plus one rearrangement of each when validating'''
    keys = [tuple(shape) for shape in partitions(degree)]
    if validate:
        for shape in partitions(degree):
            rearranged = rearranged_content(shape, degree)
            if rearranged is not None: keys.append(rearranged)
    return keys


def content_gfs_by_statistic(n, statistic, validate=False):
    '''
    Content generating functions of the fibers of **statistic** on words
    of length **n**, as a dict value -> :py:class:`SymFunc` (monomial basis).
    '''
    counts = defaultdict(Counter)
    for key in content_keys(n, validate):
        for w in enumerate_words_by_content(key):
            counts[statistic(w)][key] += 1
    return {value: from_content_counts(c, n, validate) for value, c in counts.items()}


@lru_cache(maxsize=None)
def _necklace_gf(n, filter, r, validate=False):
    counts = Counter()
    for key in content_keys(n, validate):
        counts[key] += len(enumerate_necklaces_by_content(key, filter, r))
    return from_content_counts(counts, n, validate)


def nfd_gf(n, r, validate=False):
    '''content generating function of the necklaces of length n with frequency dividing r'''
    return _necklace_gf(n, 'freq_div', r, validate)


def nf_gf(n, f, validate=False):
    '''content generating function of the necklaces of length n with frequency f'''
    if n % f: return SymFunc(n, 'monomial')
    return _necklace_gf(n, 'freq_eq', f, validate)


def nfd_nu_gf(nu, tau):
    '''product over the blocks of nu of the NFD generating functions'''
    product = one()
    for nj, tj in zip(nu, tau):
        product = multiply(product, nfd_gf(nj, tj))
    return product


def nf_nu_gf(nu, rho):
    product = one()
    for nj, rj in zip(nu, rho):
        product = multiply(product, nf_gf(nj, rj))
    return product


# -- cyclic group C_n ------------------------------------------------------

def kw_series(n):
    '''
    Schur expansions of the characters induced from the characters of a
    cyclic subgroup generated by an n-cycle:
    ``r -> sum over shapes of a_coeff(shape, r, n) s_shape`` for r in 1..n.
    '''
    if n < 1: raise ValueError(m.RED+'n must be positive'+m.ENDC)
    return {r: _schur_series(n, {lam: a_coeff(lam, r, n) for lam in partitions(n)})
            for r in range(1, n + 1)}


def kw_dimension(n, r):
    return sum(a_coeff(lam, r, n) * lam.numberOfSYT() for lam in partitions(n))


def check_kw_series(n, validate=False, verbose=False):
    '''
    For every r, compare the tableau formula with the generating functions
    of necklaces with frequency dividing r, of words with ``flex == r`` and
    of words with ``maj_n == r``.
    '''
    report = VerificationReport('KW series n=%d'%n)
    with m.Timer('checking KW series n=%d'%n, verbose):
        series = kw_series(n)
        flex_fibers = content_gfs_by_statistic(n, lambda w: w.flex(), validate)
        maj_fibers = content_gfs_by_statistic(n, lambda w: w.majn(), validate)
        for r in range(1, n + 1):
            expected = series[r]
            report.record(expected == nfd_gf(n, r, validate), (n, r, 'necklaces'))
            report.record(expected == flex_fibers.get(r, SymFunc(n)), (n, r, 'flex'))
            report.record(expected == maj_fibers.get(r, SymFunc(n)), (n, r, 'maj'))
    return report


def kw_oracle(n):
    nu = CycleType((n,))
    return {r: _schur_series(n, {lam: induced_multiplicity(lam, nu, r) for lam in partitions(n)})
            for r in range(1, n + 1)}


def cyclic_exponents(shape, n=None):
    '''
    Polynomial :math:`\\sum_r a_{shape,r} q^r` over ``r`` in ``1..n``,
    stored modulo :math:`q^n-1` (``q^n`` is kept as the constant class).
    '''
    shape = Partition(shape)
    n = shape.size if n is None else n
    if n != shape.size:
        raise ValueError(m.RED+'partition %s is not a partition of %d'%(str(shape), n)+m.ENDC)
    poly = IntPolyModQn(n)
    for r in range(1, n + 1):
        poly.coefficients[r % n] += a_coeff(shape, r, n)
    return poly


# -- arbitrary cyclic subgroups --------------------------------------------

def bold_a_counts(shape, nu):
    '''``tau -> #{Q in SYT(shape) : bfmaj_nu(Q) = tau}``'''
    return syt_bfmaj_counts(Partition(shape), tuple(nu))


def stembridge_series(nu):
    '''
    Schur expansions of the characters induced from a cyclic subgroup
    generated by a permutation of cycle type **nu**, indexed by
    ``r = 1..lcm(nu)``; the coefficient of ``s_shape`` counts standard
    tableaux with ``maj_nu(Q) = r``.
    '''
    nu = CycleType(nu)
    ell, n = nu.order, nu.size
    coeffs = {r: Counter() for r in range(1, ell + 1)}
    for lam in partitions(n):
        for tau, count in bold_a_counts(lam, nu).items():
            coeffs[maj_nu_from_bfmaj(tau, nu)][lam] += count
    return {r: _schur_series(n, coeffs[r]) for r in range(1, ell + 1)}


def stembridge_oracle(nu):
    nu = CycleType(nu)
    return {r: _schur_series(nu.size, {lam: induced_multiplicity(lam, nu, r) for lam in partitions(nu.size)})
            for r in range(1, nu.order + 1)}


def sigma_nu(w, nu):
    '''rotate every block of w, block lengths given by nu'''
    out = []
    for block in w.blocks(nu): out.extend(block.rotate(1))
    return Word(out)


@lru_cache(maxsize=None)
def _orbit_frequencies(nu, validate):
    '''(content, frequency) -> number of orbits, by walking every orbit once'''
    ell = nu.order
    counts = Counter()
    for key in content_keys(nu.size, validate):
        seen = set()
        for w in enumerate_words_by_content(key):
            if w in seen: continue
            orbit, x = {w}, sigma_nu(w, nu)
            while x != w:
                orbit.add(x)
                x = sigma_nu(x, nu)
            seen.update(orbit)
            counts[(key, ell // len(orbit))] += 1
    return counts


def ofd_orbit_gf(nu, r, validate=False):
    '''
    Content generating function of the orbits of the cyclic group
    generated by a permutation of cycle type nu (acting blockwise by
    rotation) whose frequency divides r, by direct enumeration of orbits.
    '''
    nu = CycleType(nu)
    counts = Counter()
    for (key, frequency), number in _orbit_frequencies(nu, validate).items():
        if r % frequency == 0: counts[key] += number
    return from_content_counts(counts, nu.size, validate)


def ofd_gf_by_frequency(nu, r):
    '''
    Same generating function from the necklace tuples with prescribed
    frequencies rho, weighted by the number of orbits each tuple splits into.
    '''
    nu = CycleType(nu)
    ell = nu.order
    total = SymFunc(nu.size, 'monomial')
    for rho in divisor_tuples(nu):
        gammas = [nj // rj for nj, rj in zip(nu, rho)]
        size = lcm(*gammas)
        if (r * size) % ell: continue
        weight = 1
        for g in gammas: weight *= g
        total = total + nf_nu_gf(nu, rho).scale(Fraction(weight, size))
    return total


def ofd_gf_by_residue(nu, r):
    '''
    Same generating function as a sum of NFD tuple generating functions over
    tau with ``sum (ell/nu_j) tau_j = r mod ell``.
    '''
    nu = CycleType(nu)
    ell = nu.order
    total = SymFunc(nu.size, 'monomial')
    for tau in itertools.product(*[range(1, nj + 1) for nj in nu]):
        if sum((ell // nj) * tj for nj, tj in zip(nu, tau)) % ell != r % ell: continue
        total = total + nfd_nu_gf(nu, tau)
    return total


def ofd_content_gf(nu, r, m_letters=None, check=True):
    '''
    Orbit generating function of :py:func:`ofd_orbit_gf`; with **check**
    it is compared with :py:func:`ofd_gf_by_frequency` and
    :py:func:`ofd_gf_by_residue`.

    Parameters
    ----------

        m_letters : int
            alphabet size, at least the size of nu (defaults to it)
    '''
    nu = CycleType(nu)
    if m_letters is not None and m_letters < nu.size:
        raise ValueError(m.RED+'alphabet of size %d is too small for degree %d'%(m_letters, nu.size)+m.ENDC)
    direct = ofd_orbit_gf(nu, r)
    if check:
        if direct != ofd_gf_by_frequency(nu, r):
            raise m.VerificationError('orbit and frequency routes differ for nu=%s r=%d'%(str(nu), r), (nu, r))
        if direct != ofd_gf_by_residue(nu, r):
            raise m.VerificationError('orbit and residue routes differ for nu=%s r=%d'%(str(nu), r), (nu, r))
    return direct


def check_stembridge(nu, verbose=False):
    '''tableau formula against the character oracle and the orbit route'''
    nu = CycleType(nu)
    report = VerificationReport('Stembridge nu=%s'%str(nu))
    with m.Timer('checking branching for nu=%s'%str(nu), verbose):
        series = stembridge_series(nu)
        oracle = stembridge_oracle(nu)
        for r in range(1, nu.order + 1):
            report.record(series[r] == oracle[r], (nu, r, 'oracle'))
            report.record(series[r] == ofd_orbit_gf(nu, r), (nu, r, 'orbits'))
            report.record(series[r] == ofd_gf_by_residue(nu, r), (nu, r, 'residues'))
    return report


def check_bold_a(nu, tau):
    '''tuple NFD generating function against the bold-maj tableau counts'''
    n = sum(nu)
    expected = _schur_series(n, {lam: bold_a_counts(lam, nu).get(tuple(tau), 0) for lam in partitions(n)})
    return expected == nfd_nu_gf(nu, tau)


# -- Möbius weights and generalized Schocker formula -------------------------

def _mobius_f_sum(f, d, e):
    low = lcm(f, d)
    return sum(moebius(g // f) for g in divisors(e) if g % low == 0)


def _mobius_f_closed(f, d, e):
    low = lcm(f, d) // f
    if rad(e // f) == rad(low) == low: return moebius(low)
    return 0


def mobius_f(f, d, e):
    '''
    :math:`\\mu_f(d, e) = \\sum_{lcm(f,d) | g | e} \\mu(g/f)`, computed by the
    divisor sum and by the closed form; both must agree.
    '''
    if e % d or e % f:
        raise ValueError(m.RED+'mobius_f needs d | e and f | e, got f=%d d=%d e=%d'%(f, d, e)+m.ENDC)
    value = _mobius_f_sum(f, d, e)
    if value != _mobius_f_closed(f, d, e):
        raise m.VerificationError('closed form of mobius_f fails at %s'%str((f, d, e)), (f, d, e))
    return value


def mobius_f_tuple(fs, ds, es):
    value = 1
    for f, d, e_ in zip(fs, ds, es):
        value *= mobius_f(f, d, e_)
        if value == 0: break
    return value


def _schocker_terms(a, b, r, kind):
    '''(weight, a*nu, tau, mobius weight) for every nu of b and tau | r*nu'''
    _check_kind(kind)
    if a < 1 or b < 1 or not 1 <= r <= a:
        raise ValueError(m.RED+'need a, b >= 1 and r in [1,a]'+m.ENDC)
    for nu in partitions(b):
        weight = Fraction(1, z_lambda(nu))
        if kind == 'sign' and (b - len(nu)) % 2: weight = -weight
        r_nu = tuple(r * x for x in nu)
        a_nu = tuple(a * x for x in nu)
        for tau in divisor_tuples(r_nu):
            mu = mobius_f_tuple(tau, nu, r_nu)
            if mu: yield weight, a_nu, tau, mu


def schocker(a, b, r, kind='trivial'):
    '''
    Schur expansion of the character of the multisets (``kind='trivial'``)
    or sets (``kind='sign'``) of b necklaces of length a with frequency
    dividing r, by the tableau formula

    .. math::

        \\sum_{\\nu \\vdash b} w_\\nu \\sum_{\\tau | r\\nu}
        \\mu_\\tau(\\nu, r\\nu)\\, \\#\\{Q : \\mathbf{maj}_{a\\nu}(Q) = \\tau\\}

    Examples
    --------

    ::

        schocker(2, 2, 1) == s(2,2) + s(1,1,1,1) # True
    '''
    n = a * b
    coeffs = defaultdict(Fraction)
    for weight, a_nu, tau, mu in _schocker_terms(a, b, r, kind):
        for lam in partitions(n):
            count = bold_a_counts(lam, a_nu).get(tau, 0)
            if count: coeffs[lam] += weight * mu * count
    return _integral_schur(_schur_series(n, coeffs), 'schocker(%d,%d,%d,%s)'%(a, b, r, kind))


def schocker_by_necklaces(a, b, r, kind='trivial'):
    '''same double sum with NFD tuple generating functions in place of tableau counts'''
    total = SymFunc(a * b, 'monomial')
    for weight, a_nu, tau, mu in _schocker_terms(a, b, r, kind):
        total = total + nfd_nu_gf(a_nu, tau).scale(weight * mu)
    return _integral_schur(total, 'necklace route')


def schocker_by_plethysm(a, b, r, kind='trivial'):
    '''h_b or e_b plethysm with the NFD generating function'''
    _check_kind(kind)
    outer = h(b) if kind == 'trivial' else e(b)
    return _integral_schur(plethysm(outer, nfd_gf(a, r)).convert('schur'), 'plethysm route')


def schocker_by_multisets(a, b, r, kind='trivial', validate=False):
    '''
    Direct count of multisets (trivial) or sets (sign) of b necklaces from
    NFD_{a,r} over the alphabet ``{1,...,ab}``.
    '''
    _check_kind(kind)
    n = a * b
    wanted = set(content_keys(n, validate))
    contents = []
    for necklace in enumerate_necklaces(a, n, 'freq_div', r):
        c = list(necklace.content())
        contents.append(tuple(c + [0] * (n - len(c))))
    choose = itertools.combinations_with_replacement if kind == 'trivial' else itertools.combinations
    counts = Counter()
    for selection in choose(contents, b):
        total = [sum(col) for col in zip(*selection)]
        while total and total[-1] == 0: total.pop()
        key = tuple(total)
        if key in wanted: counts[key] += 1
    return _integral_schur(from_content_counts(counts, n, validate), 'multiset route')


def check_schocker(a, b, r, kind, with_multisets=True, verbose=False):
    report = VerificationReport('Schocker a=%d b=%d r=%d %s'%(a, b, r, kind))
    with m.Timer('checking Schocker formula a=%d b=%d r=%d %s'%(a, b, r, kind), verbose):
        formula = schocker(a, b, r, kind)
        report.record(formula == schocker_by_necklaces(a, b, r, kind), (a, b, r, kind, 'necklaces'))
        report.record(formula == schocker_by_plethysm(a, b, r, kind), (a, b, r, kind, 'plethysm'))
        if with_multisets:
            report.record(formula == schocker_by_multisets(a, b, r, kind), (a, b, r, kind, 'multisets'))
    return report


def even_column_sum(n):
    '''sum of s_shape over shapes of n whose columns all have even length'''
    return _schur_series(n, {lam: 1 for lam in partitions(n) if all(c % 2 == 0 for c in lam.conjugate())})


def check_nfd_power_plethysm(a, r, k):
    '''
    ``p_k[NFD_{a,r}]`` against ``sum over s | rk of mobius_f(s, k, rk) NFD_{ak,s}``
    '''
    from .symfunc import p
    lhs = plethysm(p(k), nfd_gf(a, r))
    rhs = SymFunc(a * k, 'monomial')
    for s_ in divisors(r * k):
        mu = mobius_f(s_, k, r * k)
        if mu: rhs = rhs + nfd_gf(a * k, s_).scale(mu)
    return lhs == rhs


# -- wreath products and graded Frobenius series ---------------------------

def _check_tuple(a, b, ul):
    ul = PartitionTuple(ul)
    if ul.a != a:
        raise ValueError(m.RED+'partition tuple must have %d entries, got %d'%(a, ul.a)+m.ENDC)
    if ul.size != b:
        raise ValueError(m.RED+'partition tuple %s does not have total size %d'%(str(ul), b)+m.ENDC)
    return ul


def wreath_char(a, b, ul):
    '''
    Product over r of the plethysms ``s_{ul[r]}[NFD_{a,r}]``: Schur expansion
    of the character induced from the wreath irreducible indexed by **ul**.
    '''
    ul = _check_tuple(a, b, ul)
    product = one()
    for r, lam in enumerate(ul, start=1):
        if not lam: continue
        product = multiply(product, plethysm(SymFunc.basisElement('schur', lam), nfd_gf(a, r)))
    return _integral_schur(product, 'wreath_char %s'%str(ul))


def wreath_dim(ul):
    ul = PartitionTuple(ul)
    dim = multinomial(ul.sizes())
    for lam in ul: dim *= lam.numberOfSYT()
    return dim


def graded_frobenius(a, b, check=True, order=None, verbose=False):
    '''
    ``ul -> wreath_dim(ul) * wreath_char(a, b, ul)`` over the partition
    tuples of size b. With **check**, compared with the content generating
    functions of the fibers of ``flex_ab`` and ``maj_ab`` on words of length
    ab.
    '''
    n = a * b
    with m.Timer('graded Frobenius series a=%d b=%d'%(a, b), verbose):
        way1 = {ul: wreath_char(a, b, ul).scale(wreath_dim(ul)) for ul in partition_tuples(a, b)}
        if check:
            way2 = content_gfs_by_statistic(n, lambda w: flex_ab(w, a, b, order))
            way3 = content_gfs_by_statistic(n, lambda w: maj_ab(w, a, b, order))
            for ul, expected in way1.items():
                if expected != way2.get(ul, SymFunc(n)):
                    raise m.VerificationError('flex_ab fiber differs at %s'%str(ul), ul)
                if expected != way3.get(ul, SymFunc(n)):
                    raise m.VerificationError('maj_ab fiber differs at %s'%str(ul), ul)
            for fibers in (way2, way3):
                extra = [ul for ul in fibers if ul not in way1]
                if extra:
                    raise m.VerificationError('unexpected fiber %s'%str(extra[0]), extra[0])
    return way1


def regular_character(n):
    return _schur_series(n, {lam: lam.numberOfSYT() for lam in partitions(n)})


# -- higher Lie modules ----------------------------------------------------

def higher_lie(shape):
    '''
    Schur expansion of the higher Lie character indexed by **shape**:
    product over the distinct parts i, of multiplicity b_i, of
    ``schocker(i, b_i, 1, 'trivial')``.
    '''
    shape = Partition(shape)
    product = one()
    for part, mult in sorted(Counter(shape).items()):
        product = multiply(product, schocker(part, mult, 1, 'trivial'))
    return _integral_schur(product, 'higher_lie %s'%str(shape))


def cycle_type(permutation):
    seen, lengths = set(), []
    for start in range(1, len(permutation) + 1):
        if start in seen: continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = permutation[x - 1]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def gessel_reutenauer(shape):
    '''
    Sum of fundamental quasisymmetric functions :math:`F_{n,Des(\\sigma)}`
    over permutations of cycle type **shape**; each :math:`F_{n,D}` is
    expanded by listing weakly increasing words with strict rises at D.
    '''
    shape = Partition(shape)
    n = shape.size
    descent_classes = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        if cycle_type(perm) == shape:
            descent_classes[Word(perm).descentSet()] += 1
    increasing = [Word(c) for c in itertools.combinations_with_replacement(range(1, n + 1), n)] if n else [Word(())]
    counts = Counter()
    for descents, mult in descent_classes.items():
        for w in increasing:
            if all(w[i-1] < w[i] for i in descents):
                counts[tuple(w.content())] += mult
    return from_content_counts(counts, n, validate=True)


def check_higher_lie(shape):
    shape = Partition(shape)
    report = VerificationReport('higher Lie %s'%str(shape))
    value = higher_lie(shape)
    report.record(value == gessel_reutenauer(shape), (shape, 'descent classes'))
    parts = set(shape)
    if len(parts) == 1 and shape:
        a, b = shape[0], len(shape)
        report.record(value == schocker_by_multisets(a, b, 1, 'trivial'), (shape, 'multisets'))
    n = shape.size
    dim = sum(c * lam.numberOfSYT() for lam, c in value.schurCoefficients().items())
    report.record(dim * z_lambda(shape) == factorial(n), (shape, 'dimension'))
    return report


# -- omega and symmetry checks ---------------------------------------------

def omega_identities(n=None, a=None, b=None):
    '''
    Checks ``omega(kw_series(n)[r]) == kw_series(n)[C(n,2) - r]`` and, for a
    given (a, b), the behaviour of omega on the Schocker characters: trivial
    to sign for odd a, ``r -> C(a,2) - r`` in both kinds for even a.
    '''
    report = VerificationReport('omega identities')
    if n is not None:
        series = kw_series(n)
        for r in range(1, n + 1):
            target = reduce_to_range(comb(n, 2) - r, n)
            report.record(omega(series[r]) == series[target], ('kw', n, r))
    if a is not None and b is not None:
        for r in range(1, a + 1):
            if a % 2:
                report.record(omega(schocker(a, b, r, 'trivial')) == schocker(a, b, r, 'sign'), ('schocker', a, b, r))
            else:
                target = reduce_to_range(comb(a, 2) - r, a)
                for kind in KINDS:
                    report.record(omega(schocker(a, b, r, kind)) == schocker(a, b, target, kind), ('schocker', a, b, r, kind))
    return report


def compositions_of_parts(nu):
    '''distinct orderings of the parts of nu, with the index permutation producing each'''
    seen = {}
    for perm in itertools.permutations(range(len(nu))):
        key = tuple(nu[i] for i in perm)
        if key not in seen: seen[key] = perm
    return seen


def symmetry_checks(max_n=8, max_nu_n=6, max_perm_n=6, max_k=3):
    '''
    * ``a_coeff(shape, r, n) == a_coeff(shape, gcd(n, r), n)`` for n up to **max_n**
    * bold-maj counts are unchanged when nu and tau are permuted together,
      for nu with at most **max_k** parts and size up to **max_perm_n**
    * the coefficients of :py:func:`stembridge_series` only depend on
      ``gcd(lcm(nu), r)``, for nu of size up to **max_nu_n**
    '''
    report = VerificationReport('symmetries')
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            for r in range(1, n + 1):
                report.record(a_coeff(lam, r, n) == a_coeff(lam, gcd(n, r), n), ('gcd', lam, r))
    for n in range(1, max_perm_n + 1):
        for nu in partitions(n):
            if len(nu) > max_k: continue
            for lam in partitions(n):
                base = bold_a_counts(lam, nu)
                for permuted, perm in compositions_of_parts(nu).items():
                    other = bold_a_counts(lam, permuted)
                    for tau in itertools.product(*[range(1, x + 1) for x in nu]):
                        moved = tuple(tau[i] for i in perm)
                        report.record(base.get(tau, 0) == other.get(moved, 0), ('permutation', lam, nu, permuted, tau))
    for n in range(1, max_nu_n + 1):
        for nu in partitions(n):
            series = stembridge_series(nu)
            ell = lcm(*nu)
            for r in range(1, ell + 1):
                report.record(series[r] == series[gcd(ell, r)], ('gcd nu', nu, r))
    return report


# -- mash candidates -------------------------------------------------------

@dataclass
class MashReport:
    '''
    Outcome of :py:func:`check_mash_candidate`. **witness_equidistribution**
    is a content on which the value multisets differ; **witness_fibers** is
    a pair of words with the same recording tableau and different values.
    '''
    equidistributed: bool
    constant_on_fibers: bool
    witness_equidistribution: object = None
    witness_fibers: object = None

    @property
    def holds(self):
        return self.equidistributed and self.constant_on_fibers


def check_mash_candidate(stat, a, b):
    '''
    Check a partition-tuple valued statistic on words of length ab over
    ``{1,...,ab}``: (i) on each content it has the same value multiset as
    ``maj_ab``; (ii) it is constant on words with the same RSK recording
    tableau.

    Standard words are scanned first (in lexicographic order), then the
    remaining words; the fiber witness pairs a word with the latest earlier
    word of its fiber that has a different value.
    '''
    n = a * b
    by_content = defaultdict(lambda: [Counter(), Counter()])
    for w in enumerate_words(n, n):
        entry = by_content[w.content()]
        entry[0][stat(w)] += 1
        entry[1][maj_ab(w, a, b)] += 1
    witness_i = None
    for alpha in sorted(by_content, key=tuple):
        candidate, reference = by_content[alpha]
        if candidate != reference:
            witness_i = tuple(alpha.stripped())
            break

    standard = [Word(perm) for perm in itertools.permutations(range(1, n + 1))]
    standard_set = set(standard)
    others = (w for w in enumerate_words(n, n) if w not in standard_set)
    fibers = defaultdict(list)
    witness_ii = None
    for w in itertools.chain(standard, others):
        value = stat(w)
        fiber = fibers[rsk(w)[1].rows]
        for earlier, earlier_value in reversed(fiber):
            if earlier_value != value:
                witness_ii = (w, earlier)
                break
        if witness_ii is not None: break
        fiber.append((w, value))
    return MashReport(witness_i is None, witness_ii is None, witness_i, witness_ii)
