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
Independent character oracle for symmetric groups and their cyclic
subgroups.

Contains the Murnaghan-Nakayama rule, power cycle types, Ramanujan sums,
polynomials modulo :math:`q^n-1` with exact evaluation at roots of unity
(reduction modulo cyclotomic polynomials) and induced multiplicities
computed by Frobenius reciprocity. No floating point is involved.
'''
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .. import misc as m
from ..math_tools import divisors, lcm, moebius, rad, z_lambda
from .tableaux import Partition, partitions, syt_maj_counts

__all__ = ['CycleType', 'IntPolyModQn', 'NonInteger', 'cyclotomic_polynomial',
           'eval_at_root', 'mn_character', 'power_cycle_type', 'ramanujan_sum',
           'ramanujan_sum_by_roots', 'induced_multiplicity', 'syt_maj_polynomial',
           'moebius', 'rad', 'z_lambda']


class CycleType(Partition):
    '''cycle type of a permutation; :py:attr:`order` is the lcm of the parts'''
    def __repr__(self):
        return 'CycleType(%s)'%str(tuple(self))

    @property
    def order(self):
        return lcm(*self)


class IntPolyModQn(object):
    '''
    Integer polynomial reduced modulo :math:`q^n - 1`, stored as ``n``
    coefficients indexed by exponent classes ``0,...,n-1``.

    Parameters
    ----------

        n : int
            the modulus

        coefficients : sequence of :py:class:`int`
            any length; exponent ``e`` is accumulated into class ``e mod n``
    '''
    def __init__(self, n, coefficients=()):
        if n < 1:
            raise ValueError(m.RED+'modulus must be positive'+m.ENDC)
        self.n = n
        self.coefficients = np.zeros(n, dtype=np.int64)
        for e, c in enumerate(coefficients):
            self.coefficients[e % n] += int(c)

    @classmethod
    def fromExponents(cls, n, exponents):
        '''``sum of q**e`` over the given exponents (with multiplicity)'''
        poly = cls(n)
        for e, c in Counter(int(e) % n for e in exponents).items():
            poly.coefficients[e] += c
        return poly

    def coefficient(self, e):
        return int(self.coefficients[e % self.n])

    def valueAtOne(self):
        return int(self.coefficients.sum())

    def toList(self):
        return [int(c) for c in self.coefficients]

    def __eq__(self, other):
        if not isinstance(other, IntPolyModQn): return NotImplemented
        return self.n == other.n and np.array_equal(self.coefficients, other.coefficients)

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError(m.RED+'cannot add polynomials with moduli %d and %d'%(self.n, other.n)+m.ENDC)
        return IntPolyModQn(self.n, self.coefficients + other.coefficients)

    def __sub__(self, other):
        if self.n != other.n:
            raise ValueError(m.RED+'cannot subtract polynomials with moduli %d and %d'%(self.n, other.n)+m.ENDC)
        return IntPolyModQn(self.n, self.coefficients - other.coefficients)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.toList()):
            if c == 0: continue
            mono = '1' if e == 0 else 'q' if e == 1 else 'q^%d'%e
            if e == 0: terms.append(str(c))
            else: terms.append(mono if c == 1 else '%d*%s'%(c, mono))
        return 'IntPolyModQn(%d, %s)'%(self.n, ' + '.join(terms) if terms else '0')


@dataclass(frozen=True)
class NonInteger:
    '''
    Value of an evaluation at a root of unity that is not a rational
    integer. **remainder** holds the reduced coefficients (constant term
    first) modulo the relevant cyclotomic polynomial.
    '''
    remainder: tuple


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d):
    '''coefficients of the d-th cyclotomic polynomial, constant term first'''
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        num = _exact_division(num, cyclotomic_polynomial(e))
    return tuple(num)


def _exact_division(num, den):
    num = list(num)
    quotient = [0] * (len(num) - len(den) + 1)
    for i in range(len(quotient) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        quotient[i] = c
        for j, dj in enumerate(den): num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError(m.RED+'inexact polynomial division'+m.ENDC)
    return quotient


def _reduce_monic(h, phi):
    h = list(h)
    k = len(phi) - 1
    for i in range(len(h) - 1, k - 1, -1):
        c = h[i]
        if c == 0: continue
        for j, pj in enumerate(phi): h[i - k + j] -= c * pj
    h = h[:k] if k > 0 else []
    while h and h[-1] == 0: h.pop()
    return h


def eval_at_root(f, n, r):
    '''
    Exact value of :math:`f(\\omega_n^r)` with :math:`\\omega_n` a primitive
    n-th root of unity.

    Parameters
    ----------

        f : IntPolyModQn or sequence of :py:class:`int`
            polynomial, coefficients indexed by exponent

        n : int
            order of the root

        r : int
            power of the root

    Returns
    -------

        value : int or NonInteger
            an :py:class:`int` when the value is a rational integer
    '''
    coefficients = f.toList() if isinstance(f, IntPolyModQn) else [int(c) for c in f]
    g = gcd(n, r % n) if r % n else n
    d = n // g
    h = [0] * d
    for e, c in enumerate(coefficients):
        if c: h[((e * r) % n) // g] += c
    remainder = _reduce_monic(h, cyclotomic_polynomial(d))
    if len(remainder) <= 1:
        return remainder[0] if remainder else 0
    return NonInteger(tuple(remainder))


@lru_cache(maxsize=None)
def _mn(beta, mu):
    if not mu: return 1
    k, rest = mu[0], mu[1:]
    total = 0
    beta_set = set(beta)
    for b in beta:
        if b - k < 0 or (b - k) in beta_set: continue
        # border strip of size k: move bead b to b-k, sign from beads jumped over
        height = sum(1 for c in beta if b - k < c < b)
        new_beta = tuple(sorted((beta_set - {b}) | {b - k}, reverse=True))
        total += (-1)**height * _mn(new_beta, rest)
    return total


def mn_character(shape, mu):
    '''
    Character value :math:`\\chi^{shape}(\\mu)` by the Murnaghan-Nakayama
    rule (border strips removed on the abacus of beta numbers).
    '''
    shape, mu = Partition(shape), Partition(mu)
    if shape.size != mu.size:
        raise ValueError(m.RED+'size mismatch between %s and %s'%(str(shape), str(mu))+m.ENDC)
    ell = len(shape)
    beta = tuple(shape[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(mu))


def power_cycle_type(nu, j):
    '''cycle type of the j-th power of a permutation of cycle type nu'''
    if j < 0: raise ValueError(m.RED+'power must be nonnegative'+m.ENDC)
    parts = []
    for part in nu:
        g = gcd(part, j) if j else part
        parts.extend([part // g] * g)
    return Partition(sorted(parts, reverse=True))


def ramanujan_sum(q, r):
    ''':math:`c_q(r) = \\sum_{d | \\gcd(q,r)} d\\,\\mu(q/d)`'''
    if q < 1: raise ValueError(m.RED+'q must be positive'+m.ENDC)
    g = gcd(q, r) if r else q
    return sum(d * moebius(q // d) for d in divisors(g))


def ramanujan_sum_by_roots(q, r):
    '''sum of the r-th powers of the primitive q-th roots of unity, evaluated exactly'''
    exponents = [k * r for k in range(1, q + 1) if gcd(k, q) == 1]
    return eval_at_root(IntPolyModQn.fromExponents(q, exponents), q, 1)


def induced_multiplicity(shape, nu, r):
    '''
    Multiplicity of the irreducible indexed by **shape** in the character
    induced from :math:`\\chi^r` on a cyclic subgroup generated by a
    permutation of cycle type **nu**:

    .. math::

        \\frac{1}{\\ell}\\sum_{j=1}^{\\ell} \\chi^{shape}(\\sigma^j)\\,\\omega_\\ell^{-rj}
    '''
    shape, nu = Partition(shape), CycleType(nu)
    ell = nu.order
    if shape.size != nu.size:
        raise ValueError(m.RED+'size mismatch between %s and %s'%(str(shape), str(nu))+m.ENDC)
    poly = IntPolyModQn(ell)
    for j in range(1, ell + 1):
        poly.coefficients[(-r * j) % ell] += mn_character(shape, power_cycle_type(nu, j))
    value = eval_at_root(poly, ell, 1)
    if isinstance(value, NonInteger) or value % ell or value < 0:
        raise ArithmeticError(m.RED+'induced multiplicity of %s from %s is not a nonnegative integer: %s/%d'%(str(shape), str(nu), str(value), ell)+m.ENDC)
    return value // ell


def syt_maj_polynomial(shape, n=None):
    '''
    ``sum q**maj(Q)`` over standard tableaux of **shape**, reduced modulo
    :math:`q^n - 1` (``n`` defaults to the size of the shape).
    '''
    shape = Partition(shape)
    n = shape.size if n is None else n
    poly = IntPolyModQn(n)
    for value, count in syt_maj_counts(shape).items():
        poly.coefficients[value % n] += count
    return poly


def character_table(n):
    '''square numpy array ``X[i,j] = chi^{lambda_i}(mu_j)`` over :py:func:`partitions`'''
    parts = partitions(n)
    return np.array([[mn_character(lam, mu) for mu in parts] for lam in parts], dtype=np.int64)


def check_column_orthogonality(n):
    '''the Gram matrix of the columns of the character table is diag(z_mu)'''
    parts = partitions(n)
    X = character_table(n)
    gram = X.T @ X
    for j, k in itertools.product(range(len(parts)), repeat=2):
        expected = z_lambda(parts[j]) if j == k else 0
        if gram[j, k] != expected:
            raise m.VerificationError('column orthogonality fails at %s'%str((parts[j], parts[k])), (parts[j], parts[k]))
    return True
