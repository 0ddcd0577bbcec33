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
Integer number theory used across the package: divisors, Möbius function,
radical, least common multiple, multinomials and centralizer orders.

All functions work with Python integers only.
'''
import itertools
from collections import Counter
from functools import lru_cache, reduce
from math import factorial, gcd

from . import misc as m


def _check_positive(n, name='n'):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(m.RED+'%s must be a positive integer, got %s'%(name, repr(n))+m.ENDC)


@lru_cache(maxsize=None)
def factorize(n):
    '''
    Prime factorization of **n** as a tuple of ``(prime, exponent)`` pairs
    sorted by prime.
    '''
    _check_positive(n)
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1
    if n > 1: factors.append((n, 1))
    return tuple(factors)


@lru_cache(maxsize=None)
def divisors(n):
    '''
    Sorted tuple of the positive divisors of **n**.

    Examples
    --------

    ::

        divisors(12) # (1, 2, 3, 4, 6, 12)
    '''
    _check_positive(n)
    small = [d for d in range(1, int(n**0.5)+1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return tuple(small + large)


def moebius(n):
    '''
    Möbius function: 0 if **n** has a square factor, else :math:`(-1)^k`
    with :math:`k` the number of prime factors.
    '''
    factors = factorize(n)
    if any(e > 1 for _, e in factors): return 0
    return -1 if len(factors) % 2 else 1


def rad(n):
    '''product of the distinct primes dividing **n** (``rad(1) = 1``)'''
    return reduce(lambda x, pe: x * pe[0], factorize(n), 1)


def lcm(*values):
    if not values: return 1
    return reduce(lambda x, y: x * y // gcd(x, y), values, 1)


def multinomial(parts):
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(m.RED+'multinomial parts must be nonnegative'+m.ENDC)
    result = factorial(sum(parts))
    for p in parts: result //= factorial(p)
    return result


def z_lambda(partition):
    '''
    Centralizer order :math:`z_\\lambda = \\prod_i i^{m_i} m_i!` of a
    permutation with cycle type **partition**, so that ``n!/z_lambda`` is
    the size of the conjugacy class.
    '''
    z = 1
    for part, mult in Counter(partition).items():
        z *= part**mult * factorial(mult)
    return z


def divisor_tuples(values):
    '''
    All tuples ``(d_1, ..., d_k)`` with ``d_j | values[j]``, in mixed-radix
    order (last entry varying fastest).
    '''
    return itertools.product(*[divisors(v) for v in values])


def reduce_to_range(x, n):
    '''representative of ``x mod n`` in ``{1, ..., n}``'''
    _check_positive(n)
    return (x - 1) % n + 1
