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
Implements classes **Partition**, **PartitionTuple** and **Tableau**, the
Robinson-Schensted-Knuth correspondence by row insertion, enumeration of
standard and semistandard tableaux, Kostka numbers and the tableau-side
descent statistics.
'''
import bisect
from collections import Counter
from functools import lru_cache
from math import factorial

from .. import misc as m
from ..math_tools import reduce_to_range
from .words import Word, Composition, bfmaj_from_descents, maj_nu_from_bfmaj


class Partition(tuple):
    '''
    Weakly decreasing tuple of positive integers. The empty partition is
    ``Partition(())``.
    '''
    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0: parts = parts[:-1]
        if any(p < 1 for p in parts) or any(parts[i] < parts[i+1] for i in range(len(parts)-1)):
            raise ValueError(m.RED+'%s is not a partition'%str(parts)+m.ENDC)
        return super().__new__(cls, parts)

    def __repr__(self):
        return 'Partition(%s)'%str(tuple(self))

    def __str__(self):
        return '(%s)'%','.join(str(p) for p in self)

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        if not self: return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def dominates(self, other):
        '''dominance order through partial sums; pairs may be incomparable'''
        if self.size != Partition(other).size: return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b: return False
        return True

    def hookLengths(self):
        conj = self.conjugate()
        return [self[i] - j + conj[j] - i - 1 for i in range(len(self)) for j in range(self[i])]

    def numberOfSYT(self):
        count = factorial(self.size)
        for h in self.hookLengths(): count //= h
        return count

    def corners(self):
        return [i for i in range(len(self)) if i == len(self)-1 or self[i] > self[i+1]]

    def removeCell(self, row):
        parts = list(self)
        parts[row] -= 1
        return Partition(parts)


@lru_cache(maxsize=None)
def partitions(n):
    '''
    Partitions of **n** in decreasing lexicographic order, e.g.
    ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
    '''
    if n < 0: raise ValueError(m.RED+'n must be nonnegative'+m.ENDC)

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


class PartitionTuple(tuple):
    '''
    Tuple :math:`(\\lambda^{(1)},\\dots,\\lambda^{(a)})` of partitions; its
    size is the sum of the sizes of the entries.
    '''
    def __new__(cls, entries):
        return super().__new__(cls, tuple(Partition(e) for e in entries))

    def __repr__(self):
        return 'PartitionTuple(%s)'%str(self)

    def __str__(self):
        return '(%s)'%','.join(str(e) for e in self)

    @property
    def a(self):
        return len(self)

    @property
    def size(self):
        return sum(e.size for e in self)

    def sizes(self):
        return tuple(e.size for e in self)


def partition_tuples(a, b):
    '''all partition tuples with **a** entries and total size **b**'''
    def gen(slots, remaining):
        if slots == 0:
            if remaining == 0: yield ()
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                for rest in gen(slots - 1, remaining - k):
                    yield (p,) + rest
    return [PartitionTuple(t) for t in gen(a, b)]


class Tableau(object):
    '''
    Young tableau in English notation, stored row by row.

    Parameters
    ----------

        rows : sequence of sequences of :py:class:`int`
            the rows, top first

        kind : str
            ``'SSYT'`` or ``'SYT'``. Standard tableaux must contain each of
            ``1,...,n`` exactly once.
    '''
    def __init__(self, rows, kind='SSYT'):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows if len(row) > 0)
        self.kind = kind
        self.shape = Partition(len(row) for row in self.rows)
        self._check()

    def _check(self):
        if self.kind not in ('SSYT', 'SYT'):
            raise ValueError(m.RED+'unknown tableau kind %s'%self.kind+m.ENDC)
        for row in self.rows:
            if any(row[j] > row[j+1] for j in range(len(row)-1)):
                raise ValueError(m.RED+'rows must weakly increase: %s'%str(self.rows)+m.ENDC)
        for i in range(1, len(self.rows)):
            for j, x in enumerate(self.rows[i]):
                if self.rows[i-1][j] >= x:
                    raise ValueError(m.RED+'columns must strictly increase: %s'%str(self.rows)+m.ENDC)
        if self.kind == 'SYT':
            entries = sorted(x for row in self.rows for x in row)
            if entries != list(range(1, len(entries)+1)):
                raise ValueError(m.RED+'not a standard tableau: %s'%str(self.rows)+m.ENDC)

    def __eq__(self, other):
        if isinstance(other, Tableau): return self.rows == other.rows
        return self.rows == tuple(tuple(r) for r in other)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return 'Tableau(%s)'%str([list(r) for r in self.rows])

    def __len__(self):
        return self.shape.size

    def content(self):
        return Word(x for row in self.rows for x in row).content()

    def _requireStandard(self):
        if self.kind != 'SYT':
            raise ValueError(m.RED+'descent statistics need a standard tableau'+m.ENDC)

    def descentSet(self):
        '''entries ``i`` such that ``i+1`` lies in a strictly lower row'''
        self._requireStandard()
        row = {x: i for i, r in enumerate(self.rows) for x in r}
        return frozenset(i for i in range(1, len(self)) if row[i+1] > row[i])

    def maj(self):
        return sum(self.descentSet())

    def bfmajNu(self, nu):
        if sum(nu) != len(self):
            raise ValueError(m.RED+'nu has size %d but tableau has %d cells'%(sum(nu), len(self))+m.ENDC)
        return bfmaj_from_descents(self.descentSet(), tuple(nu))

    def majNu(self, nu):
        return maj_nu_from_bfmaj(self.bfmajNu(nu), tuple(nu))


def _insert(rows, x):
    '''row insertion of x; returns the index of the row that grew'''
    for i, row in enumerate(rows):
        j = bisect.bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return i
        row[j], x = x, row[j]
    rows.append([x])
    return len(rows) - 1


def rsk(w):
    '''
    Row-insertion RSK.

    Returns
    -------

        P : Tableau
            semistandard insertion tableau, same content as **w**

        Q : Tableau
            standard recording tableau, same descent set as **w**

    Examples
    --------

    ::

        P, Q = rsk(Word('2314'))
        Q.rows # ((1, 2, 4), (3,))
    '''
    w = w if isinstance(w, Word) else Word(w)
    P, Q = [], []
    for step, x in enumerate(w, start=1):
        i = _insert(P, x)
        if i == len(Q): Q.append([])
        Q[i].append(step)
    return Tableau(P, 'SSYT'), Tableau(Q, 'SYT')


def rsk_shape(letters):
    '''shape of the insertion tableau of any sequence of comparable letters'''
    P = []
    for x in letters: _insert(P, x)
    return Partition(len(row) for row in P)


def tableau_descents(Q):
    return Q.descentSet()

def tableau_maj(Q):
    return Q.maj()

def tableau_bfmaj_nu(Q, nu):
    return Q.bfmajNu(nu)


def enumerate_syt(shape):
    '''all standard tableaux of the given shape, generated by removing the cell holding n'''
    shape = Partition(shape)
    n = shape.size
    if n == 0:
        yield Tableau((), 'SYT')
        return
    for row in shape.corners():
        for smaller in enumerate_syt(shape.removeCell(row)):
            rows = [list(r) for r in smaller.rows]
            if row == len(rows): rows.append([])
            rows[row].append(n)
            yield Tableau(rows, 'SYT')


def _horizontal_strips(inner, outer, count):
    '''shapes sigma with inner <= sigma <= outer and sigma/inner a horizontal strip of size count'''
    k = len(outer)
    inner = list(inner) + [0] * (k - len(inner))

    def gen(i, left, prev_inner):
        if i == k:
            if left == 0: yield ()
            return
        top = outer[i] if i == 0 else min(outer[i], prev_inner)
        for add in range(min(left, top - inner[i]), -1, -1):
            for rest in gen(i + 1, left - add, inner[i]):
                yield (inner[i] + add,) + rest

    for sigma in gen(0, count, None):
        yield sigma


def enumerate_ssyt(shape, mu):
    '''
    All semistandard tableaux of **shape** with content **mu** (a
    composition), built by adding the letters ``1, 2, ...`` as successive
    horizontal strips.
    '''
    shape = Partition(shape)
    mu = Composition(mu)
    if mu.size != shape.size: return

    def fill(letter, current, rows):
        if letter > len(mu):
            yield Tableau(rows, 'SSYT')
            return
        for sigma in _horizontal_strips(current, shape, mu[letter-1]):
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(sigma) - len(rows))]
            for i, length in enumerate(sigma):
                new_rows[i].extend([letter] * (length - len(new_rows[i])))
            yield from fill(letter + 1, sigma, [r for r in new_rows if r])

    yield from fill(1, (), [])


@lru_cache(maxsize=None)
def _kostka(shape, mu):
    if not mu: return 1 if not shape else 0
    last = mu[-1]
    total = 0
    # remove the largest letter as a horizontal strip
    k = len(shape)
    def gen(i, left):
        if i == k:
            if left == 0: yield ()
            return
        below = shape[i+1] if i + 1 < k else 0
        for rem in range(min(left, shape[i] - below), -1, -1):
            for rest in gen(i + 1, left - rem):
                yield (shape[i] - rem,) + rest
    for rho in gen(0, last):
        total += _kostka(Partition(rho), mu[:-1])
    return total


def kostka_number(shape, mu):
    '''
    Number of semistandard tableaux of **shape** and content **mu**. The
    count does not depend on the order of the parts of **mu**.
    '''
    shape = Partition(shape)
    mu = tuple(sorted((p for p in Composition(mu) if p > 0), reverse=True))
    if sum(mu) != shape.size: return 0
    return _kostka(shape, mu)


@lru_cache(maxsize=None)
def syt_maj_counts(shape):
    ''':py:class:`collections.Counter` of ``maj(Q)`` over ``Q`` in ``SYT(shape)``'''
    return Counter(Q.maj() for Q in enumerate_syt(Partition(shape)))


@lru_cache(maxsize=None)
def syt_bfmaj_counts(shape, nu):
    ''':py:class:`collections.Counter` of ``bfmaj_nu(Q)`` over ``Q`` in ``SYT(shape)``'''
    return Counter(Q.bfmajNu(nu) for Q in enumerate_syt(Partition(shape)))


def a_coeff(shape, r, n):
    '''number of standard tableaux of **shape** with ``maj`` congruent to **r** modulo **n**'''
    shape = Partition(shape)
    if shape.size != n:
        raise ValueError(m.RED+'partition %s is not a partition of %d'%(str(shape), n)+m.ENDC)
    r = reduce_to_range(r, n)
    return sum(c for value, c in syt_maj_counts(shape).items() if reduce_to_range(value, n) == r)


def descent_class_counts(descents, n):
    descents = frozenset(descents)
    if any(not 1 <= d < n for d in descents):
        raise ValueError(m.RED+'descent positions must lie in [1,%d]'%(n-1)+m.ENDC)
    return {shape: sum(1 for Q in enumerate_syt(shape) if Q.descentSet() == descents)
            for shape in partitions(n)}


def schur_expand_descent_class(descents, n):
    '''
    Schur expansion of the content generating function of length **n**
    words with descent set **descents**: the coefficient of ``s_shape`` is
    the number of standard tableaux of that shape with the same descent set.
    '''
    from .symfunc import SymFunc
    counts = descent_class_counts(descents, n)
    return SymFunc(n, 'schur', {shape: c for shape, c in counts.items() if c})
