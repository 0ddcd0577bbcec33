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
Implements classes **Word**, **Composition**, **Necklace**, **NuOrbit** and
**MajTuple** together with the word statistics built on them: descent set,
major index, its cyclic reductions, period, frequency, ``flex``, the
block-wise statistics attached to a cycle type ``nu`` and the partition-tuple
valued statistics ``flex_ab`` / ``maj_ab``.

Letters are positive integers. The rotation used everywhere is
:math:`\\sigma \\cdot w_1 \\cdots w_n = w_n w_1 \\cdots w_{n-1}`.
'''
import itertools
from dataclasses import dataclass
from math import gcd

from .. import misc as m
from ..math_tools import divisors, lcm, moebius, reduce_to_range

FILTERS = ('all', 'freq_eq', 'freq_div')


class Word(tuple):
    '''
    Immutable sequence of positive integer letters, inheriting from
    :py:class:`tuple`.

    Parameters
    ----------

        letters : iterable of :py:class:`int` or :py:class:`str`
            the letters. A string is read one digit per letter, so
            ``Word('15531553')`` is the word with letters 1,5,5,3,1,5,5,3.

    Examples
    --------

    ::

        w = Word('15531553')
        w.descentSet() # frozenset({3, 4, 7})
        w.maj()        # 14
        w.flex()       # 2
    '''
    def __new__(cls, letters=()):
        if isinstance(letters, str):
            letters = [int(c) for c in letters]
        letters = tuple(int(c) for c in letters)
        for c in letters:
            if c < 1:
                raise ValueError(m.RED+'letters must be positive integers, got %d'%c+m.ENDC)
        return super().__new__(cls, letters)

    def __repr__(self):
        return 'Word(%s)'%repr(str(self)) if all(c < 10 for c in self) else 'Word(%s)'%repr(tuple(self))

    def __str__(self):
        if all(c < 10 for c in self): return ''.join(str(c) for c in self)
        return ','.join(str(c) for c in self)

    def _checkNonEmpty(self, what):
        if len(self) == 0:
            raise ValueError(m.RED+'%s of the empty word is undefined: empty word'%what+m.ENDC)

    def descentSet(self):
        return frozenset(i for i in range(1, len(self)) if self[i-1] > self[i])

    def maj(self):
        return sum(self.descentSet())

    def majn(self):
        '''major index reduced modulo the length, with values in ``{1,...,n}``'''
        self._checkNonEmpty('maj_n')
        return reduce_to_range(self.maj(), len(self))

    def content(self):
        if not self: return Composition(())
        parts = [0] * max(self)
        for c in self: parts[c-1] += 1
        return Composition(parts)

    def rotate(self, k=1):
        '''apply :math:`\\sigma^k`, moving the last **k** letters to the front'''
        n = len(self)
        if n == 0: return self
        k %= n
        if k == 0: return self
        return Word(self[n-k:] + self[:n-k])

    def period(self):
        self._checkNonEmpty('period')
        n = len(self)
        for p in divisors(n):
            if self[p:] + self[:p] == self: return p

    def frequency(self):
        return len(self) // self.period()

    def periodFreq(self):
        p = self.period()
        return p, len(self) // p

    def rotations(self):
        '''distinct rotations of the word, sorted lexicographically'''
        self._checkNonEmpty('rotations')
        return sorted(set(self.rotate(k) for k in range(self.period())))

    def necklace(self):
        p, f = self.periodFreq()
        return Necklace(min(self.rotate(k) for k in range(p)), p, f)

    def lexRank(self):
        '''1-based position of the word among its sorted distinct rotations'''
        return self.rotations().index(self) + 1

    def flex(self):
        return self.frequency() * self.lexRank()

    def blocks(self, lengths):
        lengths = tuple(lengths)
        if sum(lengths) != len(self):
            raise ValueError(m.RED+'word of length %d cannot be split into blocks %s'%(len(self), str(lengths))+m.ENDC)
        out, start = [], 0
        for l in lengths:
            out.append(Word(self[start:start+l]))
            start += l
        return out

    def standardize(self):
        '''
        permutation word with the same relative order, ties broken left to
        right (keeps the descent set)
        '''
        order = sorted(range(len(self)), key=lambda i: (self[i], i))
        std = [0] * len(self)
        for rank, i in enumerate(order): std[i] = rank + 1
        return Word(std)


class Composition(tuple):
    '''
    Weak composition: a tuple of nonnegative integers. Two compositions are
    content-equal when they agree after stripping trailing zeros, and
    ``==`` implements that comparison.
    '''
    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(m.RED+'composition parts must be nonnegative'+m.ENDC)
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def stripped(self):
        parts = list(self)
        while parts and parts[-1] == 0: parts.pop()
        return tuple(parts)

    def isPartition(self):
        s = self.stripped()
        return all(p > 0 for p in s) and all(s[i] >= s[i+1] for i in range(len(s)-1))

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.stripped() == Composition(other).stripped()
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.stripped())

    def __add__(self, other):
        '''componentwise sum (content of a concatenation)'''
        k = max(len(self), len(other))
        a = list(self) + [0]*(k-len(self))
        b = list(other) + [0]*(k-len(other))
        return Composition([x+y for x, y in zip(a, b)])


@dataclass(frozen=True, order=True)
class Necklace:
    '''
    Rotation class of a word, stored through its lexicographically least
    rotation.
    '''
    representative: Word
    period: int
    frequency: int

    def __post_init__(self):
        if self.period * self.frequency != len(self.representative):
            raise ValueError(m.RED+'period times frequency must equal the necklace length'+m.ENDC)

    @property
    def length(self):
        return len(self.representative)

    def content(self):
        return self.representative.content()

    def words(self):
        return self.representative.rotations()

    def __str__(self):
        return '[%s]'%str(self.representative)


class MajTuple(tuple):
    '''
    Tuple :math:`(t_1,\\dots,t_k)` with :math:`1 \\le t_j \\le \\nu_j`, as
    produced by :py:func:`bfmaj_nu`.
    '''
    def __new__(cls, entries, nu):
        entries = tuple(int(t) for t in entries)
        nu = tuple(nu)
        if len(entries) != len(nu):
            raise ValueError(m.RED+'MajTuple needs one entry per part of nu'+m.ENDC)
        for t, nj in zip(entries, nu):
            if not 1 <= t <= nj:
                raise ValueError(m.RED+'entry %d out of range [1,%d]'%(t, nj)+m.ENDC)
        obj = super().__new__(cls, entries)
        obj.nu = nu
        return obj


@dataclass(frozen=True)
class NuOrbit:
    '''
    Element of :math:`N_{\\nu_1} \\times \\cdots \\times N_{\\nu_k}`: one
    necklace per block of the cycle type ``nu``.
    '''
    blocks: tuple

    @property
    def nu(self):
        return tuple(b.length for b in self.blocks)

    @property
    def frequencies(self):
        return tuple(b.frequency for b in self.blocks)

    def content(self):
        total = Composition(())
        for b in self.blocks: total = total + b.content()
        return total


def _word(w):
    return w if isinstance(w, Word) else Word(w)


def descent_set(w):
    return _word(w).descentSet()

def maj(w):
    return _word(w).maj()

def maj_n(w):
    return _word(w).majn()

def content(w):
    return _word(w).content()

def period_freq(w):
    return _word(w).periodFreq()

def necklace_of(w):
    return _word(w).necklace()

def rotations(w):
    return _word(w).rotations()

def flex(w):
    return _word(w).flex()


def enumerate_words(n, m_letters):
    '''
    All words of length **n** over ``{1,...,m_letters}`` in lexicographic
    order (a generator of ``m_letters**n`` words).
    '''
    if n < 0 or m_letters < 1:
        raise ValueError(m.RED+'need n >= 0 and an alphabet of size >= 1'+m.ENDC)
    for letters in itertools.product(range(1, m_letters+1), repeat=n):
        yield Word(letters)


def enumerate_words_by_content(alpha):
    '''
    All words of content **alpha**, in lexicographic order, without
    duplicates.
    '''
    letters = []
    for j, mult in enumerate(Composition(alpha)):
        letters.extend([j+1] * mult)
    n = len(letters)
    yield Word(letters)
    while True:
        # next permutation of a multiset
        i = n - 2
        while i >= 0 and letters[i] >= letters[i+1]: i -= 1
        if i < 0: return
        j = n - 1
        while letters[j] <= letters[i]: j -= 1
        letters[i], letters[j] = letters[j], letters[i]
        letters[i+1:] = reversed(letters[i+1:])
        yield Word(letters)


def _check_filter(filter, r):
    if filter not in FILTERS:
        raise ValueError(m.RED+'filter must be one of %s, got %s'%(str(FILTERS), repr(filter))+m.ENDC)
    if filter != 'all' and (r is None or r < 1):
        raise ValueError(m.RED+'filter %s needs a positive r'%filter+m.ENDC)


def _keep(frequency, filter, r):
    if filter == 'all': return True
    if filter == 'freq_eq': return frequency == r
    return r % frequency == 0


def enumerate_necklaces(n, m_letters, filter='all', r=None):
    '''
    Necklaces of length **n** over ``{1,...,m_letters}``, sorted by
    representative.

    Parameters
    ----------

        n : int
            necklace length

        m_letters : int
            alphabet size

        filter : str
            one of:

            * ``'all'``: every necklace

            * ``'freq_eq'``: frequency equal to **r** (the family :math:`NF_{n,r}`)

            * ``'freq_div'``: frequency dividing **r** (the family :math:`NFD_{n,r}`)

        r : int
            required by the two frequency filters

    Returns
    -------

        necklaces : list
            list of :py:class:`Necklace`
    '''
    _check_filter(filter, r)
    if n < 1 or m_letters < 1:
        raise ValueError(m.RED+'need n >= 1 and an alphabet of size >= 1'+m.ENDC)
    a = [0] * (n + 1)
    found = []

    # prenecklace generation; a prenecklace with p | n is a necklace of period p
    def generate(t, p):
        if t > n:
            if n % p == 0:
                f = n // p
                if _keep(f, filter, r):
                    found.append(Necklace(Word(x+1 for x in a[1:n+1]), p, f))
            return
        a[t] = a[t-p]
        generate(t+1, p)
        for j in range(a[t-p]+1, m_letters):
            a[t] = j
            generate(t+1, t)

    generate(1, 1)
    return found


def primitive_necklace_count(p, m_letters):
    return sum(moebius(d) * m_letters**(p // d) for d in divisors(p)) // p


def count_necklaces(n, m_letters, filter='all', r=None):
    '''
    Number of necklaces returned by :py:func:`enumerate_necklaces`, computed
    from the Möbius inversion formula for primitive necklaces.
    '''
    _check_filter(filter, r)
    if filter == 'all': freqs = divisors(n)
    elif filter == 'freq_eq': freqs = (r,) if n % r == 0 else ()
    else: freqs = divisors(gcd(n, r))
    return sum(primitive_necklace_count(n // f, m_letters) for f in freqs)


def enumerate_nu_necklaces(nu, m_letters, rho=None, filter='freq_eq'):
    '''
    Tuples of necklaces, one per block of **nu**. With **rho** given, block
    ``j`` has frequency equal to (``filter='freq_eq'``) or dividing
    (``filter='freq_div'``) ``rho[j]``.
    '''
    nu = tuple(nu)
    if rho is None:
        families = [enumerate_necklaces(nj, m_letters) for nj in nu]
    else:
        if len(rho) != len(nu):
            raise ValueError(m.RED+'rho and nu must have the same length'+m.ENDC)
        families = [enumerate_necklaces(nj, m_letters, filter, rj) for nj, rj in zip(nu, rho)]
    for blocks in itertools.product(*families):
        yield NuOrbit(tuple(blocks))


def bfmaj_from_descents(descents, nu):
    '''
    block-wise cyclic major index determined by a descent set; descents
    straddling two blocks are ignored
    '''
    entries, start = [], 0
    for nj in nu:
        s = sum(i - start for i in descents if start < i < start + nj)
        entries.append(reduce_to_range(s, nj))
        start += nj
    return MajTuple(entries, nu)


def maj_nu_from_bfmaj(entries, nu):
    ell = lcm(*nu)
    return reduce_to_range(sum((ell // nj) * t for t, nj in zip(entries, nu)), ell)


def _check_nu(w, nu):
    nu = tuple(int(nj) for nj in nu)
    if not nu or any(nj < 1 for nj in nu):
        raise ValueError(m.RED+'nu must be a nonempty sequence of positive integers'+m.ENDC)
    if sum(nu) != len(w):
        raise ValueError(m.RED+'length mismatch: word of length %d and nu of size %d'%(len(w), sum(nu))+m.ENDC)
    return nu


def bfmaj_nu(w, nu):
    '''
    Examples
    --------

    ::

        bfmaj_nu(Word('44121361631'), (5,3,3)) # (1, 2, 3)
    '''
    w = _word(w)
    nu = _check_nu(w, nu)
    return bfmaj_from_descents(w.descentSet(), nu)


def maj_nu(w, nu):
    nu = _check_nu(_word(w), nu)
    return maj_nu_from_bfmaj(bfmaj_nu(w, nu), nu)


def _bucket_shapes(w, a, b, statistic, order):
    from .tableaux import PartitionTuple, rsk_shape
    w = _word(w)
    if a < 1 or b < 1 or len(w) != a * b:
        raise ValueError(m.RED+'word of length %d is not split into %d blocks of length %d'%(len(w), b, a)+m.ENDC)
    key = order if order is not None else tuple
    buckets = [[] for _ in range(a)]
    for block in w.blocks([a] * b):
        buckets[statistic(block) - 1].append(block)
    shapes = []
    for bucket in buckets:
        ranking = {blk: i+1 for i, blk in enumerate(sorted(set(bucket), key=key))}
        shapes.append(rsk_shape([ranking[blk] for blk in bucket]))
    return PartitionTuple(shapes)


def flex_ab(w, a, b, order=None):
    '''
    Split **w** into **b** blocks of length **a**, bucket the blocks by their
    ``flex`` value and return the tuple of RSK shapes of the buckets, each
    bucket read as a word over the blocks ordered by **order** (a sort key,
    lexicographic by default).
    '''
    return _bucket_shapes(w, a, b, lambda block: block.flex(), order)


def maj_ab(w, a, b, order=None):
    '''same as :py:func:`flex_ab` with blocks bucketed by ``maj_a``'''
    return _bucket_shapes(w, a, b, lambda block: block.majn(), order)


def enumerate_necklaces_by_content(alpha, filter='all', r=None):
    '''
    Necklaces whose words have content **alpha**, sorted by representative.
    '''
    _check_filter(filter, r)
    found = []
    for w in enumerate_words_by_content(alpha):
        if not w: break
        if any(w.rotate(k) < w for k in range(1, len(w))): continue
        p, f = w.periodFreq()
        if _keep(f, filter, r): found.append(Necklace(w, p, f))
    return found
