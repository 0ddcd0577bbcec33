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
Cyclic sieving checks for rotation-closed sets of words.

A triple :math:`(W, C_n, q^{stat})` is checked by comparing, modulo
:math:`q^n - 1`, the statistic generating function with the orbit
polynomial of :math:`W` (an orbit of size ``s`` contributes
:math:`\\sum_{i<s} q^{i n/s}`). Every check is repeated root by root with
:py:func:`~necklab.combinat.characters.eval_at_root` against directly
counted fixed points.
'''
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .. import misc as m
from .characters import IntPolyModQn, eval_at_root
from .words import Word, enumerate_necklaces, enumerate_words_by_content


@dataclass(frozen=True)
class CSPReport:
    holds: bool
    n: int
    witness: Optional[tuple] = None
    orbit_profile: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError(m.RED+'a CSP report holds exactly when it has no witness'+m.ENDC)


@dataclass(frozen=True)
class EquidistributionReport:
    holds: bool
    maj_only: dict = field(default_factory=dict)
    flex_only: dict = field(default_factory=dict)


def _as_word_set(W, n):
    words = set(w if isinstance(w, Word) else Word(w) for w in W)
    for w in words:
        if len(w) != n:
            raise ValueError(m.RED+'word %s does not have length %d'%(str(w), n)+m.ENDC)
    for w in sorted(words):
        if w.rotate(1) not in words:
            raise ValueError(m.RED+'set is not closed under rotation: %s is in it but %s is not'%(str(w), str(w.rotate(1)))+m.ENDC)
    return words


def orbits(W, n):
    '''rotation orbits of a rotation-closed set, each as a sorted list'''
    words = _as_word_set(W, n)
    seen, out = set(), []
    for w in sorted(words):
        if w in seen: continue
        orbit = w.rotations()
        seen.update(orbit)
        out.append(orbit)
    return out


def orbit_profile(W, n):
    return dict(sorted(Counter(len(o) for o in orbits(W, n)).items()))


def orbit_polynomial(W, n):
    '''
    Polynomial whose value at :math:`\\omega_n^r` is the number of words of
    **W** fixed by :math:`\\sigma^r`.
    '''
    exponents = []
    for orbit in orbits(W, n):
        size = len(orbit)
        exponents.extend(i * (n // size) for i in range(size))
    return IntPolyModQn.fromExponents(n, exponents)


def statistic_polynomial(W, n, stat):
    return IntPolyModQn.fromExponents(n, [stat(w if isinstance(w, Word) else Word(w)) for w in W])


def fixed_point_count(W, r):
    return sum(1 for w in W if w.rotate(r) == w)


def verify_csp(W, n, stat):
    '''
    Check that ``(W, C_n, sum q**stat(w))`` exhibits the cyclic sieving
    phenomenon.

    Parameters
    ----------

        W : iterable of :py:class:`~necklab.combinat.words.Word`
            rotation-closed set of words of length **n**

        n : int
            word length, order of the rotation group

        stat : callable
            ``Word -> int``; values are read modulo **n**, so statistics with
            values in ``{1,...,n}`` or ``{0,...,n-1}`` are both accepted

    Returns
    -------

        report : CSPReport
            on failure **witness** is ``(r, fixed_points, value)`` with the
            smallest ``r`` where the evaluation differs from the count
    '''
    words = _as_word_set(W, n)
    orbit_poly = orbit_polynomial(words, n)
    stat_poly = statistic_polynomial(words, n, stat)
    congruent = orbit_poly == stat_poly

    witness = None
    for r in range(1, n + 1):
        fixed = fixed_point_count(words, r)
        if eval_at_root(orbit_poly, n, r) != fixed:
            raise ArithmeticError(m.RED+'orbit polynomial does not count fixed points at r=%d'%r+m.ENDC)
        value = eval_at_root(stat_poly, n, r)
        if value != fixed:
            witness = (r, fixed, value)
            break

    if congruent != (witness is None):
        raise ArithmeticError(m.RED+'congruence and root evaluations disagree'+m.ENDC)
    return CSPReport(congruent, n, witness, orbit_profile(words, n))


def verify_equidistribution(alpha):
    '''
    Compare the value multisets of ``maj_n`` and ``flex`` on the words of
    content **alpha**.
    '''
    maj_values, flex_values = Counter(), Counter()
    for w in enumerate_words_by_content(alpha):
        if not w:
            raise ValueError(m.RED+'content must have positive size'+m.ENDC)
        maj_values[w.majn()] += 1
        flex_values[w.flex()] += 1
    maj_only = dict(maj_values - flex_values)
    flex_only = dict(flex_values - maj_values)
    return EquidistributionReport(not maj_only and not flex_only, maj_only, flex_only)


def random_rotation_closed_set(n, m_letters, rng=None, density=0.5):
    '''
    Union of a random selection of necklaces of length **n** over
    ``{1,...,m_letters}``; each necklace is kept with probability
    **density**.

    Parameters
    ----------

        rng : numpy.random.Generator or int or None
            random generator or seed
    '''
    rng = np.random.default_rng(rng)
    necklaces = enumerate_necklaces(n, m_letters)
    keep = rng.random(len(necklaces)) < density
    words = set()
    for necklace, kept in zip(necklaces, keep):
        if kept: words.update(necklace.words())
    return words
