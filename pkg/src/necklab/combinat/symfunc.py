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
Implements class **SymFunc**: homogeneous symmetric functions with exact
rational coefficients in one of the bases

* ``monomial`` (``m``)
* ``schur`` (``s``)
* ``powersum`` (``p``)
* ``homogeneous`` (``h``)
* ``elementary`` (``e``)

Conversions go through the Schur basis using the per-degree tables of
:py:mod:`~necklab.combinat.tables` (Kostka matrix for ``m``, ``h``, ``e``,
character table for ``p``); ``h`` and ``e`` also expand directly into power
sums. Products are taken in the power-sum basis, plethysm uses the
power-sum homomorphism :math:`p_k[g]`.
'''
from collections import Counter
from fractions import Fraction

import numpy as np

from .. import misc as m
from ..math_tools import z_lambda
from .tableaux import Partition, partitions
from .tables import get_tables

BASES = ('monomial', 'schur', 'powersum', 'homogeneous', 'elementary')
BASES_SHORTCUTS = dict(m='monomial', s='schur', p='powersum',
                       h='homogeneous', e='elementary')
BASES_PREFIX = dict(monomial='m', schur='s', powersum='p',
                    homogeneous='h', elementary='e')


def _basis_name(basis):
    basis = BASES_SHORTCUTS.get(basis, basis)
    if basis not in BASES:
        raise ValueError(m.RED+'unknown basis %s, must be one of %s'%(repr(basis), str(BASES))+m.ENDC)
    return basis


def _partition(key):
    if isinstance(key, int): key = (key,)
    return Partition(key)


class SymFunc(object):
    '''
    Homogeneous symmetric function of a fixed degree.

    Parameters
    ----------

        degree : int
            the degree; every key of **coeffs** must be a partition of it

        basis : str
            basis name or one-letter shortcut (``'s'``, ``'m'``...)

        coeffs : dict
            partition (tuple or :py:class:`int` for one-part partitions)
            to coefficient (:py:class:`int` or :py:class:`~fractions.Fraction`)

    Examples
    --------

    ::

        f = SymFunc(2, 'h', {(2,): 1})
        f.convert('m') # m(2) + m(1,1)
        f.convert('s') # s(2)
    '''
    def __init__(self, degree, basis='schur', coeffs=None):
        self.degree = int(degree)
        self.basis = _basis_name(basis)
        self._coeffs = {}
        for key, value in (coeffs or {}).items():
            key = _partition(key)
            if key.size != self.degree:
                raise ValueError(m.RED+'partition %s does not have size %d'%(str(key), self.degree)+m.ENDC)
            value = Fraction(value)
            if value: self._coeffs[key] = self._coeffs.get(key, 0) + value
        self._coeffs = {k: v for k, v in self._coeffs.items() if v}

    @classmethod
    def basisElement(cls, basis, shape):
        shape = _partition(shape)
        return cls(shape.size, basis, {shape: 1})

    def coefficient(self, shape):
        return self._coeffs.get(_partition(shape), Fraction(0))

    def items(self):
        '''(partition, coefficient) pairs in decreasing lexicographic order'''
        return sorted(self._coeffs.items(), reverse=True)

    def support(self):
        return [k for k, _ in self.items()]

    def isZero(self):
        return not self._coeffs

    def __repr__(self):
        if not self._coeffs: return '0'
        prefix = BASES_PREFIX[self.basis]
        terms = []
        for shape, c in self.items():
            mono = '%s%s'%(prefix, str(shape))
            terms.append(mono if c == 1 else '%s*%s'%(str(c), mono))
        return ' + '.join(terms)

    # -- conversions -----------------------------------------------------

    def _vector(self):
        T = get_tables(self.degree)
        return np.array([self._coeffs.get(p, Fraction(0)) for p in T.partitions], dtype=object)

    def _fromVector(self, basis, vector):
        T = get_tables(self.degree)
        return SymFunc(self.degree, basis, {p: vector[i] for i, p in enumerate(T.partitions) if vector[i]})

    def _schurVector(self):
        T = get_tables(self.degree)
        d = self._vector()
        if self.basis == 'schur': return d
        if self.basis == 'monomial': return d @ T.kostkaInverse.astype(object)
        if self.basis == 'powersum': return T.characters.astype(object) @ d
        if self.basis == 'homogeneous': return T.kostka.astype(object) @ d
        return T.kostka[T.conjugate].astype(object) @ d

    def _powersumFromExpansion(self):
        '''h and e bases: multiply out the power-sum expansions of h_n, e_n'''
        total = {}
        sign = self.basis == 'elementary'
        for shape, c in self._coeffs.items():
            product = {Partition(()): Fraction(1)}
            for part in shape:
                product = _p_product(product, _hp_expansion(part, sign))
            for key, value in product.items():
                total[key] = total.get(key, 0) + c * value
        return SymFunc(self.degree, 'powersum', total)

    def convert(self, basis):
        '''
        Same symmetric function expressed in another basis.
        '''
        basis = _basis_name(basis)
        if basis == self.basis: return self
        if basis == 'powersum' and self.basis in ('homogeneous', 'elementary'):
            return self._powersumFromExpansion()
        T = get_tables(self.degree)
        c = self._schurVector()
        if basis == 'schur': d = c
        elif basis == 'monomial': d = c @ T.kostka.astype(object)
        elif basis == 'homogeneous': d = T.kostkaInverse.astype(object) @ c
        elif basis == 'elementary': d = T.kostkaInverse[:, T.conjugate].astype(object) @ c
        else:
            d = c @ T.characters.astype(object)
            d = np.array([d[i] / T.z[i] for i in range(len(d))], dtype=object)
        return self._fromVector(basis, d)

    def schurCoefficients(self):
        '''
        Schur expansion as a dict partition -> :py:class:`int` in decreasing
        lexicographic order. Raises :py:class:`ArithmeticError` if some
        coefficient is not an integer.
        '''
        out = {}
        for shape, c in self.convert('schur').items():
            if c.denominator != 1:
                raise ArithmeticError(m.RED+'Schur coefficient of %s is not an integer: %s'%(str(shape), str(c))+m.ENDC)
            out[shape] = int(c)
        return out

    def isSchurPositive(self):
        return all(c > 0 for c in self.schurCoefficients().values())

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc(0, self.basis, {(): other}) if other else SymFunc(self.degree, self.basis)
        if not isinstance(other, SymFunc): return NotImplemented
        if self.isZero() and other.isZero(): return True
        if self.degree != other.degree: return False
        return self._coeffs == other.convert(self.basis)._coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, SymFunc): return NotImplemented
        if other.isZero(): return self
        if self.isZero(): return other
        if self.degree != other.degree:
            raise ValueError(m.RED+'cannot add symmetric functions of degrees %d and %d'%(self.degree, other.degree)+m.ENDC)
        coeffs = dict(self._coeffs)
        for k, v in other.convert(self.basis)._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return SymFunc(self.degree, self.basis, coeffs)

    def __neg__(self):
        return SymFunc(self.degree, self.basis, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        return SymFunc(self.degree, self.basis, {k: factor * v for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc): return multiply(self, other)
        if isinstance(other, (int, Fraction)): return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)): return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(Fraction(1) / Fraction(other))

    def plethysm(self, g):
        return plethysm(self, g)

    def omega(self):
        return omega(self)


def s(*parts): return SymFunc.basisElement('schur', parts)
def h(*parts): return SymFunc.basisElement('homogeneous', parts)
def e(*parts): return SymFunc.basisElement('elementary', parts)
def p(*parts): return SymFunc.basisElement('powersum', parts)
def mono(*parts): return SymFunc.basisElement('monomial', parts)

def one():
    return SymFunc(0, 'schur', {(): 1})


def _sorted_union(a, b):
    return Partition(sorted(tuple(a) + tuple(b), reverse=True))


def _p_product(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = _sorted_union(ka, kb)
            out[key] = out.get(key, 0) + va * vb
    return out


def _hp_expansion(n, elementary=False):
    '''h_n (or e_n) as a dict over power-sum partitions'''
    out = {}
    for shape in partitions(n):
        c = Fraction(1, z_lambda(shape))
        if elementary and (n - len(shape)) % 2: c = -c
        out[shape] = c
    return out


def convert(f, basis):
    return f.convert(basis)


def multiply(f, g):
    '''
    Product of two symmetric functions, computed in the power-sum basis
    (:math:`p_\\lambda p_\\mu = p_{\\lambda\\cup\\mu}`) and returned in the
    basis of **f**.
    '''
    fp, gp = f.convert('powersum'), g.convert('powersum')
    product = _p_product(dict(fp._coeffs), dict(gp._coeffs))
    return SymFunc(f.degree + g.degree, 'powersum', product).convert(f.basis)


def plethysm(f, g):
    '''
    Plethysm :math:`f[g]`, returned in the basis of **f**. **f** is expanded
    in power sums and :math:`p_k[g]` is **g** with every :math:`p_j`
    replaced by :math:`p_{jk}`.

    Examples
    --------

    ::

        plethysm(h(2), h(2)) == s(4) + s(2,2) # True
    '''
    fp, gp = f.convert('powersum'), g.convert('powersum')
    gcoeffs = dict(gp._coeffs)
    if not gcoeffs:
        # g = 0: only the constant term of f survives
        return SymFunc(0, f.basis, {(): fp.coefficient(())} if f.degree == 0 else {})
    substituted = {}

    def pk_of_g(k):
        if k not in substituted:
            substituted[k] = {Partition([k*x for x in shape]): c for shape, c in gcoeffs.items()}
        return substituted[k]

    total = {}
    for shape, c in fp._coeffs.items():
        product = {Partition(()): Fraction(1)}
        for part in shape:
            product = _p_product(product, pk_of_g(part))
        for key, value in product.items():
            total[key] = total.get(key, 0) + c * value
    return SymFunc(f.degree * g.degree, 'powersum', total).convert(f.basis)


def omega(f):
    '''
    The involution :math:`\\omega`: conjugates Schur indices, swaps ``h``
    and ``e``, multiplies :math:`p_\\lambda` by
    :math:`(-1)^{|\\lambda|-\\ell(\\lambda)}`.
    '''
    if f.basis == 'homogeneous': return SymFunc(f.degree, 'elementary', f._coeffs)
    if f.basis == 'elementary': return SymFunc(f.degree, 'homogeneous', f._coeffs)
    if f.basis == 'powersum':
        return SymFunc(f.degree, 'powersum',
                       {k: (-v if (f.degree - len(k)) % 2 else v) for k, v in f._coeffs.items()})
    fs = f.convert('schur')
    return SymFunc(f.degree, 'schur', {k.conjugate(): v for k, v in fs._coeffs.items()}).convert(f.basis)


def _content_key(obj):
    if hasattr(obj, 'content'):
        obj = obj.content()
    parts = list(obj)
    while parts and parts[-1] == 0: parts.pop()
    return tuple(parts)


def rearranged_content(shape, degree):
    '''
    content obtained by reversing **shape** padded with zeros to **degree**
    letters, or :py:obj:`None` when this gives back **shape**
    '''
    padded = list(shape) + [0] * (max(degree, 1) - len(shape))
    rearranged = list(reversed(padded))
    if rearranged == padded: return None
    while rearranged and rearranged[-1] == 0: rearranged.pop()
    return tuple(rearranged)


def from_content_counts(counts, degree, validate=False):
    '''
    Same as :py:func:`from_content_multiset` from a mapping
    content -> number of objects.
    '''
    stripped = Counter()
    for k, v in counts.items(): stripped[_content_key(k)] += v
    counts = stripped
    coeffs = {}
    for shape in partitions(degree):
        count = counts.get(tuple(shape), 0)
        if validate:
            rearranged = rearranged_content(shape, degree)
            if rearranged is not None and counts.get(rearranged, 0) != count:
                raise ValueError(m.RED+'content multiset not symmetric: %s and %s differ'%(str(shape), str(rearranged))+m.ENDC)
        if count: coeffs[shape] = count
    return SymFunc(degree, 'monomial', coeffs)


def from_content_multiset(objects, degree, validate=False):
    '''
    Symmetric function in the monomial basis whose coefficient of
    :math:`m_\\mu` counts the objects of content :math:`\\mu`.

    Parameters
    ----------

        objects : iterable
            compositions, or objects with a ``content()`` method (words,
            necklaces...), all of size **degree**

        degree : int
            the degree

        validate : bool
            if :py:obj:`True`, for every partition also count one
            rearrangement which is not a partition and raise
            :py:class:`ValueError` on mismatch

    Returns
    -------

        f : SymFunc
            in monomial basis
    '''
    counts = Counter()
    for obj in objects:
        key = _content_key(obj)
        if sum(key) != degree:
            raise ValueError(m.RED+'object of size %d in a degree %d multiset'%(sum(key), degree)+m.ENDC)
        counts[key] += 1
    return from_content_counts(counts, degree, validate)


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def _monomials(g, nvars):
    '''exponent vectors of the monomials of g, repeated by multiplicity'''
    from .words import enumerate_words_by_content
    out = []
    for shape, c in g.convert('monomial').items():
        if c.denominator != 1 or c < 0:
            raise ValueError(m.RED+'substitution needs nonnegative integer monomial coefficients'+m.ENDC)
        if len(shape) > nvars: continue
        exponents = list(shape) + [0] * (nvars - len(shape))
        # exponent value e is letter e+1
        content = [0] * (max(exponents) + 1)
        for x in exponents: content[x] += 1
        for word in enumerate_words_by_content(content):
            out.extend([tuple(x - 1 for x in word)] * int(c))
    return out


def plethysm_by_substitution(f, g):
    '''
    Plethysm :math:`f[g]` computed by substituting the monomials of **g**
    (on ``deg f * deg g`` variables) into the complete homogeneous
    expansion of **f**. Independent of :py:func:`plethysm`; returned in the
    monomial basis.
    '''
    nvars = max(f.degree * g.degree, 1)
    degree = f.degree * g.degree
    monomials = _monomials(g, nvars)
    one_ = tuple([0] * nvars)
    fh = f.convert('homogeneous')
    top = max((shape[0] for shape in fh.support() if shape), default=0)

    # complete homogeneous polynomials h_k(y_1, y_2, ...) with y the monomials of g
    H = [{one_: 1}] + [{} for _ in range(top)]
    for y in monomials:
        for k in range(1, top + 1):
            shifted = {tuple(a + b for a, b in zip(ex, y)): c for ex, c in H[k-1].items()}
            for ex, c in shifted.items():
                H[k][ex] = H[k].get(ex, 0) + c

    result = {}
    for shape, c in fh.items():
        poly = {one_: 1}
        for part in shape: poly = _poly_mul(poly, H[part])
        for ex, value in poly.items():
            result[ex] = result.get(ex, 0) + c * value

    coeffs = {}
    for shape in partitions(degree):
        key = tuple(list(shape) + [0] * (nvars - len(shape)))
        value = result.get(key, 0)
        if value: coeffs[shape] = value
    return SymFunc(degree, 'monomial', coeffs)
