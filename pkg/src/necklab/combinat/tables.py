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
Per-degree tables shared by :py:mod:`symfunc` and :py:mod:`characters`:
partitions in decreasing lexicographic order, Kostka matrix, its inverse,
character table and centralizer orders.

Tables are built once per degree and kept in memory. When a cache
directory is configured (:py:func:`setCacheDir` or the environment variable
``NECKLAB_CACHE_DIR``) they are also read from / written to
``tables_deg<d>.h5`` files; any problem with a file is a silent cache miss.
'''
import os

import numpy as np

from .. import misc as m
from ..math_tools import z_lambda
from .tableaux import Partition, partitions, kostka_number
from .characters import mn_character

CACHE_ENV_VARIABLE = 'NECKLAB_CACHE_DIR'

_tables = {}
_cache_dir = None


def setCacheDir(path):
    global _cache_dir
    _cache_dir = path

def cacheDir():
    if _cache_dir is not None: return _cache_dir
    return os.environ.get(CACHE_ENV_VARIABLE) or None

def cacheFilename(degree, directory=None):
    directory = directory if directory is not None else cacheDir()
    if directory is None: return None
    return os.path.join(directory, 'tables_deg%d.h5'%degree)

def clearMemory():
    _tables.clear()


def unitriangular_inverse(matrix):
    '''exact inverse of an upper unitriangular integer matrix'''
    size = matrix.shape[0]
    inverse = np.zeros_like(matrix)
    for j in range(size):
        inverse[j, j] = 1
        for i in range(j - 1, -1, -1):
            inverse[i, j] = -sum(matrix[i, k] * inverse[k, j] for k in range(i + 1, j + 1))
    return inverse


class DegreeTables(object):
    '''
    Tables of one degree. Rows and columns follow
    :py:func:`~necklab.combinat.tableaux.partitions`, for which the Kostka
    matrix ``kostka[i,j] = K(lambda_i, mu_j)`` is upper unitriangular.

    Attributes
    ----------

        partitions : tuple
            the partitions of the degree

        index : dict
            partition -> row/column position

        kostka, kostkaInverse, characters : numpy.ndarray
            integer matrices; ``characters[i,j] = chi^{lambda_i}(mu_j)``

        conjugate : numpy.ndarray
            position of the conjugate of each partition

        z : list
            centralizer orders of the partitions
    '''
    def __init__(self, degree, kostka, characters):
        self.degree = degree
        self.partitions = partitions(degree)
        self.index = {p: i for i, p in enumerate(self.partitions)}
        self.kostka = kostka
        self.characters = characters
        self.kostkaInverse = unitriangular_inverse(kostka)
        self.conjugate = np.array([self.index[p.conjugate()] for p in self.partitions], dtype=np.int64)
        self.z = [z_lambda(p) for p in self.partitions]

    @classmethod
    def build(cls, degree):
        parts = partitions(degree)
        kostka = np.array([[kostka_number(lam, mu) for mu in parts] for lam in parts], dtype=np.int64)
        characters = np.array([[mn_character(lam, mu) for mu in parts] for lam in parts], dtype=np.int64)
        return cls(degree, kostka, characters)

    def save(self, filename, verbose=False):
        from .read_write import h5py2tables as h
        with m.Timer('saving %s'%filename, verbose):
            h.save(filename, self.degree, self.partitions,
                   dict(kostka=self.kostka, characters=self.characters))

    @classmethod
    def load(cls, filename, degree):
        from .read_write import h5py2tables as h
        stored, matrices = h.load(filename, degree)
        if [Partition(p) for p in stored] != list(partitions(degree)):
            raise IOError('file %s : partitions do not match degree %d'%(filename, degree))
        return cls(degree, matrices['kostka'], matrices['characters'])


def get_tables(degree, verbose=False):
    '''
    Tables of the given degree: from memory, else from the cache file if
    any, else built (and written to the cache directory when one is set).
    '''
    tables = _tables.get(degree)
    if tables is not None: return tables

    filename = cacheFilename(degree)
    if filename is not None and os.path.isfile(filename):
        try:
            tables = DegreeTables.load(filename, degree)
        except Exception:
            tables = None

    if tables is None:
        with m.Timer('building degree %d tables'%degree, verbose):
            tables = DegreeTables.build(degree)
        if filename is not None:
            try:
                os.makedirs(os.path.dirname(filename), exist_ok=True)
                tables.save(filename, verbose=verbose)
            except OSError as e:
                if verbose: m.warn('could not write %s (%s)'%(filename, str(e)))

    _tables[degree] = tables
    return tables
