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
Low-level module for writing and reading the per-degree tables (Kostka
matrix, character table) to HDF5 files.

Each matrix is written as a table of ``(row, column, value)`` integer
triples of its nonzero entries, ``row`` and ``column`` indexing the
``partitions`` dataset (one zero-padded partition per line).

Requires installation of python libraries "h5py" and "numpy"
'''

import numpy as np
import h5py

FORMAT_VERSION = 1
matricesNames = ['kostka', 'characters']

h5py.get_config().track_order = True


def partitions_to_array(partitions, degree):
    array = np.zeros((len(partitions), max(degree, 1)), dtype=np.int64)
    for i, p in enumerate(partitions):
        array[i, :len(p)] = p
    return array

def array_to_partitions(array):
    return [tuple(int(x) for x in row if x > 0) for row in array]

def matrix_to_triples(matrix):
    rows, cols = np.nonzero(matrix)
    return np.stack([rows, cols, matrix[rows, cols]], axis=1).astype(np.int64)

def triples_to_matrix(triples, size):
    matrix = np.zeros((size, size), dtype=np.int64)
    if len(triples):
        matrix[triples[:,0], triples[:,1]] = triples[:,2]
    return matrix

def save(filename, degree, partitions, matrices):
    with h5py.File(filename, 'w', track_order=True) as f:
        f['/'].attrs.create('version', FORMAT_VERSION)
        f['/'].attrs.create('degree', degree)
        f.create_dataset('partitions', data=partitions_to_array(partitions, degree))
        for name, matrix in matrices.items():
            f.create_dataset(name, data=matrix_to_triples(np.asarray(matrix)))

def load(filename, degree):
    '''
    Returns ``(partitions, matrices)``. Raises :py:class:`IOError` if the file
    was written for another degree or by another format version.
    '''
    with h5py.File(filename, 'r') as f:
        if int(f['/'].attrs.get('version', -1)) != FORMAT_VERSION:
            raise IOError('file %s : unsupported table format'%filename)
        if int(f['/'].attrs.get('degree', -1)) != degree:
            raise IOError('file %s : tables are not of degree %d'%(filename, degree))
        partitions = array_to_partitions(f['partitions'][()])
        matrices = {}
        for name in matricesNames:
            if name not in f:
                raise IOError('file %s : missing table %s'%(filename, name))
            matrices[name] = triples_to_matrix(f[name][()], len(partitions))
    return partitions, matrices
