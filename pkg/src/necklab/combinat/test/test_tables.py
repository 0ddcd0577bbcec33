import os
import h5py
import numpy as np
import pytest
from necklab.combinat import tables
from necklab.combinat.read_write import h5py2tables
from necklab.combinat.tableaux import partitions

@pytest.fixture
def cache_dir(tmp_path):
    tables.clearMemory()
    tables.setCacheDir(str(tmp_path))
    yield tmp_path
    tables.setCacheDir(None)
    tables.clearMemory()

def test_build_degree_3():
    T = tables.DegreeTables.build(3)
    assert T.partitions == ((3,), (2,1), (1,1,1))
    assert T.kostka.tolist() == [[1,1,1],[0,1,2],[0,0,1]]
    assert T.characters.tolist() == [[1,1,1],[-1,0,2],[1,-1,1]]
    assert T.conjugate.tolist() == [2,1,0]
    assert T.z == [3,2,6]

def test_unitriangular_inverse():
    T = tables.DegreeTables.build(5)
    product = T.kostka @ T.kostkaInverse
    assert np.array_equal(product, np.eye(len(T.partitions), dtype=np.int64))

def test_save_load(tmp_path):
    filename = str(tmp_path / 'tables_deg4.h5')
    T = tables.DegreeTables.build(4)
    T.save(filename)
    U = tables.DegreeTables.load(filename, 4)
    assert U.partitions == T.partitions
    assert np.array_equal(U.kostka, T.kostka)
    assert np.array_equal(U.characters, T.characters)

def test_load_wrong_degree(tmp_path):
    filename = str(tmp_path / 'tables_deg4.h5')
    tables.DegreeTables.build(4).save(filename)
    try:
        tables.DegreeTables.load(filename, 5)
    except IOError:
        pass
    else:
        assert False

def test_triples_round_trip():
    matrix = np.array([[1,0,-2],[0,0,0],[3,0,1]])
    triples = h5py2tables.matrix_to_triples(matrix)
    assert triples.shape == (4, 3)
    assert np.array_equal(h5py2tables.triples_to_matrix(triples, 3), matrix)

def test_get_tables_writes_cache(cache_dir):
    T = tables.get_tables(4)
    filename = tables.cacheFilename(4)
    assert filename == os.path.join(str(cache_dir), 'tables_deg4.h5')
    assert os.path.isfile(filename)
    with h5py.File(filename, 'r') as f:
        assert int(f['/'].attrs['degree']) == 4
        assert int(f['/'].attrs['version']) == h5py2tables.FORMAT_VERSION
    assert tables.get_tables(4) is T

def test_get_tables_reads_cache(cache_dir):
    built = tables.get_tables(5)
    tables.clearMemory()
    loaded = tables.get_tables(5)
    assert loaded is not built
    assert np.array_equal(loaded.characters, built.characters)

def test_corrupt_cache_is_a_miss(cache_dir):
    filename = tables.cacheFilename(3)
    with open(filename, 'w') as f:
        f.write('not a table file')
    T = tables.get_tables(3)
    assert T.partitions == partitions(3)

def test_stale_version_is_a_miss(cache_dir):
    filename = tables.cacheFilename(3)
    tables.DegreeTables.build(3).save(filename)
    with h5py.File(filename, 'a') as f:
        f['/'].attrs['version'] = 99
    T = tables.get_tables(3)
    assert T.kostka[0, 0] == 1

def test_env_variable(tmp_path, monkeypatch):
    tables.setCacheDir(None)
    monkeypatch.setenv(tables.CACHE_ENV_VARIABLE, str(tmp_path))
    assert tables.cacheDir() == str(tmp_path)
    monkeypatch.delenv(tables.CACHE_ENV_VARIABLE)
    assert tables.cacheDir() is None
