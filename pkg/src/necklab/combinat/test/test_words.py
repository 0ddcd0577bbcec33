import itertools
from collections import Counter
import pytest
from necklab.combinat import words as wd
from necklab.combinat.words import Word, Composition, Necklace

def shifted_word():
    # blocks 323 134 212 352
    return Word('323134212352')

def test_word_init_from_str():
    w = Word('15531553')
    assert tuple(w) == (1,5,5,3,1,5,5,3)
    assert str(w) == '15531553'

def test_word_rejects_zero():
    try:
        Word('023')
    except ValueError:
        pass
    else:
        assert False

def test_descent_set():
    assert Word('15531553').descentSet() == {3,4,7}
    assert wd.descent_set('123') == frozenset()
    assert wd.descent_set('631') == {1,2}
    assert Word(()).descentSet() == frozenset()

def test_maj():
    assert wd.maj('15531553') == 14
    assert wd.maj_n('44121') == 1
    assert wd.maj('241') == 2
    assert wd.maj_n('241') == 2
    assert wd.maj_n('7') == 1

def test_maj_n_empty():
    with pytest.raises(ValueError, match='empty word'):
        Word(()).majn()

def test_content():
    assert tuple(wd.content('15531553')) == (2,0,2,0,4)
    assert tuple(wd.content(Word(()))) == ()
    assert tuple(wd.content('212')) == (1,2)

def test_composition_content_equal():
    assert Composition((2,1,0,0)) == Composition((2,1))
    assert hash(Composition((2,1,0))) == hash(Composition((2,1)))
    assert Composition((1,0,2)) + Composition((0,1)) == (1,1,2)
    assert Composition((2,0,1)).size == 3
    assert not Composition((1,2)).isPartition()

def test_period_freq():
    assert wd.period_freq('15531553') == (4,2)
    assert Word('221221').frequency() == 2
    assert wd.period_freq('3142') == (4,1)

def test_rotations():
    assert wd.rotations('15531553') == [Word('15531553'), Word('31553155'),
                                         Word('53155315'), Word('55315531')]
    assert wd.rotations('21132113') == [Word('11321132'), Word('13211321'),
                                         Word('21132113'), Word('32113211')]
    assert wd.rotations('77') == [Word('77')]

def test_rotate_moves_last_letter_first():
    assert Word('1234').rotate() == Word('4123')
    assert Word('1234').rotate(4) == Word('1234')

def test_necklace_of():
    N = wd.necklace_of('53155315')
    assert N.representative == Word('15531553')
    assert (N.period, N.frequency, N.length) == (4, 2, 8)
    assert len(N.words()) == N.period

def test_flex():
    assert wd.flex('221221') == 6
    assert wd.flex('21132113') == 6
    assert wd.flex('132') == 1
    assert wd.flex('15531553') == 2

def test_flex_bounds_and_frequency():
    for w in wd.enumerate_words(4, 3):
        f = w.flex()
        assert 1 <= f <= 4
        assert f % w.frequency() == 0

def test_enumerate_words():
    assert len(list(wd.enumerate_words(2, 2))) == 4
    assert len(list(wd.enumerate_words(3, 3))) == 27
    assert list(wd.enumerate_words(0, 2)) == [Word(())]

def test_enumerate_words_by_content():
    assert len(list(wd.enumerate_words_by_content((1,1)))) == 2
    assert list(wd.enumerate_words_by_content((2,1))) == [Word('112'), Word('121'), Word('211')]
    assert len(set(wd.enumerate_words_by_content((2,0,2)))) == 6

def test_enumerate_necklaces():
    nfd21 = wd.enumerate_necklaces(2, 2, 'freq_div', 1)
    assert [str(N) for N in nfd21] == ['[12]']
    nfd22 = wd.enumerate_necklaces(2, 2, 'freq_div', 2)
    assert [str(N) for N in nfd22] == ['[11]', '[12]', '[22]']
    for m in (1, 2, 3, 4):
        assert wd.enumerate_necklaces(4, m, 'freq_eq', 3) == []

def test_enumerate_necklaces_bad_filter():
    try:
        wd.enumerate_necklaces(3, 2, 'freq_div')
    except ValueError:
        pass
    else:
        assert False

def test_necklaces_are_lexmin_and_disjoint():
    seen = set()
    for N in wd.enumerate_necklaces(6, 2):
        words = N.words()
        assert N.representative == min(words)
        assert N.period * N.frequency == 6
        assert not seen.intersection(words)
        seen.update(words)
    assert len(seen) == 2**6

def test_count_necklaces():
    for n in range(1, 7):
        for m in (1, 2, 3):
            assert wd.count_necklaces(n, m) == len(wd.enumerate_necklaces(n, m))
            for r in range(1, n + 1):
                assert wd.count_necklaces(n, m, 'freq_div', r) == len(wd.enumerate_necklaces(n, m, 'freq_div', r))
    assert wd.count_necklaces(4, 2) == 6

def test_necklaces_by_content():
    found = wd.enumerate_necklaces_by_content((2,2))
    assert [str(N) for N in found] == ['[1122]', '[1212]']
    assert [str(N) for N in wd.enumerate_necklaces_by_content((2,2), 'freq_div', 1)] == ['[1122]']

def test_unique_flex_word_per_necklace():
    for r in range(1, 5):
        for N in wd.enumerate_necklaces(4, 3, 'freq_div', r):
            assert sum(1 for v in N.words() if v.flex() == r) == 1

def test_bfmaj_nu():
    w = Word('44121361631')
    assert wd.bfmaj_nu(w, (5,3,3)) == (1,2,3)
    assert wd.maj_nu(w, (5,3,3)) == 13

def test_maj_nu_single_block_is_maj_n():
    for w in wd.enumerate_words(4, 3):
        assert wd.maj_nu(w, (4,)) == w.majn()

def test_maj_nu_trivial_blocks():
    assert wd.bfmaj_nu('3121', (1,1,1,1)) == (1,1,1,1)
    assert wd.maj_nu('3121', (1,1,1,1)) == 1

def test_maj_nu_length_mismatch():
    with pytest.raises(ValueError, match='length mismatch'):
        wd.maj_nu('1234', (2,1))

def test_maj_tuple_range():
    with pytest.raises(ValueError):
        wd.MajTuple((3,1), (2,1))

def test_flex_ab_example():
    assert str(wd.flex_ab(shifted_word(), 3, 4)) == '((1),(2,1),())'

def test_maj_ab_example():
    assert str(wd.maj_ab(shifted_word(), 3, 4)) == '((1,1),(1),(1))'

def test_maj_ab_single_block():
    ul = wd.maj_ab(Word('231'), 3, 1)
    assert ul == ((), (1,), ())
    assert ul.size == 1

def test_ab_total_size():
    for w in wd.enumerate_words(4, 2):
        assert wd.flex_ab(w, 2, 2).size == 2
        assert wd.maj_ab(w, 2, 2).size == 2

def test_ab_length_error():
    with pytest.raises(ValueError):
        wd.flex_ab(Word('12345'), 2, 2)

def test_nu_necklaces():
    orbits = list(wd.enumerate_nu_necklaces((2,1), 2, rho=(1,1)))
    assert len(orbits) == 2
    assert all(o.frequencies == (1,1) and o.nu == (2,1) for o in orbits)
    assert Counter(o.content().stripped() for o in orbits) == Counter({(2,1): 1, (1,2): 1})

def test_standardize_keeps_descents():
    for w in wd.enumerate_words(4, 3):
        assert w.standardize().descentSet() == w.descentSet()
        assert sorted(w.standardize()) == [1,2,3,4]
