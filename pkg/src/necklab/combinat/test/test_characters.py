import pytest
from necklab import misc as m
from necklab.combinat import characters as ch
from necklab.combinat.characters import CycleType, IntPolyModQn, NonInteger
from necklab.combinat.tableaux import partitions

def test_cycle_type_order():
    nu = CycleType((5,3,3))
    assert nu.order == 15
    assert nu.size == 11

def test_mn_character():
    for n in range(1, 7):
        for mu in partitions(n):
            assert ch.mn_character((n,), mu) == 1
    assert ch.mn_character((1,1), (2,)) == -1
    assert ch.mn_character((2,1), (1,1,1)) == 2
    assert ch.mn_character((2,1), (3,)) == -1
    assert ch.mn_character((2,1), (2,1)) == 0

def test_mn_character_size_mismatch():
    with pytest.raises(ValueError):
        ch.mn_character((2,1), (2,))

def test_column_orthogonality():
    for n in range(1, 8):
        assert ch.check_column_orthogonality(n)

def test_power_cycle_type():
    assert ch.power_cycle_type((4,), 2) == (2,2)
    assert ch.power_cycle_type((5,3,3), 15) == (1,)*11
    assert ch.power_cycle_type((5,3,3), 3) == (5,1,1,1,1,1,1)

def test_ramanujan_sum():
    for r in range(1, 10):
        assert ch.ramanujan_sum(1, r) == 1
    assert ch.ramanujan_sum(2, 1) == -1
    assert ch.ramanujan_sum(4, 2) == -2
    for q in range(1, 13):
        for r in range(1, 13):
            assert ch.ramanujan_sum(q, r) == ch.ramanujan_sum_by_roots(q, r)

def test_eval_at_root():
    assert ch.eval_at_root(IntPolyModQn(3, [1,1,1]), 3, 1) == 0
    assert ch.eval_at_root(IntPolyModQn(2, [1,1]), 2, 2) == 2
    assert isinstance(ch.eval_at_root(IntPolyModQn(4, [0,1]), 4, 1), NonInteger)
    assert ch.eval_at_root(IntPolyModQn(4, [0,1,0,1]), 4, 1) == 0
    assert ch.eval_at_root([1,0,1], 4, 1) == 0

def test_int_poly_mod_qn():
    f = IntPolyModQn(3, [1,2,0,4])
    assert f.toList() == [5,2,0]
    assert f.valueAtOne() == 7
    assert IntPolyModQn.fromExponents(3, [0,3,1]) == IntPolyModQn(3, [2,1])
    assert (f - f) == IntPolyModQn(3)
    with pytest.raises(ValueError):
        IntPolyModQn(0)

def test_cyclotomic_polynomial():
    assert ch.cyclotomic_polynomial(1) == (-1, 1)
    assert ch.cyclotomic_polynomial(4) == (1, 0, 1)
    assert ch.cyclotomic_polynomial(6) == (1, -1, 1)

def test_induced_multiplicity():
    assert ch.induced_multiplicity((2,1), (3,), 1) == 1
    assert ch.induced_multiplicity((3,), (3,), 3) == 1
    assert ch.induced_multiplicity((3,), (3,), 1) == 0
    for n in range(1, 8):
        for lam in partitions(n):
            total = sum(ch.induced_multiplicity(lam, (n,), r) for r in range(1, n + 1))
            assert total == lam.numberOfSYT()

def test_syt_maj_evaluations():
    for n in range(1, 9):
        for mu in partitions(n):
            poly = ch.syt_maj_polynomial(mu, n)
            assert poly.valueAtOne() == mu.numberOfSYT()
            for r in range(1, n + 1):
                value = ch.mn_character(mu, ch.power_cycle_type((n,), r))
                assert ch.eval_at_root(poly, n, r) == value

def test_number_theory():
    assert ch.moebius(1) == 1
    assert ch.rad(1) == 1
    assert ch.rad(12) == 6
    assert ch.z_lambda((1,1,1)) == 6
    assert ch.moebius(12) == 0 and ch.moebius(30) == -1

def test_verification_error_carries_witness():
    err = m.VerificationError('boom', (1,2))
    assert isinstance(err, AssertionError)
    assert err.witness == (1,2) and err.message == 'boom'
