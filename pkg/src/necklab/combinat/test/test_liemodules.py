from math import factorial
import pytest
from necklab import misc as m
from necklab.combinat import liemodules as lm
from necklab.combinat import words as wd
from necklab.combinat.characters import IntPolyModQn, eval_at_root, mn_character, power_cycle_type
from necklab.combinat.symfunc import SymFunc, s, h, e, p, multiply
from necklab.combinat.tableaux import PartitionTuple, partitions
from necklab.combinat.words import Word

def maj_ab_stat(a, b):
    return lambda w: wd.maj_ab(w, a, b)

def test_kw_series_examples():
    assert lm.kw_series(3)[1] == s(2,1)
    assert lm.kw_series(4)[1] == s(3,1) + s(2,1,1)
    assert lm.kw_series(1) == {1: s(1)}

def test_kw_series_sums_to_regular():
    for n in range(1, 8):
        total = SymFunc(n)
        for f in lm.kw_series(n).values(): total = total + f
        assert total == lm.regular_character(n)

def test_kw_series_against_oracle():
    for n in range(1, 7):
        series, oracle = lm.kw_series(n), lm.kw_oracle(n)
        for r in range(1, n + 1):
            assert series[r] == oracle[r]

def test_kw_triple_equality():
    for n in range(1, 6):
        report = lm.check_kw_series(n)
        assert report.holds, report.witness
        assert report.checked == 3 * n

def test_kw_triple_equality_validated():
    assert lm.check_kw_series(4, validate=True).holds

def test_kw_dimension():
    for n in range(1, 8):
        assert lm.kw_dimension(n, 1) == factorial(n - 1)

def test_cyclic_exponents():
    assert lm.cyclic_exponents((2,1)) == IntPolyModQn(3, [0,1,1])
    assert lm.cyclic_exponents((3,)) == IntPolyModQn(3, [1])
    for lam in partitions(6):
        P = lm.cyclic_exponents(lam, 6)
        assert P.valueAtOne() == lam.numberOfSYT()
        for j in range(1, 7):
            assert eval_at_root(P, 6, j) == mn_character(lam, power_cycle_type((6,), j))

def test_cyclic_exponents_size_error():
    with pytest.raises(ValueError):
        lm.cyclic_exponents((2,1), 4)

def test_stembridge_cyclic_case():
    for n in range(1, 6):
        series, kw = lm.stembridge_series((n,)), lm.kw_series(n)
        assert sorted(series) == sorted(kw)
        for r in kw: assert series[r] == kw[r]

def test_stembridge_identity_subgroup():
    series = lm.stembridge_series((1,1,1))
    assert list(series) == [1]
    assert series[1] == lm.regular_character(3)

def test_stembridge_against_oracle():
    for nu in ((2,1), (2,2), (3,1), (2,1,1), (3,2)):
        series, oracle = lm.stembridge_series(nu), lm.stembridge_oracle(nu)
        for r in series: assert series[r] == oracle[r]

def test_check_stembridge():
    for nu in ((2,1), (2,2), (3,1)):
        report = lm.check_stembridge(nu)
        assert report.holds, report.witness

def test_ofd_content_gf():
    for r in (1, 2, 3):
        assert lm.ofd_content_gf((3,), r) == lm.nfd_gf(3, r)
    assert lm.ofd_content_gf((1,1), 1) == h(1,1)
    assert lm.ofd_content_gf((2,1), 1, m_letters=3) == lm.ofd_gf_by_residue((2,1), 1)
    assert lm.ofd_content_gf((2,1), 2) == lm.ofd_gf_by_frequency((2,1), 2)

def test_ofd_content_gf_small_alphabet():
    with pytest.raises(ValueError):
        lm.ofd_content_gf((2,1), 1, m_letters=2)

def test_sigma_nu():
    assert lm.sigma_nu(Word('12345'), (3,2)) == Word('31254')

def test_nfd_gf():
    assert lm.nfd_gf(2, 1) == e(2)
    assert lm.nfd_gf(2, 2) == h(2)
    assert lm.nf_gf(4, 3).isZero()
    assert lm.nfd_gf(3, 1, validate=True) == s(2,1)

def test_bold_a_tuples():
    for nu in ((2,1), (1,2), (2,2), (3,1)):
        for t1 in range(1, nu[0] + 1):
            for t2 in range(1, nu[1] + 1):
                assert lm.check_bold_a(nu, (t1, t2))

def test_mobius_f():
    assert lm.mobius_f(1, 1, 1) == 1
    assert lm.mobius_f(1, 2, 2) == -1
    assert lm.mobius_f(2, 2, 4) == 0

def test_mobius_f_paths_agree():
    for e_ in range(1, 37):
        for d in range(1, e_ + 1):
            if e_ % d: continue
            for f in range(1, e_ + 1):
                if e_ % f: continue
                lm.mobius_f(f, d, e_)

def test_mobius_f_divisibility():
    with pytest.raises(ValueError):
        lm.mobius_f(2, 3, 4)

def test_schocker_examples():
    assert lm.schocker(2, 2, 1, 'trivial') == s(2,2) + s(1,1,1,1)
    assert lm.schocker(2, 2, 1, 'sign') == s(2,1,1)
    for b in range(1, 5):
        assert lm.schocker(1, b, 1, 'trivial') == s(b)

def test_schocker_bad_arguments():
    with pytest.raises(ValueError):
        lm.schocker(2, 2, 3)
    with pytest.raises(ValueError):
        lm.schocker(2, 2, 1, 'alternating')

def test_schocker_routes():
    for a, b in ((2,2), (2,3), (3,2)):
        for r in range(1, a + 1):
            for kind in lm.KINDS:
                report = lm.check_schocker(a, b, r, kind)
                assert report.holds, report.witness

def test_schocker_even_columns():
    for b in range(1, 4):
        assert lm.schocker(2, b, 1) == lm.even_column_sum(2 * b)

def test_nfd_power_plethysm():
    for a in (1, 2, 3):
        for r in range(1, a + 1):
            for k in (1, 2):
                assert lm.check_nfd_power_plethysm(a, r, k)

def test_wreath_char():
    assert lm.wreath_char(1, 3, [[3]]) == s(3)
    assert lm.wreath_char(2, 1, [[], [1]]) == s(2)
    assert lm.wreath_char(2, 1, [[1], []]) == s(1,1)
    assert lm.wreath_char(2, 2, [[2], []]) == lm.schocker(2, 2, 1, 'trivial')
    assert lm.wreath_char(2, 2, [[], [1,1]]) == lm.schocker(2, 2, 2, 'sign')

def test_wreath_char_size_error():
    with pytest.raises(ValueError):
        lm.wreath_char(2, 2, [[1], []])
    with pytest.raises(ValueError):
        lm.wreath_char(3, 1, [[1], []])

def test_wreath_dim():
    assert lm.wreath_dim([[1], [2,1], []]) == 8
    assert lm.wreath_dim([[2], []]) == 1

def test_graded_frobenius_two_letters():
    series = lm.graded_frobenius(2, 1)
    assert series == {PartitionTuple([[1], []]): s(1,1), PartitionTuple([[], [1]]): s(2)}

def test_graded_frobenius_three_ways():
    series = lm.graded_frobenius(2, 2, check=True)
    assert len(series) == 5
    total = SymFunc(4)
    for f in series.values(): total = total + f
    assert total == lm.regular_character(4)

def test_graded_frobenius_order_parameter():
    series = lm.graded_frobenius(2, 2, check=True, order=lambda w: tuple(reversed(w)))
    assert len(series) == 5

def test_higher_lie_examples():
    assert lm.higher_lie((2,)) == s(1,1)
    assert lm.higher_lie((1,1)) == s(2)
    assert lm.higher_lie((2,1)) == s(2,1) + s(1,1,1)
    assert lm.gessel_reutenauer((2,1)) == s(2,1) + s(1,1,1)

def test_higher_lie_checks():
    for n in range(1, 6):
        for lam in partitions(n):
            report = lm.check_higher_lie(lam)
            assert report.holds, report.witness

def test_omega_identities():
    for n in range(1, 7):
        assert lm.omega_identities(n=n).holds
    assert lm.omega_identities(a=3, b=2).holds
    assert lm.omega_identities(a=2, b=2).holds
    assert lm.omega_identities(a=2, b=3).holds

def test_omega_small_cases():
    series = lm.kw_series(3)
    for r in series:
        assert series[r].omega() == series[r]
    assert lm.schocker(3, 2, 1, 'trivial').omega() == lm.schocker(3, 2, 1, 'sign')

def test_mash_known_witness():
    report = lm.check_mash_candidate(maj_ab_stat(2, 2), 2, 2)
    assert report.equidistributed
    assert not report.constant_on_fibers
    assert report.witness_fibers == (Word('2314'), Word('1423'))
    assert not report.holds

def test_mash_one_block_candidates():
    for n in range(1, 5):
        assert lm.check_mash_candidate(maj_ab_stat(1, n), 1, n).holds
        assert lm.check_mash_candidate(maj_ab_stat(n, 1), n, 1).holds

def test_mash_equidistribution_failure():
    report = lm.check_mash_candidate(lambda w: PartitionTuple([[1,1], []]), 2, 1)
    assert not report.equidistributed
    assert report.witness_equidistribution is not None

def test_symmetry_checks():
    report = lm.symmetry_checks(max_n=6, max_nu_n=5, max_perm_n=4, max_k=3)
    assert report.holds, report.witness
    assert report.checked > 0

def test_report_raises():
    report = lm.VerificationReport('demo')
    report.record(True, 1)
    report.record(False, 2)
    report.record(False, 3)
    assert report.witness == 2 and report.checked == 3
    with pytest.raises(m.VerificationError):
        report.raiseOnFailure()
