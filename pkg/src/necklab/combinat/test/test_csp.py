import pytest
from necklab.combinat import csp
from necklab.combinat import words as wd
from necklab.combinat.characters import IntPolyModQn, eval_at_root
from necklab.combinat.words import Word

def words_of(*texts):
    return [Word(t) for t in texts]

def test_orbit_polynomial():
    assert csp.orbit_polynomial(words_of('12', '21'), 2) == IntPolyModQn(2, [1,1])
    assert csp.orbit_polynomial(words_of('11'), 2) == IntPolyModQn(2, [1])
    assert csp.orbit_polynomial(words_of('112', '121', '211'), 3) == IntPolyModQn(3, [1,1,1])

def test_orbit_polynomial_counts_fixed_points():
    W = list(wd.enumerate_words(4, 2))
    poly = csp.orbit_polynomial(W, 4)
    assert eval_at_root(poly, 4, 4) == len(W)
    for r in range(1, 5):
        assert eval_at_root(poly, 4, r) == csp.fixed_point_count(W, r)

def test_not_rotation_closed():
    with pytest.raises(ValueError, match='not closed under rotation'):
        csp.orbit_polynomial(words_of('112', '121'), 3)

def test_verify_csp_maj():
    report = csp.verify_csp(words_of('12', '21'), 2, wd.maj)
    assert report.holds
    assert report.witness is None
    assert report.orbit_profile == {2: 1}

def test_verify_csp_constant_statistic():
    report = csp.verify_csp(words_of('12', '21'), 2, lambda w: 0)
    assert not report.holds
    assert report.witness == (1, 0, 2)

def test_csp_maj_on_contents():
    for alpha in ((1,1,1), (2,1,1), (2,2), (3,1,2), (1,2,1,1)):
        W = list(wd.enumerate_words_by_content(alpha))
        assert csp.verify_csp(W, sum(alpha), wd.maj).holds
        assert csp.verify_csp(W, sum(alpha), wd.maj_n).holds

def test_csp_flex_random_sets():
    for n in range(1, 6):
        for seed in range(20):
            W = csp.random_rotation_closed_set(n, 3, rng=seed)
            if not W: continue
            assert csp.verify_csp(W, n, wd.flex).holds

def test_random_set_is_seeded():
    assert csp.random_rotation_closed_set(5, 2, rng=7) == csp.random_rotation_closed_set(5, 2, rng=7)
    assert csp.random_rotation_closed_set(4, 2, density=1.0) == set(wd.enumerate_words(4, 2))

def test_report_consistency():
    with pytest.raises(ValueError):
        csp.CSPReport(True, 3, witness=(1, 0, 1))

def test_equidistribution():
    assert csp.verify_equidistribution((1,1)).holds
    assert csp.verify_equidistribution((4,)).holds
    for alpha in ((2,1), (1,2,1), (2,2,1), (1,1,1,1), (3,0,2)):
        report = csp.verify_equidistribution(alpha)
        assert report.holds
        assert report.maj_only == {} and report.flex_only == {}

def test_equidistribution_length_8():
    for alpha in ((2,2,2,2), (4,4), (3,1,2,2)):
        assert csp.verify_equidistribution(alpha).holds
