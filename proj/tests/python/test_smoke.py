import pytest

import closefact as cf


def test_solve():
    r = cf.solve(1, 2, 3, 5)
    assert (r["n"], r["A"], r["B"], r["case"]) == ("180", "9", "20", "Case4")
    assert cf.solve(1, 1, 2, 3) is None


def test_quad_from_points_round_trip():
    assert cf.quad_from_points([(9, 20), (10, 18), (12, 15)]) == [1, 2, 3, 5]
    with pytest.raises(ValueError):
        cf.quad_from_points([(9, 20), (10, 18), (12, 16)])


def test_classify():
    r = cf.classify(3, 2, 5, 3)
    assert r["case"] == "Case3"
    assert r["witnesses"]["A_dprime"] == "3"


def test_family_and_threshold():
    f = cf.family(5)
    assert f["C"] == 13 and f["B"] == "468" and f["attains_bound"]
    big = cf.family(10**9)
    assert int(big["n"]) > 2**64
    t = cf.family_threshold(1000)
    assert t["N0"] == 2 and t["failures"] == [1]
    with pytest.raises(ValueError):
        cf.family(0)


def test_scans():
    assert cf.max_ab(13)["max_B"] == "468"
    g = cf.scan_gaps(2, 20000, workers=2)
    assert g["violation_count"] == 0
    assert g == cf.scan_gaps(2, 20000, workers=1)
    assert cf.cross_check(2000, 8)["violation_count"] == 0
    with pytest.raises(cf.BudgetExceeded):
        cf.scan_gaps(2, 1000, sieve_ceiling=100)


def test_divisor_helpers():
    assert cf.min_gap_triple(36)["x"] == ["4", "6", "9"]
    assert cf.min_gap_triple(7) is None
    assert any(t["A"] == "9" for t in cf.triples(180, consecutive=True))
    assert cf.factorize(2520) == [(2, 3), (3, 2), (5, 1), (7, 1)]
    assert cf.is_prime(2**61 - 1)
