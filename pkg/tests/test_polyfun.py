import math

import pytest

from bgres.polyfun import (
    PolySeries,
    cinj_gamma,
    cinj_lambda,
    closed_cinj_gamma,
    closed_cinj_lambda,
    closed_cproj_lambda,
    closed_cproj_s,
    compositions,
    cproj_lambda,
    cproj_s,
    dim_l,
    dim_s,
    ext_twist,
    gldim,
    gldim_witnesses,
    koszul_verify,
    maclane_table,
    sdr_divisibility_ok,
    sdr_euler_check,
    sdr_series,
)


def test_compositions_examples():
    assert compositions(3, 2) == [(1, 2), (2, 1)]
    assert compositions(5, 1) == [(5,)]
    assert compositions(2, 3) == []
    for d in range(1, 9):
        for s in range(1, d + 1):
            assert len(compositions(d, s)) == math.comb(d - 1, s - 1)


def test_series_algebra():
    a = PolySeries.single("S", (2,))
    b = PolySeries.single("S", (1,), degree=1)
    prod = a * b
    assert prod.degree_counts(1) == {(2, 1): 1}
    assert (a + a).degree_counts(0) == {(2,): 2}


def test_cproj_lambda_small():
    s = cproj_lambda(2)
    assert s.degree_counts(0) == {(1, 1): 1}
    assert s.degree_counts(1) == {(2,): 1}


def test_cinj_gamma_small():
    assert cinj_gamma(1).degree_counts(0) == {(1,): 1}
    top = cinj_gamma(3)
    # expanding the closed formula at its last block: the top degree 2d - 2
    # carries the single one-part class, the all-ones class spans degrees
    # 0 .. d-1 from the first block
    assert top.length() == 4
    assert top.degree_counts(4) == {(3,): 1}
    for k in range(3):
        assert top.degree_counts(k).get((1, 1, 1), 0) == math.comb(2, k)


def test_top_degree_of_cinj_gamma():
    for d in range(2, 7):
        s = cinj_gamma(d)
        assert s.length() == 2 * d - 2
        assert s.degree_counts(s.length()) == {(d,): 1}


def test_recursions_match_closed_formulas():
    for d in range(1, 8):
        assert cproj_lambda(d) == closed_cproj_lambda(d), ("proj-ext", d)
        assert cinj_lambda(d) == closed_cinj_lambda(d), ("inj-ext", d)
        assert cinj_gamma(d) == closed_cinj_gamma(d), ("inj-div", d)
        assert cproj_s(d) == closed_cproj_s(d), ("proj-sym", d)


def test_sdr_base_case():
    s = sdr_series(1, 1)
    assert s.degree_counts(0) == {(2,): 1}
    assert s.degree_counts(1) == {(1, 1): 1}
    assert s.degree_counts(2) == {(2,): 1}


def test_sdr_lengths():
    for d in range(1, 4):
        for r in range(1, 3):
            assert sdr_series(d, r).length() == (2 ** (r + 1) - 2) * d
    assert sdr_series(1, 2).length() == 6


def test_sdr_weights_are_twisted():
    for d in range(1, 4):
        for r in range(1, 3):
            assert sdr_series(d, r).total_weight() == {d * 2 ** r}


def test_sdr_divisibility():
    assert sdr_divisibility_ok(2, 1, 1)
    assert sdr_divisibility_ok(4, 1, 1)
    assert sdr_divisibility_ok(4, 1, 2)
    assert sdr_divisibility_ok(2, 2, 1)


def test_sdr_euler():
    for v in (1, 2, 3):
        for d in (1, 2, 3):
            for r in (1, 2):
                assert sdr_euler_check(d, r, v), (d, r, v)


def test_ext_twist():
    assert ext_twist(1) == {0: 1, 1: 0, 2: 1}
    t2 = ext_twist(2)
    assert {k for k, v in t2.items() if v} == {0, 2, 4, 6}
    assert all(v == 1 for v in t2.values() if v)
    t3 = ext_twist(3)
    assert {k for k, v in t3.items() if v} == {0, 2, 4, 6, 8, 10, 12, 14}


def test_ext_twist_stabilizes():
    for r in (1, 2):
        small = ext_twist(r)
        big = ext_twist(r + 1)
        bound = 2 ** (r + 1) - 2
        for k in range(bound):
            assert small.get(k, 0) == big.get(k, 0), (r, k)


def test_ext_twist_palindromic():
    for r in (1, 2, 3):
        t = ext_twist(r)
        top = 2 ** (r + 1) - 2
        for k in range(top + 1):
            assert t.get(k, 0) == t.get(top - k, 0), (r, k)


def test_maclane_table():
    table = maclane_table(10)
    for k in range(11):
        assert table[k] == (1 if k % 2 == 0 else 0), k


def test_gldim():
    assert gldim(2) == 2
    assert gldim(3) == 2
    assert gldim(4) == 6
    assert gldim(5) == 6
    assert gldim(6) == 8
    assert gldim(7) == 8
    assert gldim(8) == 14


def test_gldim_witnesses():
    for d in range(2, 9):
        w = gldim_witnesses(d)
        assert w.inj_length == 2 * d - 2
        assert w.proj_length == 2 * d - 2
        if d in (2, 4, 8):
            assert w.consistent
            assert not any(w.retract_binomials.values())
        else:
            # for non-2-powers some middle binomial is odd: the divided
            # power is a retract and the bound is not attained at 2d - 2
            assert any(w.retract_binomials.values())


def test_koszul_exactness():
    for d in range(1, 5):
        for v in range(1, 4):
            rep = koszul_verify(d, v)
            assert rep.passed, (d, v, rep.to_json_dict())


def test_koszul_dims_example():
    rep = koszul_verify(2, 2)
    assert rep.gamma_lambda_dims == [3, 4, 1]
    assert sum((-1) ** k * n for k, n in enumerate(rep.gamma_lambda_dims)) == 0


def test_koszul_collapses_on_the_line():
    rep = koszul_verify(3, 1)
    assert rep.passed
    assert rep.gamma_lambda_dims[2:] == [0, 0]


def test_dims():
    assert dim_s(2, 2) == 3
    assert dim_l(2, 2) == 1
    assert dim_l(3, 2) == 0


def test_bad_args():
    with pytest.raises(ValueError):
        sdr_series(0, 1)
    with pytest.raises(ValueError):
        gldim(0)
    with pytest.raises(ValueError):
        koszul_verify(0, 1)
