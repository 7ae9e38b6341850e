import itertools

from hypothesis import given, settings, strategies as st

from bgres.steenrod import (
    SteenrodOp,
    admissible_basis,
    admissible_count_by_partitions,
    dim_free,
    excess,
    is_admissible,
    lucas_binom_mod2,
    parse_op,
)

Sq = SteenrodOp.monomial


def test_lucas_binom_examples():
    assert lucas_binom_mod2(3, 1) == 1
    assert lucas_binom_mod2(2, 1) == 0
    assert lucas_binom_mod2(-2, 0) == 1
    assert lucas_binom_mod2(5, 2) == 0
    assert lucas_binom_mod2(5, 7) == 0
    # generating-function extension at negative upper argument
    assert lucas_binom_mod2(-1, 3) == lucas_binom_mod2(3, 3) == 1


def test_adem_reduce_worked_examples():
    assert Sq(1) * Sq(1) == SteenrodOp.zero()
    assert Sq(1) * Sq(2) == Sq(3)
    assert Sq(2) * Sq(2) == Sq(3, 1)
    assert Sq(2) * Sq(3) == Sq(5) + Sq(4, 1)


def test_interior_sq0_is_stripped():
    assert SteenrodOp([(2, 0, 1)]) == Sq(2, 1)
    assert SteenrodOp([(0,)]) == SteenrodOp.one()


def test_excess():
    assert excess(()) == 0
    assert excess((4, 2, 1)) == 1
    for n in range(1, 9):
        assert excess((n,)) == n


def test_admissible_basis_examples():
    assert admissible_basis(0, 5) == ((),)
    assert admissible_basis(3, 3) == ((2, 1), (3,))
    assert admissible_basis(3, 1) == ((2, 1),)
    for deg in range(12):
        for m in admissible_basis(deg, deg):
            assert is_admissible(m)
            assert sum(m) == deg


def test_admissible_count_matches_independent_enumerator():
    for deg in range(0, 22):
        for cap in (0, 1, 2, 3, 5, deg):
            assert len(admissible_basis(deg, cap)) == admissible_count_by_partitions(deg, cap)


def test_dim_free_examples():
    for k in range(6):
        assert dim_free(1, 2 ** k) == 1
    assert dim_free(1, 3) == 0
    assert dim_free(1, 5) == 0
    assert dim_free(0, 0) == 1
    assert dim_free(0, 1) == 0
    assert dim_free(4, 2) == 0


def test_dim_free_of_f1_sees_only_powers_of_two():
    powers = {2 ** k for k in range(8)}
    for n in range(1, 200):
        assert dim_free(1, n) == (1 if n in powers else 0)


def test_reduce_is_linear_and_idempotent():
    a = Sq(5, 1)
    b = Sq(2) * Sq(4)
    assert (a + b) + b == a
    reduced = a + b
    assert SteenrodOp(reduced.terms) == reduced


def test_multiplication_is_associative_small():
    rng = range(1, 7)
    for a, b, c in itertools.product(rng, rng, rng):
        assert (Sq(a) * Sq(b)) * Sq(c) == Sq(a) * (Sq(b) * Sq(c))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=0, max_size=4),
       st.lists(st.integers(1, 9), min_size=0, max_size=4))
def test_product_of_reductions_matches_reduction_of_concatenation(a, b):
    word = SteenrodOp([tuple(a) + tuple(b)])
    assert SteenrodOp([tuple(a)]) * SteenrodOp([tuple(b)]) == word


def test_parser_round_trips():
    cases = [
        SteenrodOp.zero(),
        SteenrodOp.one(),
        Sq(3),
        Sq(4, 2, 1),
        Sq(5) + Sq(4, 1),
        Sq(7, 3, 1) + Sq(8, 2) + SteenrodOp.one(),
    ]
    for op in cases:
        assert parse_op(str(op)) == op


def test_truncate_by_excess():
    op = Sq(5) + Sq(4, 1)  # excesses 5 and 3
    assert op.truncate(5) == op
    assert op.truncate(3) == Sq(4, 1)
    assert op.truncate(2) == SteenrodOp.zero()
