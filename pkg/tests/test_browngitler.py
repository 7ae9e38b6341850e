import itertools

import pytest

from bgres.browngitler import (
    BGComplex,
    BGModule,
    BGMorphism,
    dim_j,
    mahowald,
    mahowald_resolution,
    morphism_is_zero,
)
from bgres.steenrod import SteenrodOp, admissible_basis, dim_free

Sq = SteenrodOp.monomial


def single(op, n, m):
    return BGMorphism(BGModule([n]), BGModule([m]), {(0, 0): op})


def test_dim_j_examples():
    assert dim_j(3, 2) == 1  # 3 = 2 + 1
    assert dim_j(4, 3) == 1  # {2, 1, 1}
    assert dim_j(4, 2) == 1  # {2, 2}
    for n in range(8):
        for m in range(n + 1, n + 4):
            assert dim_j(n, m) == 0


def test_duality_dim_agreement_up_to_40():
    for n in range(41):
        for m in range(41):
            assert dim_j(n, m) == dim_free(m, n), (n, m)


def test_morphism_vanishing_rule_matches_mahowald_remark():
    # Sq^q : J(t+q) -> J(t) is nonzero exactly when q <= t
    for q in range(1, 13):
        for t in range(1, 13):
            assert morphism_is_zero(Sq(q), t + q, t) == (q > t)


def test_morphism_is_zero_trivia():
    assert morphism_is_zero(SteenrodOp.zero(), 5, 2)
    assert morphism_is_zero(Sq(3), 5, 2)  # excess 3 > 2
    with pytest.raises(ValueError):
        morphism_is_zero(Sq(1), 5, 2)


def test_hom_dimension_law():
    # independent truncated-admissible count == dim_j(n, m)
    for n in range(13):
        for m in range(13):
            if n < m:
                continue
            hom_dim = len(admissible_basis(n - m, m))
            assert hom_dim == dim_j(n, m), (n, m)


def test_realize_identity_and_zero():
    ident = BGMorphism.identity(BGModule([4, 2]))
    for d in range(7):
        mat = ident.realize(d)
        assert mat == mat.transpose() and mat.rank() == mat.rows
    z = single(Sq(1) * Sq(1), 3, 1)
    assert z.is_zero()


def test_realize_sq1_j2_to_j1_in_degree_1():
    mat = single(Sq(1), 2, 1).realize(1)
    assert (mat.rows, mat.cols) == (1, 1)
    assert mat.entry(0, 0) == 1


def test_realization_shape():
    f = single(Sq(2), 5, 3)
    for d in range(8):
        mat = f.realize(d)
        assert mat.rows == dim_j(3, d)
        assert mat.cols == dim_j(5, d)


def test_compose_concatenates_in_path_order():
    f = single(Sq(1), 4, 3)  # first arrow
    g = single(Sq(1), 3, 2)  # second arrow
    comp = g.compose(f)
    assert comp.entry(0, 0) == Sq(1) * Sq(1)
    assert comp.is_zero()
    for d in range(6):
        prod = g.realize(d) @ f.realize(d)
        assert prod.is_zero()


def test_realization_is_functorial():
    ops = [
        (Sq(1), 6, 5),
        (Sq(2), 5, 3),
        (Sq(3) + Sq(2) * Sq(1), 6, 3),
        (Sq(2), 8, 6),
        (Sq(4), 8, 4),
    ]
    for (a_op, n, m), (b_op, n2, m2) in itertools.product(ops, repeat=2):
        if m != n2:
            continue
        f = single(a_op, n, m)
        g = single(b_op, n2, m2)
        comp = g.compose(f)
        for d in range(9):
            assert comp.realize(d) == g.realize(d) @ f.realize(d), (a_op, b_op, d)


def test_realization_functorial_up_to_degree_20():
    pairs = [
        ((Sq(4), 12, 8), (Sq(3), 8, 5)),
        ((Sq(2) * Sq(1), 9, 6), (Sq(5), 6, 1)),
        ((Sq(6) + Sq(5) * Sq(1), 14, 8), (Sq(4), 8, 4)),
    ]
    for (a_op, n, m), (b_op, n2, m2) in pairs:
        assert m == n2
        f = single(a_op, n, m)
        g = single(b_op, n2, m2)
        comp = g.compose(f)
        for d in range(21):
            assert comp.realize(d) == g.realize(d) @ f.realize(d), (a_op, b_op, d)


def test_truncated_admissibles_are_independent_morphisms():
    # stacking the realizations of each candidate operation over all
    # internal degrees up to the target index gives independent vectors,
    # exactly dim_j(n, m) of them
    from bgres.f2linalg import F2Matrix

    for n in range(2, 11):
        for m in range(1, n + 1):
            basis = admissible_basis(n - m, m)
            if not basis:
                continue
            columns = []
            for word in basis:
                mor = single(SteenrodOp([word]), n, m)
                vec = []
                for d in range(m + 1):
                    for row in mor.realize(d).to_rows():
                        vec.extend(row)
                columns.append(vec)
            width = len(columns[0])
            mat = F2Matrix.from_rows(columns, cols=width)
            assert mat.rank() == len(basis) == dim_j(n, m), (n, m)


def test_compose_with_identity():
    f = BGMorphism(
        BGModule([7, 6]),
        BGModule([6, 4, 3]),
        {
            (0, 0): Sq(1),
            (1, 0): Sq(2) * Sq(1),
            (1, 1): Sq(2),
            (2, 1): Sq(3),
        },
    )
    assert f.compose(BGMorphism.identity(f.source)) == f
    assert BGMorphism.identity(f.target).compose(f) == f


def test_mahowald_descriptors():
    m1 = mahowald(1)
    assert not m1.iso
    assert m1.resolution.terms == [BGModule([2]), BGModule([1])]
    assert m1.resolution.diffs[0].entry(0, 0) == Sq(1)

    m2 = mahowald(2)
    assert m2.iso and m2.resolution.terms == [BGModule([3])]

    m3 = mahowald(3)
    assert not m3.iso
    assert m3.resolution.terms == [BGModule([4]), BGModule([2])]
    assert m3.resolution.diffs[0].entry(0, 0) == Sq(2)


def test_mahowald_resolution_of_sum():
    res = mahowald_resolution(BGModule([5, 4, 3]))
    assert res.terms[0] == BGModule([6, 5, 4])
    assert res.terms[1] == BGModule([3, 2])
    assert res.diffs[0].entry(0, 0) == Sq(3)
    assert res.diffs[0].entry(1, 2) == Sq(2)
    assert res.diffs[0].entry(0, 1) == SteenrodOp.zero()


def test_mahowald_resolution_is_exact_in_low_degrees():
    # 0 -> Sigma J(n) -> J(n+1) -> J((n+1)/2) -> 0 for odd n:
    # check dimension bookkeeping and surjectivity degree by degree
    for n in (1, 3, 5, 7):
        res = mahowald_resolution(BGModule([n]))
        proj = res.diffs[0]
        for d in range(0, 2 * n + 2):
            mat = proj.realize(d)
            assert mat.rank() == mat.rows  # surjective
            # kernel dimension equals dim (Sigma J(n))^d = dim J(n)^{d-1}
            assert mat.cols - mat.rank() == dim_j(n, d - 1) if d >= 1 else mat.cols == dim_j(n + 1, 0)


def test_complex_json_round_trip():
    res = mahowald_resolution(BGModule([5, 3]))
    data = res.to_json_dict()
    back = BGComplex.from_json_dict(data)
    assert back == res


def test_complex_rejects_nonzero_d2():
    a = BGModule([4])
    b = BGModule([3])
    c = BGModule([1])
    f = BGMorphism(a, b, {(0, 0): Sq(1)})
    g = BGMorphism(b, c, {(0, 0): Sq(2)})
    if not g.compose(f).is_zero():
        with pytest.raises(ValueError):
            BGComplex([a, b, c], [f, g])


def test_module_text_round_trip():
    for mod in (BGModule(), BGModule([7, 6]), BGModule([3, 3, 1])):
        assert BGModule.parse(str(mod)) == mod
