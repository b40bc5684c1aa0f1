"""Configuration spaces of points on a genus-one curve: model, scroll,
Hodge decomposition, and the filtered second page."""

import pytest

from jumploci.aomoto import AomotoComplex
from jumploci.elliptic import (
    e2_page, elliptic_model, hodge_decompose, scroll_membership,
    tangent_pair_basis)
from jumploci.errors import PreconditionError
from jumploci.scalars import GaussianRational, Matrix, rank

I = GaussianRational(0, 1)
ZERO = GaussianRational(0)


def gi(*vals):
    return [GaussianRational(v) for v in vals]


def test_model_dimensions():
    m2 = elliptic_model(2)
    assert m2.algebra.dim(1) == 4
    assert len(m2.diagonal_pairs) == 1
    assert m2.algebra.dim(2) == 5

    m3 = elliptic_model(3)
    assert m3.algebra.dims() == (1, 6, 12)
    assert len(m3.diagonal_pairs) == 3


def test_out_of_range_n():
    with pytest.raises(PreconditionError):
        elliptic_model(1)
    with pytest.raises(PreconditionError):
        elliptic_model(33)


def test_diagonal_classes_are_type_one_one():
    m = elliptic_model(3)
    for cls in m.diagonals.values():
        for mask in cls.terms:
            assert m.algebra.monomial_hodge_type(mask) == (1, 1)


def test_coordinate_roundtrip():
    m = elliptic_model(3)
    x, y = gi(1, -2, 1), gi(0, 5, -5)
    coords = m.class_coords(x, y)
    assert m.xy_of_coords(coords) == (tuple(x), tuple(y))


def test_scroll_examples():
    assert scroll_membership(3, gi(1, -1, 0), gi(2, -2, 0)).member
    verdict = scroll_membership(3, gi(1, -1, 0), gi(0, 1, -1))
    assert not verdict.member and "minor" in verdict.reason
    verdict = scroll_membership(3, gi(1, 0, 0), gi(0, 0, 0))
    assert not verdict.member and "sum" in verdict.reason
    with pytest.raises(PreconditionError):
        scroll_membership(3, gi(1, -1), gi(0, 0, 0))


def test_scroll_point_outside_every_tangent_pair():
    # rank-one witness not proportional to any e_i - e_j: the inclusion of
    # the tangent cone into the resonance locus is strict here
    x = gi(1, 1, -2)
    y = gi(2, 2, -4)
    assert scroll_membership(3, x, y).member
    for i in range(3):
        for j in range(i + 1, 3):
            e = [ZERO] * 3
            e[i], e[j] = GaussianRational(1), GaussianRational(-1)
            assert rank(Matrix([e, x])) == 2


def test_resonance_on_and_off_the_scroll():
    m = elliptic_model(3)

    def h1(x, y):
        cx = AomotoComplex(m.algebra, m.class_coords(x, y))
        return cx.cohomology_dims()[1]

    assert h1(gi(1, -1, 0), gi(2, -2, 0)) >= 1      # rank one, zero sums
    assert h1(gi(1, 1, -2), [I * c for c in gi(1, 1, -2)]) >= 1
    assert h1(gi(1, -1, 0), gi(0, 1, -1)) == 0       # full rank
    # a pure class with nonzero coordinate sum is off the scroll and not
    # resonant: the zero-sum conditions are part of the locus
    assert h1(gi(1, 0, 0), [I, ZERO, ZERO]) == 0


def test_hodge_decompose_pure_class():
    m = elliptic_model(3)
    x = gi(1, 0, 0)
    y = [I, ZERO, ZERO]
    split = hodge_decompose(m, x, y)
    assert split.pure10 == (tuple(x), tuple(y))
    assert all(not c for pair in split.pure01 for c in pair)
    assert all(not c for pair in split.pure11 for c in pair)


def test_hodge_decompose_mixed_class():
    m = elliptic_model(3)
    half = GaussianRational(1) / GaussianRational(2)
    split = hodge_decompose(m, gi(1, 0, 0), gi(0, 0, 0))
    (u, lu), (v, lv) = split.pure10, split.pure01
    assert u[0] == half and lu[0] == I * half
    assert v[0] == half and lv[0] == -I * half
    # components recompose to the input
    for k in range(3):
        assert u[k] + v[k] == (1 if k == 0 else 0)
        assert lu[k] + lv[k] == ZERO


def test_hodge_decompose_zero():
    m = elliptic_model(2)
    split = hodge_decompose(m, gi(0, 0), gi(0, 0))
    assert all(not c for pair in split.pure10 for c in pair)
    assert all(not c for pair in split.pure01 for c in pair)


def test_tangent_pairs_sit_in_the_scroll():
    for i in range(3):
        for j in range(i + 1, 3):
            (x1, y1), (x2, y2) = tangent_pair_basis(3, i, j)
            for s, t in ((1, 0), (0, 1), (1, 1), (2, -3)):
                x = [s * a + t * b for a, b in zip(x1, x2)]
                y = [s * c + t * d for c, d in zip(y1, y2)]
                assert scroll_membership(3, x, y).member


def test_distinct_tangent_pairs_meet_only_at_zero():
    m = elliptic_model(3)
    spans = {}
    for i in range(3):
        for j in range(i + 1, 3):
            (x1, y1), (x2, y2) = tangent_pair_basis(3, i, j)
            spans[(i, j)] = [m.class_coords(x1, y1), m.class_coords(x2, y2)]
    pairs = sorted(spans)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            stacked = Matrix(spans[pairs[a]] + spans[pairs[b]])
            assert rank(stacked) == 4


def test_e2_page_values():
    m = elliptic_model(3)
    x = gi(1, -1, 0)
    rep = e2_page(m, x, [I * c for c in x])
    assert rep.entries[(1, 0)] == 0
    assert rep.entries[(0, 1)] == 1
    assert rep.h == (0, 1, 3)
    assert rep.consistent
    for deg in range(3):
        assert sum(rep.entries[(p, deg - p)] for p in range(deg + 1)) \
            == rep.h[deg]


def test_e2_page_rejects_bad_alpha():
    m = elliptic_model(3)
    with pytest.raises(PreconditionError, match="F\\^1"):
        e2_page(m, gi(1, -1, 0), gi(1, -1, 0))
    with pytest.raises(PreconditionError):
        e2_page(m, gi(0, 0, 0), gi(0, 0, 0))


def test_scroll_equivalence_spot_checks():
    # membership matches h^1 >= 1 on a few handpicked classes of each kind
    m = elliptic_model(4)

    def h1(x, y):
        cx = AomotoComplex(m.algebra, m.class_coords(x, y))
        return cx.cohomology_dims()[1]

    cases = [
        (gi(1, -1, 0, 0), gi(-3, 3, 0, 0)),
        (gi(1, 2, -3, 0), gi(2, 4, -6, 0)),
        (gi(1, -1, 0, 0), gi(0, 0, 1, -1)),
        (gi(1, 0, 0, 0), gi(0, -1, 0, 0)),
    ]
    for x, y in cases:
        verdict = scroll_membership(4, x, y)
        assert verdict.member == (h1(x, y) >= 1), (x, y)
