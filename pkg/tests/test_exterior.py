"""Exterior algebra, quotients, and the Hodge filtration."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jumploci.elliptic import elliptic_model
from jumploci.errors import PreconditionError
from jumploci.exterior import (
    GradedAlgebra, Multivector, build_quotient_algebra,
    hodge_filtration_subspace, wedge)


def gen(i, ngens=4):
    return Multivector.generator(ngens, i)


def test_basis_products():
    a1, b1 = gen(0), gen(1)
    assert wedge(a1, b1) == Multivector.monomial(4, [0, 1])
    assert wedge(a1, a1).is_zero()
    assert wedge(b1, a1) == Multivector.monomial(4, [0, 1], -1)


def test_square_of_any_one_class_vanishes():
    u = gen(0) + gen(2).scale(3) + gen(3).scale(Fraction(-1, 2))
    assert wedge(u, u).is_zero()


def test_generator_count_mismatch():
    with pytest.raises(PreconditionError):
        wedge(Multivector.generator(3, 0), Multivector.generator(4, 0))


def test_full_exterior_dims():
    A = build_quotient_algebra(4, [], 2)
    assert A.dims() == (1, 4, 6)


def test_one_generic_quadric_drops_one_dimension():
    g = Multivector(4, [(0b0011, 1), (0b0101, 2), (0b1001, 3),
                        (0b0110, 5), (0b1010, 7), (0b1100, 11)])
    A = build_quotient_algebra(4, [g], 2)
    assert A.dims() == (1, 4, 5)
    assert not any(A.project(g))


def test_elliptic_three_point_degree_two():
    m = elliptic_model(3)
    assert m.algebra.dims() == (1, 6, 12)  # 15 monomials minus 3 diagonals


def test_ideal_generator_validation():
    inhomog = Multivector(4, [(0b0011, 1), (0b0111, 1)])
    with pytest.raises(PreconditionError):
        build_quotient_algebra(4, [inhomog], 2)
    with pytest.raises(PreconditionError):
        build_quotient_algebra(4, [gen(0)], 2)


def test_projection_recovers_quotient_basis():
    A = build_quotient_algebra(3, [], 2)
    for d in range(3):
        for k, mask in enumerate(A.basis[d]):
            coords = A.project(Multivector(3, [(mask, 1)]), d)
            assert [bool(c) for c in coords] == [j == k for j in range(len(coords))]


def test_hodge_filtration_dims():
    m = elliptic_model(3)
    assert len(hodge_filtration_subspace(m.algebra, 0, 1)) == 6
    assert len(hodge_filtration_subspace(m.algebra, 1, 1)) == 3
    assert len(hodge_filtration_subspace(m.algebra, 2, 2)) == 3


def test_filtration_is_nested():
    m = elliptic_model(3)
    for d in (1, 2):
        dims = [len(hodge_filtration_subspace(m.algebra, p, d))
                for p in range(d + 2)]
        assert dims == sorted(dims, reverse=True)
        assert dims[-1] == 0  # F^{d+1} of a weight-d piece is empty


def test_filtration_multiplies():
    # F^1 wedge F^1 lands in F^2
    m = elliptic_model(3)
    A = m.algebra
    f1 = hodge_filtration_subspace(A, 1, 1)
    f2 = hodge_filtration_subspace(A, 2, 2)
    from jumploci.scalars import Matrix, rank
    base = rank(Matrix(f2, field=A.field)) if f2 else 0
    for u in f1:
        for v in f1:
            prod = A.multiply(A.lift(u, 1), A.lift(v, 1))
            if not any(prod):
                continue
            assert rank(Matrix(list(f2) + [prod], field=A.field)) == base


def test_missing_hodge_types_error():
    A = build_quotient_algebra(4, [], 2)
    with pytest.raises(PreconditionError):
        A.hodge_subspace(1, 1)


coeffs = st.integers(-5, 5)
masks = st.integers(0, 15)
mvs = st.lists(st.tuples(masks, coeffs), max_size=4).map(
    lambda t: Multivector(4, t))


@given(mvs, mvs, mvs)
@settings(max_examples=60, deadline=None)
def test_wedge_associative(u, v, w):
    assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))


@given(mvs, mvs)
@settings(max_examples=60, deadline=None)
def test_wedge_graded_commutative(u, v):
    # compare homogeneous parts so the sign is well defined
    for du in u.degrees():
        for dv in v.degrees():
            uh = Multivector(4, [(m, c) for m, c in u.terms.items()
                                 if m.bit_count() == du])
            vh = Multivector(4, [(m, c) for m, c in v.terms.items()
                                 if m.bit_count() == dv])
            sign = -1 if (du % 2 and dv % 2) else 1
            assert wedge(uh, vh) == wedge(vh, uh).scale(sign)


@given(mvs, mvs, mvs)
@settings(max_examples=40, deadline=None)
def test_wedge_bilinear(u, v, w):
    assert wedge(u + v, w) == wedge(u, w) + wedge(v, w)
    assert wedge(u.scale(3), w) == wedge(u, w).scale(3)


def test_multiply_respects_quotient():
    # squares of degree-one classes vanish in the quotient too
    m = elliptic_model(2)
    A = m.algebra
    u = A.lift([A.field.coerce(1)] + [A.field.zero()] * 3, 1)
    assert not any(A.multiply(u, u))
