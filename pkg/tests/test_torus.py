"""Exponential tangent cones and hypersurface tangent cones at 1."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jumploci.errors import PreconditionError
from jumploci.torus import (
    ExpPolynomial, LaurentSystem, etc_membership, evaluate_terms,
    tangent_cone_hypersurface)

SUBTORUS = LaurentSystem(2, [{(1, 1): 1, (0, 0): -1}])          # z1 z2 = 1
TRANSLATED = LaurentSystem(2, [{(1, 0): 1, (0, 1): 1, (0, 0): -2}])


def test_subtorus_membership():
    assert etc_membership(SUBTORUS, [1, -1]).member
    assert etc_membership(SUBTORUS, [Fraction(2, 3), Fraction(-2, 3)]).member
    rep = etc_membership(SUBTORUS, [1, 1])
    assert not rep.member
    # the witness is the lowest-frequency surviving term of e^{2t} - 1
    assert rep.witness == (0, 0, -1)
    assert rep.restrictions[0].terms == ((0, -1), (2, 1))


def test_translated_curve_rejects_all_directions():
    # 1 lies on z1 + z2 = 2 but the exponential curve leaves immediately:
    # the three frequencies 1, -1, 0 never cancel
    rep = etc_membership(TRANSLATED, [1, -1])
    assert not rep.member
    ep = rep.restrictions[0]
    assert [mu for mu, _ in ep.terms] == [-1, 0, 1]
    assert [c for _, c in ep.terms] == [1, -2, 1]
    for alpha in ([1, 0], [0, 1], [2, -2], [Fraction(1, 2), Fraction(1, 3)]):
        assert not etc_membership(TRANSLATED, alpha).member
    assert etc_membership(TRANSLATED, [0, 0]).member  # the point 1 itself


def test_higher_rank_subtorus_kernel():
    system = LaurentSystem(
        3, [{(1, -1, 0): 1, (0, 0, 0): -1}, {(0, 1, -1): 1, (0, 0, 0): -1}])
    assert etc_membership(system, [1, 1, 1]).member
    assert etc_membership(system, [2, 2, 2]).member
    assert not etc_membership(system, [1, 1, 0]).member


def test_accepted_directions_add():
    # binomial systems cut out subtori, whose directions form a subspace
    system = LaurentSystem(2, [{(2, 3): 1, (0, 0): -1}])
    a, b = [3, -2], [Fraction(3, 2), Fraction(-1)]
    assert etc_membership(system, a).member
    assert etc_membership(system, b).member
    assert etc_membership(system, [x + y for x, y in zip(a, b)]).member


def test_direction_validation():
    with pytest.raises(PreconditionError, match="length"):
        etc_membership(SUBTORUS, [1, 1, 1])
    with pytest.raises(PreconditionError, match="rational"):
        etc_membership(SUBTORUS, [0.5, -0.5])
    with pytest.raises(PreconditionError, match="rational"):
        etc_membership(SUBTORUS, [True, 1])


def test_tangent_cone_examples():
    tc = tangent_cone_hypersurface({(1, 1): 1, (0, 0): -1})
    assert tc.degree == 1 and tc.terms == {(1, 0): Fraction(1),
                                           (0, 1): Fraction(1)}
    tc = tangent_cone_hypersurface({(1, 0): 1, (0, 1): 1, (0, 0): -2})
    assert tc.degree == 1 and tc.terms == {(1, 0): Fraction(1),
                                           (0, 1): Fraction(1)}
    # (z1 - 1)(z2 - 1) expands to z1 z2 - z1 - z2 + 1
    tc = tangent_cone_hypersurface(
        {(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1})
    assert tc.degree == 2 and tc.terms == {(1, 1): Fraction(1)}


def test_tangent_cone_with_negative_exponents():
    # clearing by a monomial unit does not move the germ at 1
    tc = tangent_cone_hypersurface({(1, 0): 1, (-1, 0): 1, (0, 0): -2})
    assert tc.degree == 2
    assert evaluate_terms(tc.terms, [Fraction(1), Fraction(0)]) != 0


def test_tangent_cone_errors():
    with pytest.raises(PreconditionError, match="zero polynomial"):
        tangent_cone_hypersurface({})
    with pytest.raises(PreconditionError, match="nonzero"):
        tangent_cone_hypersurface({(1, 0): 1, (0, 0): 1})  # P(1,1) = 2


def test_etc_lies_in_tangent_cone():
    # the product hypersurface (z1 z2 - 1)(z1 - z2) carries both lines
    poly = {(2, 1): 1, (1, 2): -1, (1, 0): -1, (0, 1): 1}
    system = LaurentSystem(2, [poly])
    tc = tangent_cone_hypersurface(poly)
    for alpha in ([1, -1], [1, 1], [Fraction(-2), Fraction(2)]):
        if etc_membership(system, alpha).member:
            assert evaluate_terms(tc.terms, [Fraction(a) for a in alpha]) == 0


def test_exp_polynomial_grouping():
    ep = ExpPolynomial.from_laurent(
        {(1, 1): 5, (2, 2): -5, (0, 0): 3, (1, 0): -3}, [1, -1])
    # frequencies: 0, 0, 0, 1 -> the constants cancel partially
    assert ep.terms == ((0, 3), (1, -3))
    assert not ep.is_zero()
    assert ExpPolynomial.from_laurent({(1, 1): 5, (2, 2): -5}, [1, -1]).is_zero()


def test_zero_coefficients_dropped_from_system():
    system = LaurentSystem(2, [{(1, 1): 1, (0, 0): -1, (5, 5): 0}])
    assert all((5, 5) not in p for p in system.polys)


rational_dirs = st.tuples(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    st.fractions(min_value=-6, max_value=6, max_denominator=4))


@given(rational_dirs, st.fractions(min_value=-5, max_value=5,
                                   max_denominator=3).filter(bool))
@settings(max_examples=60, deadline=None)
def test_cone_property(alpha, c):
    # membership only depends on the line through alpha
    scaled = [c * a for a in alpha]
    for system in (SUBTORUS, TRANSLATED):
        assert etc_membership(system, list(alpha)).member == \
            etc_membership(system, scaled).member
