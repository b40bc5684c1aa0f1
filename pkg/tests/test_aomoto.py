"""The complex (A*, alpha wedge): cohomology, resonance, log resonance."""

from fractions import Fraction

import pytest

from jumploci.aomoto import (
    AomotoComplex, aomoto_complex, cohomology_dims, generic_dims_sample,
    isotropic_check, log_resonance_membership, resonance_membership)
from jumploci.arrangement import Arrangement, os_algebra, points_arrangement
from jumploci.elliptic import elliptic_model, tangent_pair_basis
from jumploci.errors import PreconditionError
from jumploci.exterior import build_quotient_algebra
from jumploci.scalars import GaussianRational
from jumploci.verify import SIXPLANES_FORMS

I = GaussianRational(0, 1)


def three_points():
    return os_algebra(points_arrangement([0, 1, 2]))


def concurrent3():
    return os_algebra(Arrangement(2, [[1, 0], [0, 1], [1, 1]]))


def six_planes():
    return os_algebra(Arrangement(4, SIXPLANES_FORMS, central=True))


def test_zero_class_gives_zero_matrices():
    A = three_points()
    cx = aomoto_complex(A, [0, 0, 0])
    assert all(m.is_zero() for m in cx.matrices)
    assert cohomology_dims(cx) == (1, 3)


def test_three_point_cohomology():
    A = three_points()
    assert cohomology_dims(aomoto_complex(A, [1, 1, 1])) == (0, 2)


def test_concurrent_triple_point_resonance():
    # weights summing to zero at the triple point: h^1 jumps to 1, and with
    # chi = 0 the top degree matches it
    A = concurrent3()
    cx = aomoto_complex(A, [1, 1, -2])
    assert cohomology_dims(cx) == (0, 1, 1)
    assert cx.matrices[1].mul(cx.matrices[0]).is_zero()
    assert cx.euler_matches()
    assert cohomology_dims(aomoto_complex(A, [1, 1, 1])) == (0, 0, 0)


def test_wrong_alpha_length():
    with pytest.raises(PreconditionError, match="coordinates"):
        aomoto_complex(three_points(), [1, 1])


def test_jump_component_membership():
    A = six_planes()
    # the two degree-2 jump components are cut out by the circuits
    # {0,1,2,4} (x, y, z, x+y+z) and {1,2,3,5} (y, z, w, y-z+w): weights
    # supported on the circuit and summing to zero there
    for alpha in ([1, 0, 0, 0, -1, 0], [0, 1, 0, 0, 0, -1],
                  [1, 1, 1, 0, -3, 0], [0, 1, 2, -1, 0, -2]):
        rep = resonance_membership(A, [Fraction(c) for c in alpha], 2)
        assert rep.member and rep.dims == (0, 0, 1, 4, 3)
        assert rep.euler_ok


def test_degree_two_jump_needs_a_circuit_support():
    # weights straddling the two circuits, or breaking the zero-sum
    # condition on one, drop back to the generic h^2 = 0
    A = six_planes()
    off_component = [[1, 0, 0, 0, 0, -1],   # supported on {0,5}: in neither
                     [0, 0, 0, 1, -1, 0],   # supported on {3,4}: in neither
                     [1, 0, 0, 0, -2, 0]]   # circuit support, sum != 0
    for alpha in off_component:
        rep = resonance_membership(A, [Fraction(c) for c in alpha], 2)
        assert not rep.member and rep.dims[2] == 0


def test_resonance_degree_bounds():
    A = three_points()
    with pytest.raises(PreconditionError):
        resonance_membership(A, [1, 1, 1], 5)
    with pytest.raises(PreconditionError):
        resonance_membership(A, [1, 1, 1], 1, depth=0)


def test_generic_dims_full_space():
    rep = generic_dims_sample(three_points(), trials=50, seed=1)
    assert rep.dims[1] == 2
    assert not rep.flagged


def test_generic_dims_on_subspace():
    # the weight-sum-zero plane of the concurrent triple point
    rep = generic_dims_sample(
        concurrent3(), subspace=[[1, 0, -1], [0, 1, -1]], trials=40, seed=1)
    assert rep.dims[1] == 1


def test_generic_dims_zero_subspace():
    with pytest.raises(PreconditionError, match="zero subspace"):
        generic_dims_sample(concurrent3(), subspace=[[0, 0, 0]], trials=5)


def test_semicontinuity_at_special_point():
    rep = generic_dims_sample(six_planes(), trials=30, seed=3)
    special = resonance_membership(
        six_planes(), [Fraction(c) for c in [1, 0, 0, 0, -1, 0]], 2)
    assert special.dims[2] >= rep.dims[2]
    assert rep.dims[2] == 0


def test_isotropic_single_vector():
    A = concurrent3()
    rep = isotropic_check(A, [[1, -1, 0]])
    assert rep.isotropic and rep.witness is None


def test_isotropic_tangent_pair():
    m = elliptic_model(3)
    (x1, y1), (x2, y2) = tangent_pair_basis(3, 0, 1)
    basis = [m.class_coords(x1, y1), m.class_coords(x2, y2)]
    assert isotropic_check(m.algebra, basis).isotropic


def test_non_isotropic_pair_names_witness():
    m = elliptic_model(2)
    a1 = m.class_coords([1, 0], [0, 0])
    b1 = m.class_coords([0, 0], [1, 0])
    rep = isotropic_check(m.algebra, [a1, b1])
    assert not rep.isotropic
    assert rep.witness[:2] == (0, 1)
    assert any(rep.witness[2])


def test_log_resonance_weight_two_case():
    # every OS generator has type (1,1), so F^1 is all of A^1 and the
    # logarithmic locus coincides with the usual one
    rep = log_resonance_membership(concurrent3(), [1, 1, -2])
    assert rep.member and rep.h1 == 1 and rep.filtration_dim == 3
    rep = log_resonance_membership(concurrent3(), [1, 1, 1])
    assert not rep.member and rep.h1 == 0


def test_log_resonance_elliptic_is_empty():
    m = elliptic_model(3)
    x = [GaussianRational(1), GaussianRational(-1), GaussianRational(0)]
    alpha = m.class_coords(x, [I * c for c in x])
    rep = log_resonance_membership(m.algebra, alpha)
    assert not rep.member and rep.h1 == 0 and rep.filtration_dim == 3


def test_log_resonance_zero_class_flagged():
    rep = log_resonance_membership(concurrent3(), [0, 0, 0])
    assert not rep.member and rep.zero_class and rep.h1 is None


def test_log_resonance_outside_filtration():
    m = elliptic_model(2)
    alpha = m.class_coords([1, 0], [0, 0])  # a_1 mixes (1,0) and (0,1)
    with pytest.raises(PreconditionError, match="F\\^1"):
        log_resonance_membership(m.algebra, alpha)


def test_euler_is_alpha_independent():
    A = concurrent3()
    seen = set()
    for alpha in ([1, 1, -2], [1, 1, 1], [0, 0, 0], [5, -3, 2]):
        h = cohomology_dims(aomoto_complex(A, alpha))
        seen.add(sum((-1) ** d * x for d, x in enumerate(h)))
    assert seen == {A.euler()}


def test_scaling_invariance():
    A = six_planes()
    base = cohomology_dims(aomoto_complex(
        A, [Fraction(c) for c in [1, 0, 0, 0, -1, 0]]))
    for c in (2, -1, Fraction(7, 3)):
        scaled = [Fraction(x) * c for x in [1, 0, 0, 0, -1, 0]]
        assert cohomology_dims(aomoto_complex(A, scaled)) == base


def test_composition_zero_across_fields():
    m = elliptic_model(3)
    x = [GaussianRational(1), GaussianRational(2), GaussianRational(-3)]
    alpha = m.class_coords(x, [I * c for c in x])
    cx = AomotoComplex(m.algebra, alpha)
    assert cx.matrices[1].mul(cx.matrices[0]).is_zero()
