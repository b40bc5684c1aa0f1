"""Configuration spaces of n points on an elliptic curve: the degree-two
truncated cohomology model, the scroll (determinantal) resonance variety,
Hodge decomposition of degree-one classes, and the filtered E2 page of the
twisted complex.

The curve's period is fixed at the Gaussian unit i, so everything runs
exactly over Q(i).  Degree-one classes are written either in (x, y)
coordinates (x_k dual to a_k, y_k dual to b_k) or in the pure-basis
coordinates used internally: u_k = a_k + i b_k of type (1,0) and
v_k = a_k - i b_k of type (0,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .aomoto import AomotoComplex
from .errors import PreconditionError
from .exterior import Multivector, build_quotient_algebra, wedge
from .scalars import QI, GaussianRational, Matrix, rank_and_kernel, rref, solve_linear

_I = GaussianRational(0, 1)
_HALF = GaussianRational(Fraction(1, 2))
_MODELS = {}


def _curve_duals():
    """Poincare-dual basis of H*(genus-1 curve) = exterior algebra on a, b.

    Monomials are indexed by 2-bit masks (bit 0 = a, bit 1 = b).  Returns
    the list of (mask, degree, dual) with dual a list of (mask, coeff) whose
    wedge against the basis element hits the top class with coefficient 1.
    """
    masks = [0b00, 0b01, 0b10, 0b11]
    # gram[l][j] = coefficient of ab in monomial_l wedge monomial_j
    gram = []
    for l in masks:
        row = []
        for j in masks:
            w = wedge(Multivector(2, [(l, 1)]), Multivector(2, [(j, 1)]))
            row.append(w.terms.get(0b11, 0))
        gram.append(row)
    duals = []
    for m in masks:
        e = [Fraction(1) if l == m else Fraction(0) for l in masks]
        c = solve_linear(Matrix(gram), e)
        duals.append((m, bin(m).count("1"),
                      [(masks[j], c[j]) for j in range(4) if c[j]]))
    return duals


def _embed_factor(n, k, mask):
    """Image of a curve monomial (mask over a, b) in the n-point model's
    ambient exterior algebra, written in the u, v generators of factor k."""
    ng = 2 * n
    u = Multivector.generator(ng, 2 * k)
    v = Multivector.generator(ng, 2 * k + 1)
    a = (u + v).scale(_HALF)
    b = (u - v).scale(-_I * _HALF)
    if mask == 0b00:
        return Multivector(ng, [(0, GaussianRational(1))])
    if mask == 0b01:
        return a
    if mask == 0b10:
        return b
    return wedge(a, b)


def diagonal_class(n, k, l):
    """The class of the (k,l) diagonal in degree 2, via the Kunneth
    dual-basis formula sum_m (-1)^{deg m} m_k wedge (dual m)_l."""
    total = Multivector.zero(2 * n)
    for mask, deg, dual in _curve_duals():
        left = _embed_factor(n, k, mask)
        for dmask, coeff in dual:
            right = _embed_factor(n, l, dmask)
            term = wedge(left, right).scale(
                GaussianRational(coeff if deg % 2 == 0 else -coeff))
            total = total + term
    return total


class EllipticModel:
    """Truncated cohomology algebra of the configuration space of n points
    on an elliptic curve: exterior algebra on a_1, b_1, ..., a_n, b_n modulo
    the span of the diagonal classes, with its Hodge bigrading."""

    def __init__(self, n, top=2):
        if not 2 <= n <= 32:
            raise PreconditionError(
                f"n = {n} out of range: need 2 <= n <= 32 "
                "(n = 1 has no diagonals and degenerates to the curve)")
        self.n = n
        pairs = [(k, l) for k in range(n) for l in range(k + 1, n)]
        self.diagonal_pairs = pairs
        self.diagonals = {p: diagonal_class(n, *p) for p in pairs}
        types = []
        for _ in range(n):
            types.extend([(1, 0), (0, 1)])
        self.algebra = build_quotient_algebra(
            2 * n, list(self.diagonals.values()), top,
            field=QI, hodge_types=types)

    @property
    def top(self):
        return self.algebra.top

    def class_coords(self, x, y):
        """A1 coordinates (u, v basis) of sum x_k a_k + y_k b_k."""
        x, y = self._pair(x, y)
        coords = []
        for k in range(self.n):
            coords.append((x[k] - _I * y[k]) * _HALF)
            coords.append((x[k] + _I * y[k]) * _HALF)
        return tuple(coords)

    def xy_of_coords(self, coords):
        """Inverse of class_coords."""
        if len(coords) != 2 * self.n:
            raise PreconditionError(
                f"expected {2 * self.n} coordinates, got {len(coords)}")
        coords = [QI.coerce(c) for c in coords]
        x, y = [], []
        for k in range(self.n):
            cu, cv = coords[2 * k], coords[2 * k + 1]
            x.append(cu + cv)
            y.append(_I * (cu - cv))
        return tuple(x), tuple(y)

    def _pair(self, x, y):
        if len(x) != self.n or len(y) != self.n:
            raise PreconditionError(
                f"coordinate vectors must have length {self.n}")
        return ([QI.coerce(c) for c in x], [QI.coerce(c) for c in y])


def elliptic_model(n, top=2):
    key = (n, top)
    if key not in _MODELS:
        _MODELS[key] = EllipticModel(n, top)
    return _MODELS[key]


@dataclass(frozen=True)
class ScrollVerdict:
    member: bool
    reason: str | None  # failing equation on rejection


def scroll_membership(n, x, y):
    """Is (x, y) on the scroll: sum x = sum y = 0 and rank [x; y] <= 1?

    The failing equation is reported on rejection (1-based indices)."""
    if len(x) != n or len(y) != n:
        raise PreconditionError(f"vectors must have length {n}")
    x = [QI.coerce(c) for c in x]
    y = [QI.coerce(c) for c in y]
    sx = sum(x, QI.zero())
    if sx:
        return ScrollVerdict(False, f"sum of x coordinates is {sx}, not 0")
    sy = sum(y, QI.zero())
    if sy:
        return ScrollVerdict(False, f"sum of y coordinates is {sy}, not 0")
    for i in range(n):
        for j in range(i + 1, n):
            m = x[i] * y[j] - x[j] * y[i]
            if m:
                return ScrollVerdict(
                    False,
                    f"minor x_{i+1} y_{j+1} - x_{j+1} y_{i+1} = {m}")
    return ScrollVerdict(True, None)


@dataclass(frozen=True)
class HodgeSplit:
    pure10: tuple  # (x, y) with y = i x
    pure01: tuple  # (x, y) with y = -i x
    pure11: tuple  # zero here: weight-1 part is everything in this model


def hodge_decompose(model, x, y):
    """Split a degree-one class (x, y) into pure pieces: alpha^{1,0} =
    (u, iu), alpha^{0,1} = (v, -iv), from x = u + v, y = iu - iv."""
    x, y = model._pair(x, y)
    u = [(x[k] - _I * y[k]) * _HALF for k in range(model.n)]
    v = [(x[k] + _I * y[k]) * _HALF for k in range(model.n)]
    split = HodgeSplit(
        (tuple(u), tuple(_I * c for c in u)),
        (tuple(v), tuple(-_I * c for c in v)),
        (tuple(QI.zero() for _ in u), tuple(QI.zero() for _ in u)))
    for k in range(model.n):
        assert split.pure10[0][k] + split.pure01[0][k] == x[k]
        assert split.pure10[1][k] + split.pure01[1][k] == y[k]
    return split


def tangent_pair_basis(n, i, j):
    """(x, y) coordinate pairs spanning E_ij = span{a_i - a_j, b_i - b_j},
    the tangent space attached to the (i, j) pairing map."""
    if not (0 <= i < n and 0 <= j < n and i != j):
        raise PreconditionError("need distinct indices below n")
    e = [Fraction(0)] * n
    e[i], e[j] = Fraction(1), Fraction(-1)
    zero = [Fraction(0)] * n
    return ((tuple(e), tuple(zero)), (tuple(zero), tuple(e)))


@dataclass(frozen=True)
class E2Report:
    n: int
    entries: dict  # (p, q) -> dim of the E2 term, p + q <= 2
    h: tuple       # dims of H^0, H^1, H^2 of the full complex
    consistent: bool


def _row_space(rows, ncols):
    if not rows:
        return []
    _, _, reduced = rref(rows, QI)
    return [r for r in reduced if any(r)]


def _intersection_dim(basis_a, basis_b):
    if not basis_a or not basis_b:
        return 0
    ra = len(basis_a)
    rb = len(basis_b)
    rank_union, _, _ = rref(list(basis_a) + list(basis_b), QI)
    return ra + rb - rank_union


def e2_page(model, x, y):
    """Dims of the E2 terms Gr_F^p H_{p+q} for p + q <= 2 of the complex
    (A*, alpha wedge) at a nonzero alpha = (x, ix) in F^1.

    The induced filtration on H_m is (K_m intersect F^p) / (I_m intersect
    F^p) with K the cocycles and I the coboundaries; the graded dims of one
    H_m always sum to dim H_m, and that consistency is rechecked.
    """
    x, y = model._pair(x, y)
    if not any(x) and not any(y):
        raise PreconditionError("alpha = 0 has no E2 page here")
    for k in range(model.n):
        if y[k] != _I * x[k]:
            raise PreconditionError(
                "alpha lies outside filtration level F^1 (need y = i x)")
    deep = elliptic_model(model.n, top=3)
    coords = deep.class_coords(x, y)
    cx = AomotoComplex(deep.algebra, coords)
    h = cx.cohomology_dims()[:3]
    entries = {}
    for m in range(3):
        rk, kernel = rank_and_kernel(cx.matrices[m])
        cocycles = _row_space(kernel, deep.algebra.dim(m))
        if m == 0:
            bounds = []
        else:
            prev = cx.matrices[m - 1]
            bounds = _row_space([list(prev.col(j)) for j in range(prev.ncols)],
                                deep.algebra.dim(m))
        fdims = []
        for p in range(m + 2):
            fp = deep.algebra.hodge_subspace(p, m)
            fdims.append(_intersection_dim(cocycles, fp)
                         - _intersection_dim(bounds, fp))
        for p in range(m + 1):
            entries[(p, m - p)] = fdims[p] - fdims[p + 1]
    consistent = all(
        sum(entries[(p, m - p)] for p in range(m + 1)) == h[m]
        for m in range(3))
    return E2Report(model.n, entries, h, consistent)
