"""Critical points of master functions and the logarithmic Hopf index
bookkeeping.

Univariate: for punctured lines M = C minus {c_1..c_d}, the form
alpha = sum lambda_j dz/(z - c_j) has numerator N(z) = sum_j lambda_j
prod_{k != j} (z - c_k); its zeros on P^1 are tracked against the log
divisor D = {c_j} and the point at infinity, where the order is measured
against the local generator dw/w of Omega^1(log D).  The total zero degree
is |D| - 2 for every nonzero weight vector.

Bivariate: critical points of line-arrangement master functions are counted
by a sheared Sylvester resultant with the arrangement's multiple points
divided out.  Genericity of the weights is certified, never assumed: the
count must be reproduced by a second shear and by a perturbed weight
vector, and the genuine eliminant must be square-free; otherwise a
DegeneracyError is raised instead of a wrong count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .arrangement import Arrangement, poincare_and_euler
from .errors import DegeneracyError, PreconditionError
from .scalars import Matrix, rank_and_kernel

_X, _Y, _W = sp.symbols("jl_x jl_y jl_w")


def _frac(r):
    r = sp.Rational(r)
    return Fraction(int(r.p), int(r.q))


def _rational_weights(lam, d):
    if len(lam) != d:
        raise PreconditionError(
            f"got {len(lam)} weights for {d} hyperplanes")
    out = []
    for j, l in enumerate(lam):
        if isinstance(l, bool) or not isinstance(l, (int, Fraction)):
            raise PreconditionError(f"weight {j} must be rational, got {l!r}")
        out.append(Fraction(l))
    return out


@dataclass(frozen=True)
class Zero:
    """One zero of the form: an exact rational location when available,
    otherwise an isolating interval or box plus the minimal polynomial."""
    kind: str               # "interior" | "puncture" | "infinity"
    multiplicity: int
    value: object = None    # Fraction, or (Fraction, Fraction) in dim 2
    interval: tuple = None  # (lo, hi) real, or ((re_lo, re_hi), (im_lo, im_hi))
    minpoly: tuple = None   # integer coefficients, highest degree first


@dataclass(frozen=True)
class DivisorReport:
    zeros: tuple
    total: int
    chi: int
    chi_matches: bool
    divisor_size: int = None
    notes: tuple = ()


def numerator_polynomial(points, lam):
    """N(z) = sum_j lambda_j prod_{k != j} (z - c_k), exact over Q."""
    points = [Fraction(c) for c in points]
    if len(set(points)) != len(points):
        raise PreconditionError("puncture points must be distinct")
    lam = _rational_weights(lam, len(points))
    if not any(lam):
        raise PreconditionError("all-zero weight vector: the form vanishes")
    expr = sp.Integer(0)
    for j, l in enumerate(lam):
        term = sp.Rational(l)
        for k, c in enumerate(points):
            if k != j:
                term *= _X - sp.Rational(c)
        expr += term
    return sp.Poly(expr, _X, domain="QQ")


def _ord_at(poly, root):
    lin = sp.Poly(_X - sp.Rational(root), _X, domain="QQ")
    n = 0
    while poly.degree() >= 1:
        q, r = poly.div(lin)
        if not r.is_zero:
            break
        poly, n = q, n + 1
    return n


def _zeros_of_poly(poly, kind):
    """Zero entries for all roots of a nonzero univariate rational Poly,
    exact for rational roots, isolating data otherwise."""
    out = []
    _, factors = poly.factor_list()
    for f, mult in sorted(factors, key=lambda t: (t[0].degree(), t[0].all_coeffs())):
        coeffs = [int(c) for c in f.all_coeffs()]
        if f.degree() == 1:
            a, b = coeffs
            out.append(Zero(kind, mult, value=Fraction(-b, a)))
            continue
        real, complexes = f.intervals(all=True)
        for (lo, hi), _m in real:
            out.append(Zero(kind, mult, interval=(_frac(lo), _frac(hi)),
                            minpoly=tuple(coeffs)))
        for (a, b), _m in complexes:
            ar, ai = a.as_real_imag()
            br, bi = b.as_real_imag()
            out.append(Zero(kind, mult,
                            interval=((_frac(ar), _frac(br)),
                                      (_frac(ai), _frac(bi))),
                            minpoly=tuple(coeffs)))
    return out


def critical_points_univariate(points, lam):
    """Zeros of alpha inside M = C minus the punctures, with multiplicity.

    chi_matches reports whether the interior count alone already reaches
    |chi(M)| = d - 1; weights with boundary zeros (e.g. sum lambda = 0)
    make it False and the balance moves to log_zero_divisor_p1.
    """
    n = numerator_polynomial(points, lam)
    points = [Fraction(c) for c in points]
    interior = n
    for c in points:
        for _ in range(_ord_at(n, c)):
            interior, _r = interior.div(
                sp.Poly(_X - sp.Rational(c), _X, domain="QQ"))
    zeros = _zeros_of_poly(interior, "interior") if interior.degree() > 0 else []
    total = sum(z.multiplicity for z in zeros)
    chi = 1 - len(points)
    return DivisorReport(tuple(zeros), total, chi, total == abs(chi))


def _infinity_valuation(points, lam):
    """Order of alpha at infinity against dw/w: the trailing valuation of
    N~(w) = sum_j lambda_j prod_{k != j} (1 - c_k w)."""
    expr = sp.Integer(0)
    for j, l in enumerate(lam):
        term = sp.Rational(l)
        for k, c in enumerate(points):
            if k != j:
                term *= 1 - sp.Rational(c) * _W
        expr += term
    tilde = sp.Poly(expr, _W, domain="QQ")
    if tilde.is_zero:
        raise PreconditionError("form is identically zero")
    return min(sum(m) for m in tilde.as_dict()), tilde


def log_zero_divisor_p1(points, lam):
    """Full zero divisor of alpha as a section of Omega^1_{P^1}(log D),
    D = {c_1..c_d, infinity}: interior zeros plus boundary orders at each
    puncture (against dz/(z-c_j)) and at infinity (against dw/w).

    The total is |D| - 2 = d - 1 for every nonzero weight vector; the
    infinity entry notes when the residue there (-sum lambda) vanishes.
    """
    n = numerator_polynomial(points, lam)
    points = [Fraction(c) for c in points]
    lam = _rational_weights(lam, len(points))
    zeros = []
    interior = n
    for c in points:
        m = _ord_at(n, c)
        if m:
            zeros.append(Zero("puncture", m, value=c))
            for _ in range(m):
                interior, _r = interior.div(
                    sp.Poly(_X - sp.Rational(c), _X, domain="QQ"))
    vinf, _tilde = _infinity_valuation(points, lam)
    if vinf:
        zeros.append(Zero("infinity", vinf))
    if interior.degree() > 0:
        zeros.extend(_zeros_of_poly(interior, "interior"))
    total = sum(z.multiplicity for z in zeros)
    d = len(points)
    if total != d - 1:
        raise AssertionError(
            f"zero degree {total} != |D| - 2 = {d - 1}: bookkeeping broken")
    notes = ()
    if sum(lam) == 0:
        notes = ("residue at infinity is 0: infinity stays in D as part of "
                 "the boundary of M, with the order measured against dw/w",)
    chi = 1 - d
    return DivisorReport(tuple(zeros), total, chi, total == abs(chi),
                         divisor_size=d + 1, notes=notes)


@dataclass(frozen=True)
class LocalKoszul:
    zero: Zero
    h0: int
    h1: int


def local_koszul_univariate(points, lam):
    """Local Koszul cohomology at every zero of the log divisor: the complex
    0 -> O -> O -> 0 given by multiplication by the local multiplier a of
    alpha.  H^0 = 0 iff a is a nonzero germ; dim H^1 = dim O/(a) = ord(a),
    recomputed here by exact division rather than read off the divisor."""
    report = log_zero_divisor_p1(points, lam)
    n = numerator_polynomial(points, lam)
    out = []
    for z in report.zeros:
        if z.kind == "infinity":
            _v, tilde = _infinity_valuation(
                [Fraction(c) for c in points], _rational_weights(lam, len(points)))
            h1 = 0
            while not tilde.is_zero and min(sum(m) for m in tilde.as_dict()) > 0:
                tilde = sp.Poly(tilde.as_expr() / _W, _W, domain="QQ")
                h1 += 1
        elif z.value is not None:
            h1 = _ord_at(n, z.value)
        else:
            # conjugate orbit: the minimal polynomial is square-free, so the
            # order at each of its roots is the exponent of the factor in N
            f = sp.Poly(list(z.minpoly), _X, domain="QQ")
            if not sp.gcd(f, f.diff(_X)).is_one:
                raise AssertionError("irreducible factor not square-free")
            h1 = 0
            rem = n
            while True:
                q, r = rem.div(f)
                if not r.is_zero:
                    break
                rem, h1 = q, h1 + 1
        if n.is_zero:
            raise AssertionError("zero multiplier germ")
        out.append(LocalKoszul(z, 0, h1))
    return tuple(out)


def _master_components(arr, lam):
    """Cleared numerators (P, Q) of the two components of alpha_lambda for a
    line arrangement: P = sum_j lambda_j (df_j/dx) prod_{k != j} f_k."""
    fs = []
    for f in arr.forms:
        c0, c1, c2 = (sp.Rational(c) for c in f)
        fs.append(c0 + c1 * _X + c2 * _Y)
    p = q = sp.Integer(0)
    for j, f in enumerate(arr.forms):
        others = sp.Integer(1)
        for k, g in enumerate(fs):
            if k != j:
                others *= g
        p += sp.Rational(lam[j]) * sp.Rational(f[1]) * others
        q += sp.Rational(lam[j]) * sp.Rational(f[2]) * others
    return sp.expand(p), sp.expand(q), fs


def _multiple_points(arr):
    """All pairwise intersection points of the lines, as exact pairs."""
    pts = set()
    for i in range(arr.size):
        for j in range(i + 1, arr.size):
            p = arr.common_point((i, j))
            if p is not None:
                pts.add(tuple(p))
    return sorted(pts)


_SHEARS = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8]


def _eliminant(p, q, spurious, t):
    """Genuine eliminant at shear x -> x + t y, or None if this shear is
    unusable (non-constant leading y-coefficients).  Returns (G, resultant)."""
    pt = sp.expand(p.subs({_X: _X + t * _Y}))
    qt = sp.expand(q.subs({_X: _X + t * _Y}))
    for h in (pt, qt):
        lc = sp.Poly(h, _Y).LC()
        if sp.Poly(lc, _X).degree() > 0:
            return None
    res = sp.Poly(sp.resultant(pt, qt, _Y), _X, domain="QQ")
    if res.is_zero:
        raise DegeneracyError(
            "resultant vanishes identically: the critical set is not isolated "
            "for these weights")
    g = res
    for (px, py) in spurious:
        x0 = Fraction(px) - t * Fraction(py)
        for _ in range(_ord_at(g, x0)):
            g, _r = g.div(sp.Poly(_X - sp.Rational(x0), _X, domain="QQ"))
    return g, res, pt, qt


def _certified_count(p, q, spurious):
    """Scan the whole shear sequence and certify the critical count.

    Dividing out a multiple point's valuation can also swallow a genuine
    critical point that happens to share its sheared x-coordinate, so a
    single shear can only undercount; the true count is the maximum over
    collision-free shears.  It is accepted when at least two distinct
    shears attain it with square-free eliminants.
    """
    usable = []
    for t in _SHEARS:
        got = _eliminant(p, q, spurious, t)
        if got is None:
            continue
        g, _res, pt, qt = got
        deg = max(g.degree(), 0)
        if deg > 0 and not sp.gcd(g, g.diff(_X)).is_one:
            continue
        usable.append((deg, t, g, pt, qt))
    if not usable:
        raise DegeneracyError(
            "no shear yields a square-free genuine eliminant: repeated "
            "critical points for these weights")
    best = max(u[0] for u in usable)
    winners = [u for u in usable if u[0] == best]
    if len(winners) < 2:
        raise DegeneracyError(
            f"only shear {winners[0][1]} attains the maximal count {best}: "
            "cannot certify the count for these weights")
    return winners[0]


def critical_points_bivariate(arr, lam, seed=0):
    """Critical points of the master function of an essential affine line
    arrangement, counted with multiplicity by a sheared resultant.

    The weight vector is certified generic by three independent checks
    (square-free eliminant, agreement of a second shear, agreement after a
    seeded weight perturbation); any failure raises DegeneracyError.
    chi_matches compares the count with |chi(M)| from the face algebra.
    """
    if not isinstance(arr, Arrangement) or arr.ambient != 2:
        raise PreconditionError("need a line arrangement in C^2")
    if arr.rank() != 2:
        raise PreconditionError("arrangement must be essential (rank 2)")
    lam = _rational_weights(lam, arr.size)
    for j, l in enumerate(lam):
        if not l:
            raise DegeneracyError(
                f"weight lambda_{j} = 0 drops hyperplane {j} from the form; "
                "the puncture structure no longer matches the arrangement")
    _dims, chi = poincare_and_euler(arr)
    p, q, fs = _master_components(arr, lam)
    spurious = _multiple_points(arr)

    count, t1, g1, pt1, qt1 = _certified_count(p, q, spurious)
    rng = random.Random(seed)
    stable = False
    for _ in range(3):
        bumped = [l + Fraction(rng.randint(1, 9), 97) for l in lam]
        if not all(bumped):
            continue
        try:
            p2, q2, _ = _master_components(arr, bumped)
            bumped_count = _certified_count(p2, q2, spurious)[0]
        except DegeneracyError:
            continue
        if bumped_count != count:
            raise DegeneracyError(
                f"count {count} is not stable under weight perturbation "
                f"(got {bumped_count}): weights are degenerate")
        stable = True
        break
    if not stable:
        raise DegeneracyError(
            "could not reproduce the count with perturbed weights")

    zeros = []
    if g1.degree() > 0:
        _, factors = g1.factor_list()
        for f, mult in factors:
            if f.degree() == 1:
                a, b = (int(c) for c in f.all_coeffs())
                x0 = Fraction(-b, a)
                py = sp.gcd(sp.Poly(pt1.subs({_X: sp.Rational(x0)}), _Y),
                            sp.Poly(qt1.subs({_X: sp.Rational(x0)}), _Y))
                if py.degree() != 1:
                    raise DegeneracyError(
                        f"back-substitution at x = {x0} is not a single "
                        "simple point")
                ca, cb = (_frac(c) for c in py.all_coeffs())
                y0 = -cb / ca
                pt = (x0 + t1 * y0, y0)
                for fl in fs:
                    if sp.Rational(fl.subs({_X: sp.Rational(pt[0]),
                                            _Y: sp.Rational(pt[1])})) == 0:
                        raise AssertionError(
                            "recovered critical point lies on the arrangement")
                zeros.append(Zero("interior", mult, value=pt))
            else:
                zeros.extend(
                    z for z in _zeros_of_poly(sp.Poly(f, _X, domain="QQ"),
                                              "interior"))
    notes = (f"count {count} certified by two shears (reported from shear "
             f"{t1}) and by a perturbed weight vector",)
    return DivisorReport(tuple(zeros), count, chi, count == abs(chi),
                         notes=notes)


@dataclass(frozen=True)
class FlatResidue:
    lines: tuple          # indices of the lines through the point
    point: tuple          # a spanning vector of the rank-2 flat in C^3
    residue: Fraction


@dataclass(frozen=True)
class ResidueTable:
    lines: tuple           # (index, residue lambda_j)
    points: tuple          # FlatResidue for every multiple point (>= 3 lines)
    zero_components: tuple # boundary components with residue 0


def residues_line_arrangement(arr, lam):
    """Residues of alpha_lambda along every boundary component of the good
    compactification of a projective line arrangement: the lines themselves
    (residue lambda_j) and the exceptional divisors over points where three
    or more lines meet (residue = sum of the lambdas through the point).

    Input is the central arrangement in C^3; sum lambda = 0 is required for
    the form to descend to the projective complement.
    """
    if not isinstance(arr, Arrangement) or arr.ambient != 3 or not arr.central:
        raise PreconditionError(
            "need a central plane arrangement in C^3 (a projective line "
            "arrangement)")
    lam = _rational_weights(lam, arr.size)
    if sum(lam) != 0:
        raise PreconditionError(
            f"sum of weights is {sum(lam)}, not 0: the form does not descend "
            "to the projective complement")
    linear = arr.linear_parts()
    flats = {}
    for i in range(arr.size):
        for j in range(i + 1, arr.size):
            _rk, kern = rank_and_kernel(Matrix([linear[i], linear[j]]))
            if len(kern) != 1:
                continue
            v = kern[0]
            members = tuple(
                k for k in range(arr.size)
                if sum(c * w for c, w in zip(linear[k], v)) == 0)
            flats[members] = v
    points = []
    for members in sorted(flats):
        if len(members) < 3:
            continue
        points.append(FlatResidue(
            members, flats[members], sum(lam[k] for k in members)))
    zero = []
    for j, l in enumerate(lam):
        if not l:
            zero.append(("line", j))
    for fr in points:
        if not fr.residue:
            zero.append(("point", fr.lines))
    return ResidueTable(
        tuple((j, lam[j]) for j in range(arr.size)),
        tuple(points), tuple(zero))
