"""Exterior algebras on few generators and their graded quotients.

Subsets of generators are bitmasks, so a multivector is a sparse map from
bitmask to coefficient.  Quotient algebras store, per degree, the monomial
basis, a canonical quotient basis (the lexicographically smallest monomials
completing an echelon basis of the ideal), and the projection of every
monomial onto that basis.  Generators may carry Hodge types (p, q), in which
case monomials are bigraded and the filtration subspaces F^p are spanned by
monomial classes.
"""

from __future__ import annotations

from itertools import combinations

from .errors import PreconditionError
from .scalars import QQ, Matrix, rref


def _mask(indices):
    m = 0
    for i in indices:
        b = 1 << i
        if m & b:
            raise ValueError(f"repeated generator index {i}")
        m |= b
    return m


def _indices(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _merge_sign(s, t):
    """Sign of e_S wedge e_T for disjoint bitmasks: parity of interleavings."""
    swaps = 0
    while t:
        b = t & -t
        swaps += (s >> b.bit_length()).bit_count()
        t ^= b
    return -1 if swaps & 1 else 1


class Multivector:
    """Sparse element of the exterior algebra on `ngens` generators.

    `terms` maps subset bitmask to a nonzero coefficient; the zero element
    has no terms.  Instances are treated as immutable.
    """

    __slots__ = ("ngens", "terms")

    def __init__(self, ngens, terms=()):
        if not 0 <= ngens <= 64:
            raise PreconditionError("generator count must be between 0 and 64")
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mask, coeff in items:
            if mask < 0 or mask >> ngens:
                raise PreconditionError(
                    f"subset mask {mask} out of range for {ngens} generators")
            if coeff:
                clean[mask] = clean.get(mask, 0) + coeff
                if not clean[mask]:
                    del clean[mask]
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zero(cls, ngens):
        return cls(ngens)

    @classmethod
    def generator(cls, ngens, i, coeff=1):
        return cls(ngens, [(1 << i, coeff)])

    @classmethod
    def monomial(cls, ngens, indices, coeff=1):
        return cls(ngens, [(_mask(indices), coeff)])

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({m.bit_count() for m in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise PreconditionError("multivector is not homogeneous")
        return degs[0]

    def coefficient(self, indices):
        return self.terms.get(_mask(indices), 0)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.ngens == other.ngens and self.terms == other.terms

    def __hash__(self):
        return hash((self.ngens, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.ngens != other.ngens:
            raise PreconditionError("generator count mismatch")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.ngens, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, coeff):
        return Multivector(
            self.ngens, [(m, coeff * c) for m, c in self.terms.items()])

    def __repr__(self):
        if not self.terms:
            return f"Multivector({self.ngens}, 0)"
        bits = " + ".join(
            f"({c})e{list(_indices(m))}" for m, c in sorted(self.terms.items()))
        return f"Multivector({self.ngens}, {bits})"


def wedge(u, v):
    """Exterior product, with the interleaving-parity sign convention."""
    if u.ngens != v.ngens:
        raise PreconditionError("generator count mismatch")
    out = {}
    for s, a in u.terms.items():
        for t, b in v.terms.items():
            if s & t:
                continue
            m = s | t
            c = a * b * _merge_sign(s, t)
            if m in out:
                out[m] = out[m] + c
            else:
                out[m] = c
    return Multivector(u.ngens, out)


def _mono_type(mask, hodge_types):
    p = q = 0
    for i in _indices(mask):
        tp, tq = hodge_types[i]
        p += tp
        q += tq
    return p, q


class GradedAlgebra:
    """Quotient of an exterior algebra by a homogeneous ideal, per degree.

    Built by `build_quotient_algebra`.  For each degree d up to `top` it
    holds the monomial list (lex order), the quotient basis (non-pivot
    monomials of the ideal's reduced echelon form), and projections of all
    monomials.  All data is exact over `field`.
    """

    def __init__(self, ngens, field, top, ideal_gens, hodge_types,
                 monomials, basis, proj):
        self.ngens = ngens
        self.field = field
        self.top = top
        self.ideal_gens = tuple(ideal_gens)
        self.hodge_types = hodge_types
        self.monomials = monomials
        self.mono_index = [
            {m: k for k, m in enumerate(ms)} for ms in monomials]
        self.basis = basis
        self.proj = proj
        self._gen_mult = {}

    def dim(self, d):
        if d < 0 or d > self.top:
            return 0
        return len(self.basis[d])

    def dims(self):
        return tuple(self.dim(d) for d in range(self.top + 1))

    def euler(self):
        return sum((-1) ** d * self.dim(d) for d in range(self.top + 1))

    def zero_coords(self, d):
        return [self.field.zero()] * self.dim(d)

    def project(self, mv, d=None):
        """Coordinates of a multivector's class in the degree-d basis."""
        if d is None:
            d = mv.degree() if mv.terms else 0
        if mv.terms and mv.degree() != d:
            raise PreconditionError("degree mismatch in projection")
        out = self.zero_coords(d)
        index = self.mono_index[d]
        proj = self.proj[d]
        for mask, c in mv.terms.items():
            c = self.field.coerce(c)
            for j, pc in proj[index[mask]]:
                out[j] = out[j] + c * pc
        return out

    def lift(self, coords, d):
        """The canonical representative: sum of quotient-basis monomials."""
        return Multivector(
            self.ngens,
            [(m, c) for m, c in zip(self.basis[d], coords)])

    def multiply(self, u, v):
        """Product of two multivector representatives, projected."""
        deg = (u.degree() if u.terms else 0) + (v.degree() if v.terms else 0)
        if deg > self.top:
            return []
        w = wedge(u, v)
        if w.is_zero():
            return self.zero_coords(deg)
        return self.project(w, deg)

    def generator_matrix(self, i, d):
        """Matrix of (e_i wedge .): A^d -> A^{d+1} in quotient coordinates,
        stored as columns."""
        key = (i, d)
        if key not in self._gen_mult:
            bit = 1 << i
            cols = []
            tgt_dim = self.dim(d + 1)
            index = self.mono_index[d + 1]
            proj = self.proj[d + 1]
            zero = self.field.zero()
            for m in self.basis[d]:
                if m & bit:
                    cols.append([zero] * tgt_dim)
                    continue
                sign = _merge_sign(bit, m)
                col = [zero] * tgt_dim
                for j, pc in proj[index[bit | m]]:
                    col[j] = pc if sign == 1 else -pc
                cols.append(col)
            self._gen_mult[key] = cols
        return self._gen_mult[key]

    def class_mult_matrix(self, alpha, d):
        """Matrix of (alpha wedge .): A^d -> A^{d+1}, alpha in A^1 coords.

        Returns a Matrix acting on coordinate columns (rows = target dim).
        """
        if d >= self.top:
            return Matrix([], field=self.field, ncols=self.dim(d))
        nsrc, ntgt = self.dim(d), self.dim(d + 1)
        zero = self.field.zero()
        rows = [[zero] * nsrc for _ in range(ntgt)]
        for i, a in enumerate(alpha):
            a = self.field.coerce(a)
            if not a:
                continue
            cols = self.generator_matrix(i, d)
            for j in range(nsrc):
                col = cols[j]
                for r in range(ntgt):
                    c = col[r]
                    if c:
                        rows[r][j] = rows[r][j] + a * c
        return Matrix(rows, field=self.field, ncols=nsrc)

    def monomial_hodge_type(self, mask):
        if self.hodge_types is None:
            raise PreconditionError("algebra carries no Hodge types")
        return _mono_type(mask, self.hodge_types)

    def hodge_monomials(self, p, d):
        """Degree-d monomials whose first Hodge index sums to at least p."""
        return [m for m in self.monomials[d]
                if _mono_type(m, self.hodge_types)[0] >= p]

    def hodge_subspace(self, p, d):
        """Echelon basis (coordinate rows) of F^p A^d = span of the classes
        of monomials with first-index sum >= p."""
        if self.hodge_types is None:
            raise PreconditionError("algebra carries no Hodge types")
        if d < 0 or d > self.top:
            return []
        rows = []
        for m in self.hodge_monomials(p, d):
            coords = self.project(Multivector(self.ngens, [(m, 1)]), d)
            if any(coords):
                rows.append(coords)
        if not rows:
            return []
        _, _, out = rref(rows, self.field)
        return out


def hodge_filtration_subspace(algebra, p, d):
    """Basis of the Hodge filtration subspace F^p in degree d."""
    return algebra.hodge_subspace(p, d)


def build_quotient_algebra(ngens, ideal_gens, top, field=QQ, hodge_types=None):
    """Quotient of the exterior algebra on `ngens` generators by the ideal
    generated by `ideal_gens`, with bases and projections through degree `top`.

    Ideal generators must be homogeneous of degree >= 2; with Hodge types
    present they must also be pure (all monomials of equal total type).
    The quotient basis in each degree is canonical: monomials are ordered
    lexicographically and the non-pivot ones survive.
    """
    if top < 0:
        raise PreconditionError("top degree must be nonnegative")
    if top > ngens:
        top = ngens
    gens = []
    for k, g in enumerate(ideal_gens):
        if not isinstance(g, Multivector) or g.ngens != ngens:
            raise PreconditionError(
                f"ideal generator {k} is not a multivector on {ngens} generators")
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise PreconditionError(f"ideal generator {k} is not homogeneous")
        if g.degree() < 2:
            raise PreconditionError(
                f"ideal generator {k} has degree {g.degree()}; degree-one "
                "relations would change the generator space")
        gens.append(g)
    if hodge_types is not None:
        hodge_types = tuple(tuple(t) for t in hodge_types)
        if len(hodge_types) != ngens:
            raise PreconditionError("one Hodge type per generator required")
        for k, g in enumerate(gens):
            types = {_mono_type(m, hodge_types) for m in g.terms}
            if len(types) > 1:
                raise PreconditionError(
                    f"ideal generator {k} mixes Hodge types {sorted(types)}")

    monomials = []
    basis = []
    proj = []
    for d in range(top + 1):
        monos = [_mask(c) for c in combinations(range(ngens), d)]
        index = {m: k for k, m in enumerate(monos)}
        nm = len(monos)
        rows = []
        for g in gens:
            e = g.degree()
            if e > d:
                continue
            for c in combinations(range(ngens), d - e):
                w = wedge(g, Multivector.monomial(ngens, c))
                if w.is_zero():
                    continue
                row = [field.zero()] * nm
                for mask, coeff in w.terms.items():
                    row[index[mask]] = field.coerce(coeff)
                rows.append(row)
        if rows:
            _, pivots, rrows = rref(rows, field)
        else:
            pivots, rrows = (), []
        pivot_set = set(pivots)
        keep = [k for k in range(nm) if k not in pivot_set]
        keep_pos = {k: j for j, k in enumerate(keep)}
        # projection of each monomial, stored sparsely as (basis pos, coeff)
        cols = []
        pivot_row = {p: i for i, p in enumerate(pivots)}
        for k in range(nm):
            if k in pivot_set:
                row = rrows[pivot_row[k]]
                cols.append(tuple(
                    (keep_pos[j], -row[j]) for j in keep if row[j]))
            else:
                cols.append(((keep_pos[k], field.one()),))
        monomials.append(monos)
        basis.append([monos[k] for k in keep])
        proj.append(cols)
    return GradedAlgebra(ngens, field, top, gens, hodge_types,
                         monomials, basis, proj)
