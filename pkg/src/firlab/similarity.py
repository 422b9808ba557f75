"""Similarity of skew polynomials, eigenrings and the kernels of x -> f*x mod Rp.

A module map R/Rf -> R/Rg is x + Rf -> x*u + Rg for some u with f*u in Rg
(deg u < deg g).  Those u form an F_p-space, computed by a nullspace.
"""
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import InfiniteFieldError, InvariantViolation, NotAnAtom
from .ore_poly import SkewPoly, is_atom, mul, rgcd, right_rem

# largest span that is_similar will walk after the basis vectors
DEFAULT_SPAN_CAP = 1 << 16


def _require_finite(*polys):
    for f in polys:
        if not f.field.is_finite:
            raise InfiniteFieldError(f"{f.field.descriptor()} is not enumerable")


@dataclass(frozen=True)
class HomSpace:
    source: SkewPoly
    target: SkewPoly
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def elements(self, limit=None):
        F = self.target.field
        d = self.target.degree
        vecs = np.array([linalg.poly_to_vec(u, d) for u in self.basis], dtype=np.int64)
        if not len(vecs):
            vecs = np.zeros((0, d * F.e), dtype=np.int64)
        for v in linalg.span(vecs, F.p, limit):
            yield linalg.vec_to_poly(F, v)


@lru_cache(maxsize=1 << 14)
def _hom_basis(f, g):
    F = g.field
    d = g.degree
    M = linalg.matrix_of(lambda u: right_rem(mul(f, u), g), F, d, d)
    N = linalg.nullspace(M, F.p)
    return tuple(linalg.vec_to_poly(F, v) for v in N)


def hom_space(f, g):
    """u (deg u < deg g) with f*u in Rg, as an F_p basis."""
    _require_finite(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("hom_space needs nonzero polynomials")
    return HomSpace(f, g, _hom_basis(f, g))


@dataclass(frozen=True)
class SimilarityResult:
    similar: bool
    witness: object = None

    def __bool__(self):
        return self.similar


def similarity_witness(f, g, span_cap=DEFAULT_SPAN_CAP):
    """SimilarityResult; witness u gives the isomorphism x + Rf -> x*u + Rg."""
    _require_finite(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("similarity of zero")
    if f.degree != g.degree:
        return SimilarityResult(False)
    if f.degree == 0:
        return SimilarityResult(True, SkewPoly.one(f.field))
    hs = hom_space(f, g)
    for u in hs.basis:
        if rgcd(g, u)[0].degree == 0:
            return SimilarityResult(True, u)
    for u in hs.elements(limit=span_cap):
        if not u.is_zero() and rgcd(g, u)[0].degree == 0:
            return SimilarityResult(True, u)
    return SimilarityResult(False)


def is_similar(f, g, span_cap=DEFAULT_SPAN_CAP):
    return similarity_witness(f, g, span_cap).similar


def similar_linear(field, a, a2):
    """Some c != 0 with a2*c = S(c)*a + D(c); the fast test for t - a ~ t - a2."""
    if not field.is_finite:
        raise InfiniteFieldError("similar_linear needs a finite field")
    return linear_witness(field, a, a2) is not None


def linear_witness(field, a, a2):
    F = field
    for c in range(1, F.q):
        if F.mul(a2, c) == F.add(F.mul(F.apply_endo(c), a), F.D(c)):
            return c
    return None


# ---------------------------------------------------------------------------
# eigenring


@dataclass(frozen=True)
class Eigenring:
    """End(R/Rp) presented over F_p.

    Basis vectors are polynomials u (deg u < deg p) with p*u in Rp; the
    product u*v stands for the map x -> x*v*u, i.e. rem(v*u, p).
    ``table[i, j]`` holds the coordinates of basis[i] * basis[j].
    """

    atom: SkewPoly
    basis: tuple
    table: np.ndarray = dc_field(repr=False)
    identity: np.ndarray = dc_field(repr=False)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def p(self):
        return self.atom.field.p

    @property
    def order(self):
        return self.p ** self.dim

    def multiply(self, x, y):
        """Coordinates of x * y from coordinate vectors."""
        out = np.einsum("i,j,ijk->k", x, y, self.table) % self.p
        return out

    def element(self, x):
        F = self.atom.field
        out = SkewPoly.zero(F)
        for c, u in zip(x, self.basis):
            for _ in range(int(c)):
                out = out + u
        return out

    def elements(self):
        vecs = np.eye(self.dim, dtype=np.int64)
        return list(linalg.span(vecs, self.p))

    def left_matrix(self, x):
        # y -> x * y
        return np.einsum("i,ijk->kj", x, self.table) % self.p

    def inverse(self, x):
        """Two-sided inverse of x, or None."""
        y = linalg.solve(self.left_matrix(x), self.identity, self.p)
        if y is None:
            return None
        if not np.array_equal(self.multiply(y, x), self.identity):
            return None
        return y

    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def is_associative(self):
        n = self.dim
        eye = np.eye(n, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                ij = self.table[i, j]
                for k in range(n):
                    lhs = self.multiply(ij, eye[k])
                    rhs = self.multiply(eye[i], self.table[j, k])
                    if not np.array_equal(lhs, rhs):
                        return False
        return True

    def schur_check(self):
        """(ok, failing element): every nonzero element has a two-sided inverse."""
        for x in self.elements():
            if not x.any():
                continue
            if self.inverse(x) is None:
                return False, x
        return True, None


@lru_cache(maxsize=1 << 12)
def _eigenring(p):
    F = p.field
    d = p.degree
    basis = _hom_basis(p, p)
    n = len(basis)
    B = np.array([linalg.poly_to_vec(u, d) for u in basis], dtype=np.int64).T
    table = np.zeros((n, n, n), dtype=np.int64)
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            prod = right_rem(mul(v, u), p)
            x = linalg.solve(B, linalg.poly_to_vec(prod, d), F.p)
            if x is None:
                raise InvariantViolation("eigenring is not closed under composition")
            table[i, j] = x
    ident = linalg.solve(B, linalg.poly_to_vec(SkewPoly.one(F), d), F.p)
    if ident is None:
        raise InvariantViolation("eigenring lacks the identity")
    table.setflags(write=False)
    ident.setflags(write=False)
    return Eigenring(p, basis, table, ident)


def eigenring(p, check=True):
    """C(p) = End(R/Rp) for a monic atom p; division-ring checks run when ``check``."""
    _require_finite(p)
    if not is_atom(p):
        raise NotAnAtom(f"{p} is not an atom")
    E = _eigenring(p.monic())
    if check:
        ok, bad = E.schur_check()
        if not ok:
            raise InvariantViolation(f"eigenring of {p}: element {bad.tolist()} has no inverse")
    return E


def lambda_kernel(f, p):
    """F_p basis of {x mod Rp : f*x in Rp}."""
    _require_finite(f, p)
    if not is_atom(p):
        raise NotAnAtom(f"{p} is not an atom")
    if f.is_zero():
        raise ZeroDivisionError("lambda_kernel of zero")
    return _hom_basis(f, p.monic())


def dim_over_eigenring(f, p):
    k = len(lambda_kernel(f, p))
    c = eigenring(p, check=False).dim
    if k % c:
        raise InvariantViolation(
            f"kernel of dimension {k} over F_p is not a space over C(p) of dimension {c}"
        )
    return k // c
