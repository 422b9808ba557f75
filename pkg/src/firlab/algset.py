"""Finite algebraic sets: collections of non-units with a nonzero common left multiple.

Everything reduces to two primitives from ``ore_poly``: the left lcm of the
set (its generator Δ_ℓ of ∩ Rδ) and right gcds.  d depends on Δ exactly when
Rd + RΔ_ℓ != R.
"""
from dataclasses import dataclass
from functools import reduce

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_div, gf_lcm, gf_mul

from . import linalg
from .errors import FieldMismatchError, InvariantViolation, NotAnAtom, NotComputable
from .ore_poly import (
    Factorization,
    SkewPoly,
    atomic_right_divisors,
    conj,
    is_atom,
    length,
    lgcd_rlcm,
    llcm,
    mul,
    rgcd,
    right_divmod,
)
from .similarity import dim_over_eigenring, is_similar


class AlgebraicSet:
    """Immutable, duplicate-free tuple of monic non-units with eager llcm."""

    __slots__ = ("field", "elements", "llcm")

    def __init__(self, elements, field=None):
        elems = []
        seen = set()
        for e in elements:
            if e.is_zero():
                raise ValueError("zero is not allowed in an algebraic set")
            if e.is_unit():
                raise ValueError(f"unit {e} is not allowed in an algebraic set")
            if field is None:
                field = e.field
            elif e.field != field:
                raise FieldMismatchError("algebraic set mixes fields")
            m = e.monic()
            if m not in seen:
                seen.add(m)
                elems.append(m)
        if field is None:
            raise ValueError("an empty algebraic set needs its field")
        self.field = field
        self.elements = tuple(elems)
        one = SkewPoly.one(field)
        self.llcm = reduce(llcm, self.elements, one)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, f):
        return not f.is_zero() and f.monic() in self.elements

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraicSet)
            and self.field == other.field
            and set(self.elements) == set(other.elements)
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.elements)))

    def __repr__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"

    def sorted(self):
        return sorted(self.elements, key=lambda f: (f.degree, f.coeffs[::-1]))

    def union(self, other):
        return AlgebraicSet(self.elements + other.elements, self.field)

    def intersection(self, other):
        keep = set(other.elements)
        return AlgebraicSet([e for e in self.elements if e in keep], self.field)

    def minus(self, other):
        drop = set(other.elements)
        return AlgebraicSet([e for e in self.elements if e not in drop], self.field)

    def issubset(self, other):
        return set(self.elements) <= set(other.elements)

    def to_strings(self):
        return [str(e) for e in self.sorted()]


def _as_set(delta, field=None):
    if isinstance(delta, AlgebraicSet):
        return delta
    return AlgebraicSet(list(delta), field)


def set_llcm(delta):
    return delta.llcm


def _require_atoms(delta):
    for e in delta:
        if not is_atom(e):
            raise NotAnAtom(f"{e} is not an atom")


# ---------------------------------------------------------------------------
# dependence


def is_dependent(d, delta):
    """Rd + RΔ_ℓ != R."""
    if d.is_zero() or d.is_unit():
        raise ValueError(f"{d} must be a nonzero non-unit")
    return rgcd(d, delta.llcm)[0].degree > 0


def is_dependent_by_length(d, delta):
    """The length form: ℓ([Δ_ℓ, d]_ℓ) < ℓ(Δ_ℓ) + ℓ(d)."""
    m = llcm(delta.llcm, d)
    return length(m) < length(delta.llcm) + length(d)


def is_independent(delta):
    return length(delta.llcm) == sum(length(e) for e in delta)


def basis(delta):
    kept = AlgebraicSet([], delta.field)
    for e in delta:
        if not is_dependent(e, kept):
            kept = AlgebraicSet(kept.elements + (e,), delta.field)
    return kept


def rank(delta):
    """Size of a basis; defined for sets of atoms only."""
    _require_atoms(delta)
    return len(basis(delta))


def v_set(f):
    """V(f): monic atoms p with f in Rp."""
    if f.is_zero():
        raise ZeroDivisionError("V(0) contains every atom")
    return AlgebraicSet(atomic_right_divisors(f), f.field)


def closure(delta):
    _require_atoms(delta)
    return v_set(delta.llcm)


def is_full(gamma, delta):
    if not gamma.issubset(delta):
        raise ValueError("the first set must be a subset of the second")
    return all(e in gamma for e in delta if is_dependent(e, gamma))


def full_decompose(delta, gamma):
    """(g, h) with Δ_ℓ = g*h, h = Γ_ℓ and Rg = ∩_{d ∈ Δ∖Γ} R d^h."""
    if not is_full(gamma, delta):
        raise ValueError("the subset is not full")
    h = gamma.llcm
    f = delta.llcm
    g, r = right_divmod(f, h)
    if not r.is_zero():
        raise InvariantViolation("Δ_ℓ is not a left multiple of Γ_ℓ")
    rest = delta.minus(gamma)
    conjs = [conj(d, h) for d in rest]
    if any(c.is_unit() for c in conjs):
        raise InvariantViolation("a conjugate by Γ_ℓ became a unit inside a full subset")
    inter = reduce(llcm, conjs, SkewPoly.one(delta.field))
    if inter != g.monic():
        raise InvariantViolation(f"R g = {g.monic()} differs from the intersection {inter}")
    if mul(g, h).monic() != f:
        raise InvariantViolation("g*h does not reassemble Δ_ℓ")
    return g.monic(), h


def set_conj(delta, u):
    """Δ^u with the unit conjugates (u in Rδ) dropped."""
    if u.is_zero():
        raise ZeroDivisionError("conjugation by zero")
    out = [c for c in (conj(d, u) for d in delta) if not c.is_unit()]
    return AlgebraicSet(out, delta.field)


@dataclass(frozen=True)
class DependenceReport:
    dependent: bool
    locus: object  # 1-based index s, or None
    agree: bool


def dependence_via_atoms(factorization, delta):
    """Dependence of f = p_1...p_n on Δ, directly and through the atoms p_s.

    Either p_n depends on Δ (locus n) or some p_s depends on Δ^{p_{s+1}...p_n};
    the largest such s is reported.
    """
    atoms = tuple(factorization.atoms if isinstance(factorization, Factorization) else factorization)
    if not atoms:
        raise ValueError("a factorization of a non-unit is needed")
    for p in atoms:
        if not is_atom(p):
            raise NotAnAtom(f"{p} is not an atom")
    f = reduce(mul, atoms)
    direct = is_dependent(f, delta)
    n = len(atoms)
    locus = None
    if is_dependent(atoms[-1], delta):
        locus = n
    else:
        u = atoms[-1]
        for s in range(n - 1, 0, -1):
            if is_dependent(atoms[s - 1], set_conj(delta, u)):
                locus = s
                break
            u = mul(atoms[s - 1], u)
    return DependenceReport(direct, locus, direct == (locus is not None))


# ---------------------------------------------------------------------------
# similarity classes and eigenring dimensions


@dataclass(frozen=True)
class ClassDecomposition:
    representatives: tuple
    classes: tuple  # tuple of AlgebraicSet, one per representative
    ranks: tuple
    total_rank: int

    def consistent(self):
        return sum(self.ranks) == self.total_rank and len(self.classes) <= self.total_rank


def class_decompose(delta):
    _require_atoms(delta)
    reps, members = [], []
    for e in delta:
        for i, r in enumerate(reps):
            if is_similar(r, e):
                members[i].append(e)
                break
        else:
            reps.append(e)
            members.append([e])
    classes = tuple(AlgebraicSet(m, delta.field) for m in members)
    ranks = tuple(len(basis(c)) for c in classes)
    dec = ClassDecomposition(tuple(reps), classes, ranks, len(basis(delta)))
    if not dec.consistent():
        raise InvariantViolation(f"class ranks {ranks} do not add up to {dec.total_rank}")
    return dec


@dataclass(frozen=True)
class RankDecomposition:
    poly: SkewPoly
    representatives: tuple
    dimensions: tuple
    total: int
    rank: int

    @property
    def equal(self):
        return self.total == self.rank


def rank_decomposition(f):
    """rk V(f) against the sum of dim_{C(p_i)} Ker λ_{f,p_i} over classes."""
    V = v_set(f)
    if not len(V):
        return RankDecomposition(f, (), (), 0, 0)
    dec = class_decompose(V)
    dims = tuple(dim_over_eigenring(f, p) for p in dec.representatives)
    return RankDecomposition(f, dec.representatives, dims, sum(dims), dec.total_rank)


# ---------------------------------------------------------------------------
# rank identities


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: object
    rhs: object
    equal: bool
    witnesses: tuple = ()

    def as_dict(self):
        return {
            "name": self.name,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "equal": self.equal,
            "witnesses": [_jsonable(w) for w in self.witnesses],
        }


def _jsonable(x):
    if isinstance(x, SkewPoly):
        return str(x)
    if isinstance(x, AlgebraicSet):
        return x.to_strings()
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return str(x)


def rank_theorems_check(delta, gamma):
    """Evaluate the union/intersection rank identities for two sets of atoms."""
    _require_atoms(delta)
    _require_atoms(gamma)
    union = delta.union(gamma)
    cl_d, cl_g = closure(delta), closure(gamma)
    cl_int = cl_d.intersection(cl_g)
    rd, rg, ru, ri = rank(delta), rank(gamma), rank(union), rank(cl_int)
    out = [
        Identity(
            "rank-of-union",
            rd + rg,
            ru + ri,
            rd + rg == ru + ri,
            (cl_int,),
        )
    ]
    lhs = union.llcm
    rhs = llcm(delta.llcm, gamma.llcm)
    out.append(Identity("llcm-of-union", lhs, rhs, lhs == rhs))
    lhs = cl_int.llcm
    rhs = rgcd(cl_d.llcm, cl_g.llcm)[0]
    out.append(Identity("llcm-of-closure-intersection", lhs, rhs, lhs == rhs))
    disjoint = len(cl_int) == 0
    # B ∪ B' is taken as a family: an atom shared by both bases counts twice
    family = basis(delta).elements + basis(gamma).elements
    joined = reduce(llcm, family, SkewPoly.one(delta.field))
    joined_is_basis = length(joined) == len(family)
    out.append(
        Identity(
            "disjoint-closures-iff-bases-join",
            disjoint,
            joined_is_basis,
            disjoint == joined_is_basis,
            (list(family),),
        )
    )
    additive = ru == rd + rg
    out.append(Identity("disjoint-closures-iff-rank-additive", disjoint, additive, disjoint == additive))
    return out


# ---------------------------------------------------------------------------
# right-sided algebraicity


def _leading_obstruction(elems):
    """True when the leading coefficients already rule out a common right multiple.

    lc(δ*y) = lc(δ) S^{deg δ}(lc y), so a common right multiple forces
    lc(δ_i)^{-1} lc(δ_j) into S^{min(deg δ_i, deg δ_j)}(K).
    """
    F = elems[0].field
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            ratio = F.mul(F.inv(a.lc), b.lc)
            k = min(a.degree, b.degree)
            for _ in range(k):
                ratio = F.endo_preimage(ratio)
                if ratio is None:
                    return True
    return False


def _right_multiple_search(elems, bound, xdeg):
    """Nonzero m = δ_1 y_1 = ... = δ_k y_k with deg m <= bound, y coefficients in F_p[x]."""
    F = elems[0].field
    p = F.p
    top = bound
    slots = []  # (element index, t-power j, x-power a)
    for i, d in enumerate(elems):
        for j in range(bound - d.degree + 1):
            for a in range(xdeg + 1):
                slots.append((i, j, a))
    if not slots:
        return False
    images = []
    for i, j, a in slots:
        c = F.poly((1,) + (0,) * a)
        y = SkewPoly(F, [F.zero] * j + [c])
        images.append((i, mul(elems[i], y)))
    den = (1,)
    for _, img in images:
        for c in img.coeffs:
            den = tuple(int(v) for v in gf_lcm(list(den), list(c.den), p, ZZ))
    # equations: δ_1 y_1 - δ_i y_i = 0 for i >= 2, coefficientwise, times den
    k = len(elems)

    def cleared(c):
        q = gf_div(list(den), list(c.den), p, ZZ)[0]
        return [int(v) for v in gf_mul(list(c.num), q, p, ZZ)][::-1]  # low first

    cols = []
    width = 0
    raw = []
    for i, img in images:
        col = {}
        for tj in range(top + 1):
            c = img.coeff(tj)
            if c == F.zero:
                continue
            poly = cleared(c)
            width = max(width, len(poly))
            col[tj] = poly
        raw.append((i, col))
    nrow_blocks = (k - 1) * (top + 1)
    for i, col in raw:
        v = np.zeros(nrow_blocks * width, dtype=np.int64)
        for tj, poly in col.items():
            for eq in range(1, k):
                if i == 0:
                    sign = 1
                elif i == eq:
                    sign = -1
                else:
                    continue
                base = ((eq - 1) * (top + 1) + tj) * width
                for a, cval in enumerate(poly):
                    v[base + a] = (v[base + a] + sign * cval) % p
        cols.append(v)
    M = np.stack(cols, axis=1)
    N = linalg.nullspace(M, p)
    # any kernel vector with a nonzero δ_1-part gives m != 0
    first = [n for n, (i, _, _) in enumerate(slots) if i == 0]
    return bool(len(N)) and bool(N[:, first].any())


def is_right_algebraic(elems, bound=None, xdeg=None):
    """Is there a nonzero common right multiple (in ∩ δR) of degree <= bound?

    Exact on finite fields (via the right lcm).  Over F_p(x) the leading
    coefficient obstruction is conclusive; otherwise a bounded search over
    cofactors with polynomial coefficients of x-degree <= ``xdeg`` is run,
    so a False there means "none found within the bounds".
    """
    elems = [e for e in elems]
    if not elems:
        return True
    if any(e.is_zero() for e in elems):
        raise ValueError("zero has no right multiples that are nonzero")
    if len(elems) == 1:
        return True
    F = elems[0].field
    if F.is_finite:
        m = elems[0]
        for e in elems[1:]:
            m = lgcd_rlcm(m, e)[1]
        return bound is None or m.degree <= bound
    try:
        m = elems[0]
        for e in elems[1:]:
            m = lgcd_rlcm(m, e)[1]
        return bound is None or m.degree <= bound
    except NotComputable:
        pass
    if _leading_obstruction(elems):
        return False
    if bound is None:
        raise ValueError("a degree bound is needed for the bounded search")
    return _right_multiple_search(elems, bound, bound if xdeg is None else xdeg)
