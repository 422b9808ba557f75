"""Skew polynomials R = K[t; S, D] with coefficients written on the left.

A polynomial is stored as a tuple (a_0, ..., a_n) meaning sum a_i t^i, with
a_n != 0; the zero polynomial is the empty tuple.  Multiplication follows
t*a = S(a)*t + D(a).

Over finite fields the heavy lifting goes through the table kernels in
``_kernels``; other backends use the generic code paths which only call
field methods.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels as K
from . import _parse
from .errors import (
    FieldMismatchError,
    InfiniteFieldError,
    InvariantViolation,
    NotComputable,
)
from .twisted_field import MAX_TABLE_DEGREE

# cap on the number of monic candidates a single divisor search may scan
DEFAULT_SEARCH_CAP = 1 << 20


class SkewPoly:
    __slots__ = ("field", "coeffs", "_arr", "_hash")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self._arr = None
        self._hash = None

    # construction helpers --------------------------------------------------
    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def t(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def linear(cls, field, a):
        """The monic linear polynomial t - a."""
        return cls(field, (field.neg(a), field.one))

    # basic properties ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return len(self.coeffs) == 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self):
        """Left-normalize: lc^{-1} * self."""
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        if self.is_monic():
            return self
        return self.scale_left(self.field.inv(self.lc))

    def scale_left(self, c):
        F = self.field
        return SkewPoly(F, [F.mul(c, a) for a in self.coeffs])

    def arr(self):
        if self._arr is None:
            a = np.array(self.coeffs if self.coeffs else (0,), dtype=np.int64)
            a.setflags(write=False)
            self._arr = a
        return self._arr

    # identity --------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __reduce__(self):
        return (SkewPoly, (self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # operators -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        return SkewPoly(self.field, (self.field._check(other),))

    def __add__(self, other):
        return poly_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return SkewPoly(F, [F.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return poly_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return poly_add(self._coerce(other), -self)

    def __mul__(self, other):
        return mul(self, self._coerce(other))

    def __rmul__(self, other):
        return mul(self._coerce(other), self)

    def __pow__(self, n):
        return _parse.generic_power(mul, SkewPoly.one(self.field), self, n)

    # text ------------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SkewPoly({format_poly(self)!r} over {self.field.descriptor()})"


# ---------------------------------------------------------------------------
# text


def format_poly(f, var="t"):
    F = f.field
    if not f.coeffs:
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == F.zero:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = F.format(c)
        if not mono:
            terms.append(cs)
        elif c == F.one:
            terms.append(mono)
        else:
            if any(ch in cs for ch in " +-/"):
                cs = f"({cs})"
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


def parse_poly(field, text):
    """Parse ``t^2 + (w+1)*t + w`` (field literals inside coefficients)."""
    felt = field._algebra()

    def symbol(name):
        if name == "t":
            return SkewPoly.t(field)
        return SkewPoly.const(field, felt.symbol(name))

    def div(a, b):
        if b.degree != 0:
            raise ValueError("only division by nonzero constants")
        return mul(a, SkewPoly.const(field, field.inv(b.lc)))

    def div_checked(a, b):
        if b.is_zero():
            raise ZeroDivisionError
        return div(a, b)

    alg = _parse.Algebra(
        const=lambda n: SkewPoly.const(field, field.from_int(n)),
        symbol=symbol,
        add=poly_add,
        sub=lambda a, b: poly_add(a, -b),
        mul=mul,
        div=div_checked,
        neg=lambda a: -a,
        power=lambda a, n: a ** n,
    )
    return _parse.evaluate(text, alg)


# ---------------------------------------------------------------------------
# arithmetic


def _same_field(f, g):
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    return f.field


def _use_tables(field, *polys):
    return field.is_finite and all(p.degree <= MAX_TABLE_DEGREE for p in polys)


def poly_add(f, g):
    F = _same_field(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return SkewPoly(F, [F.add(f.coeff(i), g.coeff(i)) for i in range(n)])


def _t_times(F, coeffs):
    # t * sum c_j t^j = sum S(c_j) t^{j+1} + D(c_j) t^j
    out = [F.zero] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        if c == F.zero:
            continue
        out[j + 1] = F.add(out[j + 1], F.apply_endo(c, 1))
        if F.derivation is not None:
            out[j] = F.add(out[j], F.D(c))
    return out


def _mul_generic(F, a, b):
    out = [F.zero] * (len(a) + len(b) - 1)
    cur = list(b)  # t^i * b
    for i, ai in enumerate(a):
        if i:
            cur = _t_times(F, cur)
        if ai == F.zero:
            continue
        for j, c in enumerate(cur):
            if c != F.zero:
                out[j] = F.add(out[j], F.mul(ai, c))
    return out


def mul(f, g):
    F = _same_field(f, g)
    if not f.coeffs or not g.coeffs:
        return SkewPoly(F, ())
    if _use_tables(F, f, g) and f.degree + g.degree <= MAX_TABLE_DEGREE:
        out = K.mul_kernel(f.arr(), g.arr(), F.add_table, F.mul_table, F.tpow)
        return SkewPoly(F, out.tolist())
    return SkewPoly(F, _mul_generic(F, f.coeffs, g.coeffs))


def right_divmod(f, g):
    """(q, r) with f = q*g + r and deg r < deg g."""
    F = _same_field(f, g)
    if not g.coeffs:
        raise ZeroDivisionError("right division by the zero polynomial")
    if f.degree < g.degree:
        return SkewPoly(F, ()), f
    if _use_tables(F, f, g):
        q, r = K.rdivmod_kernel(
            f.arr(), g.arr(), F.add_table, F.mul_table, F.neg_table, F.inv_table, F.tpow
        )
        return SkewPoly(F, q.tolist()), SkewPoly(F, r.tolist()[: g.degree])
    return _rdivmod_generic(F, f, g)


def _rdivmod_generic(F, f, g):
    n, d = f.degree, g.degree
    r = list(f.coeffs)
    q = [F.zero] * (n - d + 1)
    shifted = [list(g.coeffs)]  # shifted[k] = t^k * g
    for _ in range(n - d):
        shifted.append(_t_times(F, shifted[-1]))
    for m in range(n, d - 1, -1):
        top = r[m]
        if top == F.zero:
            continue
        k = m - d
        tg = shifted[k]
        c = F.mul(top, F.inv(tg[-1]))
        q[k] = c
        for j, v in enumerate(tg):
            if v != F.zero:
                r[j] = F.sub(r[j], F.mul(c, v))
    return SkewPoly(F, q), SkewPoly(F, r[:d])


def _preimage_power(F, a, d):
    for _ in range(d):
        a = F.endo_preimage(a)
        if a is None:
            return None
    return a


def left_divmod(f, g):
    """(q, r) with f = g*q + r and deg r < deg g.

    Needs S^{-deg g} of leading-coefficient quotients; raises NotComputable
    when one of them is not in the image of S.
    """
    F = _same_field(f, g)
    if not g.coeffs:
        raise ZeroDivisionError("left division by the zero polynomial")
    if f.degree < g.degree:
        return SkewPoly(F, ()), f
    if _use_tables(F, f, g):
        q, r = K.ldivmod_kernel(
            f.arr(),
            g.arr(),
            F.add_table,
            F.mul_table,
            F.neg_table,
            F.inv_table,
            F.tpow,
            F.sinv,
        )
        return SkewPoly(F, q.tolist()), SkewPoly(F, r.tolist()[: g.degree])
    n, d = f.degree, g.degree
    r = SkewPoly(F, f.coeffs)
    q = [F.zero] * (n - d + 1)
    lginv = F.inv(g.lc)
    for m in range(n, d - 1, -1):
        top = r.coeff(m)
        if top == F.zero:
            continue
        k = m - d
        c = _preimage_power(F, F.mul(lginv, top), d)
        if c is None:
            raise NotComputable(
                f"left division of {f} by {g} needs S^-{d} of an element outside S(K)"
            )
        q[k] = c
        mono = SkewPoly(F, [F.zero] * k + [c])
        r = r - mul(g, mono)
    return SkewPoly(F, q), SkewPoly(F, r.coeffs[:d])


def right_rem(f, g):
    return right_divmod(f, g)[1]


def right_divides(g, f):
    """True iff f lies in Rg."""
    return right_rem(f, g).is_zero()


def left_divides(g, f):
    """True iff f lies in gR."""
    return left_divmod(f, g)[1].is_zero()


# ---------------------------------------------------------------------------
# gcd / lcm


def rgcd(a, b):
    """(d, u, v): monic d with Rd = Ra + Rb and d = u*a + v*b."""
    F = _same_field(a, b)
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("rgcd of two zero polynomials")
    d, u, v, _, _ = _right_euclid(F, a, b)
    return d, u, v


def _right_euclid(F, a, b):
    # invariant: r_i = u_i*a + v_i*b
    one, zero = SkewPoly.one(F), SkewPoly.zero(F)
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = right_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - mul(q, u1)
        v0, v1 = v1, v0 - mul(q, v1)
    c = F.inv(r0.lc)
    return r0.scale_left(c), u0.scale_left(c), v0.scale_left(c), u1, v1


def llcm(a, b):
    """Monic generator of Ra ∩ Rb."""
    F = _same_field(a, b)
    if a.is_zero() or b.is_zero():
        raise ZeroDivisionError("llcm needs nonzero inputs")
    d, _, _, u1, _ = _right_euclid(F, a, b)
    m = mul(u1, a).monic()
    if m.degree != a.degree + b.degree - d.degree:
        raise InvariantViolation(f"deg llcm({a}, {b}) = {m.degree} breaks the degree formula")
    return m


def conj(a, b):
    """Monic a^b with Ra ∩ Rb = R a^b b (a unit when b is in Ra)."""
    m = llcm(a, b)
    q, r = right_divmod(m, b)
    if not r.is_zero():
        raise InvariantViolation("llcm is not a left multiple of b")
    return q.monic()


def right_monic(f):
    """f*c with leading coefficient 1 (normal form for right ideals fR)."""
    F = f.field
    if f.is_zero():
        raise ZeroDivisionError("zero polynomial has no monic form")
    c = _preimage_power(F, F.inv(f.lc), f.degree)
    if c is None:
        raise NotComputable(f"{f} has no right-monic associate")
    return mul(f, SkewPoly.const(F, c))


def lgcd_rlcm(a, b):
    """(g, m): aR + bR = gR and aR ∩ bR = mR, both right-monic."""
    F = _same_field(a, b)
    if a.is_zero() or b.is_zero():
        raise ZeroDivisionError("lgcd_rlcm needs nonzero inputs")
    one, zero = SkewPoly.one(F), SkewPoly.zero(F)
    # invariant: r_i = a*x_i + b*y_i
    r0, r1 = a, b
    x0, x1 = one, zero
    while not r1.is_zero():
        q, r = left_divmod(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - mul(x1, q)
    g = right_monic(r0)
    m = right_monic(mul(a, x1))
    if m.degree != a.degree + b.degree - g.degree:
        raise InvariantViolation("right lcm breaks the degree formula")
    return g, m


# ---------------------------------------------------------------------------
# monic enumeration and divisor search (finite fields)


def _require_finite(field):
    if not field.is_finite:
        raise InfiniteFieldError(f"{field.descriptor()} is not enumerable")


def monic_count(field, d):
    return field.q ** d


def monic_index(f):
    """Position of monic f among the monic polynomials of its degree."""
    q = f.field.q
    k = 0
    for c in reversed(f.coeffs[:-1]):
        k = k * q + c
    return k


def monic_from_index(field, d, k):
    cs = []
    for _ in range(d):
        cs.append(k % field.q)
        k //= field.q
    return SkewPoly(field, cs + [1])


def monic_array(field, d):
    """All monic degree-d polynomials as rows of an (q^d, d+1) array."""
    _require_finite(field)

    def build():
        q = field.q
        N = q ** d
        idx = np.arange(N, dtype=np.int64)
        A = np.empty((N, d + 1), dtype=np.int64)
        for i in range(d):
            A[:, i] = idx % q
            idx //= q
        A[:, d] = 1
        A.setflags(write=False)
        return A

    return field.cached(("monic", d), build)


def monic_polys(field, d):
    return [monic_from_index(field, d, k) for k in range(field.q ** d)]


def _check_cap(field, d, cap):
    if field.q ** d > cap:
        raise ValueError(
            f"divisor search over {field.q}^{d} candidates exceeds the cap {cap}; "
            "raise max_degree/cap explicitly"
        )


def _right_divisor_indices_small(f, d):
    # direct: batch right remainders over every monic g of degree d
    F = f.field
    G = monic_array(F, d)
    Fm = np.broadcast_to(f.arr(), (G.shape[0], f.degree + 1))
    R = K.batch_rrem_kernel(
        np.ascontiguousarray(Fm), G, F.add_table, F.mul_table, F.neg_table, F.tpow
    )
    return np.nonzero(~R.any(axis=1))[0]


def _left_divisor_indices(f, d):
    F = f.field
    H = monic_array(F, d)
    Fm = np.broadcast_to(f.arr(), (H.shape[0], f.degree + 1))
    R = K.batch_lrem_kernel(
        np.ascontiguousarray(Fm), H, F.add_table, F.mul_table, F.neg_table, F.tpow, F.sinv
    )
    return np.nonzero(~R.any(axis=1))[0]


def right_divisors_of_degree(f, d, cap=DEFAULT_SEARCH_CAP):
    """Monic g of degree d with f in Rg, in enumeration order."""
    F = f.field
    _require_finite(F)
    if f.is_zero():
        raise ZeroDivisionError("zero polynomial has every divisor")
    f = f.monic()
    n = f.degree
    if d < 0 or d > n:
        return []
    if d == 0:
        return [SkewPoly.one(F)]
    if d == n:
        return [f]
    if 2 * d <= n or n > MAX_TABLE_DEGREE:
        _check_cap(F, d, cap)
        return [monic_from_index(F, d, int(k)) for k in _right_divisor_indices_small(f, d)]
    # f = h*g with monic h of degree n-d; h <-> g is a bijection
    _check_cap(F, n - d, cap)
    out = []
    for k in _left_divisor_indices(f, n - d):
        h = monic_from_index(F, n - d, int(k))
        g, r = left_divmod(f, h)
        if not r.is_zero() or not g.is_monic():
            raise InvariantViolation("left divisor search returned a non-divisor")
        out.append(g)
    out.sort(key=monic_index)
    return out


def left_divisors_of_degree(f, d, cap=DEFAULT_SEARCH_CAP):
    """Monic h of degree d with f in hR, in enumeration order."""
    F = f.field
    _require_finite(F)
    f = f.monic()
    n = f.degree
    if d < 0 or d > n:
        return []
    if d == 0:
        return [SkewPoly.one(F)]
    if d == n:
        return [f]
    if 2 * d <= n:
        _check_cap(F, d, cap)
        return [monic_from_index(F, d, int(k)) for k in _left_divisor_indices(f, d)]
    _check_cap(F, n - d, cap)
    out = []
    for k in _right_divisor_indices_small(f, n - d):
        g = monic_from_index(F, n - d, int(k))
        h, r = right_divmod(f, g)
        if not r.is_zero():
            raise InvariantViolation("right divisor search returned a non-divisor")
        out.append(h.monic())
    out.sort(key=monic_index)
    return out


def _has_proper_factor(f, cap):
    n = f.degree
    for d in range(1, n // 2 + 1):
        _check_cap(f.field, d, cap)
        if len(_right_divisor_indices_small(f, d)):
            return True
        if len(_left_divisor_indices(f, d)):
            return True
    return False


def is_atom_search(f, cap=DEFAULT_SEARCH_CAP):
    """Atomicity by exhaustive divisor search (no caches involved)."""
    if f.is_zero():
        raise ZeroDivisionError("is_atom of the zero polynomial")
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    _require_finite(f.field)
    return not _has_proper_factor(f.monic(), cap)


def is_atom(f, cap=DEFAULT_SEARCH_CAP):
    """True iff f is a non-unit that is not a product of two non-units."""
    if f.is_zero():
        raise ZeroDivisionError("is_atom of the zero polynomial")
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    F = f.field
    if not F.is_finite:
        raise InfiniteFieldError(
            f"atomicity of degree-{f.degree} polynomials over {F.descriptor()} is not decided"
        )
    if F.q ** f.degree <= 1 << 14:
        return monic_index(f.monic()) in _atom_index_set(F, f.degree)
    return is_atom_search(f, cap)


def _atom_index_set(field, d):
    return field.cached(("atom-set", d), lambda: frozenset(_atom_indices(field, d)))


def _atom_indices(field, d):
    """Indices of monic atoms of degree d, via a sieve over products h*p."""

    def build():
        q = field.q
        if d == 1:
            return tuple(range(q))
        composite = np.zeros(q ** d, dtype=bool)
        for e in range(1, d):
            atoms = [monic_from_index(field, e, k) for k in _atom_indices(field, e)]
            for h in monic_polys(field, d - e):
                for p in atoms:
                    composite[monic_index(mul(h, p))] = True
        return tuple(int(k) for k in np.nonzero(~composite)[0])

    return field.cached(("atoms", d), build)


def enumerate_atoms(field, d):
    """All monic atoms of degree exactly d, in enumeration order."""
    _require_finite(field)
    if d < 1:
        raise ValueError("atoms have degree >= 1")
    return [monic_from_index(field, d, k) for k in _atom_indices(field, d)]


# ---------------------------------------------------------------------------
# factorization and length


@dataclass(frozen=True)
class Factorization:
    unit: object
    atoms: tuple

    def product(self, field):
        out = SkewPoly.const(field, self.unit)
        for p in self.atoms:
            out = mul(out, p)
        return out

    def __len__(self):
        return len(self.atoms)


@lru_cache(maxsize=1 << 16)
def _factor_monic(f):
    if f.degree == 0:
        return ()
    for d in range(1, f.degree):
        divs = right_divisors_of_degree(f, d)
        if divs:
            p = divs[0]
            h, r = right_divmod(f, p)
            if not r.is_zero():
                raise InvariantViolation("divisor search returned a non-divisor")
            return _factor_monic(h.monic()) + (p,)
    return (f,)


def factor_atomic(f):
    """f = u * q_1 ... q_n with monic atoms, peeling the least right divisor."""
    if f.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    F = f.field
    if f.degree == 0:
        return Factorization(f.lc, ())
    if f.degree == 1:
        return Factorization(f.lc, (f.monic(),))
    _require_finite(F)
    return Factorization(f.lc, _factor_monic(f.monic()))


def length(f):
    return len(factor_atomic(f).atoms)


@lru_cache(maxsize=1 << 16)
def _v_set_monic(f):
    out = []
    for d in range(1, f.degree + 1):
        for g in right_divisors_of_degree(f, d):
            if is_atom(g):
                out.append(g)
    return tuple(out)


def atomic_right_divisors(f):
    """Monic atoms p with f in Rp, by degree then enumeration order."""
    if f.is_zero():
        raise ZeroDivisionError("every atom divides zero")
    _require_finite(f.field)
    if f.degree == 0:
        return ()
    return _v_set_monic(f.monic())


def atomic_left_divisors(f):
    """Monic atoms q with f in qR."""
    if f.is_zero():
        raise ZeroDivisionError("every atom divides zero")
    _require_finite(f.field)
    out = []
    for d in range(1, f.degree + 1):
        out.extend(h for h in left_divisors_of_degree(f, d) if is_atom(h))
    return tuple(out)


def all_atomic_factorizations(f):
    """Every ordered tuple of monic atoms whose product is monic(f)."""
    f = f.monic()
    if f.degree == 0:
        return [()]
    out = []
    for p in atomic_right_divisors(f):
        h = right_divmod(f, p)[0].monic()
        for rest in all_atomic_factorizations(h):
            out.append(rest + (p,))
    return out


def random_poly(field, rng, degree, monic=False):
    cs = [int(rng.integers(field.q)) for _ in range(degree)]
    top = 1 if monic else int(rng.integers(1, field.q))
    return SkewPoly(field, cs + [top])
