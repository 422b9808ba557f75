"""Coefficient fields K with an endomorphism S and an S-derivation D.

Three backends:

* ``FiniteField``   GF(p^e), S = Frobenius power a -> a^(p^k); elements are
  ints whose base-p digits are the coordinates over F_p (digit i is the
  coefficient of w^i).  Arithmetic goes through precomputed tables.
* ``FunctionField`` F_p(x) with S(x) = x^2; injective, not surjective.
* ``RationalField`` Q with S = id, D = 0; used by the series module.

Derivations are either zero or inner, D_c(a) = c*a - S(a)*c.
"""
import re
import threading
from fractions import Fraction
from functools import total_ordering

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_div,
    gf_gcd,
    gf_irreducible_p,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_rem,
)

from . import _parse
from .errors import FieldMismatchError, InfiniteFieldError, ParseError

# polynomial in w, highest coefficient first (galoistools convention)
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (1, 1, 2),
}

# highest power of t that the tpow tables cover
MAX_TABLE_DEGREE = 40


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _ints(poly):
    return tuple(int(c) for c in poly)


def find_irreducible(p, e):
    """Lexicographically first monic irreducible of degree e over F_p."""
    if (p, e) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, e)]
    for k in range(p ** e):
        tail = []
        for _ in range(e):
            tail.append(k % p)
            k //= p
        cand = [1] + tail[::-1]
        if gf_irreducible_p(cand, p, ZZ):
            return tuple(cand)
    raise ValueError(f"no irreducible of degree {e} over F_{p}")  # pragma: no cover


class TwistedField:
    """Common surface; concrete backends below."""

    backend = "abstract"
    is_finite = False
    endo_bijective = False

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        return _parse.generic_power(self.mul, self.one, a, n)

    def S(self, a, n=1):
        return self.apply_endo(a, n)

    def D(self, a):
        if self.derivation is None:
            return self.zero
        c = self.derivation
        return self.sub(self.mul(c, a), self.mul(self.apply_endo(a, 1), c))

    def parse(self, text):
        return _parse.evaluate(text, self._algebra())

    def _algebra(self):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# GF(p^e)


class FiniteField(TwistedField):
    backend = "finite"
    is_finite = True
    endo_bijective = True

    def __init__(self, p, e=1, frob=1, modulus=None, derivation=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = int(p)
        self.e = int(e)
        self.q = self.p ** self.e
        self.frob = int(frob) % self.e if self.e > 1 else 0
        if modulus is None:
            modulus = find_irreducible(self.p, self.e)
        modulus = tuple(int(c) % self.p for c in modulus)
        if len(modulus) != self.e + 1 or modulus[0] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not gf_irreducible_p(list(modulus), self.p, ZZ):
            raise ValueError(f"modulus {modulus} is reducible over F_{self.p}")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._build_tables()
        if derivation is not None:
            derivation = self._check(derivation)
            if derivation == 0:
                derivation = None
        self.derivation = derivation
        self._build_twist_tables()
        self._cache_lock = threading.Lock()
        self._caches = {}

    # identity -------------------------------------------------------------
    def _key(self):
        return ("finite", self.p, self.e, self.frob, self.modulus, self.derivation)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (FiniteField, (self.p, self.e, self.frob, self.modulus, self.derivation))

    def descriptor(self):
        s = f"gf({self.p},{self.e}"
        if self.e > 1 and self.frob != 1:
            s += f",frob={self.frob}"
        if self.derivation is not None:
            s += f",der={self.format(self.derivation)}"
        return s + ")"

    def __repr__(self):
        return f"FiniteField({self.descriptor()})"

    @property
    def characteristic(self):
        return self.p

    # coordinates ----------------------------------------------------------
    def coords(self, a):
        """F_p coordinates of a: (c_0, ..., c_{e-1}) with a = sum c_i w^i."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coords(self, cs):
        a = 0
        for c in reversed(tuple(cs)):
            a = a * self.p + int(c) % self.p
        return a

    def _to_gf(self, a):
        return list(reversed(self.coords(a)))

    def _from_gf(self, poly):
        poly = _ints(poly)
        return self.from_coords(reversed(poly))

    # tables ---------------------------------------------------------------
    def _build_tables(self):
        q, p = self.q, self.p
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        cs = np.array([self.coords(a) for a in range(q)], dtype=np.int64).reshape(q, self.e)
        weights = p ** np.arange(self.e, dtype=np.int64)
        for a in range(q):
            add[a] = ((cs[a] + cs) % p) @ weights
        mod = list(self.modulus)
        for a in range(q):
            fa = self._to_gf(a)
            for b in range(a, q):
                prod = gf_rem(gf_mul(fa, self._to_gf(b), p, ZZ), mod, p, ZZ)
                v = self._from_gf(prod)
                mul[a, b] = mul[b, a] = v
        neg = np.array([((-cs[a]) % p) @ weights for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv
        # Frobenius a -> a^(p^frob)
        frob = np.arange(q, dtype=np.int64)
        for _ in range(self.frob * (self.e > 1)):
            frob = np.array([self._pow_table(int(a), p) for a in frob], dtype=np.int64)
        self.frob_table = frob
        finv = np.zeros(q, dtype=np.int64)
        finv[frob] = np.arange(q, dtype=np.int64)
        self.frob_inv_table = finv
        for t in (add, mul, neg, inv, frob, finv):
            t.setflags(write=False)

    def _pow_table(self, a, n):
        r = 1
        for _ in range(n):
            r = int(self.mul_table[r, a])
        return r

    def _build_twist_tables(self):
        q, L = self.q, MAX_TABLE_DEGREE + 1
        der = np.array([self.D(a) for a in range(q)], dtype=np.int64)
        self.der_table = der
        # tpow[i, c, :] = coefficients of t^i * c
        tpow = np.zeros((L, q, L), dtype=np.int64)
        tpow[0, np.arange(q), 0] = np.arange(q)
        add, S = self.add_table, self.frob_table
        for i in range(1, L):
            prev = tpow[i - 1]
            cur = tpow[i]
            # t * sum c_j t^j = sum S(c_j) t^{j+1} + D(c_j) t^j
            cur[:, 1:] = S[prev[:, :-1]]
            cur[:, :] = add[cur, der[prev]]
        self.tpow = tpow
        sinv = np.zeros((L, q), dtype=np.int64)
        sinv[0] = np.arange(q)
        for d in range(1, L):
            sinv[d] = self.frob_inv_table[sinv[d - 1]]
        self.sinv = sinv
        spow = np.zeros((L, q), dtype=np.int64)
        spow[0] = np.arange(q)
        for d in range(1, L):
            spow[d] = S[spow[d - 1]]
        self.spow = spow
        for t in (der, tpow, sinv, spow):
            t.setflags(write=False)

    def cached(self, key, build):
        """Per-field memo table; entries appear whole or not at all."""
        with self._cache_lock:
            if key in self._caches:
                return self._caches[key]
        value = build()
        with self._cache_lock:
            return self._caches.setdefault(key, value)

    # arithmetic -----------------------------------------------------------
    def _check(self, a):
        if isinstance(a, (bool, np.bool_)) or not isinstance(a, (int, np.integer)):
            raise FieldMismatchError(f"{a!r} is not an element of {self.descriptor()}")
        a = int(a)
        if not 0 <= a < self.q:
            raise FieldMismatchError(f"{a} is out of range for {self.descriptor()}")
        return a

    def add(self, a, b):
        return int(self.add_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.descriptor()}")
        return int(self.inv_table[a])

    def from_int(self, n):
        return self.from_coords((n % self.p,))

    def apply_endo(self, a, n=1):
        if n < 0:
            raise ValueError("endomorphism exponent must be >= 0")
        if n <= MAX_TABLE_DEGREE:
            return int(self.spow[n, a])
        for _ in range(n):
            a = int(self.frob_table[a])
        return a

    def endo_preimage(self, a):
        return int(self.frob_inv_table[a])

    def D(self, a):
        if self.derivation is None:
            return 0
        c = self.derivation
        return self.sub(self.mul(c, a), self.mul(int(self.frob_table[a]), c))

    def elements(self):
        return list(range(self.q))

    def enumerate_field(self):
        return self.elements()

    def is_fixed(self, a):
        return int(self.frob_table[a]) == a

    # literals -------------------------------------------------------------
    def _algebra(self):
        def symbol(name):
            if name != "w":
                raise KeyError(name)
            if self.e == 1:
                raise KeyError(name)
            return self.from_coords((0, 1))

        return _parse.Algebra(
            const=self.from_int,
            symbol=symbol,
            add=self.add,
            sub=self.sub,
            mul=self.mul,
            div=self.div,
            neg=self.neg,
            power=self.pow,
        )

    def format(self, a):
        cs = self.coords(a)
        terms = []
        for i in range(self.e - 1, -1, -1):
            c = cs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "w" if i == 1 else f"w^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# F_p(x), S(x) = x^2


@total_ordering
class RatFunc:
    """Reduced fraction num/den over F_p with den monic; coefficient tuples highest first."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=(1,)):
        num = _ints(c % p for c in num)
        den = _ints(c % p for c in den)
        num = tuple(_strip(num))
        den = tuple(_strip(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        else:
            g = _ints(gf_gcd(list(num), list(den), p, ZZ))
            if g != (1,):
                num = _ints(gf_div(list(num), list(g), p, ZZ)[0])
                den = _ints(gf_div(list(den), list(g), p, ZZ)[0])
            lc, mden = gf_monic(list(den), p, ZZ)
            den = _ints(mden)
            inv = pow(int(lc), p - 2, p)
            num = tuple((c * inv) % p for c in num)
        self.p = p
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.p == other.p
            and self.num == other.num
            and self.den == other.den
        )

    def __lt__(self, other):
        return (len(self.den), self.den, len(self.num), self.num) < (
            len(other.den),
            other.den,
            len(other.num),
            other.num,
        )

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def __repr__(self):
        return f"RatFunc({_fmt_xpoly(self.num)}/{_fmt_xpoly(self.den)})"


def _strip(poly):
    i = 0
    while i < len(poly) and poly[i] == 0:
        i += 1
    return poly[i:]


def _fmt_xpoly(poly, var="x"):
    n = len(poly) - 1
    terms = []
    for i, c in enumerate(poly):
        k = n - i
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def _subst_square(poly):
    # f(x) -> f(x^2), highest first
    out = []
    for i, c in enumerate(poly):
        out.append(c)
        if i != len(poly) - 1:
            out.append(0)
    return tuple(out)


def _unsubst_square(poly):
    # inverse of _subst_square; None if an odd power occurs
    n = len(poly) - 1
    if n % 2:
        return None
    out = []
    for i, c in enumerate(poly):
        if (n - i) % 2:
            if c != 0:
                return None
        else:
            out.append(c)
    return tuple(out)


class FunctionField(TwistedField):
    """F_p(x) with S(x) = x^2 (a proper, non-surjective endomorphism)."""

    backend = "rational-function"
    is_finite = False
    endo_bijective = False

    def __init__(self, p, derivation=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = int(p)
        self.zero = RatFunc(self.p, ())
        self.one = RatFunc(self.p, (1,))
        self.x = RatFunc(self.p, (1, 0))
        if derivation is not None:
            derivation = self._check(derivation)
            if derivation == self.zero:
                derivation = None
        self.derivation = derivation

    def _key(self):
        return ("rational-function", self.p, self.derivation)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (FunctionField, (self.p, self.derivation))

    def descriptor(self):
        s = f"funfield({self.p}"
        if self.derivation is not None:
            s += f",der={self.format(self.derivation)}"
        return s + ")"

    def __repr__(self):
        return f"FunctionField({self.descriptor()})"

    @property
    def characteristic(self):
        return self.p

    def _check(self, a):
        if not isinstance(a, RatFunc) or a.p != self.p:
            raise FieldMismatchError(f"{a!r} is not an element of {self.descriptor()}")
        return a

    def poly(self, coeffs_high_first):
        return RatFunc(self.p, coeffs_high_first)

    def from_int(self, n):
        return RatFunc(self.p, (n % self.p,))

    def add(self, a, b):
        p = self.p
        num = gf_add(
            gf_mul(list(a.num), list(b.den), p, ZZ),
            gf_mul(list(b.num), list(a.den), p, ZZ),
            p,
            ZZ,
        )
        return RatFunc(p, num, gf_mul(list(a.den), list(b.den), p, ZZ))

    def neg(self, a):
        return RatFunc(self.p, gf_neg(list(a.num), self.p, ZZ), a.den)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p = self.p
        return RatFunc(
            p, gf_mul(list(a.num), list(b.num), p, ZZ), gf_mul(list(a.den), list(b.den), p, ZZ)
        )

    def inv(self, a):
        if not a.num:
            raise ZeroDivisionError("inverse of zero in F_p(x)")
        return RatFunc(self.p, a.den, a.num)

    def apply_endo(self, a, n=1):
        if n < 0:
            raise ValueError("endomorphism exponent must be >= 0")
        num, den = a.num, a.den
        for _ in range(n):
            num, den = _subst_square(num), _subst_square(den)
        return RatFunc(self.p, num, den)

    def endo_preimage(self, a):
        """b with S(b) = a, or None when a is not in S(K)."""
        num = _unsubst_square(a.num) if a.num else ()
        den = _unsubst_square(a.den)
        if num is None or den is None:
            return None
        return RatFunc(self.p, num, den)

    def elements(self):
        raise InfiniteFieldError("F_p(x) cannot be enumerated")

    enumerate_field = elements

    def _algebra(self):
        def symbol(name):
            if name != "x":
                raise KeyError(name)
            return self.x

        return _parse.Algebra(
            const=self.from_int,
            symbol=symbol,
            add=self.add,
            sub=self.sub,
            mul=self.mul,
            div=self.div,
            neg=self.neg,
            power=self.pow,
        )

    def format(self, a):
        if a.den == (1,):
            return _fmt_xpoly(a.num)
        num = _fmt_xpoly(a.num)
        if len([c for c in a.num if c]) > 1:
            num = f"({num})"
        den = _fmt_xpoly(a.den)
        if len([c for c in a.den if c]) > 1 or "^" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


# ---------------------------------------------------------------------------
# Q, trivial twist


class RationalField(TwistedField):
    backend = "rational-number"
    is_finite = False
    endo_bijective = True
    derivation = None
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational-number")

    def descriptor(self):
        return "rationals"

    def __repr__(self):
        return "RationalField()"

    def _check(self, a):
        if not isinstance(a, (Fraction, int)) or isinstance(a, bool):
            raise FieldMismatchError(f"{a!r} is not a rational number")
        return Fraction(a)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return Fraction(a) + b

    def neg(self, a):
        return -Fraction(a)

    def mul(self, a, b):
        return Fraction(a) * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def apply_endo(self, a, n=1):
        return Fraction(a)

    def endo_preimage(self, a):
        return Fraction(a)

    def D(self, a):
        return Fraction(0)

    def elements(self):
        raise InfiniteFieldError("Q cannot be enumerated")

    enumerate_field = elements

    def _algebra(self):
        def symbol(name):
            raise KeyError(name)

        return _parse.Algebra(
            const=Fraction,
            symbol=symbol,
            add=self.add,
            sub=self.sub,
            mul=self.mul,
            div=self.div,
            neg=self.neg,
            power=self.pow,
        )

    def format(self, a):
        return str(a)


# ---------------------------------------------------------------------------
# spec-level entry points


def field_arith(op, a, b=None, field=None):
    """Dispatch add/mul/neg/inv on a field; ``field`` is required for ints."""
    if field is None:
        raise ValueError("field_arith needs the field")
    a = field._check(a)
    if op in ("add", "mul"):
        if b is None:
            raise ValueError(f"{op} needs two operands")
        b = field._check(b)
        return field.add(a, b) if op == "add" else field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    raise ValueError(f"unknown field operation {op!r}")


def apply_endo(field, a, n=1):
    return field.apply_endo(field._check(a), n)


def endo_preimage(field, a):
    return field.endo_preimage(field._check(a))


def enumerate_field(field):
    return field.enumerate_field()


_DESC = re.compile(r"^\s*(gf|funfield|rationals)\s*(?:\((.*)\))?\s*$", re.I)


def parse_field(text):
    """Parse ``gf(p,e[,frob=k][,der=elem])``, ``funfield(p[,der=...])`` or ``rationals``."""
    m = _DESC.match(text)
    if not m:
        raise ParseError(f"unrecognised field descriptor {text!r}", text, 0)
    kind = m.group(1).lower()
    args = [a.strip() for a in (m.group(2) or "").split(",") if a.strip()]
    pos, kw = [], {}
    for a in args:
        if "=" in a:
            k, v = a.split("=", 1)
            kw[k.strip().lower()] = v.strip()
        else:
            pos.append(a)
    try:
        if kind == "rationals":
            return RationalField()
        if kind == "gf":
            if not 1 <= len(pos) <= 2:
                raise ParseError("gf needs gf(p,e)", text, 0)
            p = int(pos[0])
            e = int(pos[1]) if len(pos) > 1 else 1
            frob = int(kw.pop("frob", 1))
            der = kw.pop("der", None)
            if kw:
                raise ParseError(f"unknown option {sorted(kw)[0]!r}", text, 0)
            field = FiniteField(p, e, frob=frob)
            if der is not None:
                field = FiniteField(p, e, frob=frob, derivation=field.parse(der))
            return field
        if len(pos) != 1:
            raise ParseError("funfield needs funfield(p)", text, 0)
        p = int(pos[0])
        der = kw.pop("der", None)
        if kw:
            raise ParseError(f"unknown option {sorted(kw)[0]!r}", text, 0)
        field = FunctionField(p)
        if der is not None:
            field = FunctionField(p, derivation=field.parse(der))
        return field
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad field descriptor {text!r}: {exc}", text, 0) from exc
