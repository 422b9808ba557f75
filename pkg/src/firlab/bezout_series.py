"""The ring Z + xQ[[x]] truncated at order N.

Series with integer constant term and rational higher coefficients.  Every
nonzero f is a_m x^m u with u a unit, so principal ideals are a x^m R with
a > 0 (a an integer when m = 0); sums and intersections of two of them are
again principal, while x = 2^n (x/2^n) has right divisors of every length.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _parse
from .errors import ParseError

DEFAULT_ORDER = 16


class TruncatedSeries:
    """a_0 + a_1 x + ... + a_N x^N, exact rationals; ``strict`` enforces a_0 ∈ Z."""

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs, N=DEFAULT_ORDER, strict=True):
        cs = [Fraction(c) for c in coeffs][: N + 1]
        cs += [Fraction(0)] * (N + 1 - len(cs))
        if strict and cs[0].denominator != 1:
            raise ValueError(f"constant term {cs[0]} is not an integer")
        self.N = N
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, N=DEFAULT_ORDER):
        return cls([0, 1], N)

    @classmethod
    def const(cls, c, N=DEFAULT_ORDER, strict=True):
        return cls([c], N, strict)

    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            if other.N != self.N:
                raise ValueError("series truncated at different orders")
            return other
        return TruncatedSeries([other], self.N, strict=False)

    def _make(self, cs):
        return TruncatedSeries(cs, self.N, strict=False)

    def __add__(self, other):
        o = self._other(other)
        return self._make([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._make([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        N = self.N
        out = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    if o.coeffs[j]:
                        out[i + j] += a * o.coeffs[j]
        return self._make(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        return _parse.generic_power(lambda a, b: a * b, self._make([1]), self, n)

    def inverse(self):
        """Inverse in Q[[x]]; needs a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [Fraction(0)] * (self.N + 1)
        out[0] = 1 / a0
        for k in range(1, self.N + 1):
            s = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -s / a0
        return self._make(out)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.N == other.N and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def in_ring(self):
        return self.coeffs[0].denominator == 1

    def is_zero(self):
        return not any(self.coeffs)

    @property
    def order(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def is_unit(self):
        return self.coeffs[0] in (1, -1)

    def shift_down(self, m):
        """f / x^m, known to order N - m (the tail is padded with zeros)."""
        return self._make(list(self.coeffs[m:]))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"TruncatedSeries({self}, N={self.N})"


def parse_series(text, N=DEFAULT_ORDER):
    """Parse ``2 + 3/2*x + x^2``; the constant term must come out integral."""
    x = TruncatedSeries.x(N)

    def symbol(name):
        if name != "x":
            raise KeyError(name)
        return x

    def div(a, b):
        if b.order != 0:
            raise ZeroDivisionError
        return a / b

    alg = _parse.Algebra(
        const=lambda n: TruncatedSeries.const(n, N),
        symbol=symbol,
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        mul=lambda a, b: a * b,
        div=div,
        neg=lambda a: -a,
        power=lambda a, n: a ** n,
    )
    val = _parse.evaluate(text, alg)
    if not val.in_ring():
        raise ParseError(f"constant term {val.coeffs[0]} of {text!r} is not an integer", text, 0)
    return TruncatedSeries(val.coeffs, N)


# ---------------------------------------------------------------------------
# normal forms and principal ideals


@dataclass(frozen=True)
class NormalForm:
    m: int
    a: Fraction
    unit: TruncatedSeries


def normal_form(f):
    """(m, a_m, u) with f = a_m x^m u to order N and u(0) = 1."""
    if f.is_zero():
        raise ZeroDivisionError("zero series has no normal form")
    m = f.order
    a = f.coeffs[m]
    u = f.shift_down(m) * Fraction(1, 1) / a
    return NormalForm(m, a, TruncatedSeries(u.coeffs, f.N))


@dataclass(frozen=True, order=True)
class PrincipalIdeal:
    """a x^m R with a > 0 (an integer when m = 0)."""

    m: int
    a: Fraction

    def __post_init__(self):
        a = abs(Fraction(self.a))
        if a == 0:
            raise ValueError("zero ideal is not handled")
        if self.m < 0:
            raise ValueError("negative order")
        if self.m == 0 and a.denominator != 1:
            raise ValueError("an order-0 generator must be an integer")
        object.__setattr__(self, "a", a)

    def generator(self, N=DEFAULT_ORDER):
        return TruncatedSeries([0] * self.m + [self.a], N)

    def contains(self, other):
        """other ⊆ self."""
        if other.m > self.m:
            return True
        if other.m < self.m:
            return False
        return (other.a / self.a).denominator == 1

    def contains_series(self, f):
        if f.is_zero():
            return True
        nf = normal_form(f)
        return self.contains(PrincipalIdeal(nf.m, nf.a))

    def __str__(self):
        a = self.a
        if self.m == 0:
            return f"{a}R"
        mono = "x" if self.m == 1 else f"x^{self.m}"
        return f"{mono}R" if a == 1 else f"({a})*{mono}R"


def ideal_of(f):
    nf = normal_form(f)
    return PrincipalIdeal(nf.m, nf.a)


def _common(a, b):
    e = math.lcm(a.denominator, b.denominator)
    return int(a * e), int(b * e), e


def ideal_sum(A, B):
    if A.m > B.m:
        A, B = B, A
    if A.m < B.m:
        out = A
    elif A.m == 0:
        out = PrincipalIdeal(0, math.gcd(int(A.a), int(B.a)))
    else:
        c, d, e = _common(A.a, B.a)
        out = PrincipalIdeal(A.m, Fraction(math.gcd(c, d), e))
    _check_sum(A, B, out)
    return out


def ideal_intersection(A, B):
    if A.m > B.m:
        A, B = B, A
    if A.m < B.m:
        out = B
    elif A.m == 0:
        out = PrincipalIdeal(0, math.lcm(int(A.a), int(B.a)))
    else:
        c, d, e = _common(A.a, B.a)
        out = PrincipalIdeal(A.m, Fraction(math.lcm(c, d), e))
    _check_intersection(A, B, out)
    return out


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _check_sum(A, B, S):
    # A, B ⊆ S, and the generator of S is r*gA + s*gB with r, s ∈ R
    if not (S.contains(A) and S.contains(B)):
        raise AssertionError(f"{S} does not contain {A} and {B}")
    if A.m < B.m or A.m != B.m:
        return
    c, d, e = _common(A.a, B.a)
    g, r, s = _ext_gcd(c, d)
    lhs = A.generator() * r + B.generator() * s
    if lhs != S.generator():
        raise AssertionError("sum generator is not a combination of the inputs")


def _check_intersection(A, B, I):
    if not (A.contains(I) and B.contains(I)):
        raise AssertionError(f"{I} is not inside {A} and {B}")
    # nothing strictly larger at the same order sits in both
    if A.m == B.m:
        for k in range(2, 50):
            if I.m == 0 and I.a % k:
                continue
            bigger = PrincipalIdeal(I.m, I.a / k)
            if A.contains(bigger) and B.contains(bigger):
                raise AssertionError(f"{bigger} lies in both inputs and contains {I}")


# ---------------------------------------------------------------------------
# atoms and the non-atomicity witness


def is_series_atom(f):
    """Atoms are exactly the series with order 0 and |a_0| prime."""
    if f.is_zero():
        return False
    nf = normal_form(f)
    if nf.m != 0:
        return False
    n = abs(int(nf.a))
    return n > 1 and all(n % k for k in range(2, math.isqrt(n) + 1))


def nonatomic_witness(n, N=DEFAULT_ORDER):
    """(2^n, x/2^n): x is a product of n atoms 2 and one more factor."""
    if n < 0:
        raise ValueError("n must be >= 0")
    factor = TruncatedSeries.const(2 ** n, N)
    cofactor = TruncatedSeries([0, Fraction(1, 2 ** n)], N)
    if factor * cofactor != TruncatedSeries.x(N):
        raise AssertionError("witness does not reassemble x")
    return factor, cofactor


def witness_chain(n, N=DEFAULT_ORDER):
    """The chain x = 2 * 2 * ... * 2 * (x/2^n), each 2 checked to be an atom."""
    two = TruncatedSeries.const(2, N)
    if not is_series_atom(two):
        raise AssertionError("2 is not an atom")
    factor, cofactor = nonatomic_witness(n, N)
    chain = [two] * n + [cofactor]
    prod = TruncatedSeries.const(1, N)
    for c in chain:
        prod = prod * c
    if prod != TruncatedSeries.x(N):
        raise AssertionError("chain does not reassemble x")
    return chain


def prime_atom_prefix(count):
    """First ``count`` primes; each is an atom and distinct ones are comaximal."""
    primes = []
    k = 2
    while len(primes) < count:
        if all(k % p for p in primes):
            primes.append(k)
        k += 1
    for i, p in enumerate(primes):
        if not is_series_atom(TruncatedSeries.const(p)):
            raise AssertionError(f"{p} is not an atom")
        for q in primes[:i]:
            if ideal_sum(PrincipalIdeal(0, p), PrincipalIdeal(0, q)) != PrincipalIdeal(0, 1):
                raise AssertionError(f"{p}R + {q}R != R")
    return primes
