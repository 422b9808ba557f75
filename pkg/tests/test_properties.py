"""Ring and length laws on random inputs drawn by hypothesis."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from firlab import SkewPoly, parse_field
from firlab import algset as A
from firlab import ore_poly as O
from firlab import similarity as S

FIELDS = {d: parse_field(d) for d in ("gf(2,2)", "gf(2,3)", "gf(3,2)", "gf(2,2,der=w)")}

common = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def polys(draw, field, max_degree=3, monic=False, nonzero=False):
    F = FIELDS[field]
    d = draw(st.integers(0 if not monic else 1, max_degree))
    cs = draw(st.lists(st.integers(0, F.q - 1), min_size=d + 1, max_size=d + 1))
    if monic:
        cs[-1] = 1
    elif nonzero and not any(cs):
        cs[0] = 1
    return SkewPoly(F, cs)


field_names = st.sampled_from(sorted(FIELDS))


@common
@given(st.data(), field_names)
def test_ring_axioms(data, name):
    a, b, c = (data.draw(polys(name)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@common
@given(st.data(), field_names)
def test_division_identities(data, name):
    f = data.draw(polys(name, 5))
    g = data.draw(polys(name, 3, nonzero=True))
    q, r = O.right_divmod(f, g)
    assert q * g + r == f and r.degree < g.degree
    q, r = O.left_divmod(f, g)
    assert g * q + r == f and r.degree < g.degree


@common
@given(st.data(), st.sampled_from(["gf(2,2)", "gf(2,3)"]))
def test_length_laws(data, name):
    a = data.draw(polys(name, 3, monic=True))
    b = data.draw(polys(name, 3, monic=True))
    assert O.length(a * b) == O.length(a) + O.length(b)
    assert O.length(O.llcm(a, b)) + O.length(O.rgcd(a, b)[0]) == O.length(a) + O.length(b)
    assert O.llcm(a, b).degree + O.rgcd(a, b)[0].degree == a.degree + b.degree


@common
@given(st.data(), st.sampled_from(["gf(2,2)", "gf(2,3)"]))
def test_gcd_bezout(data, name):
    a = data.draw(polys(name, 3, nonzero=True))
    b = data.draw(polys(name, 3, nonzero=True))
    d, u, v = O.rgcd(a, b)
    assert u * a + v * b == d
    assert O.right_divides(d, a) and O.right_divides(d, b)
    g, m = O.lgcd_rlcm(a, b)
    assert O.left_divides(g, a) and O.left_divides(g, b)
    assert O.left_divides(a, m) and O.left_divides(b, m)
    assert g.degree + m.degree == a.degree + b.degree


@common
@given(st.data())
def test_conjugates_are_similar(data):
    name = "gf(2,2)"
    a = data.draw(polys(name, 2, monic=True))
    u = data.draw(polys(name, 2, monic=True))
    c = O.conj(a, u)
    if not c.is_unit():
        # R/Ra^u embeds into R/Ra; equal length means similar
        assert O.length(c) <= O.length(a)
        if O.length(c) == O.length(a):
            assert S.is_similar(a, c)


@common
@given(st.data())
def test_closure_is_idempotent(data):
    F = FIELDS["gf(2,2)"]
    atoms = O.enumerate_atoms(F, 1) + O.enumerate_atoms(F, 2)
    picks = data.draw(st.lists(st.sampled_from(atoms), max_size=3))
    D = A.AlgebraicSet(picks, F)
    C = A.closure(D)
    assert A.closure(C) == C
    assert A.rank(C) == A.rank(D)
    assert C.llcm == D.llcm
