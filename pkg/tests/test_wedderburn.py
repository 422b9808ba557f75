import pytest

from firlab import parse_field, parse_poly
from firlab import ore_poly as O
from firlab import similarity as S
from firlab import wedderburn as W

import gf4_oracle as G


def test_fully_reducible_examples(P):
    assert W.is_fully_reducible(P("t^2+1"))
    assert W.is_fully_reducible(P("t^2+w"))
    assert not W.is_fully_reducible(O.mul(P("t+w"), P("t+1")))


def test_fully_reducible_against_oracle(gf4):
    for d in (1, 2):
        for f in O.monic_polys(gf4, d):
            tf = tuple(int(c) for c in f.coeffs)
            assert W.is_fully_reducible(f) == G.is_fully_reducible(tf)


def test_minimal_decomposition(P):
    assert sorted(str(p) for p in W.minimal_decomposition(P("t^2+1"))) == ["t + 1", "t + w"]
    assert [str(p) for p in W.minimal_decomposition(P("t^2+w"))] == ["t^2 + w"]
    F5 = parse_field("gf(5,1,frob=0)")
    dec = W.minimal_decomposition(parse_poly(F5, "t^2 - 1"))
    assert sorted(str(p) for p in dec) == ["t + 1", "t + 4"]


def test_right_decomposition(P):
    f = P("t^2+1")
    right = W.right_decomposition(f)
    left = W.minimal_decomposition(f)
    assert len(right) == 2
    assert all(any(S.is_similar(p, q) for q in left) for p in right)
    assert W.verify_right_intersection(f, right)
    F5 = parse_field("gf(5,1,frob=0)")
    assert sorted(str(p) for p in W.right_decomposition(parse_poly(F5, "t^2 - 1"))) == ["t + 1", "t + 4"]


def test_report_values(P):
    rep = W.wedderburn_report(P("t^2+1"))
    assert rep.consistent and rep.fully_reducible
    assert rep.witnesses["ii"] == {"rank": 2, "length": 2}
    rep = W.wedderburn_report(O.mul(P("t+w"), P("t+1")))
    assert rep.consistent and not rep.fully_reducible
    assert rep.as_dict()["verdicts"]["viii"] is False


def test_report_consistency_degree_three(gf4):
    for f in O.monic_polys(gf4, 3):
        assert W.wedderburn_report(f).consistent


def test_idealizer(P, gf4):
    I0 = W.idealizer(P("t+1"), 0)
    assert [str(u) for u in I0.basis] == ["1"]
    I1 = W.idealizer(P("t"), 1)
    assert len(I1.basis) == 4  # all of degree <= 1, dimension 2*2 over F_2


def test_two_sided_sum(P):
    x, y = W.two_sided_witness(P("t+1"), P("t+1"), 0)
    assert x * P("t+1") + P("t+1") * y == P("1")
    assert (str(x), str(y)) == ("w + 1", "w")
    assert W.in_two_sided_sum(P("w"), P("t+1"), 0)


def test_product_check(P):
    rep = W.product_check(P("t+1"), P("t+1"))
    assert rep.consistent and all(rep.verdicts.values())
    rep = W.product_check(P("t+w"), P("t+1"))
    assert rep.consistent and not rep.verdicts["i"]
    with pytest.raises(ValueError):
        W.product_check(P("w"), P("t"))


def test_product_check_consistent_on_pairs(gf4):
    linear = O.enumerate_atoms(gf4, 1)
    quad = O.enumerate_atoms(gf4, 2)
    for a in linear + quad[:2]:
        for b in linear:
            assert W.product_check(a, b).consistent


def test_i_a_routes_agree(P, gf4):
    a = P("t+1")
    enumerated = W.i_a_set(a, 1)
    assert sorted(enumerated.to_strings()) == ["t", "t + 1"]
    for q in O.enumerate_atoms(gf4, 1):
        assert W.in_i_a(q, a) == (q in enumerated)


def test_i_a_for_unit(P, gf4):
    assert len(W.i_a_set(P("1"), 1)) == 4


def test_product_rank(P):
    rep = W.product_rank_check(P("t+w"), P("t+1"))
    assert (rep.lhs, rep.rank_a, rep.rank_meet) == (1, 1, 0)
    rep = W.product_rank_check(P("t+1"), P("t+1"))
    assert (rep.lhs, rep.rank_a, rep.rank_meet) == (2, 1, 1)
