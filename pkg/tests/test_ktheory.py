"""K-invariant calculus: cones, duals, Kunneth, reciprocity, trichotomy."""

import pytest

from abelk.groups import (
    DomainError,
    FgaGroup,
    element,
    element_order,
    parse_element,
    parse_group,
    quotient_by,
)
from abelk.ktheory import (
    ClassifyVerdict,
    KPair,
    KTriple,
    aut_homotopy,
    aut_homotopy_closed_form,
    check_vn,
    classify_triples,
    cone_k,
    kunneth_pair,
    pointed_isomorphic,
    reciprocal,
    sw_dual_pair,
)

TRIVIAL = FgaGroup.trivial()


def G(text):
    return parse_group(text)


def T(k0, unit, k1):
    g0 = parse_group(k0)
    return KTriple(g0, parse_element(unit, g0), parse_group(k1))


def cyclic_unit_triple(n, k1="0"):
    """(Z/n, class of 1, K1) with the unit written in CRT coordinates."""
    g = FgaGroup.of_orders(n)
    return KTriple(g, element(g, (1,) * len(g.factor_orders())), parse_group(k1))


O2 = T("0", "(;)", "0")
O_INF = T("Z", "(;1)", "0")


# ---------------------------------------------------------------------------
# Mapping cone
# ---------------------------------------------------------------------------

def test_cone_examples():
    assert cone_k(T("Z", "(;2)", "0")) == KPair(TRIVIAL, G("Z/2"))
    assert cone_k(T("Z/2", "(1;)", "0")) == KPair(G("Z"), TRIVIAL)
    assert cone_k(O2) == KPair(G("Z"), TRIVIAL)


def test_cone_rank_identity():
    cases = [T("Z^2 + Z/4", "(2;3,0)", "Z + Z/3"),
             T("Z/8 + Z/3", "(2,1;)", "Z^2"),
             T("Z + Z/9", "(3;0)", "Z/2"),
             O2, O_INF]
    for t in cases:
        c = cone_k(t)
        f0a, f1a = t.k0.free_rank, t.k1.free_rank
        c0, c1 = c.k0.free_rank, c.k1.free_rank
        assert f1a - c0 + 1 - f0a + c1 == 0
        expected = (1, 0) if element_order(t.unit) is not None else (0, 1)
        assert (c0 - f1a, f0a - c1) == expected


def test_unit_must_live_in_k0():
    g = G("Z/4")
    with pytest.raises(DomainError):
        KTriple(g, element(G("Z/2"), (1,)), TRIVIAL)


# ---------------------------------------------------------------------------
# Dual and Kunneth
# ---------------------------------------------------------------------------

def test_dual_examples():
    assert sw_dual_pair(KPair(G("Z + Z/2"), G("Z/3"))) == KPair(G("Z + Z/3"), G("Z/2"))
    assert sw_dual_pair(KPair(G("Z"), TRIVIAL)) == KPair(G("Z"), TRIVIAL)
    for n in range(2, 13):
        assert sw_dual_pair(KPair(FgaGroup.of_orders(n), TRIVIAL)) == \
            KPair(TRIVIAL, FgaGroup.of_orders(n))


def test_dual_is_an_involution_on_pairs():
    pairs = [KPair(G("Z^2 + Z/8"), G("Z/9 + Z/2")), KPair(TRIVIAL, G("Z/5")),
             KPair(G("Z/2 + Z/4"), G("Z + Z/3"))]
    for p in pairs:
        assert sw_dual_pair(sw_dual_pair(p)) == p


def test_kunneth_examples():
    one = KPair(G("Z"), TRIVIAL)
    for p in [KPair(G("Z^2 + Z/4"), G("Z/3")), KPair(TRIVIAL, G("Z/8"))]:
        assert kunneth_pair(one, p) == p
        assert kunneth_pair(p, one) == p
    assert kunneth_pair(KPair(G("Z/2"), TRIVIAL), KPair(G("Z/4"), TRIVIAL)) == \
        KPair(G("Z/2"), G("Z/2"))
    assert kunneth_pair(KPair(G("Z + Z/2"), TRIVIAL), KPair(TRIVIAL, G("Z/4"))) == \
        KPair(G("Z/2"), G("Z/4 + Z/2"))


# ---------------------------------------------------------------------------
# Reciprocal
# ---------------------------------------------------------------------------

def test_cuntz_pairing():
    for n in range(1, 13):
        t = cyclic_unit_triple(n)
        partner = T("Z", f"(;{n})", "0")
        assert pointed_isomorphic(reciprocal(t), partner)
        assert pointed_isomorphic(reciprocal(partner), t)


def test_reciprocal_worked_example():
    t = T("Z/4", "(2;)", "Z/3")
    rt = reciprocal(t)
    assert rt.k0 == G("Z + Z/2")
    assert rt.k1 == G("Z/3")
    # unit witness: quotient of K0(B) by it recovers Z/4
    assert quotient_by(rt.k0, (rt.unit,)) == G("Z/4")
    assert rt.unit.torsion == (1,) and rt.unit.free == (2,)


def test_reciprocal_degenerate_pair():
    assert pointed_isomorphic(reciprocal(O_INF), O2)
    assert pointed_isomorphic(reciprocal(O2), O_INF)


def test_reciprocal_involution_spot():
    cases = [T("Z^2 + Z/8", "(4;1,2)", "Z/9 + Z"),
             T("Z/12", "(1,1;)", "Z + Z/2"),
             T("Z + Z/2 + Z/4", "(1,2;2)", "0"),
             T("Z/8 + Z/27", "(2,9;)", "Z/4")]
    for t in cases:
        rt = reciprocal(t)
        assert pointed_isomorphic(reciprocal(rt), t)
        assert classify_triples(t, rt) is ClassifyVerdict.RECIPROCAL
        assert aut_homotopy(rt) == aut_homotopy(t)


def test_reciprocal_torsion_flip():
    cases = [T("Z/4", "(2;)", "0"), T("Z + Z/4", "(2;3)", "Z/5"), O2]
    for t in cases:
        rt = reciprocal(t)
        if rt.k0.is_trivial:
            continue
        assert (element_order(t.unit) is not None) == (element_order(rt.unit) is None)


# ---------------------------------------------------------------------------
# Homotopy profiles
# ---------------------------------------------------------------------------

def test_homotopy_spot_values():
    prof = aut_homotopy(O_INF)
    assert prof.pi_odd == TRIVIAL and prof.pi_even == TRIVIAL
    for n in range(2, 13):
        prof = aut_homotopy(cyclic_unit_triple(n))
        assert prof.pi_odd == FgaGroup.of_orders(n)
        assert prof.pi_even == TRIVIAL
    prof = aut_homotopy(T("Z", "(;2)", "0"))
    assert prof.pi_odd == G("Z/2") and prof.pi_even == TRIVIAL


def test_closed_form_matches_kunneth_route():
    cases = [O2, O_INF,
             T("Z", "(;2)", "0"),
             T("Z/4", "(2;)", "Z/3"),
             T("Z^2 + Z/8", "(4;1,2)", "Z/9 + Z"),
             T("Z/12", "(1,1;)", "Z + Z/2"),
             T("Z + Z/2 + Z/9", "(1,3;2)", "Z/4 + Z/2"),
             T("Z^2", "(;6,4)", "Z/2 + Z/3")]
    for t in cases:
        assert aut_homotopy_closed_form(t) == aut_homotopy(t)


# ---------------------------------------------------------------------------
# Trichotomy and the interleaving predicate
# ---------------------------------------------------------------------------

def test_classify_examples():
    assert classify_triples(T("Z/2", "(1;)", "0"), T("Z", "(;2)", "0")) is \
        ClassifyVerdict.RECIPROCAL
    assert classify_triples(O_INF, O_INF) is ClassifyVerdict.ISOMORPHIC
    assert classify_triples(T("Z/2", "(1;)", "0"), T("Z/3", "(1;)", "0")) is \
        ClassifyVerdict.DISTINCT


def test_classify_uses_pointed_isomorphism():
    # same groups, units in the same orbit but with different coordinates
    g = G("Z/4 + Z/2")
    a = KTriple(g, element(g, (0, 1)), TRIVIAL)
    b = KTriple(g, element(g, (1, 1)), TRIVIAL)
    assert classify_triples(a, b) is ClassifyVerdict.ISOMORPHIC
    # same groups, units in different orbits
    c = KTriple(g, element(g, (0, 2)), TRIVIAL)
    d = KTriple(g, element(g, (1, 0)), TRIVIAL)
    assert classify_triples(c, d) is ClassifyVerdict.DISTINCT


def test_check_vn_examples():
    assert check_vn(T("Z/4", "(2;)", "0"))
    assert check_vn(T("Z", "(;2)", "0"))
    assert check_vn(O2)
    assert check_vn(T("Z^2 + Z/8 + Z/9", "(2,3;6,0)", "Z/5"))
