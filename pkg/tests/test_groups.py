"""Core group engine: SNF, presentations, quotients, tensor/Tor, literals."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelk.groups import (
    DomainError,
    FgaGroup,
    IntMatrix,
    ParseError,
    direct_sum,
    element,
    element_order,
    free_content,
    from_presentation,
    is_isomorphic,
    parse_element,
    parse_group,
    quotient_by,
    reduce_vector_to_content,
    render_element,
    render_group,
    snf,
    tensor,
    tor,
    zero_element,
)
from abelk.verifier import finite_groups_up_to, tensor_oracle, tor_oracle


def G(text):
    return parse_group(text)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def test_snf_frozen_examples():
    s, u, v = snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert s.diagonal() == [2, 4]
    m = IntMatrix.identity(2)
    s, u, v = snf(m)
    assert s == m
    s, _, _ = snf(IntMatrix.from_rows([[0]]))
    assert s.to_rows() == [[0]]


def _check_snf_identities(m):
    s, u, v = snf(m)
    assert u.mul(m).mul(v) == s
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    diag = s.diagonal()
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    # zeros trail the positive entries
    assert nz == [d for d in diag[:len(nz)]]
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s.at(i, j) == 0


def test_snf_identities_random():
    rng = random.Random(20240817)
    for _ in range(400):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = IntMatrix(r, c, [rng.randint(-99, 99) for _ in range(r * c)])
        _check_snf_identities(m)


def test_snf_total_on_degenerate_shapes():
    _check_snf_identities(IntMatrix(1, 3, [0, 0, 0]))
    _check_snf_identities(IntMatrix(3, 1, [4, 6, 10]))
    _check_snf_identities(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))


# ---------------------------------------------------------------------------
# Presentations and canonical forms
# ---------------------------------------------------------------------------

def test_from_presentation_examples():
    assert from_presentation(IntMatrix.from_rows([[2, 0], [0, 3]])) == G("Z/2 + Z/3")
    assert from_presentation(IntMatrix.from_rows([[2, 4], [6, 8]])) == G("Z/2 + Z/4")
    assert from_presentation(IntMatrix(0, 2, [])) == G("Z^2")


def _random_unimodular(n, rng):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            q = rng.randint(-3, 3)
            for k in range(n):
                m[i][k] += q * m[j][k]
    return IntMatrix.from_rows(m)


def test_presentation_invariant_under_unimodular_changes():
    rng = random.Random(5)
    for _ in range(60):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = IntMatrix(r, c, [rng.randint(-9, 9) for _ in range(r * c)])
        base = from_presentation(m)
        left = _random_unimodular(r, rng).mul(m)
        right = m.mul(_random_unimodular(c, rng))
        assert from_presentation(left) == base
        assert from_presentation(right) == base


def test_is_isomorphic_examples():
    assert is_isomorphic(G("Z/2 + Z/3"), G("Z/6"))
    assert not is_isomorphic(G("Z/4"), G("Z/2 + Z/2"))
    assert is_isomorphic(G("Z + Z/2"), G("Z/2 + Z"))


def test_canonical_form_rejects_bad_data():
    with pytest.raises(DomainError):
        FgaGroup(0, [(4, (1,))])  # 4 is not prime
    with pytest.raises(DomainError):
        FgaGroup(0, [(3, (2, 1))])  # exponents must ascend
    with pytest.raises(DomainError):
        FgaGroup(0, [(3, ())])  # no empty exponent lists
    with pytest.raises(DomainError):
        FgaGroup(0, [(3, (1,)), (2, (1,))])  # primes must ascend


def test_direct_sum_examples():
    assert direct_sum(G("Z/2"), G("Z/2")).torsion == ((2, (1, 1)),)
    s = direct_sum(G("Z"), G("Z/3"))
    assert s.free_rank == 1 and s.torsion == ((3, (1,)),)
    assert direct_sum(G("Z/4 + Z/2"), G("Z/8")).torsion == ((2, (1, 2, 3)),)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 24), min_size=0, max_size=4),
       st.lists(st.integers(0, 24), min_size=0, max_size=4),
       st.lists(st.integers(0, 24), min_size=0, max_size=4))
def test_direct_sum_commutative_associative(a, b, c):
    ga, gb, gc = (FgaGroup.of_orders(*xs) for xs in (a, b, c))
    assert direct_sum(ga, gb) == direct_sum(gb, ga)
    assert direct_sum(direct_sum(ga, gb), gc) == direct_sum(ga, direct_sum(gb, gc))


# ---------------------------------------------------------------------------
# Quotients and element orders
# ---------------------------------------------------------------------------

def test_quotient_examples():
    g = G("Z/4 + Z/16")
    assert quotient_by(g, [element(g, (2, 4))]) == G("Z/2 + Z/8")
    assert quotient_by(g, [zero_element(g)]) == g
    z = G("Z")
    assert quotient_by(z, [element(z, (), (2,))]) == G("Z/2")


def test_quotient_shape_mismatch_is_domain_error():
    g, h = G("Z/4"), G("Z/8")
    with pytest.raises(DomainError):
        quotient_by(g, [element(h, (2,))])


def test_quotient_order_identity_exhaustive():
    # |G/<g>| * ord(g) = |G| for every element of every small finite group
    from abelk.groups import all_elements
    for g in finite_groups_up_to(24):
        n = g.order()
        for e in all_elements(g):
            q = quotient_by(g, [e])
            assert q.order() * element_order(e) == n


def test_element_order_examples():
    g = G("Z/4 + Z/16")
    assert element_order(element(g, (2, 4))) == 4
    assert element_order(zero_element(g)) == 1
    z = G("Z + Z/2")
    assert element_order(element(z, (1,), (1,))) is None


def test_element_coordinates_normalized():
    g = G("Z/4")
    assert element(g, (-1,)).torsion == (3,)
    assert element(g, (7,)).torsion == (3,)
    with pytest.raises(DomainError):
        element(g, (1,), (2,))  # no free generator


# ---------------------------------------------------------------------------
# Tensor and Tor
# ---------------------------------------------------------------------------

def test_tensor_tor_examples():
    assert tensor(G("Z/4"), G("Z/6")) == G("Z/2")
    assert tensor(G("Z + Z/2"), G("Z/4")) == G("Z/4 + Z/2")
    assert tor(G("Z/4"), G("Z/6")) == G("Z/2")
    assert tor(G("Z/8"), G("Z/4")) == G("Z/4")
    assert tor(G("Z"), G("Z/12 + Z^2")) == FgaGroup.trivial()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 16), max_size=3),
       st.lists(st.integers(0, 16), max_size=3),
       st.lists(st.integers(0, 16), max_size=3))
def test_tensor_tor_unit_and_distributivity(a, b, c):
    ga, gb, gc = (FgaGroup.of_orders(*xs) for xs in (a, b, c))
    z = FgaGroup.free(1)
    assert tensor(ga, z) == ga
    assert tor(ga, z) == FgaGroup.trivial()
    assert tensor(ga, direct_sum(gb, gc)) == direct_sum(tensor(ga, gb), tensor(ga, gc))
    assert tor(ga, direct_sum(gb, gc)) == direct_sum(tor(ga, gb), tor(ga, gc))
    assert tensor(ga, gb) == tensor(gb, ga)
    assert tor(ga, gb) == tor(gb, ga)


def test_tensor_tor_against_structure_constant_oracle():
    groups = finite_groups_up_to(30)
    for g in groups:
        for h in groups:
            assert tensor(g, h) == tensor_oracle(g, h)
            assert tor(g, h) == tor_oracle(g, h)


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------

def test_parse_group_examples():
    g = G("Z^2 + Z/8 + Z/3")
    assert g.free_rank == 2
    assert g.torsion == ((2, (3,)), (3, (1,)))
    assert G("Z/6").torsion == ((2, (1,)), (3, (1,)))
    assert G("Z/7+Z/7").torsion == ((7, (1, 1)),)
    assert G("0") == FgaGroup.trivial()


@pytest.mark.parametrize("bad", ["Z/1", "Z/0", "Z^0", "Z +", "+ Z", "Q", "", "Z//2"])
def test_parse_group_rejects(bad):
    with pytest.raises(ParseError):
        parse_group(bad)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_group("Z + Q")
    assert err.value.position == 4


def test_parse_element_examples():
    g = G("Z/4 + Z/16")
    assert parse_element("(2,4;)", g).torsion == (2, 4)
    h = G("Z/2 + Z")
    e = parse_element("(1; 2)", h)
    assert e.torsion == (1,) and e.free == (2,)
    assert parse_element("(;)", FgaGroup.trivial()).is_zero
    with pytest.raises(ParseError):
        parse_element("(1;)", h)  # arity mismatch
    with pytest.raises(ParseError):
        parse_element("(1, 2)", g)  # missing ';'


def test_render_parse_round_trip():
    rng = random.Random(11)
    for _ in range(120):
        orders = [rng.choice([0, 2, 3, 4, 5, 8, 9, 12, 27]) for _ in range(rng.randint(0, 4))]
        g = FgaGroup.of_orders(*orders)
        assert parse_group(render_group(g)) == g
        e = element(g, [rng.randint(-20, 20) for _ in g.factor_orders()],
                    [rng.randint(-20, 20) for _ in range(g.free_rank)])
        assert parse_element(render_element(e), g) == e


def test_invariant_factor_view():
    assert G("Z + Z/4 + Z/2 + Z/3").invariant_factors() == [0, 12, 2]
    assert FgaGroup.trivial().invariant_factors() == []
    inv = G("Z/8 + Z/4 + Z/9 + Z/5").invariant_factors()
    assert inv == [360, 4]
    assert all(inv[i] % inv[i + 1] == 0 for i in range(len(inv) - 1))


def test_free_content_reduction():
    assert reduce_vector_to_content((6, 10, 15)) == (1, 0, 0)
    assert reduce_vector_to_content((4, -6)) == (2, 0)
    assert reduce_vector_to_content((0, 0)) == (0, 0)
    g = G("Z^2 + Z/2")
    e = element(g, (1,), (4, 6))
    assert free_content(e) == 2
