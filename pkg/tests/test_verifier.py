"""Catalog enumeration, automorphism oracles, exhaustive checks, suites."""

import itertools

import pytest

from abelk.groups import (
    DomainError,
    FgaGroup,
    all_elements,
    element,
    parse_group,
    render_element,
)
from abelk.verifier import (
    DEFAULT_BOUNDS,
    SUITE_NAMES,
    CatalogBounds,
    aut_order_formula,
    aut_orbit_partition,
    brute_force_aut,
    check_cancellation,
    check_lemma_ele,
    count_automorphisms,
    enumerate_groups,
    enumerate_triples,
    finite_groups_up_to,
    run_suite,
    unit_transversal,
)

SMALL = CatalogBounds(primes=(2, 3), max_exponent=2, max_factors_per_prime=1,
                      max_free_rank=1, max_unit_content=2)


def G(text):
    return parse_group(text)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerate_groups_examples():
    b = CatalogBounds(primes=(2,), max_exponent=1, max_factors_per_prime=1,
                      max_free_rank=0)
    assert list(enumerate_groups(b)) == [FgaGroup.trivial(), G("Z/2")]
    b = CatalogBounds(primes=(2,), max_exponent=2, max_factors_per_prime=2,
                      max_free_rank=0)
    six = list(enumerate_groups(b))
    assert len(six) == 6
    assert set(six) == {FgaGroup.trivial(), G("Z/2"), G("Z/4"), G("Z/2 + Z/2"),
                        G("Z/2 + Z/4"), G("Z/4 + Z/4")}
    with_rank = list(enumerate_groups(
        CatalogBounds(primes=(2,), max_exponent=2, max_factors_per_prime=2,
                      max_free_rank=1)))
    assert len(with_rank) == 12
    assert set(with_rank) == set(six) | {FgaGroup.free(1).__class__._mk(1, g.torsion)
                                         for g in six}


def test_enumerate_groups_no_duplicates_and_deterministic():
    seen = set()
    for g in enumerate_groups(DEFAULT_BOUNDS):
        assert g not in seen
        seen.add(g)
    assert list(enumerate_groups(DEFAULT_BOUNDS)) == list(enumerate_groups(DEFAULT_BOUNDS))
    assert len(seen) == 300


def test_unit_transversal_examples():
    assert [render_element(u) for u in unit_transversal(G("Z/2"), 4)] == \
        ["(0;)", "(1;)"]
    assert [render_element(u) for u in unit_transversal(G("Z/4"), 4)] == \
        ["(0;)", "(1;)", "(2;)"]
    assert [render_element(u) for u in unit_transversal(G("Z"), 4)] == \
        ["(;0)", "(;1)", "(;2)", "(;3)", "(;4)"]


def test_unit_transversal_is_a_transversal():
    # covers every orbit exactly once (checked against the orbit partition)
    from abelk.primary import aut_sends
    for g in [G("Z/8"), G("Z/2 + Z/4"), G("Z/4 + Z/4"), G("Z/2 + Z/9")]:
        units = unit_transversal(g, 4)
        part = aut_orbit_partition(g)
        assert len(units) == len(set(part.values()))
        assert len({part[u.torsion] for u in units}) == len(units)
        for u in units:
            for v in units:
                assert aut_sends(g, u, v) == (u == v)


def test_enumerate_triples_counts():
    triples = list(enumerate_triples(SMALL))
    groups = list(enumerate_groups(SMALL))
    pointed = sum(len(unit_transversal(k0, SMALL.max_unit_content))
                  for k0 in groups)
    assert len(triples) == pointed * len(groups)
    # deterministic order
    again = list(enumerate_triples(SMALL))
    assert triples == again


def test_finite_groups_up_to():
    names = {g for g in finite_groups_up_to(8)}
    assert G("Z/8") in names and G("Z/2 + Z/4") in names and G("Z/6") in names
    assert all(g.order() <= 8 for g in names)
    only23 = finite_groups_up_to(10, {2, 3})
    assert all(set(g.primes()) <= {2, 3} for g in only23)


# ---------------------------------------------------------------------------
# Automorphism oracles
# ---------------------------------------------------------------------------

def _canon_partition(part):
    orbits = {}
    for k, v in part.items():
        orbits.setdefault(v, []).append(k)
    return sorted(tuple(sorted(o)) for o in orbits.values())


def test_orbit_methods_agree():
    for g in finite_groups_up_to(16) + [G("Z/2 + Z/2 + Z/2 + Z/2"),
                                        G("Z/4 + Z/4"), G("Z/3 + Z/9"),
                                        G("Z/2 + Z/4 + Z/8")]:
        if g.is_trivial:
            continue
        exact = aut_orbit_partition(g, "exhaustive")
        bfs = aut_orbit_partition(g, "generators")
        assert _canon_partition(exact) == _canon_partition(bfs), g


def test_automorphism_count_matches_formula_up_to_32():
    for g in finite_groups_up_to(32):
        assert count_automorphisms(g) == aut_order_formula(g), g


def test_brute_force_examples():
    g = G("Z/4 + Z/2")  # canonical coordinates: (Z/2, Z/4)
    assert not brute_force_aut(g, element(g, (0, 2)), element(g, (1, 0)))
    assert brute_force_aut(g, element(g, (0, 1)), element(g, (1, 1)))
    e = element(g, (1, 3))
    assert brute_force_aut(g, e, e)
    assert count_automorphisms(g) == 8


def test_brute_force_free_part():
    from abelk.primary import aut_sends
    g = G("Z + Z/4")
    cases = [((0,), (1,), (2,), (1,)),   # equivalent
             ((0,), (2,), (1,), (2,)),   # not equivalent
             ((2,), (1,), (0,), (3,))]
    for t1, f1, t2, f2 in cases:
        e1, e2 = element(g, t1, f1), element(g, t2, f2)
        expected = aut_sends(g, e1, e2)
        assert brute_force_aut(g, e1, e2, coeff_bound=4) == expected
    zz = G("Z^2")
    assert brute_force_aut(zz, element(zz, (), (2, 4)), element(zz, (), (0, 2)),
                           coeff_bound=2)
    with pytest.raises(DomainError):
        brute_force_aut(zz, element(zz, (), (1, 0)), element(zz, (), (0, 1)),
                        coeff_bound=0)


def test_brute_force_agreement_sweep():
    for g in finite_groups_up_to(18):
        elems = list(all_elements(g))
        from abelk.primary import aut_sends
        for e1, e2 in itertools.product(elems, repeat=2):
            assert brute_force_aut(g, e1, e2) == aut_sends(g, e1, e2)


# ---------------------------------------------------------------------------
# Standalone checks
# ---------------------------------------------------------------------------

def test_lemma_ele_small_bounds():
    r = check_lemma_ele(0)
    assert r.passed and r.cases_checked == 1
    r = check_lemma_ele(5)
    assert r.passed and r.cases_checked == 6 ** 4


def test_cancellation_small():
    b = CatalogBounds(primes=(2,), max_exponent=2, max_factors_per_prime=2)
    assert check_cancellation(2, b, 0, 0).passed
    assert check_cancellation(2, b, 2, 0).passed
    with pytest.raises(DomainError):
        check_cancellation(2, b, 1, 0)  # parity violation
    with pytest.raises(DomainError):
        check_cancellation(2, b, -2, 0)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", [n for n in SUITE_NAMES
                                  if n not in ("kmc-oracle", "kunneth-oracle")])
def test_suites_pass_at_small_bounds(name):
    r = run_suite(name, SMALL)
    assert r.passed, r.render_text()
    assert r.cases_checked > 0
    assert r.suite == name


def test_order_capped_suites_pass_at_small_bounds():
    r = run_suite("kmc-oracle", CatalogBounds(primes=(2, 3), max_order=12))
    assert r.passed and r.cases_checked > 0
    r = run_suite("kunneth-oracle", CatalogBounds(max_order=12))
    assert r.passed and r.cases_checked > 0


def test_suites_deterministic():
    a = run_suite("involution", SMALL)
    b = run_suite("involution", SMALL)
    assert (a.cases_checked, a.failures) == (b.cases_checked, b.failures)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("no-such-suite", SMALL)


def test_report_shapes():
    r = run_suite("vn", SMALL)
    j = r.to_json()
    assert set(j) == {"suite", "cases_checked", "failures", "failure_count",
                      "elapsed_seconds", "passed"}
    assert "suite vn: PASS" in r.render_text()
