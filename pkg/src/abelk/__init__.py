"""Exact finitely-generated-abelian-group calculus and the reciprocity
calculus for K-invariant triples of unital Kirchberg algebras."""

from .groups import (
    DomainError,
    FgaGroup,
    GroupElement,
    IntMatrix,
    ParseError,
    direct_sum,
    element,
    element_order,
    from_presentation,
    is_isomorphic,
    parse_element,
    parse_group,
    quotient_by,
    render_element,
    render_group,
    snf,
    tensor,
    tor,
    zero_element,
)
from .ktheory import (
    ClassifyVerdict,
    HomotopyProfile,
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
from .primary import (
    NormalFormData,
    NormalFormMode,
    PExponentProfile,
    aut_sends,
    g1_normal_form,
    g2_quotient_closed_form,
    g3_normal_form,
    g4_quotient_closed_form,
    i_intersect,
    invariant_I,
    primary_part,
    satisfies_star,
    satisfies_star_star,
)
from .verifier import (
    SUITE_NAMES,
    CatalogBounds,
    VerificationReport,
    brute_force_aut,
    check_cancellation,
    check_lemma_ele,
    enumerate_groups,
    enumerate_triples,
    run_all_suites,
    run_suite,
)

__version__ = "0.1.0"
