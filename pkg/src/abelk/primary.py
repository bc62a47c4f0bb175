"""Primary (p-local) invariants and normal forms.

For a finite abelian p-group the multiset of prime-power exponents of its
cyclic factors is a complete invariant.  This module computes that
invariant, the interleaving conditions on pairs of p-groups that govern
which groups arise as quotients by a single element, the constructive
normal form of an element (plain and augmented by a free generator), the
closed-form quotients read off from those normal forms, and the
automorphism-existence criterion "same order and isomorphic quotients".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    DomainError,
    FgaGroup,
    GroupElement,
    direct_sum,
    element,
    element_order,
    quotient_by,
)


# ---------------------------------------------------------------------------
# Exponent profiles and the interleaving conditions.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PExponentProfile:
    """Multiset of exponents of the p-part, with its size and maximum.

    The trivial p-part has an empty multiset, length 0 and max_exp 0.
    """

    p: int
    exponents: tuple[int, ...]
    length: int
    max_exp: int

    def __post_init__(self):
        if self.length != len(self.exponents):
            raise DomainError("length must equal the multiset cardinality")


def _profile(p: int, exps) -> PExponentProfile:
    t = tuple(sorted(exps))
    return PExponentProfile(p, t, len(t), max(t, default=0))


def primary_part(g: FgaGroup, p: int) -> FgaGroup:
    """The p-primary torsion subgroup, as a group with free rank 0.

    >>> from .groups import parse_group, render_group
    >>> render_group(primary_part(parse_group("Z/12 + Z"), 2))
    'Z/4'
    """
    return FgaGroup.p_group(p, g.exponents_of(p))


def invariant_I(g: FgaGroup, p: int) -> PExponentProfile:
    """Exponent multiset of ``G(p)`` and its cardinality."""
    return _profile(p, g.exponents_of(p))


def i_intersect(a: PExponentProfile, b: PExponentProfile) -> PExponentProfile:
    """Min-multiplicity multiset intersection.

    A value lies in the residual of one side exactly when its multiplicity
    there exceeds the other side's, so the two residual multisets never
    share a value.
    """
    if a.p != b.p:
        raise DomainError("profiles at different primes")
    inter = []
    bc = list(b.exponents)
    for v in a.exponents:
        if v in bc:
            bc.remove(v)
            inter.append(v)
    return _profile(a.p, inter)


def _residuals(g: FgaGroup, h: FgaGroup, p: int) -> tuple[list[int], list[int]]:
    """Sorted multiset differences I(G(p)) \\ I(H(p)) and I(H(p)) \\ I(G(p))."""
    a = list(g.exponents_of(p))
    b = list(h.exponents_of(p))
    ra = list(a)
    for v in b:
        if v in ra:
            ra.remove(v)
    rb = list(b)
    for v in a:
        if v in rb:
            rb.remove(v)
    return sorted(ra), sorted(rb)


def satisfies_star(g: FgaGroup, h: FgaGroup, p: int) -> bool:
    """Interleaving condition on the p-parts.

    Holds when the p-parts agree, or when the merged residual exponents
    form a strictly increasing sequence that alternates between the two
    sides (the shorter side may lead with an implicit 0).
    """
    ra, rb = _residuals(g, h, p)
    if not ra and not rb:
        return True
    merged = sorted([(v, 0) for v in ra] + [(v, 1) for v in rb])
    for (va, sa), (vb, sb) in zip(merged, merged[1:]):
        if va >= vb or sa == sb:
            return False
    return True


def satisfies_star_star(g: FgaGroup, h: FgaGroup, p: int) -> bool:
    """The one-sided refinement: additionally the second argument's residual
    carries the largest exponent (with 0 standing in for an empty residual)."""
    if not satisfies_star(g, h, p):
        return False
    ra, rb = _residuals(g, h, p)
    if not ra and not rb:
        return True
    return max(rb, default=0) > max(ra, default=0)


# ---------------------------------------------------------------------------
# Normal forms of an element of a finite p-group.
# ---------------------------------------------------------------------------

class NormalFormMode(enum.Enum):
    FINITE = "finite"
    AUGMENTED = "augmented"
    AUGMENTED_REDUCIBLE = "augmented-reducible"


@dataclass(frozen=True)
class NormalFormData:
    """The ``(n_j; k_i; r_i; l)`` data of an element's normal form.

    FINITE mode describes ``g`` in ``G``: the element is equivalent to
    ``(0, ..., 0, p^(k_1-r_1), ..., p^(k_s-r_s))`` and ``r_s = l`` is its
    order exponent.  AUGMENTED mode describes ``(g, p^l)`` in ``G + Z``
    when no automorphism moves it to ``(0, p^l)``; AUGMENTED_REDUCIBLE is
    the case when one does.
    """

    p: int
    l: int
    untouched: tuple[int, ...]
    k: tuple[int, ...]
    r: tuple[int, ...]
    mode: NormalFormMode

    def __post_init__(self):
        s = len(self.k)
        if len(self.r) != s:
            raise DomainError("k and r must have equal length")
        if self.mode is NormalFormMode.AUGMENTED_REDUCIBLE:
            if s:
                raise DomainError("reducible data carries no pivots")
            return
        if s < 1:
            raise DomainError("at least one pivot required")
        ok = all(r > 0 for r in self.r)
        ok = ok and all(self.k[i] < self.k[i + 1] for i in range(s - 1))
        ok = ok and all(self.r[i] < self.r[i + 1] for i in range(s - 1))
        ok = ok and self.k[0] - self.r[0] >= 0
        diffs = [k - r for k, r in zip(self.k, self.r)]
        ok = ok and all(diffs[i] < diffs[i + 1] for i in range(s - 1))
        if self.mode is NormalFormMode.FINITE:
            ok = ok and self.r[-1] == self.l
        else:
            ok = ok and self.l >= 1 and all(d < self.l for d in diffs)
        if not ok:
            raise DomainError(f"normal-form inequalities violated: {self}")

    @property
    def s(self) -> int:
        return len(self.k)


def _require_p_group(g: FgaGroup, p: int) -> None:
    if g.free_rank or any(q != p for q in g.primes()):
        raise DomainError(f"expected a finite {p}-group, got {g!r}")


def g1_normal_form(g: FgaGroup, e: GroupElement, p: int) -> NormalFormData:
    """Normal form of a nonzero element of a finite p-group.

    Constructive: after stripping unit multiples each coordinate is a pure
    power of p; the two elimination moves then zero every coordinate that a
    basis change (fixing the current pivot) can absorb, and the procedure
    recurses below the pivot.

    >>> G = FgaGroup.of_orders(4, 16)
    >>> d = g1_normal_form(G, element(G, (2, 4)), 2)
    >>> d.k, d.r, d.untouched
    ((2, 4), (1, 2), ())
    """
    _require_p_group(g, p)
    if e.group != g:
        raise DomainError("element does not live in the given group")
    if e.is_zero:
        raise DomainError("the zero element has no pivot data")
    exps = [k for _, k in g.torsion_factors()]

    def vp(x: int) -> int:
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    # vals[i] = p-adic valuation of coordinate i (None when zero); the
    # coordinate is unit-equivalent to p^vals[i], of order p^(exps[i]-vals[i]).
    vals: list[int | None] = [vp(x) if x else None for x in e.torsion]
    hi = len(exps)
    pivots: list[tuple[int, int]] = []
    while True:
        nz = [i for i in range(hi) if vals[i] is not None]
        if not nz:
            break
        l_cur = max(exps[i] - vals[i] for i in nz)
        i1 = min(i for i in nz if exps[i] - vals[i] == l_cur)
        for i in nz:
            if i > i1 or (i < i1 and vals[i] >= vals[i1]):
                vals[i] = None
        pivots.append((exps[i1], l_cur))
        vals[i1] = None
        hi = i1
    pivots.reverse()
    ks = tuple(k for k, _ in pivots)
    rs = tuple(r for _, r in pivots)
    untouched = list(exps)
    for k in ks:
        untouched.remove(k)
    data = NormalFormData(p, rs[-1], tuple(sorted(untouched)), ks, rs,
                          NormalFormMode.FINITE)
    if p ** data.l != element_order(e):
        raise AssertionError("pivot order disagrees with the element order")
    return data


def g2_quotient_closed_form(d: NormalFormData) -> FgaGroup:
    """Quotient ``G / <g>`` read off from FINITE-mode data.

    >>> d = NormalFormData(2, 2, (), (2, 4), (1, 2), NormalFormMode.FINITE)
    >>> g2_quotient_closed_form(d) == FgaGroup.of_orders(2, 8)
    True
    """
    if d.mode is not NormalFormMode.FINITE:
        raise DomainError("FINITE-mode data required")
    exps = list(d.untouched)
    exps.append(d.k[0] - d.r[0])
    exps.extend(d.k[i] - d.r[i] + d.r[i - 1] for i in range(1, d.s))
    return FgaGroup.p_group(d.p, exps)


def g3_normal_form(g: FgaGroup, e: GroupElement, l: int, p: int) -> NormalFormData:
    """Normal form of ``(e, p^l)`` in ``G + Z`` for a finite p-group G.

    The element reduces to ``(0, p^l)`` exactly when the quotient by it is
    ``G + Z/p^l``; that comparison decides the mode.  Otherwise the plain
    normal form of ``e`` is trimmed from the top while ``k_s - r_s >= l``
    (each such pivot is absorbed into the free coordinate).
    """
    _require_p_group(g, p)
    if e.group != g:
        raise DomainError("element does not live in the given group")
    if l < 0:
        raise DomainError("l must be >= 0")
    aug = direct_sum(g, FgaGroup.free(1))
    pair = element(aug, e.torsion, (p ** l,))
    q = quotient_by(aug, (pair,))
    reducible = q == direct_sum(g, FgaGroup.of_orders(p ** l))
    if e.is_zero or l == 0:
        if not reducible:
            raise AssertionError("degenerate pair must be reducible")
    if reducible:
        return NormalFormData(p, l, tuple(k for _, k in g.torsion_factors()),
                              (), (), NormalFormMode.AUGMENTED_REDUCIBLE)
    d1 = g1_normal_form(g, e, p)
    untouched = list(d1.untouched)
    ks, rs = list(d1.k), list(d1.r)
    while ks and ks[-1] - rs[-1] >= l:
        untouched.append(ks.pop())
        rs.pop()
    if not ks:
        raise AssertionError("trimmed to nothing yet the quotient test said "
                             "the pair is irreducible")
    return NormalFormData(p, l, tuple(sorted(untouched)), tuple(ks), tuple(rs),
                          NormalFormMode.AUGMENTED)


def g4_quotient_closed_form(d: NormalFormData) -> tuple[FgaGroup, GroupElement]:
    """Quotient ``(G + Z) / <(g, p^l)>`` and the distinguished element of it
    whose own quotient recovers ``G``.

    >>> d = NormalFormData(2, 2, (), (2,), (1,), NormalFormMode.AUGMENTED)
    >>> q, tt = g4_quotient_closed_form(d)
    >>> q == FgaGroup.of_orders(2, 8), tt.torsion
    (True, (1, 2))
    """
    if d.mode is NormalFormMode.FINITE:
        raise DomainError("AUGMENTED or AUGMENTED_REDUCIBLE data required")
    p = d.p
    if d.mode is NormalFormMode.AUGMENTED_REDUCIBLE:
        entries = [(k, 0) for k in d.untouched]
        if d.l:
            entries.append((d.l, 1))
    else:
        exps = [d.k[0] - d.r[0]]
        exps.extend(d.k[i] - d.r[i] + d.r[i - 1] for i in range(1, d.s))
        exps.append(d.l + d.r[-1])
        coords = [1]
        coords.extend(p ** d.r[i - 1] for i in range(1, d.s))
        coords.append(p ** d.r[-1])
        entries = [(k, 0) for k in d.untouched] + list(zip(exps, coords))
    entries = sorted(((k, c) for k, c in entries if k > 0), key=lambda kc: kc[0])
    q = FgaGroup.p_group(p, (k for k, _ in entries))
    return q, element(q, (c for _, c in entries))


# ---------------------------------------------------------------------------
# Automorphism-existence criterion.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _order_and_quotient(e: GroupElement) -> tuple[int | None, FgaGroup]:
    return element_order(e), quotient_by(e.group, (e,))


def aut_sends(g: FgaGroup, e1: GroupElement, e2: GroupElement) -> bool:
    """True iff some automorphism of ``g`` maps ``e1`` to ``e2``.

    Decided by equal element orders plus isomorphic one-element quotients;
    the quotient comparison is what makes the criterion complete for
    finitely generated groups (it fails for infinitely generated ones).

    >>> G = FgaGroup.of_orders(4, 2)
    >>> aut_sends(G, element(G, (2, 0)), element(G, (0, 1)))
    False
    >>> aut_sends(G, element(G, (1, 0)), element(G, (1, 1)))
    True
    """
    if e1.group != g or e2.group != g:
        raise DomainError("elements must live in the given group")
    o1, q1 = _order_and_quotient(e1)
    o2, q2 = _order_and_quotient(e2)
    return o1 == o2 and q1 == q2
