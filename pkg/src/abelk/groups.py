"""Exact calculus of finitely generated abelian groups.

Groups are kept in a canonical primary-decomposition form: a free rank
together with, for each prime, the ascending list of exponents of the
prime-power cyclic factors.  Two groups are isomorphic exactly when their
canonical forms are equal, so isomorphism testing is ``==``.

Everything is exact.  Matrix routines run on Python's arbitrary-precision
integers: Smith normal form intermediates overflow machine words even for
small inputs, so fixed-width arithmetic is never used.

>>> G = parse_group("Z^2 + Z/8 + Z/3")
>>> render_group(G)
'Z^2 + Z/8 + Z/3'
>>> parse_group("Z/6") == parse_group("Z/2 + Z/3")
True
>>> render_group(quotient_by(parse_group("Z/4 + Z/16"), [element(parse_group("Z/4 + Z/16"), (2, 4))]))
'Z/2 + Z/8'
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(ValueError):
    """A literal failed to parse; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Integer factorization.  Cyclic factors are split into prime powers during
# canonicalization, so this sits under every constructor.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ``((p, multiplicity), ...)``.

    >>> factorint(360)
    ((2, 3), (3, 2), (5, 1))
    >>> factorint(1)
    ()
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}

    def split(m: int) -> None:
        if m == 1:
            return
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            return
        d = _pollard_rho(m)
        split(d)
        split(m // d)

    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 17
    while f * f <= n and f < 65537:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    split(n)
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# Exact integer matrices and Smith normal form.
# ---------------------------------------------------------------------------

class IntMatrix:
    """Immutable row-major integer matrix (arbitrary precision)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        ent = tuple(int(x) for x in entries)
        if len(ent) != rows * cols:
            raise DomainError(
                f"entry count {len(ent)} != {rows} x {cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        r = len(rows)
        c = len(rows[0]) if rows else (cols if cols is not None else 0)
        if any(len(row) != c for row in rows):
            raise DomainError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def mul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DomainError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ra = a[i]
            for j in range(other.cols):
                out.append(sum(ra[k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def diagonal(self) -> list[int]:
        return [self.at(i, i) for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        """Exact determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DomainError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r})"


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``s = u * m * v`` with ``u``, ``v`` unimodular.

    ``s`` is diagonal with nonnegative entries ``d_1 | d_2 | ... | d_r``
    followed by zeros.  Total on all integer matrices.

    >>> s, u, v = snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> s.diagonal()
    [2, 4]
    >>> u.mul(IntMatrix.from_rows([[2, 4], [6, 8]])).mul(v) == s
    True
    """
    R, C = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(R).to_rows()
    v = IntMatrix.identity(C).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        ad, asr = a[dst], a[src]
        for k in range(C):
            ad[k] += q * asr[k]
        ud, usr = u[dst], u[src]
        for k in range(R):
            ud[k] += q * usr[k]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < R and t < C:
        # Smallest-magnitude nonzero entry of the trailing submatrix.
        pivot = None
        best = None
        for i in range(t, R):
            ai = a[i]
            for j in range(t, C):
                x = ai[j]
                if x and (best is None or abs(x) < best):
                    pivot, best = (i, j), abs(x)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            # Clear column t below the pivot; a leftover remainder becomes
            # the new (strictly smaller) pivot.
            restart = False
            for i in range(t + 1, R):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, C):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # Pivot divides everything below-right, or we fold a bad row in.
            d = a[t][t]
            bad = None
            for i in range(t + 1, R):
                ai = a[i]
                for j in range(t + 1, C):
                    if ai[j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        t += 1

    flat_a = [x for row in a for x in row]
    return (IntMatrix(R, C, flat_a),
            IntMatrix(R, R, [x for row in u for x in row]),
            IntMatrix(C, C, [x for row in v for x in row]))


# ---------------------------------------------------------------------------
# Canonical groups and their elements.
# ---------------------------------------------------------------------------

class FgaGroup:
    """Canonical finitely generated abelian group.

    ``free_rank`` is the rank of the free part; ``torsion`` maps each prime
    (ascending) to the ascending tuple of exponents of its cyclic factors.
    The representation is canonical: equality is isomorphism.
    """

    __slots__ = ("free_rank", "torsion", "_hash")

    def __init__(self, free_rank: int = 0,
                 torsion: Iterable[tuple[int, Iterable[int]]] = ()):
        tors = tuple((int(p), tuple(int(k) for k in ks)) for p, ks in torsion)
        if free_rank < 0:
            raise DomainError("negative free rank")
        for idx, (p, ks) in enumerate(tors):
            if not _is_probable_prime(p):
                raise DomainError(f"{p} is not prime")
            if idx and tors[idx - 1][0] >= p:
                raise DomainError("primes must be strictly ascending")
            if not ks:
                raise DomainError("empty exponent list stored")
            if any(k < 1 for k in ks) or any(ks[i] > ks[i + 1] for i in range(len(ks) - 1)):
                raise DomainError("exponents must be ascending and >= 1")
        object.__setattr__(self, "free_rank", free_rank)
        object.__setattr__(self, "torsion", tors)
        object.__setattr__(self, "_hash", hash((free_rank, tors)))

    @classmethod
    def _mk(cls, free_rank: int, torsion: tuple) -> FgaGroup:
        # Internal fast path: caller guarantees the data is already canonical.
        obj = object.__new__(cls)
        object.__setattr__(obj, "free_rank", free_rank)
        object.__setattr__(obj, "torsion", torsion)
        object.__setattr__(obj, "_hash", hash((free_rank, torsion)))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FgaGroup is immutable")

    def __eq__(self, other):
        return (isinstance(other, FgaGroup)
                and self._hash == other._hash
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FgaGroup[{render_group(self)}]"

    # -- canonical structure ------------------------------------------------

    def torsion_factors(self) -> tuple[tuple[int, int], ...]:
        """(prime, exponent) per cyclic factor, in canonical order."""
        return tuple((p, k) for p, ks in self.torsion for k in ks)

    def factor_orders(self) -> tuple[int, ...]:
        return tuple(p ** k for p, ks in self.torsion for k in ks)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def torsion_order(self) -> int:
        return prod(self.factor_orders()) if self.torsion else 1

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return None if self.free_rank else self.torsion_order()

    def exponents_of(self, p: int) -> tuple[int, ...]:
        for q, ks in self.torsion:
            if q == p:
                return ks
        return ()

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.torsion)

    def invariant_factors(self) -> list[int]:
        """Read-only invariant-factor view (0 denotes a free factor).

        >>> parse_group("Z + Z/4 + Z/2 + Z/3").invariant_factors()
        [0, 12, 2]
        """
        depth = max((len(ks) for _, ks in self.torsion), default=0)
        out = [0] * self.free_rank
        for i in range(depth):
            d = 1
            for p, ks in self.torsion:
                if len(ks) >= i + 1:
                    d *= p ** ks[-1 - i]
            out.append(d)
        return out

    # -- constructors ---------------------------------------------------------

    @classmethod
    def trivial(cls) -> FgaGroup:
        return _TRIVIAL

    @classmethod
    def free(cls, rank: int) -> FgaGroup:
        if rank < 0:
            raise DomainError("negative free rank")
        return cls._mk(rank, ())

    @classmethod
    def of_orders(cls, *orders: int) -> FgaGroup:
        """Group ``Z/d_1 + ... + Z/d_k`` with 0 meaning a free factor.

        Composite orders are split by CRT during canonicalization.

        >>> FgaGroup.of_orders(12, 0) == parse_group("Z + Z/4 + Z/3")
        True
        """
        rank = 0
        exps: dict[int, list[int]] = {}
        for d in orders:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                for p, e in factorint(d):
                    exps.setdefault(p, []).append(e)
        return cls._mk(rank, tuple((p, tuple(sorted(ks)))
                                    for p, ks in sorted(exps.items())))

    @classmethod
    def p_group(cls, p: int, exponents: Iterable[int]) -> FgaGroup:
        if not _is_probable_prime(p):
            raise DomainError(f"{p} is not prime")
        ks = tuple(sorted(k for k in exponents if k > 0))
        return cls._mk(0, ((p, ks),) if ks else ())


_TRIVIAL = FgaGroup()


class GroupElement:
    """Element of an :class:`FgaGroup` in canonical coordinates.

    ``torsion`` holds one residue per cyclic factor (reduced to
    ``[0, p^k)``); ``free`` holds one integer per free generator.
    """

    __slots__ = ("group", "torsion", "free", "_hash")

    def __init__(self, group: FgaGroup, torsion: Iterable[int] = (),
                 free: Iterable[int] = ()):
        orders = group.factor_orders()
        tors = tuple(int(c) % d for c, d in zip(torsion, orders, strict=True))
        fr = tuple(int(c) for c in free)
        if len(fr) != group.free_rank:
            raise DomainError(
                f"free coordinate count {len(fr)} != rank {group.free_rank}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "torsion", tors)
        object.__setattr__(self, "free", fr)
        object.__setattr__(self, "_hash", hash((group, tors, fr)))

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.group == other.group
                and self.torsion == other.torsion and self.free == other.free)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroupElement[{render_element(self)} in {render_group(self.group)}]"

    @property
    def is_zero(self) -> bool:
        return not any(self.torsion) and not any(self.free)

    def __add__(self, other: GroupElement) -> GroupElement:
        if self.group != other.group:
            raise DomainError("elements of different groups")
        return GroupElement(self.group,
                            [a + b for a, b in zip(self.torsion, other.torsion)],
                            [a + b for a, b in zip(self.free, other.free)])

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, [-a for a in self.torsion],
                            [-a for a in self.free])

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(self.group, [n * a for a in self.torsion],
                            [n * a for a in self.free])


def element(group: FgaGroup, torsion: Iterable[int] = (),
            free: Iterable[int] = ()) -> GroupElement:
    """Convenience constructor; coordinates are reduced on construction."""
    return GroupElement(group, torsion, free)


def zero_element(group: FgaGroup) -> GroupElement:
    return GroupElement(group, (0,) * len(group.factor_orders()),
                        (0,) * group.free_rank)


# ---------------------------------------------------------------------------
# Operations.
# ---------------------------------------------------------------------------

def is_isomorphic(g: FgaGroup, h: FgaGroup) -> bool:
    """Canonical forms are canonical: isomorphism is equality.

    >>> is_isomorphic(FgaGroup.of_orders(2, 3), FgaGroup.of_orders(6))
    True
    >>> is_isomorphic(FgaGroup.of_orders(4), FgaGroup.of_orders(2, 2))
    False
    """
    return g == h


def direct_sum(*groups: FgaGroup) -> FgaGroup:
    """Direct sum; commutative and associative on canonical forms."""
    rank = sum(g.free_rank for g in groups)
    exps: dict[int, list[int]] = {}
    for g in groups:
        for p, ks in g.torsion:
            exps.setdefault(p, []).extend(ks)
    return FgaGroup._mk(rank, tuple((p, tuple(sorted(ks)))
                                    for p, ks in sorted(exps.items())))


def sum_of_copies(g: FgaGroup, n: int) -> FgaGroup:
    """Direct sum of ``n`` copies of ``g`` (``n = 0`` gives the trivial group)."""
    if n < 0:
        raise DomainError("negative multiplicity")
    if n == 0:
        return _TRIVIAL
    return FgaGroup._mk(g.free_rank * n,
                        tuple((p, tuple(sorted(ks * n))) for p, ks in g.torsion))


def tensor(g: FgaGroup, h: FgaGroup) -> FgaGroup:
    """Tensor product.  Z (x) H = H and Z/m (x) Z/n = Z/gcd(m, n).

    >>> tensor(FgaGroup.of_orders(4), FgaGroup.of_orders(6)) == FgaGroup.of_orders(2)
    True
    """
    exps: dict[int, list[int]] = {}
    for p in sorted(set(g.primes()) | set(h.primes())):
        a, b = g.exponents_of(p), h.exponents_of(p)
        ks = [min(x, y) for x in a for y in b]
        ks.extend(list(a) * h.free_rank)
        ks.extend(list(b) * g.free_rank)
        if ks:
            exps[p] = ks
    return FgaGroup._mk(g.free_rank * h.free_rank,
                        tuple((p, tuple(sorted(ks)))
                              for p, ks in sorted(exps.items())))


def tor(g: FgaGroup, h: FgaGroup) -> FgaGroup:
    """Torsion product.  Tor(Z, -) = 0 and Tor(Z/m, Z/n) = Z/gcd(m, n)."""
    exps = {}
    for p in sorted(set(g.primes()) & set(h.primes())):
        ks = sorted(min(x, y) for x in g.exponents_of(p) for y in h.exponents_of(p))
        if ks:
            exps[p] = ks
    return FgaGroup._mk(0, tuple((p, tuple(ks)) for p, ks in sorted(exps.items())))


def from_presentation(relations: IntMatrix) -> FgaGroup:
    """Cokernel ``Z^cols / rowspan(relations)`` in canonical form.

    >>> from_presentation(IntMatrix.from_rows([[2, 4], [6, 8]])) == FgaGroup.of_orders(2, 4)
    True
    >>> from_presentation(IntMatrix(0, 2, [])) == FgaGroup.free(2)
    True
    """
    s, _, _ = snf(relations)
    diag = [d for d in s.diagonal() if d != 0]
    rank = relations.cols - len(diag)
    exps: dict[int, list[int]] = {}
    for d in diag:
        if d > 1:
            for p, e in factorint(d):
                exps.setdefault(p, []).append(e)
    return FgaGroup._mk(rank, tuple((p, tuple(sorted(ks)))
                                    for p, ks in sorted(exps.items())))


def presentation_matrix(g: FgaGroup) -> IntMatrix:
    """Defining relations of ``g`` on its canonical generators."""
    orders = g.factor_orders()
    n = len(orders) + g.free_rank
    rows = []
    for i, d in enumerate(orders):
        row = [0] * n
        row[i] = d
        rows.append(row)
    return IntMatrix.from_rows(rows, cols=n)


@lru_cache(maxsize=None)
def _quotient_cached(g: FgaGroup, elems: tuple[GroupElement, ...]) -> FgaGroup:
    rows = presentation_matrix(g).to_rows()
    for e in elems:
        rows.append(list(e.torsion) + list(e.free))
    n = len(g.factor_orders()) + g.free_rank
    return from_presentation(IntMatrix.from_rows(rows, cols=n))


def quotient_by(g: FgaGroup, elems: Iterable[GroupElement]) -> FgaGroup:
    """Canonical form of ``G / <elems>`` (presentation stacking + SNF).

    >>> G = FgaGroup.of_orders(4, 16)
    >>> quotient_by(G, [element(G, (2, 4))]) == FgaGroup.of_orders(2, 8)
    True
    """
    elems = tuple(elems)
    for e in elems:
        if e.group != g:
            raise DomainError("element does not live in the quotiented group")
    return _quotient_cached(g, elems)


def element_order(e: GroupElement) -> int | None:
    """Least ``n >= 1`` with ``n*e = 0``, or None for infinite order.

    >>> G = FgaGroup.of_orders(4, 16)
    >>> element_order(element(G, (2, 4)))
    4
    """
    if any(e.free):
        return None
    n = 1
    for c, d in zip(e.torsion, e.group.factor_orders()):
        if c:
            n = lcm(n, d // gcd(c, d))
    return n


def is_torsion(e: GroupElement) -> bool:
    return not any(e.free)


def free_content(e: GroupElement) -> int:
    """gcd of the free coordinates (0 for torsion elements)."""
    return gcd(*e.free) if e.free else 0


def reduce_vector_to_content(vec: Sequence[int]) -> tuple[int, ...]:
    """Unimodular reduction of an integer vector to ``(g, 0, ..., 0)``.

    Extended-gcd elimination; ties broken by leftmost pivot with the
    smallest absolute value.
    """
    v = [int(x) for x in vec]
    if not v:
        return ()
    while True:
        nz = [i for i, x in enumerate(v) if x]
        if not nz:
            return tuple(v)
        piv = min(nz, key=lambda i: (abs(v[i]), i))
        done = True
        for i in nz:
            if i != piv:
                v[i] -= (v[i] // v[piv]) * v[piv]
                if v[i]:
                    done = False
        if done:
            v[0], v[piv] = v[piv], v[0]
            v[0] = abs(v[0])
            return tuple(v)


def normalize_free_part(e: GroupElement) -> GroupElement:
    """Automorphism-equivalent element with free part ``(content, 0, ..., 0)``.

    The witnessing automorphism acts on the free generators only, so the
    torsion coordinates are untouched.
    """
    return GroupElement(e.group, e.torsion, reduce_vector_to_content(e.free))


# ---------------------------------------------------------------------------
# The shared literal grammar:  groups  ``Z``, ``Z^k``, ``Z/n``, ``0`` joined
# by ``+``;  elements ``(t1,...,tm; f1,...,fr)``.
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"Z\^(\d+)|Z/(\d+)|Z|0")


def parse_group(text: str) -> FgaGroup:
    """Parse a group literal.

    >>> parse_group("Z^2+ Z/8 +Z/3").free_rank
    2
    >>> parse_group("Z/7+Z/7").torsion
    ((7, (1, 1)),)
    """
    pos = 0
    n = len(text)
    rank = 0
    orders: list[int] = []
    expect_term = True
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if expect_term:
            m = _TERM_RE.match(text, pos)
            if not m:
                raise ParseError("expected Z, Z^k, Z/n or 0", pos)
            if m.group(1) is not None:
                k = int(m.group(1))
                if k < 1:
                    raise ParseError("exponent must be >= 1", pos)
                rank += k
            elif m.group(2) is not None:
                d = int(m.group(2))
                if d < 2:
                    raise ParseError("Z/n needs n >= 2", pos)
                orders.append(d)
            elif m.group(0) == "Z":
                rank += 1
            pos = m.end()
            expect_term = False
        else:
            if text[pos] != "+":
                raise ParseError("expected '+'", pos)
            pos += 1
            expect_term = True
    if expect_term:
        raise ParseError("expected a term", pos)
    return FgaGroup.of_orders(*([0] * rank + orders))


def parse_element(text: str, shape: FgaGroup) -> GroupElement:
    """Parse ``(t1,...,tm; f1,...,fr)`` against ``shape``.

    Coordinates follow the canonical factor order; either side may be
    empty; residues are reduced mod the factor orders.
    """
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("element literal must be parenthesized",
                         text.find(stripped) if stripped else 0)
    body = stripped[1:-1]
    if body.count(";") != 1:
        raise ParseError("element literal needs exactly one ';'", text.find("(") + 1)

    def ints(part: str, offset: int) -> list[int]:
        part = part.strip()
        if not part:
            return []
        out = []
        for chunk in part.split(","):
            c = chunk.strip()
            if not re.fullmatch(r"[+-]?\d+", c):
                raise ParseError(f"bad integer {c!r}", offset + part.find(chunk))
            out.append(int(c))
        return out

    tpart, fpart = body.split(";")
    tcoords = ints(tpart, text.find("(") + 1)
    fcoords = ints(fpart, text.find(";") + 1)
    nt = len(shape.factor_orders())
    if len(tcoords) != nt or len(fcoords) != shape.free_rank:
        raise ParseError(
            f"arity mismatch: got ({len(tcoords)};{len(fcoords)}), "
            f"shape needs ({nt};{shape.free_rank})", 0)
    return GroupElement(shape, tcoords, fcoords)


def render_group(g: FgaGroup) -> str:
    """Canonical literal; parses back to an equal group.

    >>> render_group(FgaGroup.of_orders(0, 0, 8, 3))
    'Z^2 + Z/8 + Z/3'
    >>> render_group(FgaGroup.trivial())
    '0'
    """
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{p ** k}" for p, k in g.torsion_factors())
    return " + ".join(parts) if parts else "0"


def render_element(e: GroupElement) -> str:
    """Canonical element literal, e.g. ``(2,4;)`` or ``(;2)``."""
    return "({};{})".format(",".join(map(str, e.torsion)),
                            ",".join(map(str, e.free)))


def group_to_json(g: FgaGroup) -> dict:
    return {"free": g.free_rank,
            "torsion": {str(p): list(ks) for p, ks in g.torsion}}


def element_to_json(e: GroupElement) -> dict:
    return {"torsion": list(e.torsion), "free": list(e.free)}


def all_elements(g: FgaGroup) -> Iterator[GroupElement]:
    """All elements of a finite group (domain error when infinite)."""
    if g.free_rank:
        raise DomainError("cannot enumerate an infinite group")
    import itertools
    for coords in itertools.product(*(range(d) for d in g.factor_orders())):
        yield GroupElement(g, coords, ())
