"""The F-inverse cover attached to a fuzzy subgroup, and its general form.

`build_cover` realizes the admissible-pair monoid of a fuzzy subgroup with
the componentwise product, while `cover_from_premorphism` performs the same
construction from any certified dual premorphism into an arbitrary inverse
monoid.  The two are implemented independently so they can be played against
each other in tests.  Closed-form descriptions of the cover's structure
(idempotents, unit, natural order, class maxima) are likewise computed as
separate formulas and cross-checked against the generic derived structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DEFAULT_BUDGET,
    AlgebraError,
    BudgetExceeded,
    IsomorphismSearchBudgetExceeded,
    NotFInverse,
    NotHomomorphism,
    NotIdempotentSeparating,
    NotSurjective,
    ReconstructionMismatch,
)
from .fuzzy import FuzzySubgroup, level_subset
from .monoids import (
    DualPremorphism,
    FiniteInverseMonoid,
    chain_monoid,
    is_idempotent_separating,
    is_monoid_homomorphism,
    is_surjective,
    validate_dual_premorphism,
    validate_inverse_monoid,
)


class CoverMonoid:
    """The cover of a fuzzy subgroup: admissible pairs (value, group element).

    Pairs are ordered lexicographically by (group element index, chain index)
    so every report and table iterates deterministically.  ``projection``
    maps each pair to its chain index, an element of ``base`` (the chain
    monoid of the value set).
    """

    __slots__ = ("source", "pairs", "pair_index", "monoid", "base", "projection")

    def __init__(self, source, pairs, monoid, base, projection):
        self.source = source
        self.pairs = tuple(pairs)
        self.pair_index = {p: i for i, p in enumerate(self.pairs)}
        self.monoid = monoid
        self.base = base
        self.projection = tuple(projection)

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"CoverMonoid(source={self.source!r}, size={self.n})"


def _pair_name(value, label) -> str:
    return f"({value},{label})"


def build_cover(fz: FuzzySubgroup) -> CoverMonoid:
    """Build the admissible-pair cover of a fuzzy subgroup.

    The monoid passes full inverse-monoid validation and is checked to be
    F-inverse and Clifford; the projection onto the chain monoid is checked
    to be a surjective idempotent-separating homomorphism with unit
    (mu(identity), identity).  Failures here signal a library bug, not bad
    input, hence plain AlgebraError.
    """
    group = fz.group
    pairs = [
        (u, x)
        for x in range(group.n)
        for u in range(fz.mu_index(x) + 1)
    ]
    index = {p: i for i, p in enumerate(pairs)}
    names = [_pair_name(fz.chain[u], group.names[x]) for u, x in pairs]
    table = [
        [index[(min(u, v), group.table[x][y])] for v, y in pairs]
        for u, x in pairs
    ]
    unit = index[(len(fz.chain) - 1, group.identity)]
    monoid = validate_inverse_monoid(names, table, unit)
    if not monoid.derived.f_inverse:
        raise AlgebraError("cover of a fuzzy subgroup must be F-inverse")
    if not monoid.derived.clifford:
        raise AlgebraError("cover of a fuzzy subgroup must be Clifford")
    base = chain_monoid(fz.chain)
    projection = tuple(u for u, _ in pairs)
    if not is_monoid_homomorphism(projection, monoid, base):
        raise AlgebraError("cover projection must be a monoid homomorphism")
    if not is_surjective(projection, monoid, base):
        raise AlgebraError("cover projection must be surjective")
    if not is_idempotent_separating(projection, monoid, base):
        raise AlgebraError("cover projection must be idempotent separating")
    return CoverMonoid(fz, pairs, monoid, base, projection)


@dataclass(frozen=True)
class CoverReport:
    """Closed-form structure of a cover, cross-checked against the generic one.

    All fields describe pairs by their (chain index, element index) form;
    the ``*_match`` flags record agreement with the structure derived from
    the multiplication table alone.
    """

    unit: tuple[int, int]
    idempotents: tuple[tuple[int, int], ...]
    sigma_classes: tuple[tuple[tuple[int, int], ...], ...]
    sigma_maxima: tuple[tuple[int, int], ...]
    unit_match: bool
    idempotents_match: bool
    order_match: bool
    sigma_match: bool
    maxima_match: bool

    @property
    def all_match(self) -> bool:
        return (
            self.unit_match
            and self.idempotents_match
            and self.order_match
            and self.sigma_match
            and self.maxima_match
        )


def cover_report(cover: CoverMonoid) -> CoverReport:
    """Compute the closed forms for unit, idempotents, order and class maxima.

    Closed forms: idempotents are the pairs over the group identity, the unit
    is (mu(identity), identity), (u,x) <= (v,y) iff x == y and u <= v, the
    class of (u,x) consists of all pairs over x with maximum (mu(x), x).
    Each is compared against the generic computation on the table.
    """
    fz = cover.source
    group = fz.group
    d = cover.monoid.derived
    top = len(fz.chain) - 1

    unit_pair = (top, group.identity)
    unit_match = cover.pairs[cover.monoid.unit] == unit_pair

    idem_closed = tuple(p for p in cover.pairs if p[1] == group.identity)
    idem_generic = tuple(cover.pairs[i] for i in d.idempotents)
    idempotents_match = idem_closed == idem_generic

    order_match = all(
        d.natural_leq[i][j] == (pi[1] == pj[1] and pi[0] <= pj[0])
        for i, pi in enumerate(cover.pairs)
        for j, pj in enumerate(cover.pairs)
    )

    sigma_closed = tuple(
        tuple((u, x) for u in range(fz.mu_index(x) + 1))
        for x in range(group.n)
    )
    sigma_generic = tuple(
        tuple(cover.pairs[i] for i in cls) for cls in d.sigma.classes
    )
    sigma_match = sorted(sigma_closed) == sorted(sigma_generic)

    maxima_closed = tuple((fz.mu_index(x), x) for x in range(group.n))
    maxima_generic = tuple(
        cover.pairs[m] for m in d.sigma_maxima if m is not None
    )
    maxima_match = len(d.sigma_maxima) == group.n and sorted(
        maxima_closed
    ) == sorted(maxima_generic)

    return CoverReport(
        unit=unit_pair,
        idempotents=idem_closed,
        sigma_classes=sigma_closed,
        sigma_maxima=maxima_closed,
        unit_match=unit_match,
        idempotents_match=idempotents_match,
        order_match=order_match,
        sigma_match=sigma_match,
        maxima_match=maxima_match,
    )


def hclass_level_isomorphism(cover: CoverMonoid, u: Fraction) -> dict[int, int]:
    """The H-class of the idempotent at value u, mapped onto the level subgroup.

    Computes the H-class of (u, identity) from Green's relations, checks it
    equals all pairs (u, h) with u <= mu(h), and checks that dropping the
    first coordinate is a group isomorphism onto the level subset at u.
    Returns the mapping pair index -> group element index.
    """
    fz = cover.source
    uidx = fz.chain_index(Fraction(u))
    e_pair = cover.pair_index[(uidx, fz.group.identity)]
    h_part = cover.monoid.derived.green_h
    hclass = h_part.classes[h_part.class_of[e_pair]]

    expected = tuple(
        cover.pair_index[(uidx, h)]
        for h in range(fz.group.n)
        if fz.mu_index(h) >= uidx
    )
    if tuple(sorted(hclass)) != tuple(sorted(expected)):
        raise AlgebraError(f"H-class at value {u} differs from its closed form")

    mapping = {i: cover.pairs[i][1] for i in sorted(hclass)}
    level = level_subset(fz, Fraction(u))
    if set(mapping.values()) != set(level) or len(set(mapping.values())) != len(mapping):
        raise AlgebraError(f"H-class at value {u} is not in bijection with the level subset")
    for i in hclass:
        for j in hclass:
            prod = cover.monoid.table[i][j]
            if prod not in mapping or mapping[prod] != fz.group.table[mapping[i]][mapping[j]]:
                raise AlgebraError(f"H-class at value {u} projection is not a homomorphism")
    return mapping


class ConstructedCover:
    """Admissible-pair cover built from a dual premorphism into any inverse monoid."""

    __slots__ = ("premorphism", "pairs", "pair_index", "monoid", "projection")

    def __init__(self, premorphism, pairs, monoid, projection):
        self.premorphism = premorphism
        self.pairs = tuple(pairs)
        self.pair_index = {p: i for i, p in enumerate(self.pairs)}
        self.monoid = monoid
        self.projection = tuple(projection)

    @property
    def n(self) -> int:
        return len(self.pairs)


def cover_from_premorphism(psi: DualPremorphism) -> ConstructedCover:
    """Build the pair monoid {(u, h) : u <= psi(h)} with componentwise product.

    Works for any certified dual premorphism with coverage, chain target or
    not.  Closure of the product, validity as an inverse monoid, the
    F-inverse property and the projection contract are all checked; a
    failure would falsify the construction and raises AlgebraError.
    """
    group = psi.group
    monoid = psi.monoid
    leq = monoid.derived.natural_leq
    pairs = [
        (u, h)
        for h in range(group.n)
        for u in range(monoid.n)
        if leq[u][psi.psi[h]]
    ]
    index = {p: i for i, p in enumerate(pairs)}
    names = [_pair_name(monoid.names[u], group.names[h]) for u, h in pairs]
    table = []
    for u, h in pairs:
        row = []
        for v, k in pairs:
            prod = (monoid.table[u][v], group.table[h][k])
            if prod not in index:
                raise AlgebraError(
                    f"product of {(u, h)} and {(v, k)} leaves the pair set"
                )
            row.append(index[prod])
        table.append(row)
    unit_pair = (monoid.unit, group.identity)
    if unit_pair not in index:
        raise AlgebraError("unit pair is not admissible; coverage must be broken")
    result = validate_inverse_monoid(names, table, index[unit_pair])
    if not result.derived.f_inverse:
        raise AlgebraError("constructed cover must be F-inverse")
    projection = tuple(u for u, _ in pairs)
    if not is_monoid_homomorphism(projection, result, monoid):
        raise AlgebraError("constructed projection must be a homomorphism")
    if not is_surjective(projection, result, monoid):
        raise AlgebraError("constructed projection must be surjective")
    if not is_idempotent_separating(projection, result, monoid):
        raise AlgebraError("constructed projection must be idempotent separating")
    return ConstructedCover(psi, pairs, result, projection)


def premorphism_from_cover(
    cover: FiniteInverseMonoid,
    base: FiniteInverseMonoid,
    projection,
    budget: int = DEFAULT_BUDGET,
) -> DualPremorphism:
    """Recover the dual premorphism behind an F-inverse cover.

    With H the group quotient of the cover by its least group congruence,
    psi sends each class to the projection of its greatest element.  The
    result is certified, and rebuilding the pair monoid from it must give a
    monoid isomorphic to the input (checked by brute-force search).
    """
    projection = tuple(projection)
    if not cover.derived.f_inverse:
        raise NotFInverse("cover has a class with no greatest element")
    if not is_monoid_homomorphism(projection, cover, base):
        raise NotHomomorphism("projection is not a monoid homomorphism")
    if not is_surjective(projection, cover, base):
        raise NotSurjective("projection misses part of the base monoid")
    if not is_idempotent_separating(projection, cover, base):
        raise NotIdempotentSeparating("projection merges idempotents")

    quotient = cover.derived.sigma_quotient
    psi = tuple(projection[m] for m in cover.derived.sigma_maxima)
    dp = validate_dual_premorphism(quotient, base, psi)

    rebuilt = cover_from_premorphism(dp)
    try:
        bijection = monoid_isomorphic(rebuilt.monoid, cover, budget=budget)
    except BudgetExceeded as exc:
        raise IsomorphismSearchBudgetExceeded(exc.needed, exc.budget) from exc
    if bijection is None:
        raise ReconstructionMismatch(
            "rebuilt pair monoid is not isomorphic to the original cover"
        )
    return dp


def _element_signature(monoid: FiniteInverseMonoid, x: int):
    d = monoid.derived
    return (
        x == monoid.unit,
        monoid.table[x][x] == x,
        monoid.inverse[x] == x,
        len(d.sigma.classes[d.sigma.class_of[x]]),
        len(d.green_h.classes[d.green_h.class_of[x]]),
        len(d.green_r.classes[d.green_r.class_of[x]]),
        len(d.green_l.classes[d.green_l.class_of[x]]),
        sum(d.natural_leq[x]),
        sum(row[x] for row in d.natural_leq),
    )


def monoid_isomorphic(
    a: FiniteInverseMonoid,
    b: FiniteInverseMonoid,
    budget: int = DEFAULT_BUDGET,
) -> Optional[tuple[int, ...]]:
    """A product- and unit-preserving bijection a -> b, or None if none exists.

    Cheap invariants (idempotent count, class size multisets, per-element
    signatures) prune the search before lexicographic backtracking; the
    budget caps the number of assignments attempted.
    """
    if a.n != b.n:
        return None
    da, db = a.derived, b.derived
    if len(da.idempotents) != len(db.idempotents):
        return None
    if da.sigma.size_multiset() != db.sigma.size_multiset():
        return None
    if da.green_h.size_multiset() != db.green_h.size_multiset():
        return None

    sig_b: dict = {}
    for y in range(b.n):
        sig_b.setdefault(_element_signature(b, y), []).append(y)
    candidates = []
    for x in range(a.n):
        cands = sig_b.get(_element_signature(a, x))
        if not cands:
            return None
        candidates.append(cands)

    constraints: list[list[tuple[int, int, int]]] = [[] for _ in range(a.n)]
    for i in range(a.n):
        for j in range(a.n):
            p = a.table[i][j]
            constraints[max(i, j, p)].append((i, j, p))

    image = [0] * a.n
    used = [False] * b.n
    nodes = 0

    def extend(i: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        if i == a.n:
            return tuple(image)
        for v in candidates[i]:
            if used[v]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes, budget, "assignments")
            image[i] = v
            if all(image[p] == b.table[image[x]][image[y]] for x, y, p in constraints[i]):
                used[v] = True
                found = extend(i + 1)
                used[v] = False
                if found is not None:
                    return found
        return None

    return extend(0)
