"""Finite inverse monoids with their full derived structure.

Everything the rest of the package needs about an inverse monoid is computed
once, exhaustively, at validation time and cached on the value: idempotents,
the natural partial order, the least group congruence with its group
quotient, Green's relations, per-class order maxima, and the F-inverse and
Clifford predicates.  All queries afterwards are pure reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DEFAULT_BUDGET,
    AlgebraError,
    BudgetExceeded,
    CoverageFailure,
    EmptyChain,
    NoInverse,
    NonUniqueInverse,
    NotAssociative,
    NotClosed,
    NotDualPremorphism,
    NotUnital,
    OutOfRange,
    QuotientNotGroup,
    Unsorted,
)
from .groups import FiniteGroup, validate_group


@dataclass(frozen=True)
class Partition:
    """An ordered partition of 0..n-1: classes sorted by least member."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @staticmethod
    def from_class_of(class_ids: Sequence[int]) -> "Partition":
        buckets: dict[int, list[int]] = {}
        for x, c in enumerate(class_ids):
            buckets.setdefault(c, []).append(x)
        classes = tuple(tuple(sorted(b)) for b in sorted(buckets.values(), key=min))
        class_of = [0] * len(class_ids)
        for i, cls in enumerate(classes):
            for x in cls:
                class_of[x] = i
        return Partition(classes, tuple(class_of))

    def refines(self, other: "Partition") -> bool:
        """True iff every class of self lies inside a class of other."""
        return all(
            len({other.class_of[x] for x in cls}) == 1 for cls in self.classes
        )

    def size_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.classes))


@dataclass(frozen=True)
class DerivedStructure:
    """Structure derived exhaustively from an inverse monoid table."""

    idempotents: tuple[int, ...]
    natural_leq: tuple[tuple[bool, ...], ...]
    sigma: Partition
    sigma_quotient: FiniteGroup
    sigma_projection: tuple[int, ...]
    sigma_maxima: tuple[Optional[int], ...]
    green_h: Partition
    green_r: Partition
    green_l: Partition
    f_inverse: bool
    clifford: bool


class FiniteInverseMonoid:
    """A finite inverse monoid: labels, table, unit, and inverse table.

    Built by :func:`validate_inverse_monoid`; the ``derived`` attribute holds
    the cached :class:`DerivedStructure`.
    """

    __slots__ = ("names", "table", "unit", "inverse", "derived")

    def __init__(self, names, table, unit, inverse, derived):
        self.names = tuple(names)
        self.table = tuple(tuple(row) for row in table)
        self.unit = unit
        self.inverse = tuple(inverse)
        self.derived = derived

    @property
    def n(self) -> int:
        return len(self.names)

    def elements(self) -> range:
        return range(self.n)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def leq(self, a: int, b: int) -> bool:
        """The natural partial order: a <= b iff a = b*e for some idempotent e."""
        return self.derived.natural_leq[a][b]

    def index(self, label: str) -> int:
        return self.names.index(label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteInverseMonoid):
            return NotImplemented
        return (
            self.names == other.names
            and self.table == other.table
            and self.unit == other.unit
        )

    def __hash__(self) -> int:
        return hash((self.names, self.table, self.unit))

    def __repr__(self) -> str:
        return f"FiniteInverseMonoid(order={self.n}, unit={self.names[self.unit]!r})"


def _check_table(names, table, unit):
    n = len(names)
    if len(table) != n or any(len(row) != n for row in table):
        raise NotClosed(f"table must be {n}x{n} to match {n} element names")
    for a in range(n):
        for b in range(n):
            v = table[a][b]
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotClosed(
                    f"entry {names[a]}*{names[b]} = {v!r} is not an element index",
                    witness=(a, b),
                )
    if not 0 <= unit < n:
        raise NotUnital(f"unit index {unit} out of range")
    for x in range(n):
        if table[unit][x] != x or table[x][unit] != x:
            raise NotUnital(f"{names[unit]} is not a unit at {names[x]}", witness=x)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative(
                        f"({names[a]}*{names[b]})*{names[c]} != "
                        f"{names[a]}*({names[b]}*{names[c]})",
                        witness=(a, b, c),
                    )


def _generalized_inverses(names, table):
    n = len(names)
    inverse = []
    for x in range(n):
        found = [
            y
            for y in range(n)
            if table[table[x][y]][x] == x and table[table[y][x]][y] == y
        ]
        if not found:
            raise NoInverse(f"element {names[x]} has no generalized inverse", witness=x)
        if len(found) > 1:
            raise NonUniqueInverse(
                f"element {names[x]} has generalized inverses "
                f"{names[found[0]]} and {names[found[1]]}",
                witness=(x, found[0], found[1]),
            )
        inverse.append(found[0])
    return inverse


def _derive(names, table, unit, inverse) -> DerivedStructure:
    n = len(names)
    idem = tuple(x for x in range(n) if table[x][x] == x)

    # natural partial order: a <= b iff a = b*e for some idempotent e
    leq = tuple(
        tuple(any(table[b][e] == a for e in idem) for b in range(n))
        for a in range(n)
    )
    for a in range(n):
        if not leq[a][a]:
            raise AlgebraError(f"natural order not reflexive at {names[a]}")
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise AlgebraError(
                    f"natural order not antisymmetric on {names[a]}, {names[b]}"
                )
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    raise AlgebraError("natural order not transitive")

    # least group congruence: x ~ y iff x*e = y*e for some idempotent e
    rel = [
        [any(table[x][e] == table[y][e] for e in idem) for y in range(n)]
        for x in range(n)
    ]
    for x in range(n):
        for y in range(n):
            if rel[x][y] != rel[y][x]:
                raise QuotientNotGroup("congruence witness relation not symmetric")
            for z in range(n):
                if rel[x][y] and rel[y][z] and not rel[x][z]:
                    raise QuotientNotGroup("congruence witness relation not transitive")
    class_ids = [min(y for y in range(n) if rel[x][y]) for x in range(n)]
    sigma = Partition.from_class_of(class_ids)
    for x in range(n):
        for y in range(n):
            if not rel[x][y]:
                continue
            for z in range(n):
                if (
                    sigma.class_of[table[x][z]] != sigma.class_of[table[y][z]]
                    or sigma.class_of[table[z][x]] != sigma.class_of[table[z][y]]
                ):
                    raise QuotientNotGroup(
                        f"relation is not a congruence at {names[x]}, {names[y]}, {names[z]}"
                    )
    reps = [cls[0] for cls in sigma.classes]
    qtable = [
        [sigma.class_of[table[a][b]] for b in reps]
        for a in reps
    ]
    qnames = [f"[{names[r]}]" for r in reps]
    try:
        quotient = validate_group(qnames, qtable)
    except AlgebraError as exc:
        raise QuotientNotGroup(f"congruence quotient is not a group: {exc}") from exc

    maxima = []
    for cls in sigma.classes:
        greatest = [m for m in cls if all(leq[x][m] for x in cls)]
        maxima.append(greatest[0] if greatest else None)

    # Green's relations from principal ideals
    right = [frozenset(table[a][x] for x in range(n)) for a in range(n)]
    left = [frozenset(table[x][a] for x in range(n)) for a in range(n)]
    r_ids: dict[frozenset, int] = {}
    l_ids: dict[frozenset, int] = {}
    r_of = [r_ids.setdefault(right[a], len(r_ids)) for a in range(n)]
    l_of = [l_ids.setdefault(left[a], len(l_ids)) for a in range(n)]
    green_r = Partition.from_class_of(r_of)
    green_l = Partition.from_class_of(l_of)
    green_h = Partition.from_class_of(
        [r_of[a] * n + l_of[a] for a in range(n)]
    )

    f_inverse = all(m is not None for m in maxima)
    clifford = all(table[e][x] == table[x][e] for e in idem for x in range(n))

    return DerivedStructure(
        idempotents=idem,
        natural_leq=leq,
        sigma=sigma,
        sigma_quotient=quotient,
        sigma_projection=sigma.class_of,
        sigma_maxima=tuple(maxima),
        green_h=green_h,
        green_r=green_r,
        green_l=green_l,
        f_inverse=f_inverse,
        clifford=clifford,
    )


def validate_inverse_monoid(
    names: Sequence[str], table: Sequence[Sequence[int]], unit: int
) -> FiniteInverseMonoid:
    """Validate monoid axioms and unique generalized inverses, then derive structure.

    Raises NotClosed, NotUnital, NotAssociative, NoInverse or NonUniqueInverse;
    the derived structure is computed exhaustively and cached on the result.
    """
    _check_table(names, table, unit)
    inverse = _generalized_inverses(names, table)
    n = len(names)
    for x in range(n):
        if inverse[inverse[x]] != x:
            raise AlgebraError(f"inverse is not an involution at {names[x]}")
        for y in range(n):
            if inverse[table[x][y]] != table[inverse[y]][inverse[x]]:
                raise AlgebraError(
                    f"(xy)^-1 != y^-1 x^-1 at {names[x]}, {names[y]}"
                )
    derived = _derive(names, table, unit, inverse)
    return FiniteInverseMonoid(names, table, unit, inverse, derived)


# -- structure queries ---------------------------------------------------------

def natural_order(monoid: FiniteInverseMonoid) -> tuple[tuple[bool, ...], ...]:
    """The natural partial order as a boolean matrix (rel[x][y] iff x <= y)."""
    return monoid.derived.natural_leq


def sigma(monoid: FiniteInverseMonoid):
    """Least group congruence: (partition, quotient group, projection array)."""
    d = monoid.derived
    return d.sigma, d.sigma_quotient, d.sigma_projection


def green_relations(monoid: FiniteInverseMonoid):
    """Green's relations as (H, R, L) partitions from principal ideals."""
    d = monoid.derived
    return d.green_h, d.green_r, d.green_l


def is_f_inverse(monoid: FiniteInverseMonoid):
    """(flag, per-class maxima): flag iff every congruence class has a greatest element."""
    d = monoid.derived
    return d.f_inverse, d.sigma_maxima


def is_clifford(monoid: FiniteInverseMonoid) -> bool:
    """True iff every idempotent is central."""
    return monoid.derived.clifford


# -- chain monoids --------------------------------------------------------------

def chain_monoid(values: Sequence[Fraction]) -> FiniteInverseMonoid:
    """The finite chain of values in [0,1] under min, unit = greatest value."""
    vals = list(values)
    if not vals:
        raise EmptyChain("a chain monoid needs at least one value")
    for v in vals:
        if not 0 <= v <= 1:
            raise OutOfRange(f"chain value {v} outside [0, 1]", witness=v)
    if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
        raise Unsorted("chain values must be strictly increasing")
    names = [str(v) for v in vals]
    n = len(vals)
    table = [[min(a, b) for b in range(n)] for a in range(n)]
    return validate_inverse_monoid(names, table, unit=n - 1)


# -- homomorphism predicates -----------------------------------------------------

def is_monoid_homomorphism(
    f: Sequence[int], source: FiniteInverseMonoid, target: FiniteInverseMonoid
) -> bool:
    """True iff f respects products and sends unit to unit."""
    if len(f) != source.n or any(not 0 <= v < target.n for v in f):
        return False
    if f[source.unit] != target.unit:
        return False
    st = source.table
    tt = target.table
    return all(
        f[st[a][b]] == tt[f[a]][f[b]]
        for a in range(source.n)
        for b in range(source.n)
    )


def is_idempotent_separating(
    f: Sequence[int], source: FiniteInverseMonoid, target: FiniteInverseMonoid
) -> bool:
    """True iff f is injective on the idempotents of the source."""
    idem = source.derived.idempotents
    return len({f[e] for e in idem}) == len(idem)


def is_surjective(
    f: Sequence[int], source: FiniteInverseMonoid, target: FiniteInverseMonoid
) -> bool:
    return set(f) == set(range(target.n))


def enumerate_monoid_homomorphisms(
    source: FiniteInverseMonoid,
    target: FiniteInverseMonoid,
    *,
    allowed: Sequence[Iterable] | None = None,
    preserve_maxima: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """All monoid homomorphisms source -> target, lexicographic by image tuple.

    ``allowed`` optionally restricts the candidate images of each source
    element (used for commutation constraints); ``preserve_maxima`` further
    restricts sigma-class maxima of the source to land on sigma-class maxima
    of the target.  The budget bounds the size of the restricted candidate
    space; backtracking merely avoids visiting candidates that already
    violate a product constraint, so the resulting list is exactly the
    brute-force one.
    """
    n = source.n
    domains: list[list[int]] = []
    if allowed is None:
        domains = [list(range(target.n)) for _ in range(n)]
    else:
        if len(allowed) != n:
            raise ValueError("allowed must give a candidate set per source element")
        domains = [sorted(set(a)) for a in allowed]
    domains[source.unit] = [
        v for v in domains[source.unit] if v == target.unit
    ]
    if preserve_maxima:
        src_max = {m for m in source.derived.sigma_maxima if m is not None}
        tgt_max = {m for m in target.derived.sigma_maxima if m is not None}
        for x in src_max:
            domains[x] = [v for v in domains[x] if v in tgt_max]

    space = 1
    for d in domains:
        space *= len(d)
        if space > budget:
            raise BudgetExceeded(space, budget, "candidate maps")
    if space == 0:
        return []

    # constraints[i]: products (a, b, a*b) fully determined once f[0..i] is set
    constraints: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            p = source.table[a][b]
            constraints[max(a, b, p)].append((a, b, p))

    tt = target.table
    image = [0] * n
    results: list[tuple[int, ...]] = []

    def extend(i: int) -> None:
        if i == n:
            results.append(tuple(image))
            return
        for v in domains[i]:
            image[i] = v
            if all(
                image[p] == tt[image[a]][image[b]] for a, b, p in constraints[i]
            ):
                extend(i + 1)

    extend(0)
    return results


# -- dual premorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class DualPremorphism:
    """A certified map psi from a group into an inverse monoid.

    Certification (done by :func:`validate_dual_premorphism`) covers
    inverse-compatibility, the product inequality psi(xy) >= psi(x)psi(y),
    and the coverage condition: every monoid element lies below some image.
    ``coverage_witness[u]`` is a group element h with u <= psi(h).
    """

    group: FiniteGroup
    monoid: FiniteInverseMonoid
    psi: tuple[int, ...]
    coverage_witness: tuple[int, ...]


def validate_dual_premorphism(
    group: FiniteGroup, monoid: FiniteInverseMonoid, psi: Sequence[int]
) -> DualPremorphism:
    """Certify psi: group -> monoid as a dual premorphism with coverage."""
    if len(psi) != group.n or any(not 0 <= v < monoid.n for v in psi):
        raise NotDualPremorphism("psi must assign a monoid element to every group element")
    leq = monoid.derived.natural_leq
    for x in range(group.n):
        if psi[group.inverses[x]] != monoid.inverse[psi[x]]:
            raise NotDualPremorphism(
                f"psi({group.names[x]}^-1) != psi({group.names[x]})^-1", witness=x
            )
        for y in range(group.n):
            prod = monoid.table[psi[x]][psi[y]]
            if not leq[prod][psi[group.table[x][y]]]:
                raise NotDualPremorphism(
                    f"psi({group.names[x]}*{group.names[y]}) is not above "
                    f"psi({group.names[x]})*psi({group.names[y]})",
                    witness=(x, y),
                )
    witnesses = []
    for u in range(monoid.n):
        h = next((h for h in range(group.n) if leq[u][psi[h]]), None)
        if h is None:
            raise CoverageFailure(
                f"monoid element {monoid.names[u]} is below no psi image", witness=u
            )
        witnesses.append(h)
    return DualPremorphism(group, monoid, tuple(psi), tuple(witnesses))
