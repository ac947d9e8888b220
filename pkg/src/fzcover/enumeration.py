"""Exhaustive generators: fuzzy subgroups over a value grid, subgroup chains,
and hom-sets on both sides of the embedding.

Two independent routes produce the fuzzy subgroups over a grid -- a raw
filter over all value assignments, and a constructive route through strictly
descending subgroup chains -- so each can serve as the oracle for the other.
Everything returns lists in a deterministic (lexicographic) order, and every
generated object re-passes its validator; generators never bypass validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .embedding import (
    CoverMorphism,
    CoverTriple,
    FuzzyMorphism,
    validate_cover_morphism,
    validate_fuzzy_morphism,
)
from .errors import DEFAULT_BUDGET, BudgetExceeded, ValidationError
from .fuzzy import FuzzySubgroup, validate_fuzzy
from .groups import FiniteGroup, enumerate_group_homomorphisms, is_subgroup
from .monoids import enumerate_monoid_homomorphisms


@dataclass(frozen=True)
class ValueGrid:
    """A finite menu of membership values: sorted, within (0, 1], containing 1."""

    levels: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.levels:
            raise ValidationError("a value grid needs at least one level")
        for v in self.levels:
            if not 0 < v <= 1:
                raise ValidationError(f"grid level {v} outside (0, 1]")
        if any(a >= b for a, b in zip(self.levels, self.levels[1:])):
            raise ValidationError("grid levels must be strictly increasing")
        if self.levels[-1] != 1:
            raise ValidationError("a value grid must contain 1")

    @property
    def k(self) -> int:
        return len(self.levels)


def default_grid(k: int = 4) -> ValueGrid:
    """The k-level grid {1/k, 2/k, ..., 1}; k=4 gives {1/4, 1/2, 3/4, 1}."""
    return ValueGrid(tuple(Fraction(i, k) for i in range(1, k + 1)))


def enumerate_fuzzy_subgroups_filter(
    group: FiniteGroup, grid: ValueGrid, budget: int = DEFAULT_BUDGET
) -> list[FuzzySubgroup]:
    """All assignments group -> grid that satisfy both axioms.

    Runs over the full |grid|^|group| function space (budget-guarded) in
    lexicographic order of value indices; axioms are pre-screened on integer
    ranks since they only depend on the order of the values, and survivors
    are constructed through the validator.
    """
    n = group.n
    k = grid.k
    space = k ** n
    if space > budget:
        raise BudgetExceeded(space, budget, "candidate assignments")
    table = group.table
    invs = group.inverses
    out = []
    for ranks in product(range(k), repeat=n):
        ok = all(ranks[invs[x]] == ranks[x] for x in range(n)) and all(
            ranks[table[x][y]] >= min(ranks[x], ranks[y])
            for x in range(n)
            for y in range(n)
        )
        if ok:
            out.append(validate_fuzzy(group, [grid.levels[r] for r in ranks]))
    return out


def all_subgroups(group: FiniteGroup, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Every subgroup as a sorted element tuple, ordered by (size, elements)."""
    n = group.n
    if 2 ** n > budget:
        raise BudgetExceeded(2 ** n, budget, "subsets")
    rest = [x for x in range(n) if x != group.identity]
    subgroups = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            subset = (group.identity,) + extra
            if is_subgroup(group, subset):
                subgroups.append(tuple(sorted(subset)))
    return sorted(subgroups, key=lambda s: (len(s), s))


def enumerate_subgroup_chains(
    group: FiniteGroup, budget: int = DEFAULT_BUDGET
) -> list[tuple[tuple[int, ...], ...]]:
    """All strictly descending subgroup chains starting at the whole group."""
    subgroups = all_subgroups(group, budget)
    chains: list[tuple[tuple[int, ...], ...]] = []

    def extend(chain):
        if len(chains) >= budget:
            raise BudgetExceeded(len(chains) + 1, budget, "chains")
        chains.append(tuple(chain))
        last = set(chain[-1])
        for sub in subgroups:
            if len(sub) < len(last) and set(sub) < last:
                chain.append(sub)
                extend(chain)
                chain.pop()

    extend([tuple(range(group.n))])
    return chains


def enumerate_fuzzy_subgroups_chain(
    group: FiniteGroup, grid: ValueGrid, budget: int = DEFAULT_BUDGET
) -> list[FuzzySubgroup]:
    """Fuzzy subgroups built from subgroup chains plus increasing value picks.

    Each descending chain G = H1 > H2 > ... > Hm paired with values
    v1 < ... < vm from the grid yields mu(x) = v_j for the deepest Hj
    containing x.  Returned in the same order as the filter route so the two
    lists can be compared directly.
    """
    chains = enumerate_subgroup_chains(group, budget)
    k = grid.k
    rank = {v: i for i, v in enumerate(grid.levels)}
    out = []
    total = 0
    for chain in chains:
        m = len(chain)
        if m > k:
            continue
        for values in combinations(grid.levels, m):
            total += 1
            if total > budget:
                raise BudgetExceeded(total, budget, "chain assignments")
            mu = [None] * group.n
            for depth, sub in enumerate(chain):
                for x in sub:
                    mu[x] = values[depth]
            out.append(validate_fuzzy(group, mu))
    out.sort(key=lambda fz: tuple(rank[v] for v in fz.mu))
    return out


def _monotone_top_maps(k_source: int, k_target: int) -> list[tuple[int, ...]]:
    # order-preserving chain-index maps sending top to top, lexicographic
    if k_source == 1:
        return [(k_target - 1,)]
    maps = []
    for prefix in product(range(k_target), repeat=k_source - 1):
        full = prefix + (k_target - 1,)
        if all(full[i] <= full[i + 1] for i in range(k_source - 1)):
            maps.append(full)
    return maps


def enumerate_fuzzy_morphisms(
    source: FuzzySubgroup, target: FuzzySubgroup, budget: int = DEFAULT_BUDGET
) -> list[FuzzyMorphism]:
    """All morphisms source -> target, lexicographic by (f, lam)."""
    homs = enumerate_group_homomorphisms(source.group, target.group, budget)
    lams = _monotone_top_maps(len(source.chain), len(target.chain))
    out = []
    for f in homs:
        for lam in lams:
            if all(
                target.mu_index(f[x]) == lam[source.mu_index(x)]
                for x in range(source.n)
            ):
                out.append(validate_fuzzy_morphism(source, target, f, lam))
    return out


def enumerate_cover_morphisms(
    source: CoverTriple, target: CoverTriple, budget: int = DEFAULT_BUDGET
) -> list[CoverMorphism]:
    """All cover morphisms source -> target, lexicographic by (lam, fstar).

    For each base-component lam, the commutation condition pins the projection
    of every fstar image, so fstar candidates are enumerated inside those
    fibers (plus the maxima restriction) and filtered by the homomorphism
    constraints; every pair still passes the full validator.
    """
    lams = enumerate_monoid_homomorphisms(
        source.base, target.base, preserve_maxima=True, budget=budget
    )
    fibers: dict[int, list[int]] = {}
    for s in range(target.monoid.n):
        fibers.setdefault(target.projection[s], []).append(s)
    out = []
    for lam in lams:
        allowed = [
            fibers.get(lam[source.projection[t]], [])
            for t in range(source.monoid.n)
        ]
        for fstar in enumerate_monoid_homomorphisms(
            source.monoid,
            target.monoid,
            allowed=allowed,
            preserve_maxima=True,
            budget=budget,
        ):
            out.append(validate_cover_morphism(source, target, fstar, lam))
    return out
