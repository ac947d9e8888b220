"""Fuzzy subgroups (G, mu, U) with exact rational membership values.

Membership values are ``fractions.Fraction`` throughout; floating point is
banned from the core so that the defining inequalities and all order
computations are exact.  The value set U is always derived as the image of
mu, which makes mu surjective onto its chain by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    Axiom1Violation,
    Axiom2Violation,
    ValueNotInChain,
    ValueOutOfRange,
)
from .groups import FiniteGroup, is_subgroup
from .monoids import DualPremorphism, chain_monoid, validate_dual_premorphism


class FuzzySubgroup:
    """A validated triple: group, membership map, and its value chain.

    ``chain`` is the sorted tuple of distinct values of ``mu`` (the set U);
    ``top`` is its greatest element, which always equals mu(identity).
    """

    __slots__ = ("group", "mu", "chain", "top", "_rank")

    def __init__(self, group: FiniteGroup, mu, chain):
        self.group = group
        self.mu = tuple(mu)
        self.chain = tuple(chain)
        self.top = self.chain[-1]
        rank = {v: i for i, v in enumerate(self.chain)}
        self._rank = tuple(rank[v] for v in self.mu)

    @property
    def n(self) -> int:
        return self.group.n

    def chain_index(self, value: Fraction) -> int:
        """Position of value in the chain; raises ValueNotInChain."""
        try:
            return self.chain.index(value)
        except ValueError:
            raise ValueNotInChain(f"value {value} is not taken by mu", witness=value)

    def mu_index(self, x: int) -> int:
        """Chain index of mu(x)."""
        return self._rank[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySubgroup):
            return NotImplemented
        return self.group == other.group and self.mu == other.mu

    def __hash__(self) -> int:
        return hash((self.group, self.mu))

    def __repr__(self) -> str:
        vals = ", ".join(f"{n}={v}" for n, v in zip(self.group.names, self.mu))
        return f"FuzzySubgroup({vals})"


def validate_fuzzy(group: FiniteGroup, mu: Sequence[Fraction]) -> FuzzySubgroup:
    """Check the two fuzzy subgroup axioms and derive the value chain.

    Raises ValueOutOfRange, Axiom1Violation (witness pair) or Axiom2Violation
    (witness element).  The chain and its top are derived, never supplied.
    """
    n = group.n
    if len(mu) != n:
        raise ValueOutOfRange(f"mu must assign a value to each of {n} elements")
    values = [Fraction(v) for v in mu]
    for x, v in enumerate(values):
        if not 0 <= v <= 1:
            raise ValueOutOfRange(
                f"mu({group.names[x]}) = {v} outside [0, 1]", witness=x
            )
    for x in range(n):
        if values[group.inverses[x]] != values[x]:
            raise Axiom2Violation(
                f"mu({group.names[x]}^-1) = {values[group.inverses[x]]} "
                f"!= mu({group.names[x]}) = {values[x]}",
                witness=x,
            )
        for y in range(n):
            bound = min(values[x], values[y])
            if values[group.table[x][y]] < bound:
                raise Axiom1Violation(
                    f"mu({group.names[x]}*{group.names[y]}) = "
                    f"{values[group.table[x][y]]} < min bound {bound}",
                    witness=(x, y),
                )
    chain = tuple(sorted(set(values)))
    fz = FuzzySubgroup(group, values, chain)
    # mu(e) dominating every value is a consequence of the axioms
    assert fz.mu[group.identity] == fz.top
    return fz


def level_subset(fz: FuzzySubgroup, u: Fraction) -> frozenset[int]:
    """The level subset at u: all elements with mu >= u.  Always a subgroup."""
    u = Fraction(u)
    if u not in fz.chain:
        raise ValueNotInChain(f"value {u} is not taken by mu", witness=u)
    subset = frozenset(x for x in range(fz.n) if fz.mu[x] >= u)
    assert is_subgroup(fz.group, subset)
    return subset


@dataclass(frozen=True)
class FuzzyFacts:
    """Witnessed elementary facts about a fuzzy subgroup."""

    unit_value: Fraction
    max_value: Fraction
    unit_dominates: bool
    inverse_symmetric: bool
    level_sizes: tuple[tuple[Fraction, int], ...]


def derived_facts(fz: FuzzySubgroup) -> FuzzyFacts:
    """Check that mu(e) dominates and mu is inverse-symmetric; report both."""
    unit_value = fz.mu[fz.group.identity]
    max_value = max(fz.mu)
    dominates = all(fz.mu[x] <= unit_value for x in range(fz.n))
    symmetric = all(fz.mu[fz.group.inverses[x]] == fz.mu[x] for x in range(fz.n))
    levels = tuple((u, len(level_subset(fz, u))) for u in fz.chain)
    return FuzzyFacts(unit_value, max_value, dominates, symmetric, levels)


def as_dual_premorphism(fz: FuzzySubgroup) -> DualPremorphism:
    """View mu as a certified dual premorphism onto the chain monoid of U.

    Inverse-compatibility is automatic (chain elements are self-inverse and
    mu is inverse-symmetric), the product inequality is the first axiom, and
    coverage follows from surjectivity; all three are certified anyway.
    """
    target = chain_monoid(fz.chain)
    psi = tuple(fz.mu_index(x) for x in range(fz.n))
    return validate_dual_premorphism(fz.group, target, psi)
