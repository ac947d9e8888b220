"""Finite groups as validated Cayley tables over dense indices 0..n-1.

All algebra runs on integer indices; human-readable labels are carried
alongside for reports and error messages.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotClosed,
)


class FiniteGroup:
    """A finite group: labels, Cayley table, identity and inverse table.

    Instances are produced by :func:`validate_group` (or the built-in family
    constructors) and are immutable afterwards; share them freely.
    """

    __slots__ = ("names", "table", "identity", "inverses")

    def __init__(self, names, table, identity, inverses):
        self.names = tuple(names)
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.inverses = tuple(inverses)

    @property
    def n(self) -> int:
        return len(self.names)

    def elements(self) -> range:
        return range(self.n)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def index(self, label: str) -> int:
        return self.names.index(label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.names == other.names and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.names, self.table))

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.n}, names={list(self.names)})"


def validate_group(names: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Check the group axioms exhaustively and return the validated group.

    The identity and the inverse table are computed here, never supplied.
    Raises NotClosed, NotAssociative (with witness triple), NoIdentity or
    MissingInverse (with witness element).
    """
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
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative(
                        f"({names[a]}*{names[b]})*{names[c]} != {names[a]}*({names[b]}*{names[c]})",
                        witness=(a, b, c),
                    )
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    inverses = []
    for x in range(n):
        # in an associative unital table a two-sided inverse is unique
        y = next(
            (y for y in range(n) if table[x][y] == identity and table[y][x] == identity),
            None,
        )
        if y is None:
            raise MissingInverse(f"element {names[x]} has no inverse", witness=x)
        inverses.append(y)
    return FiniteGroup(names, table, identity, inverses)


# -- built-in families --------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n, additive; names e, g, g2, ..."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    names = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return validate_group(names, table)


def klein_four() -> FiniteGroup:
    """The Klein four-group on names e, a, b, c."""
    names = ["e", "a", "b", "c"]
    table = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    return validate_group(names, table)


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + "".join(str(i) for i in cycle) + ")")
    return "".join(parts) if parts else "e"


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n points; product s*t applies t first, then s."""
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    names = [_cycle_label(p) for p in elems]
    table = [
        [index[tuple(s[t[i]] for i in range(n))] for t in elems]
        for s in elems
    ]
    return validate_group(names, table)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on n vertices (rotations r_i, reflections s_i)."""
    if n < 1:
        raise ValueError("dihedral needs n >= 1 vertices")
    rotations = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    reflections = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    elems = rotations + reflections
    index = {p: i for i, p in enumerate(elems)}
    names = ["e"] + [f"r{k}" for k in range(1, n)] + [f"s{k}" for k in range(n)]
    table = [
        [index[tuple(s[t[i]] for i in range(n))] for t in elems]
        for s in elems
    ]
    return validate_group(names, table)


# -- subgroup and homomorphism predicates -------------------------------------

def is_subgroup(group: FiniteGroup, subset: Iterable[int]) -> bool:
    """True iff subset contains the identity and is closed under * and inverse."""
    s = frozenset(subset)
    if group.identity not in s:
        return False
    return all(
        group.table[a][b] in s for a in s for b in s
    ) and all(group.inverses[a] in s for a in s)


def is_group_homomorphism(f: Sequence[int], source: FiniteGroup, target: FiniteGroup) -> bool:
    """True iff f(x*y) = f(x)*f(y) for all x, y (identity preservation follows)."""
    if len(f) != source.n or any(not 0 <= v < target.n for v in f):
        return False
    st = source.table
    tt = target.table
    return all(
        f[st[a][b]] == tt[f[a]][f[b]]
        for a in range(source.n)
        for b in range(source.n)
    )


def enumerate_group_homomorphisms(
    source: FiniteGroup, target: FiniteGroup, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All homomorphisms source -> target by brute force, in lexicographic order.

    The full function space |target|^|source| is examined; raises
    BudgetExceeded when that count is above the budget.
    """
    space = target.n ** source.n
    if space > budget:
        raise BudgetExceeded(space, budget, "candidate maps")
    return [
        f
        for f in product(range(target.n), repeat=source.n)
        if is_group_homomorphism(f, source, target)
    ]
