"""Morphisms of fuzzy subgroups, morphisms of covers, and the embedding.

The embedding sends a fuzzy subgroup to its cover triple and a morphism
(f, lambda) to (fstar, lambda) with fstar acting componentwise on admissible
pairs.  `verify_embedding` certifies, for a pair of objects, that the
embedding is functorial, injective on the hom-set, and surjective onto the
cover-side hom-set, by exhaustive enumeration of both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .cover import CoverMonoid, build_cover
from .errors import (
    DEFAULT_BUDGET,
    CommutationFailure,
    MaximaNotPreserved,
    NotComposable,
    NotEmbeddingImage,
    NotFInverse,
    NotGroupHom,
    NotHomomorphism,
    NotIdempotentSeparating,
    NotOrderPreserving,
    NotSurjective,
    ReconstructionMismatch,
    TopNotPreserved,
    ValidationError,
)
from .fuzzy import FuzzySubgroup
from .groups import is_group_homomorphism
from .monoids import (
    FiniteInverseMonoid,
    is_idempotent_separating,
    is_monoid_homomorphism,
    is_surjective,
)


# -- morphisms of fuzzy subgroups ---------------------------------------------

@dataclass(frozen=True)
class FuzzyMorphism:
    """A pair (f, lam): group homomorphism plus top-preserving monotone chain map.

    ``lam`` maps chain indices of the source value set to chain indices of
    the target's, and the square mu_target(f(x)) = lam(mu_source(x)) commutes.
    """

    source: FuzzySubgroup
    target: FuzzySubgroup
    f: tuple[int, ...]
    lam: tuple[int, ...]


def validate_fuzzy_morphism(
    source: FuzzySubgroup,
    target: FuzzySubgroup,
    f: Sequence[int],
    lam: Sequence[int],
) -> FuzzyMorphism:
    """Check all three morphism conditions and return the validated pair."""
    f = tuple(f)
    lam = tuple(lam)
    if not is_group_homomorphism(f, source.group, target.group):
        raise NotGroupHom("f is not a group homomorphism")
    k1, k2 = len(source.chain), len(target.chain)
    if len(lam) != k1 or any(not 0 <= v < k2 for v in lam):
        raise NotOrderPreserving("lam must assign a target chain value to each source value")
    for i in range(k1 - 1):
        if lam[i] > lam[i + 1]:
            raise NotOrderPreserving(
                f"lam reverses {source.chain[i]} < {source.chain[i + 1]}",
                witness=(i, i + 1),
            )
    if lam[k1 - 1] != k2 - 1:
        raise TopNotPreserved(
            f"lam sends top {source.top} to {target.chain[lam[k1 - 1]]}, not {target.top}"
        )
    for x in range(source.n):
        if target.mu_index(f[x]) != lam[source.mu_index(x)]:
            raise CommutationFailure(
                f"mu(f({source.group.names[x]})) != lam(mu({source.group.names[x]}))",
                witness=x,
            )
    return FuzzyMorphism(source, target, f, lam)


def identity_fuzzy_morphism(fz: FuzzySubgroup) -> FuzzyMorphism:
    return validate_fuzzy_morphism(
        fz, fz, tuple(range(fz.n)), tuple(range(len(fz.chain)))
    )


def compose_fuzzy_morphisms(second: FuzzyMorphism, first: FuzzyMorphism) -> FuzzyMorphism:
    """The composite pair, re-validated rather than assumed correct."""
    if first.target != second.source:
        raise NotComposable("target of the first morphism differs from source of the second")
    f = tuple(second.f[v] for v in first.f)
    lam = tuple(second.lam[v] for v in first.lam)
    return validate_fuzzy_morphism(first.source, second.target, f, lam)


# -- cover triples and their morphisms ----------------------------------------

@dataclass(frozen=True)
class CoverTriple:
    """A certified cover object: F-inverse monoid, base monoid, projection."""

    monoid: FiniteInverseMonoid
    base: FiniteInverseMonoid
    projection: tuple[int, ...]


def cover_triple(
    monoid: FiniteInverseMonoid, base: FiniteInverseMonoid, projection: Sequence[int]
) -> CoverTriple:
    """Certify the triple: F-inverse, surjective idempotent-separating projection."""
    projection = tuple(projection)
    if not monoid.derived.f_inverse:
        raise NotFInverse("cover monoid has a class without greatest element")
    if not is_monoid_homomorphism(projection, monoid, base):
        raise NotHomomorphism("projection is not a monoid homomorphism")
    if not is_surjective(projection, monoid, base):
        raise NotSurjective("projection misses part of the base monoid")
    if not is_idempotent_separating(projection, monoid, base):
        raise NotIdempotentSeparating("projection merges idempotents")
    return CoverTriple(monoid, base, projection)


@dataclass(frozen=True)
class CoverMorphism:
    """A pair (fstar, lam) of monoid homomorphisms commuting with projections.

    Both components send every class maximum to the maximum of its own class.
    """

    source: CoverTriple
    target: CoverTriple
    fstar: tuple[int, ...]
    lam: tuple[int, ...]


def _check_maxima_preserved(f, source: FiniteInverseMonoid, target: FiniteInverseMonoid, what: str):
    td = target.derived
    for m in source.derived.sigma_maxima:
        if m is None:
            continue
        image = f[m]
        if td.sigma_maxima[td.sigma.class_of[image]] != image:
            raise MaximaNotPreserved(
                f"{what} sends class maximum {source.names[m]} to non-maximum "
                f"{target.names[image]}",
                witness=m,
            )


def validate_cover_morphism(
    source: CoverTriple,
    target: CoverTriple,
    fstar: Sequence[int],
    lam: Sequence[int],
) -> CoverMorphism:
    """Check homomorphism, maxima-preservation and commutation conditions."""
    fstar = tuple(fstar)
    lam = tuple(lam)
    if not is_monoid_homomorphism(fstar, source.monoid, target.monoid):
        raise NotHomomorphism("fstar is not a monoid homomorphism")
    if not is_monoid_homomorphism(lam, source.base, target.base):
        raise NotHomomorphism("lam is not a monoid homomorphism")
    _check_maxima_preserved(fstar, source.monoid, target.monoid, "fstar")
    _check_maxima_preserved(lam, source.base, target.base, "lam")
    for t in range(source.monoid.n):
        if target.projection[fstar[t]] != lam[source.projection[t]]:
            raise CommutationFailure(
                f"projection(fstar({source.monoid.names[t]})) != "
                f"lam(projection({source.monoid.names[t]}))",
                witness=t,
            )
    return CoverMorphism(source, target, fstar, lam)


def identity_cover_morphism(obj: CoverTriple) -> CoverMorphism:
    return validate_cover_morphism(
        obj, obj, tuple(range(obj.monoid.n)), tuple(range(obj.base.n))
    )


def compose_cover_morphisms(second: CoverMorphism, first: CoverMorphism) -> CoverMorphism:
    """The composite pair, re-validated (maxima preservation included)."""
    if first.target != second.source:
        raise NotComposable("target of the first morphism differs from source of the second")
    fstar = tuple(second.fstar[v] for v in first.fstar)
    lam = tuple(second.lam[v] for v in first.lam)
    return validate_cover_morphism(first.source, second.target, fstar, lam)


# -- the embedding -------------------------------------------------------------

@lru_cache(maxsize=None)
def _cover_of(fz: FuzzySubgroup) -> CoverMonoid:
    return build_cover(fz)


@lru_cache(maxsize=None)
def embed_object(fz: FuzzySubgroup) -> CoverTriple:
    """The cover triple of a fuzzy subgroup, fully certified."""
    cov = _cover_of(fz)
    return cover_triple(cov.monoid, cov.base, cov.projection)


def embed_morphism(m: FuzzyMorphism) -> CoverMorphism:
    """Image of a fuzzy-subgroup morphism: fstar(u, x) = (lam(u), f(x)).

    Well-definedness (lam(u) stays admissible over f(x)) plus the
    homomorphism, unit, maxima and commutation conditions are all verified
    by the cover-morphism validator on the constructed map.
    """
    c1 = _cover_of(m.source)
    c2 = _cover_of(m.target)
    fstar = []
    for u, x in c1.pairs:
        pair = (m.lam[u], m.f[x])
        if pair not in c2.pair_index:
            raise ReconstructionMismatch(
                f"image pair {pair} is not admissible", witness=(u, x)
            )
        fstar.append(c2.pair_index[pair])
    return validate_cover_morphism(
        embed_object(m.source), embed_object(m.target), tuple(fstar), m.lam
    )


def reconstruct_morphism(
    c: CoverMorphism, source: FuzzySubgroup, target: FuzzySubgroup
) -> FuzzyMorphism:
    """Recover (f, lam) from a cover morphism between embedded objects.

    f(x) is the group component of the image of the class maximum over x;
    lam is shared.  The result must be a valid fuzzy-subgroup morphism whose
    embedding equals the input exactly, otherwise the reconstruction (and
    with it the fullness claim) has failed.
    """
    if c.source != embed_object(source) or c.target != embed_object(target):
        raise NotEmbeddingImage("endpoints are not the embedded covers of the given objects")
    c1 = _cover_of(source)
    c2 = _cover_of(target)
    f = tuple(
        c2.pairs[c.fstar[c1.pair_index[(source.mu_index(x), x)]]][1]
        for x in range(source.n)
    )
    try:
        m = validate_fuzzy_morphism(source, target, f, c.lam)
    except ValidationError as exc:
        raise ReconstructionMismatch(
            f"reconstructed pair is not a morphism: {exc}", witness=f
        ) from exc
    if embed_morphism(m) != c:
        raise ReconstructionMismatch(
            "embedding of the reconstructed morphism differs from the input",
            witness=f,
        )
    return m


# -- instance-level certification ----------------------------------------------

@dataclass(frozen=True)
class EmbeddingCertificate:
    """Outcome of exhaustively comparing the two hom-sets of one object pair."""

    source: FuzzySubgroup
    target: FuzzySubgroup
    fuzzy_homs: tuple[FuzzyMorphism, ...]
    cover_homs: tuple[CoverMorphism, ...]
    bijection: tuple[int, ...]
    identity_ok: bool
    faithful: bool
    full: bool
    roundtrip_ok: bool
    composition_checks: int
    composition_ok: bool
    counterexample: Optional[str]

    @property
    def counts_equal(self) -> bool:
        return len(self.fuzzy_homs) == len(self.cover_homs)

    @property
    def ok(self) -> bool:
        return (
            self.counts_equal
            and self.identity_ok
            and self.faithful
            and self.full
            and self.roundtrip_ok
            and self.composition_ok
            and self.counterexample is None
        )

    def to_json_dict(self) -> dict:
        return {
            "fuzzy_hom_count": len(self.fuzzy_homs),
            "cover_hom_count": len(self.cover_homs),
            "bijection": list(self.bijection),
            "fuzzy_homs": [
                {"f": list(m.f), "lam": list(m.lam)} for m in self.fuzzy_homs
            ],
            "cover_homs": [
                {"fstar": list(c.fstar), "lam": list(c.lam)} for c in self.cover_homs
            ],
            "identity_ok": self.identity_ok,
            "faithful": self.faithful,
            "full": self.full,
            "roundtrip_ok": self.roundtrip_ok,
            "composition_checks": self.composition_checks,
            "composition_ok": self.composition_ok,
            "counterexample": self.counterexample,
            "ok": self.ok,
        }


def _hom_sets(source, target, budget, cache):
    from .enumeration import enumerate_cover_morphisms, enumerate_fuzzy_morphisms

    if cache is None:
        cache = {}
    key = ("fuzzy", source, target)
    if key not in cache:
        cache[key] = enumerate_fuzzy_morphisms(source, target, budget=budget)
    fuzzy_homs = cache[key]
    key = ("cover", source, target)
    if key not in cache:
        cache[key] = enumerate_cover_morphisms(
            embed_object(source), embed_object(target), budget=budget
        )
    return fuzzy_homs, cache[key]


def verify_embedding(
    source: FuzzySubgroup,
    target: FuzzySubgroup,
    *,
    budget: int = DEFAULT_BUDGET,
    hom_cache: dict | None = None,
) -> EmbeddingCertificate:
    """Certify functoriality, faithfulness and fullness on one object pair.

    Both hom-sets are enumerated exhaustively; a shared ``hom_cache`` dict
    avoids recomputing hom-sets across many pairs.  Any failed condition is
    recorded as a counterexample in the certificate instead of raising.
    """
    from .enumeration import enumerate_fuzzy_morphisms

    fuzzy_homs, cover_homs = _hom_sets(source, target, budget, hom_cache)
    counterexample = None

    identity_ok = (
        embed_morphism(identity_fuzzy_morphism(source))
        == identity_cover_morphism(embed_object(source))
    ) and (
        embed_morphism(identity_fuzzy_morphism(target))
        == identity_cover_morphism(embed_object(target))
    )

    images = []
    bijection = []
    for i, m in enumerate(fuzzy_homs):
        em = embed_morphism(m)
        images.append(em)
        try:
            bijection.append(cover_homs.index(em))
        except ValueError:
            counterexample = f"image of fuzzy morphism {i} missing from cover hom-set"
            bijection.append(-1)
    faithful = len(set(bijection)) == len(bijection)
    if not faithful and counterexample is None:
        counterexample = "two fuzzy morphisms share one image"

    full = len(set(bijection)) == len(cover_homs) and -1 not in bijection
    roundtrip_ok = True
    for j, c in enumerate(cover_homs):
        try:
            m = reconstruct_morphism(c, source, target)
        except (ReconstructionMismatch, NotEmbeddingImage) as exc:
            full = False
            roundtrip_ok = False
            if counterexample is None:
                counterexample = f"cover morphism {j}: {exc}"
            continue
        if m not in fuzzy_homs:
            full = False
            if counterexample is None:
                counterexample = f"cover morphism {j} reconstructs outside the hom-set"
    for i, m in enumerate(fuzzy_homs):
        if reconstruct_morphism(images[i], source, target) != m:
            roundtrip_ok = False
            if counterexample is None:
                counterexample = f"round trip differs on fuzzy morphism {i}"

    if hom_cache is None:
        reverse = enumerate_fuzzy_morphisms(target, source, budget=budget)
    else:
        key = ("fuzzy", target, source)
        if key not in hom_cache:
            hom_cache[key] = enumerate_fuzzy_morphisms(target, source, budget=budget)
        reverse = hom_cache[key]
    composition_checks = 0
    composition_ok = True
    for m1 in fuzzy_homs:
        for m2 in reverse:
            for outer, inner in ((m2, m1), (m1, m2)):
                composite = compose_fuzzy_morphisms(outer, inner)
                lhs = embed_morphism(composite)
                rhs = compose_cover_morphisms(
                    embed_morphism(outer), embed_morphism(inner)
                )
                composition_checks += 1
                if lhs != rhs:
                    composition_ok = False
                    if counterexample is None:
                        counterexample = "embedding does not respect a composition"

    return EmbeddingCertificate(
        source=source,
        target=target,
        fuzzy_homs=tuple(fuzzy_homs),
        cover_homs=tuple(cover_homs),
        bijection=tuple(bijection),
        identity_ok=identity_ok,
        faithful=faithful,
        full=full,
        roundtrip_ok=roundtrip_ok,
        composition_checks=composition_checks,
        composition_ok=composition_ok,
        counterexample=counterexample,
    )
