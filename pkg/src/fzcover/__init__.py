"""Finite fuzzy subgroups, inverse monoids, and F-inverse covers.

The package validates every structure it builds by exhaustive checking at
desk scale and certifies, instance by instance, that the cover construction
embeds fuzzy subgroups fully and faithfully into cover triples.
"""

from . import errors
from .cover import (
    ConstructedCover,
    CoverMonoid,
    CoverReport,
    build_cover,
    cover_from_premorphism,
    cover_report,
    hclass_level_isomorphism,
    monoid_isomorphic,
    premorphism_from_cover,
)
from .embedding import (
    CoverMorphism,
    CoverTriple,
    EmbeddingCertificate,
    FuzzyMorphism,
    compose_cover_morphisms,
    compose_fuzzy_morphisms,
    cover_triple,
    embed_morphism,
    embed_object,
    identity_cover_morphism,
    identity_fuzzy_morphism,
    reconstruct_morphism,
    validate_cover_morphism,
    validate_fuzzy_morphism,
    verify_embedding,
)
from .enumeration import (
    ValueGrid,
    all_subgroups,
    default_grid,
    enumerate_cover_morphisms,
    enumerate_fuzzy_morphisms,
    enumerate_fuzzy_subgroups_chain,
    enumerate_fuzzy_subgroups_filter,
    enumerate_subgroup_chains,
)
from .fuzzy import (
    FuzzyFacts,
    FuzzySubgroup,
    as_dual_premorphism,
    derived_facts,
    level_subset,
    validate_fuzzy,
)
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    enumerate_group_homomorphisms,
    is_group_homomorphism,
    is_subgroup,
    klein_four,
    symmetric,
    validate_group,
)
from .monoids import (
    DerivedStructure,
    DualPremorphism,
    FiniteInverseMonoid,
    Partition,
    chain_monoid,
    enumerate_monoid_homomorphisms,
    green_relations,
    is_clifford,
    is_f_inverse,
    is_idempotent_separating,
    is_monoid_homomorphism,
    is_surjective,
    natural_order,
    sigma,
    validate_dual_premorphism,
    validate_inverse_monoid,
)
from .workspace import WorkspaceFile, parse_workspace

__version__ = "0.1.0"

__all__ = [
    "errors",
    "FiniteGroup",
    "validate_group",
    "cyclic",
    "klein_four",
    "symmetric",
    "dihedral",
    "is_subgroup",
    "is_group_homomorphism",
    "enumerate_group_homomorphisms",
    "FiniteInverseMonoid",
    "DerivedStructure",
    "Partition",
    "DualPremorphism",
    "validate_inverse_monoid",
    "validate_dual_premorphism",
    "chain_monoid",
    "natural_order",
    "sigma",
    "green_relations",
    "is_f_inverse",
    "is_clifford",
    "is_monoid_homomorphism",
    "is_idempotent_separating",
    "is_surjective",
    "enumerate_monoid_homomorphisms",
    "FuzzySubgroup",
    "FuzzyFacts",
    "validate_fuzzy",
    "level_subset",
    "derived_facts",
    "as_dual_premorphism",
    "CoverMonoid",
    "CoverReport",
    "ConstructedCover",
    "build_cover",
    "cover_report",
    "hclass_level_isomorphism",
    "cover_from_premorphism",
    "premorphism_from_cover",
    "monoid_isomorphic",
    "FuzzyMorphism",
    "CoverTriple",
    "CoverMorphism",
    "EmbeddingCertificate",
    "validate_fuzzy_morphism",
    "identity_fuzzy_morphism",
    "compose_fuzzy_morphisms",
    "cover_triple",
    "validate_cover_morphism",
    "identity_cover_morphism",
    "compose_cover_morphisms",
    "embed_object",
    "embed_morphism",
    "reconstruct_morphism",
    "verify_embedding",
    "ValueGrid",
    "default_grid",
    "all_subgroups",
    "enumerate_subgroup_chains",
    "enumerate_fuzzy_subgroups_filter",
    "enumerate_fuzzy_subgroups_chain",
    "enumerate_fuzzy_morphisms",
    "enumerate_cover_morphisms",
    "WorkspaceFile",
    "parse_workspace",
]
