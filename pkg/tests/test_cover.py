from fractions import Fraction

import pytest

from fzcover import (
    as_dual_premorphism,
    build_cover,
    chain_monoid,
    cover_from_premorphism,
    cover_report,
    cyclic,
    green_relations,
    hclass_level_isomorphism,
    level_subset,
    monoid_isomorphic,
    premorphism_from_cover,
    sigma,
    validate_dual_premorphism,
    validate_fuzzy,
    validate_inverse_monoid,
)
from fzcover.errors import (
    BudgetExceeded,
    CoverageFailure,
    NotDualPremorphism,
    NotFInverse,
    NotHomomorphism,
    NotIdempotentSeparating,
    NotSurjective,
    ValueNotInChain,
)
from tests.test_monoids import group_as_monoid, symmetric_inverse_monoid_2

F = Fraction


def test_running_cover_structure(fz_z2):
    cover = build_cover(fz_z2)
    assert cover.n == 3
    assert set(cover.monoid.names) == {"(1/2,e)", "(1,e)", "(1/2,a)"}
    assert cover.monoid.names[cover.monoid.unit] == "(1,e)"


def test_v4_cover_size(fz_v4):
    cover = build_cover(fz_v4)
    assert cover.n == 7
    per_element = [sum(1 for u, x in cover.pairs if x == g) for g in range(4)]
    assert per_element == [3, 2, 1, 1]


def test_size_identity(fz_z2, fz_v4, s3):
    mu = [F(1) if n == "e" else F(1, 2) if len(n) == 5 else F(1, 4) for n in s3.names]
    for fz in (fz_z2, fz_v4, validate_fuzzy(s3, mu)):
        cover = build_cover(fz)
        assert cover.n == sum(
            sum(1 for u in fz.chain if u <= fz.mu[x]) for x in range(fz.n)
        )


def test_constant_cover_is_the_group(z2):
    fz = validate_fuzzy(z2, [F(1), F(1)])
    cover = build_cover(fz)
    assert cover.monoid.table == z2.table
    assert monoid_isomorphic(cover.monoid, group_as_monoid(z2)) == (0, 1)


def test_cover_report_running_example(fz_z2):
    report = cover_report(build_cover(fz_z2))
    assert report.all_match
    assert report.unit == (1, 0)
    assert report.idempotents == ((0, 0), (1, 0))
    assert report.sigma_maxima == ((1, 0), (0, 1))


def test_cover_report_constant_and_trivial(z2):
    report = cover_report(build_cover(validate_fuzzy(z2, [F(1), F(1)])))
    assert report.all_match
    assert report.idempotents == ((0, 0),)
    assert len(report.sigma_classes) == 2  # singleton classes, one per element

    trivial = validate_fuzzy(cyclic(1), [F(1)])
    report = cover_report(build_cover(trivial))
    assert report.all_match
    assert report.sigma_classes == (((0, 0),),)


def test_quotient_recovers_the_group(fz_z2, fz_v4):
    for fz in (fz_z2, fz_v4):
        cover = build_cover(fz)
        _, quotient, proj = sigma(cover.monoid)
        # class of (mu(x), x) is indexed by x itself, and the table transports
        assert quotient.table == fz.group.table
        for x in range(fz.n):
            assert proj[cover.pair_index[(fz.mu_index(x), x)]] == x


def test_hclass_level_isomorphism_running_example(fz_z2):
    cover = build_cover(fz_z2)
    low = hclass_level_isomorphism(cover, F(1, 2))
    assert sorted(low.values()) == [0, 1]
    assert set(low) == {cover.pair_index[(0, 0)], cover.pair_index[(0, 1)]}
    top = hclass_level_isomorphism(cover, F(1))
    assert top == {cover.pair_index[(1, 0)]: 0}
    with pytest.raises(ValueNotInChain):
        hclass_level_isomorphism(cover, F(1, 3))


def test_hclass_level_isomorphism_each_level(fz_v4):
    cover = build_cover(fz_v4)
    for u in fz_v4.chain:
        mapping = hclass_level_isomorphism(cover, u)
        assert set(mapping.values()) == set(level_subset(fz_v4, u))


def test_hclass_at_top_is_top_level_subgroup(v4):
    fz = validate_fuzzy(v4, [F(1), F(1), F(1, 2), F(1, 2)])
    cover = build_cover(fz)
    mapping = hclass_level_isomorphism(cover, F(1))
    assert set(mapping.values()) == {0, 1} == set(level_subset(fz, F(1)))


# -- the general pair construction ------------------------------------------------

def test_construction_matches_fuzzy_cover(fz_z2, fz_v4):
    for fz in (fz_z2, fz_v4):
        built = cover_from_premorphism(as_dual_premorphism(fz))
        direct = build_cover(fz)
        assert built.monoid == direct.monoid
        assert built.pairs == direct.pairs
        assert built.projection == direct.projection


def test_construction_trivial():
    dp = validate_dual_premorphism(cyclic(1), chain_monoid([F(1)]), (0,))
    built = cover_from_premorphism(dp)
    assert built.n == 1


def test_construction_accepts_general_monoid_targets():
    # a group homomorphism is a dual premorphism; covers of a group by itself
    z2 = cyclic(2)
    m = group_as_monoid(z2)
    dp = validate_dual_premorphism(z2, m, (0, 1))
    built = cover_from_premorphism(dp)
    assert built.n == 2
    assert monoid_isomorphic(built.monoid, m) is not None


def test_psi_to_top_has_coverage():
    # every chain value sits below the top, so psi == top satisfies coverage
    # and yields the full product cover
    z2 = cyclic(2)
    dp = validate_dual_premorphism(z2, chain_monoid([F(1, 2), F(1)]), (1, 1))
    built = cover_from_premorphism(dp)
    assert built.n == 4


def test_genuine_coverage_failure():
    # in the symmetric inverse monoid, a non-idempotent is below no identity map
    sim = symmetric_inverse_monoid_2()
    trivial = cyclic(1)
    with pytest.raises(CoverageFailure):
        validate_dual_premorphism(trivial, sim, (sim.index("id"),))


def test_not_dual_premorphism():
    z2 = cyclic(2)
    chain = chain_monoid([F(1, 2), F(1)])
    # psi(a*a) = psi(e) = 1/2 is not above psi(a) ^ psi(a) = 1
    with pytest.raises(NotDualPremorphism):
        validate_dual_premorphism(z2, chain, (0, 1))


# -- recovering the premorphism from a cover ---------------------------------------

def test_roundtrip_recovers_mu(fz_z2, fz_v4):
    for fz in (fz_z2, fz_v4):
        cover = build_cover(fz)
        dp = premorphism_from_cover(cover.monoid, cover.base, cover.projection)
        assert dp.psi == tuple(fz.mu_index(x) for x in range(fz.n))
        assert dp.group.table == fz.group.table


def test_roundtrip_group_over_trivial_monoid():
    z3 = group_as_monoid(cyclic(3))
    trivial = chain_monoid([F(1)])
    dp = premorphism_from_cover(z3, trivial, (0, 0, 0))
    assert dp.psi == (0, 0, 0)
    rebuilt = cover_from_premorphism(dp)
    assert monoid_isomorphic(rebuilt.monoid, z3) is not None


def test_roundtrip_rejects_bad_projections():
    sim = symmetric_inverse_monoid_2()
    with pytest.raises(NotFInverse):
        premorphism_from_cover(sim, sim, tuple(range(sim.n)))

    two = chain_monoid([F(1, 2), F(1)])
    one = chain_monoid([F(1)])
    with pytest.raises(NotSurjective):
        premorphism_from_cover(two, two, (1, 1))
    with pytest.raises(NotIdempotentSeparating):
        premorphism_from_cover(two, one, (0, 0))
    with pytest.raises(NotHomomorphism):
        premorphism_from_cover(two, two, (1, 0))


# -- isomorphism search --------------------------------------------------------------

def test_isomorphic_to_itself_is_identity(fz_z2):
    m = build_cover(fz_z2).monoid
    assert monoid_isomorphic(m, m) == tuple(range(m.n))


def test_chain_not_isomorphic_to_group():
    two = chain_monoid([F(1, 2), F(1)])
    z2 = group_as_monoid(cyclic(2))
    assert monoid_isomorphic(two, z2) is None


def test_relabeled_cover_is_isomorphic(fz_z2):
    m = build_cover(fz_z2).monoid
    perm = (2, 0, 1)
    inv = [perm.index(i) for i in range(3)]
    table = [
        [perm[m.table[inv[i]][inv[j]]] for j in range(3)]
        for i in range(3)
    ]
    relabeled = validate_inverse_monoid(
        [m.names[inv[i]] for i in range(3)], table, perm[m.unit]
    )
    bij = monoid_isomorphic(m, relabeled)
    assert bij is not None
    for i in range(3):
        for j in range(3):
            assert bij[m.table[i][j]] == relabeled.table[bij[i]][bij[j]]


def test_isomorphism_budget():
    mu = [F(1) if i == 0 else F(1, 2) for i in range(4)]
    m = build_cover(validate_fuzzy(cyclic(4), mu)).monoid
    with pytest.raises(BudgetExceeded):
        monoid_isomorphic(m, m, budget=2)


def test_forward_direction_on_many_instances(v4, s3):
    from fzcover import default_grid, enumerate_fuzzy_subgroups_filter

    grid = default_grid(3)
    for group in (cyclic(2), cyclic(3), v4):
        for fz in enumerate_fuzzy_subgroups_filter(group, grid):
            cover = build_cover(fz)
            assert cover.monoid.derived.f_inverse
            assert cover.monoid.derived.clifford
            assert cover_report(cover).all_match
            h, r, _ = green_relations(cover.monoid)
            assert h == r
