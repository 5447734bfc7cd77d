import pytest

from partialgroups import (
    SupplementPair,
    SupplementViolation,
    build_partial_group,
    case_table_mul,
    check_free,
    check_supplement,
    dot_identity,
    factorize,
    find_supplements,
    free_classes,
    group_by_spec,
    inv_set,
    partial_mul,
    partial_power,
    quotient_by_free_relation,
    subgroup,
    check_group_hom,
)
from partialgroups.errors import (
    DefectMeetsSupport,
    IdentityMissing,
    NotFree,
    NotInCarrier,
)

from oracles import (
    brute_factorizations,
    carrier_of,
    oracle_inv_set,
    oracle_partial_mul,
)


def _raw(table):
    return [[table.mul(a, b) for b in range(table.order)] for a in range(table.order)]


# ---------------------------------------------------------------------------
# supplements and freeness


def test_check_supplement_examples(z6, s3):
    pair = check_supplement(z6, subgroup(z6, [0, 3]), subgroup(z6, [0, 2, 4]))
    assert isinstance(pair, SupplementPair)
    pair = check_supplement(s3, subgroup(s3, [0, 3, 4]), subgroup(s3, [0, 1]))
    assert isinstance(pair, SupplementPair)
    bad = check_supplement(z6, subgroup(z6, [0, 2, 4]), subgroup(z6, [0, 2, 4]))
    assert isinstance(bad, SupplementViolation)
    assert bad.kind == "intersection" and bad.witness == 2


def test_check_supplement_coverage_violation(z6):
    bad = check_supplement(z6, subgroup(z6, [0, 3]), subgroup(z6, [0, 3]))
    assert isinstance(bad, SupplementViolation)
    assert bad.kind in ("intersection", "coverage")


def test_find_supplements(z6, s3):
    assert [s.elements for s in find_supplements(z6, subgroup(z6, [0, 3]))] == [(0, 2, 4)]
    a3 = subgroup(s3, [0, 3, 4])
    found = [s.elements for s in find_supplements(s3, a3)]
    assert found == [(0, 1), (0, 2), (0, 5)]
    assert [s.elements for s in find_supplements(z6, subgroup(z6, range(6)))] == [(0,)]


def test_check_free(z6):
    e = subgroup(z6, [0, 3])
    witness = check_free(z6, e, [0, 2])
    assert witness is not None and witness.elements == (0, 2, 4)
    assert check_free(z6, e, [0, 1]) is None
    full = subgroup(z6, range(6))
    assert check_free(z6, full, [0]).elements == (0,)
    with pytest.raises(IdentityMissing):
        check_free(z6, e, [2])


# ---------------------------------------------------------------------------
# construction


def test_build_z6_instance(z6_instance):
    pg = z6_instance
    assert pg.carrier == (0, 2, 3, 5)
    assert factorize(pg, 5) == (3, 2)
    assert factorize(pg, 0) == (0, 0)
    assert pg.witness_supplement.elements == (0, 2, 4)


def test_group_is_partial_group_with_trivial_defect(s3):
    pg = build_partial_group(s3, subgroup(s3, range(6)), [0])
    assert pg.carrier == tuple(range(6))
    assert all(factorize(pg, a) == (a, 0) for a in pg.carrier)


def test_totally_melted_subgroup(z6):
    # ambient = whole group, trivial support, defect = a full subgroup
    pg = build_partial_group(z6, [0], [0, 2, 4])
    assert pg.carrier == (0, 2, 4)
    assert all(factorize(pg, a) == (0, a) for a in pg.carrier)
    assert all(dot_identity(pg, a) == 0 for a in pg.carrier)


def test_build_errors(z6):
    with pytest.raises(NotFree):
        build_partial_group(z6, [0, 3], [0, 1])
    with pytest.raises(DefectMeetsSupport):
        build_partial_group(z6, [0, 3], [0, 3])
    with pytest.raises(IdentityMissing):
        build_partial_group(z6, [0, 3], [2])


def test_weak_mode_admits_unique_factorization_without_supplement():
    z4 = group_by_spec("Z4")
    with pytest.raises(NotFree):
        build_partial_group(z4, [0, 2], [0, 1])
    pg = build_partial_group(z4, [0, 2], [0, 1], weak=True)
    assert pg.witness_supplement is None
    assert pg.carrier == (0, 1, 2, 3)
    assert factorize(pg, 3) == (2, 1)
    # the laws only need unique factorization, so they still hold
    for a in pg.carrier:
        for b in pg.carrier:
            assert partial_mul(pg, a, b) in pg.support
            for c in pg.carrier:
                assert partial_mul(pg, partial_mul(pg, a, b), c) == \
                    partial_mul(pg, a, partial_mul(pg, b, c))


def test_weak_mode_rejects_collisions():
    z4 = group_by_spec("Z4")
    with pytest.raises(NotFree):
        build_partial_group(z4, [0, 2], [0, 2], weak=True)


# ---------------------------------------------------------------------------
# the law


def test_factorize_s3(s3_instance, s3):
    x, d = factorize(s3_instance, 5)
    assert d == 1
    assert x in (0, 3, 4)
    assert s3.mul(x, d) == 5


def test_factorize_not_in_carrier(z6_instance):
    with pytest.raises(NotInCarrier):
        factorize(z6_instance, 1)


def test_partial_mul_examples(z6_instance):
    pg = z6_instance
    assert partial_mul(pg, 5, 3) == 0
    for d in pg.defect:
        for dp in pg.defect:
            assert partial_mul(pg, d, dp) == 0
    assert partial_mul(pg, 3, 3) == 0
    with pytest.raises(NotInCarrier):
        partial_mul(pg, 1, 3)


def test_partial_mul_matches_brute_oracle(z6_instance, s3_instance, z6, s3):
    for pg, table in ((z6_instance, z6), (s3_instance, s3)):
        raw = _raw(table)
        support = list(pg.support.elements)
        defect = list(pg.defect)
        assert carrier_of(raw, support, defect) == pg.carrier
        for a in pg.carrier:
            assert brute_factorizations(raw, support, defect, a) == [factorize(pg, a)]
            for b in pg.carrier:
                assert partial_mul(pg, a, b) == oracle_partial_mul(raw, support, defect, a, b)


def test_case_table_examples(z6_instance):
    pg = z6_instance
    assert case_table_mul(pg, 3, 2) == 3   # support element absorbs a defect element
    assert case_table_mul(pg, 2, 3) == 3
    assert case_table_mul(pg, 2, 2) == 0   # defect pair collapses to the identity
    assert case_table_mul(pg, 5, 5) == 0   # both outside support and defect
    assert case_table_mul(pg, 3, 3) == 0


def test_case_table_agrees_everywhere(z6_instance, s3_instance, s3_melted):
    for pg in (z6_instance, s3_instance, s3_melted):
        for a in pg.carrier:
            for b in pg.carrier:
                assert case_table_mul(pg, a, b) == partial_mul(pg, a, b)


def test_dot_identity(z6_instance):
    pg = z6_instance
    assert dot_identity(pg, 5) == 3
    for x in pg.support.elements:
        assert dot_identity(pg, x) == x
    for d in pg.defect:
        assert dot_identity(pg, d) == 0
    assert [a for a in pg.carrier if dot_identity(pg, a) == a] == list(pg.support.elements)


def test_inv_set(z6_instance, s3_melted, z6, trivial_instance):
    pg = z6_instance
    assert inv_set(pg, 5) == (3, 5)
    assert inv_set(pg, 0) == pg.defect  # the inverses of the identity form the defect
    raw = _raw(z6)
    for a in pg.carrier:
        assert inv_set(pg, a) == oracle_inv_set(raw, list(pg.support.elements), list(pg.defect), a)
    # a plain group reduces to the usual inverse
    for a in s3_melted.carrier:
        assert inv_set(s3_melted, a) == (s3_melted.parent.inv(a),)
    assert inv_set(trivial_instance, 0) == (0,)


def test_partial_power(z6_instance):
    pg = z6_instance
    assert partial_power(pg, 5, 2) == 0
    assert partial_power(pg, 5, 1) == 3
    assert partial_power(pg, 2, 3) == 0
    for x in pg.support.elements:
        acc = x
        for n in range(1, 13):
            assert partial_power(pg, x, n) == acc
            acc = pg.parent.mul(acc, x)
    with pytest.raises(ValueError):
        partial_power(pg, 5, 0)


# ---------------------------------------------------------------------------
# free classes and the quotient


def test_free_classes(z6_instance, s3_melted, z6):
    assert z6_instance and free_classes(z6_instance).blocks == ((0, 2), (3, 5))
    # trivial defect: singleton classes
    assert free_classes(s3_melted).blocks == tuple((a,) for a in range(6))
    # trivial support: one class
    melted = build_partial_group(z6, [0], [0, 2, 4])
    assert free_classes(melted).blocks == ((0, 2, 4),)


def test_quotient_by_free_relation(z6_instance, s3_instance, s3_melted, s3):
    q, pi = quotient_by_free_relation(z6_instance)
    assert q.order == 2
    assert pi.images == (0, 1)
    ok, _ = check_group_hom(pi)
    assert ok

    q3, pi3 = quotient_by_free_relation(s3_instance)
    assert q3.order == 3
    assert sorted(pi3.images) == [0, 1, 2]

    q6, pi6 = quotient_by_free_relation(s3_melted)
    assert q6.order == 6
    assert len(set(pi6.images)) == 6
