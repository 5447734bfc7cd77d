import numpy as np
import pytest

from partialgroups import (
    GroupMap,
    all_subgroups,
    check_group_hom,
    enumerate_group_homs,
    find_isomorphism,
    group_by_spec,
    group_quotient,
    subgroup,
    subgroup_closure,
    validate_group,
)
from partialgroups.errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    NotSubgroup,
    OrderCapExceeded,
)
from partialgroups.groups import is_normal_subgroup, subgroup_table

from oracles import brute_group_hom_count, brute_subgroups, minimal_subgroup_containing


def test_validate_group_z6():
    table = [[(i + j) % 6 for j in range(6)] for i in range(6)]
    g = validate_group(table)
    assert g.order == 6
    assert g.identity == 0
    assert g.inv(1) == 5
    assert g.is_abelian


def test_validate_group_z2_identity_case():
    g = validate_group([[0, 1], [1, 0]])
    assert g.identity == 0 and g.order == 2


def test_validate_group_rejects_duplicate_row():
    # row [1,2,2] never produces the identity on the right: no inverse for 1
    with pytest.raises(NoInverse) as err:
        validate_group([[0, 1, 2], [1, 2, 2], [2, 2, 1]])
    assert err.value.witness == 1


def test_validate_group_error_cases():
    with pytest.raises(NotClosed):
        validate_group([[0, 3], [1, 0]])
    with pytest.raises(NoIdentity):
        validate_group([[1, 0], [0, 1]])
    with pytest.raises(NotAssociative) as err:
        # identity and inverses fine, associativity broken (not a Latin square trick:
        # this is the smallest non-associative loop pattern on 5 elements)
        validate_group([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])
    a, b, c = err.value.witness
    assert 0 <= a < 5 and 0 <= b < 5 and 0 <= c < 5
    with pytest.raises(ValueError):
        validate_group([[0, 1]])


def test_rows_and_columns_are_permutations():
    for name in ("Z6", "S3", "D4", "Q8", "Z2xZ4"):
        g = group_by_spec(name)
        expected = set(range(g.order))
        for i in range(g.order):
            assert set(int(x) for x in g.table[i]) == expected
            assert set(int(x) for x in g.table[:, i]) == expected


def test_subgroup_closure_examples(z6, s3):
    assert subgroup_closure(z6, [2]).elements == (0, 2, 4)
    assert subgroup_closure(z6, []).elements == (0,)
    two = subgroup_closure(s3, [1])
    assert len(two) == 2 and two.elements == (0, 1)
    assert subgroup_closure(s3, [1]).elements == tuple(
        minimal_subgroup_containing([[s3.mul(a, b) for b in range(6)] for a in range(6)], [1])
    )


def test_all_subgroups_against_brute_force():
    for name in ("Z2", "Z6", "S3", "Z8", "Z2xZ2", "D4", "Q8", "Z12", "A4", "D6"):
        g = group_by_spec(name)
        table = [[g.mul(a, b) for b in range(g.order)] for a in range(g.order)]
        assert [s.elements for s in all_subgroups(g)] == brute_subgroups(table)


def test_all_subgroups_counts(z6, s3):
    assert len(all_subgroups(z6)) == 4
    assert [s.elements for s in all_subgroups(z6)] == [
        (0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]
    assert len(all_subgroups(group_by_spec("Z2"))) == 2
    sizes = sorted(len(s) for s in all_subgroups(s3))
    assert sizes == [1, 2, 2, 2, 3, 6]


def test_all_subgroups_cap():
    with pytest.raises(OrderCapExceeded):
        all_subgroups(group_by_spec("Z12"), cap=8)


def test_subgroup_validation(z6):
    with pytest.raises(NotSubgroup):
        subgroup(z6, [0, 1])
    with pytest.raises(NotSubgroup):
        subgroup(z6, [1, 2])


def test_group_quotient_z6_by_z2(z6):
    q = group_quotient(z6, subgroup(z6, [0, 3]))
    assert q.cosets == ((0, 3), (1, 4), (2, 5))
    assert q.quotient_table.order == 3
    assert find_isomorphism(q.quotient_table, group_by_spec("Z3")) is not None
    gm = q.projection_map()
    ok, _ = check_group_hom(gm)
    assert ok
    kernel = [a for a in range(6) if gm.images[a] == q.quotient_table.identity]
    assert kernel == [0, 3]


def test_group_quotient_trivial_kernel(s3):
    q = group_quotient(s3, subgroup(s3, [0]))
    assert q.quotient_table.order == 6
    assert find_isomorphism(q.quotient_table, s3) is not None


def test_group_quotient_not_normal(s3):
    with pytest.raises(NotNormal):
        group_quotient(s3, subgroup(s3, [0, 1]))


def test_check_group_hom_examples(z6):
    identity = GroupMap(z6, z6, tuple(range(6)))
    assert check_group_hom(identity) == (True, None)
    z2 = group_by_spec("Z2")
    parity = GroupMap(z6, z2, tuple(a % 2 for a in range(6)))
    assert check_group_hom(parity) == (True, None)
    shift = GroupMap(z6, z6, tuple((a + 1) % 6 for a in range(6)))
    ok, witness = check_group_hom(shift)
    assert not ok and witness == (0, 0)


def test_find_isomorphism(z6):
    z2xz3 = group_by_spec("Z2xZ3")
    iso = find_isomorphism(z6, z2xz3)
    assert iso is not None
    assert check_group_hom(iso) == (True, None)
    assert len(set(iso.images)) == 6
    assert find_isomorphism(group_by_spec("Z4"), group_by_spec("Z2xZ2")) is None
    one = group_by_spec("Z1")
    assert find_isomorphism(one, one).images == (0,)
    with pytest.raises(OrderCapExceeded):
        find_isomorphism(z6, z6, cap=4)


def test_quotient_order_product(z6, s3):
    for g in (z6, s3):
        for sub in all_subgroups(g):
            if is_normal_subgroup(g, sub) is None:
                q = group_quotient(g, sub)
                assert g.order == len(sub) * q.quotient_table.order


def test_subgroup_table_reindexes(s3):
    a3 = subgroup(s3, [0, 3, 4])
    local = subgroup_table(a3)
    assert local.order == 3
    assert find_isomorphism(local, group_by_spec("Z3")) is not None


def test_enumerate_group_homs_counts():
    z2, z6, s3 = group_by_spec("Z2"), group_by_spec("Z6"), group_by_spec("S3")
    cases = [(z2, z2, 2), (z6, z2, 2), (z2, s3, 4), (z6, z6, 6), (s3, z2, 2)]
    for src, tgt, expected in cases:
        homs = enumerate_group_homs(src, tgt)
        assert len(homs) == expected
        for gm in homs:
            assert check_group_hom(gm) == (True, None)
        table_a = [[src.mul(a, b) for b in range(src.order)] for a in range(src.order)]
        table_b = [[tgt.mul(a, b) for b in range(tgt.order)] for a in range(tgt.order)]
        assert expected == brute_group_hom_count(
            table_a, list(range(src.order)), table_b, list(range(tgt.order)))


def test_enumerate_group_homs_sorted(z6):
    homs = enumerate_group_homs(z6, z6)
    images = [h.images for h in homs]
    assert images == sorted(images)


def test_tables_are_read_only(z6):
    with pytest.raises(ValueError):
        z6.table[0, 0] = 1
