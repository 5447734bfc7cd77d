import pytest

from partialgroups import CATALOG_NAMES, catalog, group_by_spec
from partialgroups.catalog import alternating, canonical_spec, cyclic, dihedral, direct_product, quaternion, symmetric
from partialgroups.errors import ParseError

from oracles import table_axioms_ok

EXPECTED_ORDERS = {
    "Z2": 2, "Z3": 3, "Z4": 4, "Z2xZ2": 4, "Z5": 5, "Z6": 6, "S3": 6,
    "Z7": 7, "Z8": 8, "Z2xZ4": 8, "Z2xZ2xZ2": 8, "D4": 8, "Q8": 8,
    "Z9": 9, "Z3xZ3": 9, "D5": 10, "Z12": 12, "A4": 12, "D6": 12,
}

NONABELIAN = {"S3", "D4", "Q8", "D5", "A4", "D6"}


def test_catalog_orders_and_axioms():
    for name, table in catalog():
        assert table.order == EXPECTED_ORDERS[name]
        raw = [[table.mul(a, b) for b in range(table.order)] for a in range(table.order)]
        assert table_axioms_ok(raw)
        assert table.is_abelian == (name not in NONABELIAN)
        assert table.identity == 0


def test_catalog_is_complete():
    assert len(CATALOG_NAMES) == 19
    assert len({n for n in CATALOG_NAMES}) == 19


def test_spec_parsing_case_insensitive():
    assert group_by_spec("z6") is group_by_spec("Z6")
    assert group_by_spec("z2Xz4").order == 8
    assert canonical_spec("z2xz4") == "Z2xZ4"


def test_spec_parsing_rejects_unknown():
    with pytest.raises(ParseError):
        group_by_spec("E8")
    with pytest.raises(ParseError):
        group_by_spec("")


def test_cyclic_structure():
    z5 = cyclic(5)
    assert z5.mul(3, 4) == 2
    assert z5.inv(2) == 3
    assert [z5.element_order(a) for a in range(5)] == [1, 5, 5, 5, 5]


def test_dihedral_structure():
    d4 = dihedral(4)
    assert d4.order == 8
    assert not d4.is_abelian
    # reflections square to the identity
    for i in range(4, 8):
        assert d4.mul(i, i) == 0


def test_quaternion_structure():
    q8 = quaternion()
    assert q8.names == ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    # exactly one element of order 2
    assert sum(1 for a in range(8) if q8.element_order(a) == 2) == 1
    i, j, k = 2, 4, 6
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == 7  # -k


def test_symmetric_and_alternating():
    s3 = symmetric(3)
    assert s3.order == 6 and not s3.is_abelian
    a4 = alternating(4)
    assert a4.order == 12
    assert sorted(a4.element_order(a) for a in range(12)) == [1] + [2] * 3 + [3] * 8


def test_direct_product():
    z6 = direct_product(cyclic(2), cyclic(3))
    assert z6.order == 6 and z6.is_abelian
    assert max(z6.element_order(a) for a in range(6)) == 6
    cube = group_by_spec("Z2xZ2xZ2")
    assert cube.order == 8
    assert all(cube.element_order(a) in (1, 2) for a in range(8))


def test_names_are_space_free():
    for _, table in catalog():
        assert table.names is not None
        for name in table.names:
            assert " " not in name
