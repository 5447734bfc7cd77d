import pytest

from partialgroups import catalog, group_by_spec, load_cayley, save_cayley
from partialgroups.errors import NotAssociative, ParseError


def test_round_trip_is_bit_exact(tmp_path):
    for name, table in catalog():
        path = tmp_path / f"{name}.cayley"
        save_cayley(table, str(path))
        loaded = load_cayley(str(path))
        assert loaded.order == table.order
        assert (loaded.table == table.table).all()
        assert loaded.names == table.names
        second = tmp_path / f"{name}-again.cayley"
        save_cayley(loaded, str(second))
        assert path.read_bytes() == second.read_bytes()


def test_load_minimal_z2(tmp_path):
    path = tmp_path / "z2.cayley"
    path.write_text("2\n0 1\n1 0\n")
    table = load_cayley(str(path))
    assert table.order == 2 and table.identity == 0 and table.names is None


def test_load_with_names(tmp_path):
    path = tmp_path / "named.cayley"
    path.write_text("2\nnames: e g\n0 1\n1 0\n")
    table = load_cayley(str(path))
    assert table.names == ("e", "g")


def test_load_rejects_non_associative(tmp_path):
    path = tmp_path / "bad.cayley"
    path.write_text("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n")
    with pytest.raises(NotAssociative) as err:
        load_cayley(str(path))
    assert len(err.value.witness) == 3


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("x\n", 1),
    ("2\n0 1\n", 2),
    ("2\n0 1 1\n1 0\n", 2),
    ("2\nnames: onlyone\n0 1\n1 0\n", 2),
    ("2\n0 q\n1 0\n", 2),
])
def test_load_parse_errors(tmp_path, text, line):
    path = tmp_path / "broken.cayley"
    path.write_text(text)
    with pytest.raises(ParseError) as err:
        load_cayley(str(path))
    assert err.value.line is not None


def test_file_spec_resolves(tmp_path):
    path = tmp_path / "z6.cayley"
    save_cayley(group_by_spec("Z6"), str(path))
    table = group_by_spec(f"file:{path}")
    assert table.order == 6
