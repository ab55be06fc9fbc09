import pytest

from knotperi.table import KnotTableEntry, TableError, get_knot, load_table


def test_table_contents(table):
    assert len(table) == 27
    assert set(table) >= {"3_1", "4_1", "5_2", "8_14"}
    for name, entry in table.items():
        assert isinstance(entry, KnotTableEntry)
        assert entry.name == name
        assert entry.crossings == int(name.split("_")[0])


def test_torus_flags(table):
    torus = {name for name, e in table.items() if e.is_torus}
    assert torus == {"3_1", "5_1", "7_1"}


def test_get_knot_unknown():
    with pytest.raises(TableError):
        get_knot("9_1")


def test_env_override_and_validation(tmp_path, monkeypatch):
    good = tmp_path / "table.txt"
    good.write_text("# comment\ntref: X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)\n")
    monkeypatch.setenv("KNOTPERI_TABLE", str(good))
    table = load_table()
    assert list(table) == ["tref"]

    from conftest import GRANNY_PD

    bad = tmp_path / "bad.txt"
    # parses fine but is a connected sum: rejected by load-time validation
    bad.write_text(f"k: {GRANNY_PD}\n")
    monkeypatch.setenv("KNOTPERI_TABLE", str(bad))
    with pytest.raises(TableError):
        load_table()

    dup = tmp_path / "dup.txt"
    dup.write_text(
        "a: X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)\n"
        "a: X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)\n"
    )
    monkeypatch.setenv("KNOTPERI_TABLE", str(dup))
    with pytest.raises(TableError):
        load_table()
