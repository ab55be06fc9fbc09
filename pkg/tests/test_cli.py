import json

import pytest

from conftest import TREFOIL_PD
from knotperi.cli import run


def capture(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_knot(capsys):
    code, out, _ = capture(capsys, ["validate", "--knot", "4_1"])
    data = json.loads(out)
    assert code == 0
    assert data["schema"].startswith("knotperi")
    assert data["ok"] is True


def test_validate_pd_inline(capsys):
    code, out, _ = capture(capsys, ["validate", "--pd", TREFOIL_PD])
    assert code == 0
    assert json.loads(out)["n"] == 3


def test_validate_file(tmp_path, capsys):
    f = tmp_path / "k.pd"
    f.write_text(TREFOIL_PD)
    code, out, _ = capture(capsys, ["validate", "--file", str(f)])
    assert code == 0


def test_input_errors_exit_2(capsys):
    assert capture(capsys, ["validate", "--pd", "nonsense"])[0] == 2
    assert capture(capsys, ["validate", "--knot", "99_99"])[0] == 2
    assert capture(capsys, ["validate"])[0] == 2  # no source given
    assert (
        capture(capsys, ["validate", "--pd", TREFOIL_PD, "--knot", "4_1"])[0] == 2
    )  # two sources
    code, _, err = capture(capsys, ["reduce", "--knot", "4_1", "--word", "Z9"])
    assert code == 2 and "error" in json.loads(err)


def test_presentation(capsys):
    code, out, _ = capture(capsys, ["presentation", "--knot", "5_2"])
    data = json.loads(out)
    assert code == 0
    assert data["small_cancellation"]["ok"] is True
    assert len(data["relators"]) == 5


def test_reduce_identity(capsys):
    code, out, _ = capture(
        capsys, ["reduce", "--knot", "5_2", "--word", "X1 X2^-1 X2 X1^-1"]
    )
    data = json.loads(out)
    assert code == 0
    assert data["is_identity"] is True
    assert data["geodesic"] == ""


def test_peripheral_and_conjugate(capsys):
    code, out, _ = capture(capsys, ["peripheral", "--knot", "5_2", "--word", "X1 X2^-1"])
    data = json.loads(out)
    assert code == 0
    assert data["peripheral"] is False

    # all meridians of the knot are conjugate, so the Wirtinger word is
    # conjugate-peripheral with class mu^1 even though it is not peripheral
    code, out, _ = capture(
        capsys, ["conj-peripheral", "--knot", "5_2", "--word", "X1 X2^-1"]
    )
    data = json.loads(out)
    assert code == 0
    assert data["peripheral"] is True
    assert (data["a"], data["b"]) == (0, 1)


def test_arcs(capsys):
    code, out, _ = capture(capsys, ["arcs", "--knot", "4_1"])
    data = json.loads(out)
    assert code == 0
    assert data["failures"] == []
    assert data["families"]["short_arc"] == 8


def test_complex_formats(capsys):
    code, out, _ = capture(
        capsys, ["complex", "--knot", "3_1", "--rows", "2", "--cols", "3"]
    )
    assert code == 0
    assert len(json.loads(out)["window"]["cells"]) == 6

    code, out, _ = capture(
        capsys, ["complex", "--knot", "3_1", "--format", "text", "--rows", "2", "--cols", "3"]
    )
    assert code == 0 and out.startswith("+")

    code, out, _ = capture(
        capsys,
        ["complex", "--knot", "3_1", "--format", "svg", "--walk", "X3 X2^-1"],
    )
    assert code == 0 and out.lstrip().startswith("<svg")


def test_gauss_roundtrip(capsys):
    code, out, _ = capture(capsys, ["gauss", "--knot", "4_1"])
    data = json.loads(out)
    assert code == 0
    assert data["match"] is True
    assert data["gauss_code"][0] == -1


def test_oracle_check(capsys):
    code, out, _ = capture(
        capsys,
        ["oracle-check", "--knot", "4_1", "--samples", "10", "--length", "4"],
    )
    data = json.loads(out)
    assert code == 0
    assert data["disagreements"] == []


def test_verify_all_small(capsys):
    code, out, _ = capture(capsys, ["verify-all", "--max-crossings", "5"])
    data = json.loads(out)
    assert code == 0
    assert data["ok"] is True
    names = {r["knot"] for r in data["results"]}
    assert names == {"3_1", "4_1", "5_1", "5_2"}
