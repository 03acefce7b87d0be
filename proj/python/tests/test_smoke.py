from fractions import Fraction

import pytest

bsgw = pytest.importorskip("bsgw")


def test_running_example():
    rep = bsgw.report("A2", [1, 2, 1], [1, 1, 3])
    assert rep["width"] == "2"
    assert rep["caseline"] == "3"
    assert rep["condition_p"]["holds"] is False
    assert rep["condition_p"]["witness"] == ["0", "3"]


def test_rational_weights():
    assert bsgw.gromov_width("A1", [1], [Fraction(7, 2)]) == Fraction(7, 2)
    assert bsgw.gromov_width("A2", [1, 2, 1], ["3", "3", "9"]) == 6


def test_condition_p_and_tower():
    assert bsgw.check_p("A2", [1, 2], [2, 5])["condition_p"]["holds"]
    assert bsgw.report("A2", [1, 2], [2, 5])["toric_width"] == "5"


def test_lattice_and_bott():
    assert bsgw.lattice_count("A2", [1, 2], [1, 1]) == 5
    b = bsgw.bott({"dims": [1, 1], "a": {"2,1,1": 1}, "divisor": [0, 2, 5, 0]})
    assert b["smooth"] and b["toric_width"] == "5"


def test_errors():
    with pytest.raises(bsgw.InputError, match="not reduced at position 2"):
        bsgw.report("A2", [1, 1], [1, 1])
    with pytest.raises(bsgw.InputError):
        bsgw.report("X9", [1], [1])
    assert issubclass(bsgw.PreconditionError, bsgw.InputError)


def test_selftest():
    out = bsgw.selftest("all", 20, 1)
    assert out["passed"]
