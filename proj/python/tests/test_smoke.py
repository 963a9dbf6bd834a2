import pytest

import hadamard_sojourn as hs


def test_qr2_arithmetic():
    h = hs.Qr2("1/2*sqrt(2)")
    assert h * h == hs.Qr2("1/2")
    assert str(hs.Qr2(1) / hs.Qr2("sqrt(2)")) == "1/2*sqrt(2)"
    assert h.rat == "0" and h.rad == "1/2"
    assert float(hs.Qr2("3 - 2*sqrt(2)")) == pytest.approx(3 - 2 * 2**0.5)
    with pytest.raises(ZeroDivisionError):
        hs.Qr2(1) / hs.Qr2(0)
    with pytest.raises(ValueError):
        hs.Qr2("1/0")


def test_operators():
    assert hs.gamma(2, 0) == [["0", "0"], ["1/2", "1/2"]]
    assert hs.gamma(4, 2) == [["-1/4", "-1/4"], ["1/4", "-1/4"]]
    assert hs.pqrs(4, 0) == ["3/4*sqrt(2)", "0", "0", "1/4*sqrt(2)"]
    assert hs.psi(1, 1, start=5) == [["1/2*sqrt(2)", "1/2*sqrt(2)"], ["1/2*sqrt(2)", "-1/2*sqrt(2)"]]


def test_measure():
    doc = hs.measure("A", 4)
    assert [(r["k"], r["weight"], r["probability"]) for r in doc["rows"]] == [
        (0, "5/8", "5/12"),
        (2, "1/4", "1/6"),
        (4, "5/8", "5/12"),
    ]
    mu14 = [r["probability"] for r in hs.measure("B", 14)["rows"]]
    assert mu14 == ["25/152"] * 2 + ["13/152"] * 4 + ["25/152"] * 2


def test_expand_and_first_return():
    rows = hs.expand(2, 2)["rows"]
    assert rows[0] == {"z": 2, "t": 0, "matrix": [["0", "0"], ["1/2", "1/2"]]}
    a = [r["a"] for r in hs.first_return(7)["rows"]]
    assert a == ["-1", "0", "1/2", "0", "0", "0", "-1/8"]


def test_verify_and_run():
    code, report = hs.verify(8)
    assert code == 0, report
    assert "FAIL" not in report
    code, out, err = hs.run(["measure", "--n", "3"])
    assert code == 2 and err
