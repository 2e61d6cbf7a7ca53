from fractions import Fraction

import pytest

import milnor_hodge as mh


def test_cusp_spectrum():
    s = mh.brieskorn_pham([3, 2])
    assert str(s) == "t^(5/6) + t^(7/6)"
    assert s.num_vars == 2
    assert s.milnor_number() == 2
    assert s.terms() == [(Fraction(5, 6), 1), (Fraction(7, 6), 1)]


def test_quasi_homogeneous_matches_brieskorn_pham():
    assert mh.quasi_homogeneous([Fraction(1, 3), "1/5", Fraction(1, 2)]) == mh.brieskorn_pham([3, 5, 2])
    with pytest.raises(mh.PreconditionError):
        mh.quasi_homogeneous(["2/5", "1/3"])


def test_chi_y_and_signature():
    e8 = mh.brieskorn_pham([3, 5, 2])
    assert mh.signature(e8) == -8
    assert mh.chi_one(e8) == -8
    chi = mh.chi_y(e8)
    assert chi(-1) == 8
    assert mh.chi_y(mh.brieskorn_pham([3, 2]), "total") == mh.LaurentPoly("y")
    assert not mh.du_bois_test(mh.brieskorn_pham([3, 2]))


def test_hodge_table():
    rows = mh.hodge_table(mh.brieskorn_pham([7, 3, 2]))
    dims = {(r["p"], r["q"]): r["dim"] for r in rows}
    assert dims == {(0, 2): 1, (1, 1): 10, (2, 0): 1}


def test_projective():
    assert str(mh.chi_y_virtual(4, 2)) == "2 - 20*y + 2*y^2"
    node = mh.brieskorn_pham([2, 2])
    assert str(mh.chi_y_singular(3, 1, [node])) == "-y"
    assert mh.chi_y_virtual(4, 2).coefficients() == {0: 2, 1: -20, 2: 2}


def test_errors_and_cli():
    with pytest.raises(mh.ParseError):
        mh.LaurentPoly("1 +")
    assert issubclass(mh.SchemaError, ValueError)
    code, out, err = mh.run_cli(["signature", "--brieskorn-pham", "3,5,2"])
    assert (code, out, err) == (0, "-8\n", "")
    code, _, _ = mh.run_cli(["spectrum", "--brieskorn-pham", "1"])
    assert code == 5


def test_verify():
    ok, text = mh.verify()
    assert ok
    assert "all suites passed" in text
