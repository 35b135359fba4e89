from fractions import Fraction

import pytest

import pretzel_cjp as cjp


def test_quantum_integer():
    assert cjp.qint(3) == {Fraction(2): 1, Fraction(0): 1, Fraction(-2): 1}


def test_trefoil_methods_agree():
    a = cjp.colored_jones([-1, -1, -1], 2, "statesum")
    b = cjp.colored_jones([-1, -1, -1], 2, "bracket")
    assert a == b
    assert max(a) == 9


def test_predicted_degree():
    assert cjp.predicted_degree([-5, 4, 3], 5) == 2
    assert cjp.predicted_degree([-5, 4, 3], 4) == 3
    assert cjp.writhe([-5, 4, 3]) == -6


def test_regime_error():
    with pytest.raises(cjp.RegimeError):
        cjp.predicted_degree([-3, 3, 2], 4)


def test_degree_report():
    rep = cjp.degree_report([-5, 4, 3], range(2, 18), exact_max=3)
    assert Fraction(rep["js"]) == Fraction(4, 5)
    assert rep["modulus"] == 5


def test_bad_input():
    with pytest.raises(cjp.DomainError):
        cjp.colored_jones([1], 2)
