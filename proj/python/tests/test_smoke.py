import pytest

import sinv


def test_normal_form():
    assert sinv.nf("y1*x1") == "1"
    assert sinv.nf("x1*y1") == "x1*y1"  # not a relation: stays
    assert sinv.nf("(1 - x1*y1)*(1 - x1*y1)") == "1 - x1*y1"  # idempotent


def test_index():
    assert sinv.index("y1^4") == (4, "scalar")
    assert sinv.index("x2^3") == (-3, "scalar")
    assert sinv.ind(2, "theta") == 1
    assert sinv.ind(1, "theta") == -1


def test_act():
    assert sinv.act("x1*x2", "1") == "x1*x2"
    assert sinv.act("y1", "x1^2") == "x1"
    assert sinv.act("y1", "1") == "0"


def test_eta_and_det():
    assert sinv.eta("x1") == "y1"
    assert sinv.det("1 + 2*E1(0,0)*E2(0,0)") == "3"


def test_factor_and_invert():
    u = "1 + 2*E1(0,0)*E2(0,0)"
    inv = sinv.invert(u)
    assert sinv.nf("(" + u + ")*(" + inv + ")") == "1"
    cert = sinv.factor("theta")
    assert cert.theta_power == 1
    assert cert.scalar == "1"


def test_prime_field():
    assert sinv.nf("1/2", field="fp:7") == "4"


def test_errors():
    with pytest.raises(sinv.DomainError):
        sinv.detbar(1, "x1")  # not scalar + block ideal
    with pytest.raises(sinv.ParseError):
        sinv.nf("x3")


def test_suite():
    out = sinv.run_suite("theta")
    assert out.passed, out.detail
    assert "theta" in sinv.suite_names()
