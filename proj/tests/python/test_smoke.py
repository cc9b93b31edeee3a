import math
from decimal import Decimal

import pytest

import lpzero


def test_evaluate():
    r = lpzero.evaluate(lpzero.SeriesFamily.euler_f(4.0), -5)
    assert r.value.real == pytest.approx(0.27193123224, abs=1e-10)
    assert r.abs_error_bound < 1e-13


def test_classify():
    assert lpzero.classify_Fa(5.0).verdict == lpzero.Verdict.InLP
    r = lpzero.classify_Fa(3.0)
    assert r.verdict == lpzero.Verdict.NotInLP
    assert r.criterion == "necessary_q2"


def test_roots_and_zeros():
    roots = lpzero.real_roots([-2.0, 0.0, 1.0], -5, 5)
    assert roots == pytest.approx([-math.sqrt(2), math.sqrt(2)])
    phi = lpzero.SeriesFamily.euler_f(4.0).alternate().normalize()
    w = lpzero.count_zeros_in_disk(phi, lpzero.rho_radius(phi, 6))
    assert w.count == 6 and w.certified


def test_constants():
    b = lpzero.q_infinity(1e-6)
    assert b["lo"] <= 3.233636 <= b["hi"]
    c = lpzero.c_n_extended(3, "1e-30")
    assert Decimal(c["lo"]) <= 3 <= Decimal(c["hi"])
    assert Decimal(c["hi"]) - Decimal(c["lo"]) <= Decimal("1e-30")


def test_errors_carry_kind():
    with pytest.raises(lpzero.LpzeroError) as e:
        lpzero.classify_Fa(-2.0)
    assert e.value.kind == "parameter_domain"
