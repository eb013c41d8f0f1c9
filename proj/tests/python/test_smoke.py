"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import gmfq


def test_sieve_and_prime_table():
    assert gmfq.sieve_primes(10) == [2, 3, 5, 7]
    table = gmfq.PrimeTable(1000)
    assert table.pi(1000) == 168
    assert table.mobius(6) == 1
    assert table.mobius(4) == 0
    assert table.sigma0(720) == 30
    assert table.is_prime(997)
    with pytest.raises(ValueError):
        table.mobius(0)
    with pytest.raises(ValueError):
        gmfq.PrimeTable(1)


def test_psi2_and_st_measure():
    assert gmfq.psi2(1) == pytest.approx(1.0)
    assert gmfq.st_measure(-1, 1) == pytest.approx(1.0)
    assert abs(gmfq.st_measure(0, 1) - 0.5) < 1e-12
    with pytest.raises(ValueError):
        gmfq.st_measure(0.5, 0.1)


def test_eigenform_and_exponents():
    form = gmfq.load_eigenform("11", 6)
    assert form["coeffs"] == [1, -2, -1, 2, 1, 2]
    assert form["level"] == 11
    assert not form["cm"]

    c = gmfq.qexponents("11", 4)
    assert c == [Fraction(-1), Fraction(3, 2), Fraction(2, 3), Fraction(-1)]

    assert gmfq.prime_exponent(0, 5) == Fraction(1, 5)

    with pytest.raises(LookupError):
        gmfq.load_eigenform("9999", 4)


def test_reports_round_trip_as_dicts():
    signs = gmfq.sign_density("11", 2000)
    total = signs["counts"]["pos"] + signs["counts"]["neg"] + signs["counts"]["zero"]
    assert total == signs["pi_x"] - len(signs["excluded_primes"])

    hist = gmfq.satotate("11", 2000, bins=10)
    assert len(hist["bins"]) == 10
    assert sum(b["count"] for b in hist["bins"]) == hist["sample"]

    pair = gmfq.pair_signs("11", "14", 2000)
    assert len(pair["quadrants"]) == 4

    scan = gmfq.cm_scan("36", 500)
    assert all(row["num"] == "1" for row in scan["vanishing"])

    bounds = gmfq.first_sign_change("11")
    assert bounds["d1"] == 2 and bounds["d2"] == 1

    integ = gmfq.integrality("11", 200)
    listed = {row["n"]: row["c"] for row in integ["integral_exponents"]}
    assert listed[1] == "-1"
    assert listed[4] == "-1"


def test_cm_refusal_maps_to_python_exception():
    with pytest.raises(ValueError):
        gmfq.satotate("36", 500)
