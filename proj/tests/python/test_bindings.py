import cmath

import pytest

import hypercount as hc


def test_field_basics():
    e = hc.Engine(13)
    assert (e.q, e.p, e.e, e.generator) == (13, 13, 1, 2)
    assert e.dlog(12) == 6
    assert e.trace(5) == 5
    assert e.mul(e.generator, 7) == 14 % 13


def test_float_gauss_sum_norm():
    e = hc.Engine(13, backend="float")
    assert e.modulus is None
    assert abs(abs(e.gauss_sum(1)) ** 2 - 13) < 1e-9
    assert abs(e.gauss_sum(0) + 1) < 1e-12


def test_exact_values_are_residues():
    e = hc.Engine(13, backend="exact")
    ell = e.modulus
    assert e.gauss_sum(0) == ell - 1
    assert e.jacobi_sum(6, 6) == ell - 1  # J(phi, phi) = -1 over F_13


def test_counts_match_enumeration_both_backends():
    for backend in ("exact", "float"):
        e = hc.Engine(73, backend=backend)
        r = e.count("A", 4, 1, 1)
        assert r["method"] == "THM_1_1"
        assert r["n_points"] == e.brute_count("A", 4, 1, 1)
        assert r["argument"] == e.alpha(4, 1, 1)


def test_weak_congruence_family_b():
    e = hc.Engine(31)
    assert e.count("B", 3, 2, 2)["n_points"] == e.brute_count("B", 3, 2, 2)


def test_trace_formulas():
    e = hc.Engine(13)
    assert e.trace_frobenius("A", 1, 1) == 13 - e.brute_count("A", 3, 1, 1)
    assert e.trace_frobenius("B", 1, 1) == 13 - e.brute_count("B", 3, 1, 1)


def test_series_template_for_degree_five():
    tops, bottoms = hc.series_template("A", 5)
    assert [t[2] for t in tops] == [3, 11, 19, 27]
    assert [b[2] for b in bottoms] == [2, 4, 6]


def test_hgf_at_zero_vanishes():
    e = hc.Engine(13, backend="float")
    assert e.hgf([6, 0], [6], 0) == 0


def test_verifiers():
    e = hc.Engine(25)
    assert all(c["passed"] for c in e.verify_lemmas())
    assert all(c["passed"] for c in e.verify_davenport_hasse(3, 1))
    d = e.decompose("A", 3, 1, 1)
    assert d["n_reconstructed"] == e.brute_count("A", 3, 1, 1)
    assert d["a_term"] == e.modulus - 1


def test_errors_raise():
    with pytest.raises(hc.Error, match="odd prime power"):
        hc.Engine(74)
    e = hc.Engine(13)
    with pytest.raises(hc.Error, match="congruence"):
        e.count("A", 4, 1, 1)
    with pytest.raises(ValueError):
        e.count("C", 3, 1, 1)
