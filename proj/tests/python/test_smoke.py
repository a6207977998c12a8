"""Smoke tests for the python bindings."""
import cmath
import math

import pytest

try:
    import lieharm as lh
except ImportError:
    import _lieharm as lh


def test_embeddings():
    z = lh.embed_s3c(lh.ComplexAngles(0.0))
    assert abs(z[0] - 1) < 1e-15 and abs(z[1]) < 1e-15
    w = lh.embed_s3(lh.S3Point(math.pi / 4))
    assert abs(abs(w[0]) ** 2 + abs(w[1]) ** 2 - 1) < 1e-14
    zeta = lh.embed_h22(lh.H22Point(1.0))
    assert abs(abs(zeta[0]) ** 2 - abs(zeta[1]) ** 2 - 1) < 1e-12
    with pytest.raises(Exception):
        lh.embed_h22(lh.H22Point(0.0))
    r, up, um = lh.h22_chart_inverse(zeta[0], zeta[1])
    assert abs(r - math.cosh(1.0)) < 1e-12


def test_removed_set():
    assert lh.in_removed_set(lh.S3Point(0.0))
    assert not lh.in_removed_set(lh.S3Point(0.7))
    assert lh.in_removed_set(lh.ComplexAngles(0.0, 0.0))
    assert not lh.in_removed_set(lh.ComplexAngles(0.0, 1.0))


def test_labels_and_casimirs():
    l = lh.SL2CLabel(0.5, 1j)
    q = lh.casimir_values(l)
    assert abs(q["Q1"] - (-1.75)) < 1e-14
    assert abs(q["Q2"] - 1.0) < 1e-14
    assert lh.unitary_class(l) == "principal"
    assert lh.unitary_class(lh.SL2CLabel(0, 0.5)) == "complementary"
    assert lh.unitary_class(lh.SL2CLabel(0.5, 2.5)) == "finite-dimensional"

    cov = lh.covering_required(lh.SU11DiscLabel(0.75, lh.DiscSign.plus, 0))
    assert cov.plus.q == 2 and cov.minus.q == 1
    cov = lh.covering_required(lh.E2Label(1.0, 1 / math.sqrt(2), 0))
    assert not cov.plus.is_finite


def test_family_values():
    v = lh.psi_sl2c(lh.SL2CLabel(0.5, 1.5), 0.5, 0.5, lh.ComplexAngles(0.0))
    assert abs(v - math.sqrt(2)) < 1e-14
    v = lh.phi_su2(lh.SU2Label(1), 0, lh.S3Point(math.pi / 4))
    assert abs(v - math.sqrt(6) / 2) < 1e-14
    v = lh.psi_su11_disc(lh.SU11DiscLabel(1, lh.DiscSign.plus, 1), lh.H22Point(1.0))
    assert abs(v - 0.63970000844922450019) < 1e-12
    v = lh.lambda_e2(lh.E2Label(1, 0.5, 0), lh.ConePoint(2.0))
    assert abs(v - 4 / math.sqrt(2 * math.pi)) < 1e-14
    a = lh.a_coeff(lh.SL2CLabel(0, 1j), 1)
    assert abs(a - cmath.exp(-1j * math.pi / 4)) < 1e-13
    assert lh.k_range(0.5, 0.5, 0.5) == (0, 0)


def test_ladder_expected():
    terms = lh.ladder_expected(lh.SU2Label(1), "R+", s=1, m=0)
    assert len(terms) == 1
    assert abs(terms[0]["coeff"] - math.sqrt(2)) < 1e-14
    # lowest weight of D+ is annihilated by J-
    terms = lh.ladder_expected(lh.SU11DiscLabel(1.5, lh.DiscSign.plus, 0), "J-", n=0)
    assert terms == []


def test_quadrature():
    assert abs(lh.i_ab_closed(-2, 0) - 0.5) < 1e-14
    assert abs(lh.i_ab_numeric(-2.5, -0.5) - 2 / 3) < 1e-9
    v = lh.inner_s3_members(lh.SU2Label(1), 0, lh.SU2Label(1), 0)
    assert abs(v - 1) < 1e-10
    v = lh.inner_s3_members(lh.SU2Label(1), 1, lh.SU2Label(2), 1)
    assert abs(v) < 1e-12
    assert lh.haar_e2_density(lh.ConePoint(4.0)) == 0.25


def test_harmonic_residual():
    r = lh.harmonic_residual(lh.SU2Label(1.5), 1.5, 0.5, 0, lh.S3Point(0.7, 1.0, 2.0))
    assert r < 1e-8
    r = lh.harmonic_residual(lh.SL2CLabel(0.5, 1j), 0.5, -0.5, 0,
                             lh.ComplexAngles(0.8, 0.2, 1.0, -0.1, 2.0, 0.3))
    assert r < 1e-8


def test_spinor_table():
    rows = lh.spinor_action_table(seed=1, npoints=5)
    assert len(rows) == 24
    assert max(r["max_residual"] for r in rows) < 1e-10


def test_run_suite():
    cfg = lh.CheckConfig()
    cfg.n_functions = 2
    cfg.n_points = 5
    reports = lh.run_suite("spinor-table", cfg)
    assert len(reports) == 24
    assert all(r["pass"] for r in reports)
    names = lh.suite_names()
    assert "commutators" in names and "e2-window" in names


def test_compactify():
    q = lh.compactify(lh.ConePoint(1.0, 0.2, 0.3))
    assert q.psi == 0.0
