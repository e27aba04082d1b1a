"""Smoke tests for the Python bindings."""

import math

import pytest

import breakup


def make_params(**overrides):
    kw = dict(m1=1.0, m2=10.0, omega=1.5, e0=-0.5, gamma=0.05, dr_cm0=1.0)
    kw.update(overrides)
    return breakup.SystemParams(**kw)


def test_derive_basic():
    d = breakup.derive(make_params())
    assert d.total_mass == 11.0
    assert d.reduced_mass == pytest.approx(10.0 / 11.0, rel=1e-15)
    assert d.eta_star == pytest.approx(math.sqrt(10.0) / 11.0, rel=1e-15)
    assert d.dr_rel0 == pytest.approx(d.v / (2.0 * 0.05), rel=1e-15)


def test_derive_rejects_below_threshold():
    with pytest.raises(Exception):
        breakup.derive(make_params(omega=0.3))


def test_entanglement_minimum_and_duality():
    m1, m2 = 1.0, 10.0
    eta_star = math.sqrt(m1 * m2) / (m1 + m2)
    assert breakup.entanglement_r(eta_star, m1, m2) == pytest.approx(1.0, abs=1e-13)
    mu_over_m = m1 * m2 / (m1 + m2) ** 2
    for eta in (1e-6, 0.02, 3.0, 1e5):
        a = breakup.entanglement_r(eta, m1, m2)
        b = breakup.entanglement_r(mu_over_m / eta, m1, m2)
        assert a == pytest.approx(b, rel=1e-12)


def test_width_report_consistency():
    rep = breakup.width_report(0.5, 2.0, 2.0)
    assert rep.c_e == pytest.approx(0.7071067811865475, rel=1e-12)
    assert rep.r_e >= 1.0
    assert rep.regime == breakup.Regime.Crossover


def test_faddeeva_value():
    w = breakup.faddeeva(1j)
    assert w.real == pytest.approx(math.e * math.erfc(1.0), rel=1e-12)
    assert w.imag == pytest.approx(0.0, abs=1e-15)


def test_profile_matches_quadrature_oracle():
    p = make_params(m2=1836.0, gamma=1e-4)
    rho = [-3.0, -1.0, 0.0, 1.0]
    closed = breakup.profile_series(1.0, rho)
    oracle = breakup.quad_rel_packet(rho, 1.0, p)
    peak = max(oracle)
    for c, o in zip(closed, oracle):
        assert abs(c - o) < 1e-8 * peak


def test_widths_and_evolution():
    p = make_params()
    d = breakup.derive(p)
    packet = breakup.CmPacket(dr0=p.dr_cm0, mass=d.total_mass)
    assert breakup.cm_width(0.0, packet) == p.dr_cm0
    assert breakup.rel_width(0.0, d) == pytest.approx(d.dr_rel0, rel=1e-15)

    grid = breakup.default_time_grid(d, 50)
    tr = breakup.evolve(p, grid)
    assert len(tr.eta) == len(grid)
    etas = list(tr.eta)
    assert etas == sorted(etas) or etas == sorted(etas, reverse=True)
    assert tr.eta[-1] == pytest.approx(breakup.eta_asymptote(p), rel=1e-4)


def test_grid_oracle_matches_formula():
    w = breakup.grid_widths_oracle(
        breakup.GridModel.GaussianGaussian, 0.5, 2.0, 2.0, resolution=512
    )
    assert w.c_e == pytest.approx(0.7071067811865475, abs=1e-4)
    se, _ = breakup.single_widths(0.5, 2.0, 2.0)
    assert w.s_e == pytest.approx(se, abs=1e-4)


def test_dissociation_preset():
    p = breakup.dissociation_preset(2000.0, 2000.0, 0.05, 1e-5, 10.0)
    assert p.mode == breakup.Mode.Dissociation
    assert breakup.derive(p).eta_star == 0.5
