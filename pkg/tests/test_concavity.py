import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from marcumlc.concavity import (BOUNDARY, classify_shape, h, l,
                                lemma2_statistic, log_density_curvature,
                                scan_sign)
from marcumlc.errors import DomainError, ShapeError
from marcumlc.marcum import integrand_f
from marcumlc.nu0 import solve_nu0
from marcumlc.special_fn import ratio

NU0 = 0.7844977646005626  # mpmath, 40 digits


def test_h_half_order_is_sech_squared():
    assert h(0.5, 1.0) == pytest.approx(1.0 / math.cosh(1.0) ** 2, rel=1e-14)
    ts = np.geomspace(1e-3, 15, 100)
    assert np.allclose(h(0.5, ts), 1.0 / np.cosh(ts) ** 2, rtol=1e-12, atol=1e-15)


def test_h_negative_above_three_halves():
    assert h(1.5, 2.0) < 0
    for nu in (1.5, 2.0, 5.0):
        assert np.all(h(nu, np.geomspace(1e-3, 1e3, 500)) < 0)


def test_h_diverges_at_zero():
    vals = [h(1.0, t) for t in (1e-1, 1e-2, 1e-3, 1e-4)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < -1e7


@given(st.floats(0.05, 8.0), st.floats(1e-2, 60.0))
def test_h_two_forms(nu, t):
    a, b = h(nu, t), h(nu, t, form="ht2")
    assert abs(a - b) <= 1e-10 * max(1.0, (2 * nu - 1) / t**2)


def test_h_unknown_form():
    with pytest.raises(DomainError):
        h(1.0, 1.0, form="x")


def test_l_examples():
    assert l(0.5, 1.0) == pytest.approx(math.tanh(1.0) - 2.0, rel=1e-14)
    ts = np.geomspace(1e-3, 1e3, 200)
    assert np.allclose(l(1.5, ts), [ratio(1.5, t).value for t in ts], rtol=1e-15)
    assert np.all(l(1.5, ts) > 0)


@pytest.mark.parametrize("nu", [0.55, 0.7, NU0, 0.9, 1.2, 1.45])
def test_l_unique_zero_and_h_identity(nu):
    rep = scan_sign("l", nu)
    assert len(rep.crossings) == 1
    t1, direction = rep.crossings[0]
    assert direction == "-+"
    assert h(nu, t1) == pytest.approx(1.0 - (5.0 - 2.0 * nu) / t1**2, abs=1e-10)


@pytest.mark.parametrize("t", [0.0, -1.0])
def test_diagnostics_reject_nonpositive_t(t):
    for fn in (lambda: h(1.0, t), lambda: l(1.0, t), lambda: lemma2_statistic(1.0, 1.0, t),
               lambda: log_density_curvature(1.0, 1.0, t)):
        with pytest.raises(DomainError):
            fn()


def test_curvature_needs_positive_a():
    with pytest.raises(DomainError):
        log_density_curvature(1.0, 0.0, 1.0)


@given(st.floats(0.1, 8.0), st.floats(0.05, 10.0), st.floats(1e-2, 40.0))
def test_curvature_identity(nu, a, t):
    c = log_density_curvature(nu, a, t)
    assert c == pytest.approx(a * a * h(nu, a * t) - 1.0, abs=1e-10 * max(1.0, a * a))


@pytest.mark.parametrize("nu,a,t", [(2.0, 3.0, 2.0), (0.5, 1.5, 0.7), (1.0, 0.3, 4.0), (7.0, 2.0, 3.0)])
def test_curvature_finite_difference(nu, a, t):
    step = 1e-4
    lf = [integrand_f(nu, a, x, log_scale=True) for x in (t - step, t, t + step)]
    fd = (lf[0] - 2 * lf[1] + lf[2]) / step**2
    assert log_density_curvature(nu, a, t) == pytest.approx(fd, abs=1e-5)


def test_curvature_limit_at_zero():
    for a in (0.5, 1.0, 1.5, 3.0):
        assert log_density_curvature(0.5, a, 1e-6) == pytest.approx(a * a - 1.0, abs=1e-8)
    ts = np.geomspace(1e-4, 100, 400)
    assert np.all(log_density_curvature(0.5, 1.0, ts) <= 1e-10)


def test_psi_closed_forms():
    ts = np.geomspace(1e-3, 50, 300)
    psi = lemma2_statistic(0.5, 1.0, ts)
    assert np.allclose(psi, -1.0 + np.tanh(ts) / ts, rtol=1e-13, atol=1e-15)
    assert np.all(np.diff(psi) < 0)
    psi0 = lemma2_statistic(2.0, 0.0, ts)
    assert np.allclose(psi0, 3.0 / ts**2 - 1.0, rtol=1e-15)


@given(st.floats(0.5, 10.0), st.sampled_from([0.0, 0.5, 1.0, 2.0, 5.0]))
def test_psi_decreasing(nu, a):
    psi = lemma2_statistic(nu, a, np.geomspace(1e-3, 60, 256))
    assert np.all(np.diff(psi) <= 1e-12)


def test_psi_is_log_derivative_over_t():
    nu, a, t, step = 1.3, 2.0, 1.7, 1e-5
    lf = [integrand_f(nu, a, x, log_scale=True) for x in (t - step, t + step)]
    assert lemma2_statistic(nu, a, t) == pytest.approx((lf[1] - lf[0]) / (2 * step) / t, rel=1e-8)


def test_shape_rayleigh():
    rep = classify_shape(1.0, 0.0)
    assert rep.mode_location == pytest.approx(1.0, rel=1e-10)
    assert rep.rising_logconcave == "yes"
    assert rep.declining_logconcave == "yes"


def test_shape_rising_phase_fails_above_unit_noncentrality():
    rep = classify_shape(0.5, 2.0)
    assert rep.rising_logconcave == "no"
    assert rep.declining_logconcave == "yes"
    assert rep.worst_violation[0] > 0


def test_shape_boundary_mode():
    rep = classify_shape(0.5, 0.5)
    assert rep.mode_location == BOUNDARY
    assert rep.rising_logconcave == "empty"


@pytest.mark.parametrize("nu", [0.5, 0.6, NU0, 1.0, 2.5, 7.0])
@pytest.mark.parametrize("a", [0.0, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_declining_phase_always_logconcave(nu, a):
    assert classify_shape(nu, a).declining_logconcave == "yes"


def test_shape_grid_preconditions():
    with pytest.raises(DomainError):
        classify_shape(1.0, 1.0, np.geomspace(1e-3, 50, 10))
    with pytest.raises(DomainError):
        classify_shape(1.0, 1.0, np.geomspace(0.1, 50, 100))
    with pytest.raises(DomainError):
        classify_shape(1.0, 40.0, np.geomspace(1e-3, 50, 100))


def test_shape_rejects_multiple_sign_changes():
    # for nu < 1/2, psi -> -inf at 0+, so with large a it runs -, +, -
    with pytest.raises(ShapeError):
        classify_shape(0.2, 6.0)


@pytest.mark.parametrize("nu", [0.55, 0.6, 0.7, 0.78])
def test_h_positive_below_nu0(nu):
    rep = scan_sign("h", nu)
    assert rep.positive_found
    assert rep.witness[1] > 0
    ts = [c[0] for c in rep.crossings]
    assert ts == sorted(ts)


@pytest.mark.parametrize("nu", [0.79, 0.9, 1.2, 1.5, 3.0])
def test_h_nonpositive_above_nu0(nu):
    assert not scan_sign("h", nu).positive_found


def test_scan_brackets_nu0_tightly():
    nu0 = solve_nu0().root
    assert scan_sign("h", nu0 - 1e-4).positive_found
    assert not scan_sign("h", nu0 + 1e-4).positive_found


def test_scan_domain():
    with pytest.raises(DomainError):
        scan_sign("g", 1.0)
    with pytest.raises(DomainError):
        scan_sign("h", 1.0, (1.0, 0.5))
    with pytest.raises(DomainError):
        scan_sign("h", 1.0, n=10)
